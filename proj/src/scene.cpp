// SPDX-License-Identifier: Apache-2.0
#include "risloc/scene/scene.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "risloc/core/error.hpp"

namespace risloc::scene {

namespace {

constexpr double kMinPairDistance = 1e-3;

bool near_multiple(double v, double step) {
  const double r = std::fmod(v, step);
  return std::min(r, step - r) < 1e-9;
}

void append_line(std::vector<Dipole>& out, const Vec2& center, const Vec2& dir, int n,
                 double spacing, const DipoleParams& params, Role role) {
  for (int i = 0; i < n; ++i) {
    const double s = (i - 0.5 * (n - 1)) * spacing;
    out.push_back({center + s * dir, params, role});
  }
}

struct WallFrame {
  Vec2 center;  // midpoint of the wall's inset line
  Vec2 dir;     // along-wall unit vector
  double length;
};

WallFrame wall_frame(Wall w, double rw, double rh, double inset) {
  switch (w) {
    case Wall::Left:
      return {{-0.5 * rw + inset, 0.0}, {0.0, 1.0}, rh};
    case Wall::Right:
      return {{0.5 * rw - inset, 0.0}, {0.0, 1.0}, rh};
    case Wall::Top:
      return {{0.0, 0.5 * rh - inset}, {1.0, 0.0}, rw};
    case Wall::Bottom:
      return {{0.0, -0.5 * rh + inset}, {1.0, 0.0}, rw};
  }
  throw ConfigError("unknown wall");
}

std::vector<Vec2> so_cluster_offsets(double pitch) {
  const double h = 0.5 * pitch;
  return {{-h, -h}, {h, -h}, {-h, h}, {h, h}};
}

}  // namespace

const char* role_name(Role r) {
  switch (r) {
    case Role::BS: return "BS";
    case Role::UE: return "UE";
    case Role::Env: return "ENV";
    case Role::So: return "SO";
    case Role::Ris: return "RIS";
    case Role::Sense: return "SENSE";
  }
  return "?";
}

SceneConfig SceneConfig::desk() {
  SceneConfig c;
  c.region_w = 12.0;
  c.region_h = 12.0;
  c.deployment.n_ris_total = 16;
  c.deployment.s_ris = 4;
  return c;
}

SceneConfig SceneConfig::paper() { return SceneConfig{}; }

IndexRange Scene::so_cluster_range(int m) const {
  const IndexRange& so = range(Role::So);
  const int k = so_cluster_size();
  if (m < 0 || so.begin + (m + 1) * k > so.end)
    throw ConfigError("so_cluster_range: cluster index out of range");
  return {so.begin + m * k, so.begin + (m + 1) * k};
}

void Scene::validate() const {
  int covered = 0;
  int prev_end = 0;
  for (int r = 0; r < kRoleCount; ++r) {
    const IndexRange& ir = index_ranges[r];
    if (ir.begin != prev_end)
      throw NumericError("scene: index ranges must be contiguous in role order");
    prev_end = ir.end;
    covered += ir.count();
    for (int i = ir.begin; i < ir.end; ++i) {
      if (dipoles[static_cast<std::size_t>(i)].role != static_cast<Role>(r))
        throw NumericError("scene: dipole role does not match its index range");
    }
  }
  if (covered != size()) throw NumericError("scene: index ranges do not cover the roster");

  const double hw = 0.5 * region_w + 1e-9, hh = 0.5 * region_h + 1e-9;
  for (const auto& d : dipoles) {
    if (std::abs(d.pos.x()) > hw || std::abs(d.pos.y()) > hh)
      throw NumericError("scene: dipole outside the region closure");
    if (!d.params.valid()) throw NumericError("scene: invalid dipole parameters");
  }
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if ((dipoles[i].pos - dipoles[j].pos).norm() < kMinPairDistance)
        throw NumericError("scene: dipoles " + std::to_string(i) + " and " + std::to_string(j) +
                           " closer than 1e-3 lambda");
    }
  }
}

std::vector<Vec2> place_ue_dipoles(const UEState& ue, int n, double spacing, double region_w,
                                   double region_h) {
  if (n < 1) throw ConfigError("place_ue_dipoles: need n >= 1");
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(n));
  const Vec2 dir{std::cos(ue.alpha), std::sin(ue.alpha)};
  for (int i = 0; i < n; ++i) {
    const double s = (i - 0.5 * (n - 1)) * spacing;
    const Vec2 p = ue.u + s * dir;
    if (std::abs(p.x()) > 0.5 * region_w || std::abs(p.y()) > 0.5 * region_h)
      throw NumericError("place_ue_dipoles: array exits the region");
    out.push_back(p);
  }
  return out;
}

std::pair<UEState, ScattererState> sample_episode_truth(Rng& rng, double region_w, double region_h,
                                                        int m, double ue_margin, double so_margin,
                                                        double so_min_separation) {
  if (region_w <= 2.0 * ue_margin || region_h <= 2.0 * ue_margin)
    throw ConfigError("sample_episode_truth: region too small for the UE margin");
  UEState ue;
  ue.u.x() = rng.uniform(-0.5 * region_w + ue_margin, 0.5 * region_w - ue_margin);
  ue.u.y() = rng.uniform(-0.5 * region_h + ue_margin, 0.5 * region_h - ue_margin);
  ue.alpha = rng.uniform(0.0, kTwoPi);

  ScattererState so;
  so.centers.reserve(static_cast<std::size_t>(m));
  const double lx = -0.5 * region_w + so_margin, hx = 0.5 * region_w - so_margin;
  const double ly = -0.5 * region_h + so_margin, hy = 0.5 * region_h - so_margin;
  int draws = 0;
  while (static_cast<int>(so.centers.size()) < m) {
    if (++draws > 10000)
      throw NumericError("sample_episode_truth: separation rejection failed after 10000 draws");
    const Vec2 c{rng.uniform(lx, hx), rng.uniform(ly, hy)};
    bool ok = true;
    for (const auto& prev : so.centers) {
      if ((c - prev).norm() < so_min_separation) {
        ok = false;
        break;
      }
    }
    if (ok) so.centers.push_back(c);
  }
  return {ue, so};
}

Scene build_scene(const SceneConfig& config, Rng& rng) {
  auto [ue, so] = sample_episode_truth(rng, config.region_w, config.region_h, config.m_so,
                                       config.ue_margin, config.so_margin,
                                       config.so_min_separation);
  return build_scene(config, ue, so);
}

Scene build_scene(const SceneConfig& config, const UEState& ue, const ScattererState& so) {
  if (config.region_w < 4.0 || config.region_h < 4.0)
    throw ConfigError("build_scene: region must be at least 4x4 lambda");
  if (config.n_bs < 1 || config.n_ue < 1 || config.deployment.n_ris_total < 1)
    throw ConfigError("build_scene: counts must be positive");
  if (!near_multiple(config.region_w, config.fence_spacing) ||
      !near_multiple(config.region_h, config.fence_spacing))
    throw ConfigError("build_scene: region sides must be multiples of the fence spacing");
  if (static_cast<int>(so.centers.size()) != config.m_so)
    throw ConfigError("build_scene: scatterer state does not match m_so");

  const auto& dep = config.deployment;
  const int n_walls = static_cast<int>(dep.walls.size());
  if (n_walls < 1) throw ConfigError("build_scene: deployment needs at least one wall");
  if (dep.n_ris_total % n_walls != 0)
    throw ConfigError("build_scene: n_ris_total (" + std::to_string(dep.n_ris_total) +
                      ") not divisible by the wall count (" + std::to_string(n_walls) + ")");
  const int ris_per_wall = dep.n_ris_total / n_walls;

  Scene s;
  s.region_w = config.region_w;
  s.region_h = config.region_h;
  s.config = config;
  s.ue = ue;
  s.ue.alpha = wrap_to_2pi(s.ue.alpha);
  s.so_centers = so.centers;

  auto& d = s.dipoles;
  auto mark = [&](Role r, int begin) {
    s.index_ranges[static_cast<int>(r)] = {begin, static_cast<int>(d.size())};
  };

  // BS array (horizontal, lambda/2).
  Vec2 bs_center = config.bs_center;
  if (!config.bs_center_set) bs_center = {0.0, -0.5 * config.region_h + 1.5};
  append_line(d, bs_center, {1.0, 0.0}, config.n_bs, config.bs_spacing,
              config.transceiver_params, Role::BS);
  mark(Role::BS, 0);

  // UE array at the sampled state.
  int begin = static_cast<int>(d.size());
  for (const auto& p :
       place_ue_dipoles(s.ue, config.n_ue, config.ue_spacing, config.region_w, config.region_h))
    d.push_back({p, config.transceiver_params, Role::UE});
  mark(Role::UE, begin);

  // Fence along the full perimeter, lambda/4 pitch, counter-clockwise from
  // the bottom-left corner. Each edge emits [start, end) so corners appear
  // exactly once.
  begin = static_cast<int>(d.size());
  const double hw = 0.5 * config.region_w, hh = 0.5 * config.region_h;
  const double fs = config.fence_spacing;
  const int nx = static_cast<int>(std::lround(config.region_w / fs));
  const int ny = static_cast<int>(std::lround(config.region_h / fs));
  for (int i = 0; i < nx; ++i) d.push_back({{-hw + i * fs, -hh}, config.env_params, Role::Env});
  for (int i = 0; i < ny; ++i) d.push_back({{hw, -hh + i * fs}, config.env_params, Role::Env});
  for (int i = 0; i < nx; ++i) d.push_back({{hw - i * fs, hh}, config.env_params, Role::Env});
  for (int i = 0; i < ny; ++i) d.push_back({{-hw, hh - i * fs}, config.env_params, Role::Env});
  mark(Role::Env, begin);

  // SO clusters: 2x2 squares of environment-parameter dipoles.
  begin = static_cast<int>(d.size());
  for (const auto& c : so.centers) {
    for (const auto& off : so_cluster_offsets(config.so_spacing))
      d.push_back({c + off, config.env_params, Role::So});
  }
  mark(Role::So, begin);

  // Reflective RIS, equal count per selected wall, centered.
  begin = static_cast<int>(d.size());
  for (Wall w : dep.walls) {
    const WallFrame f = wall_frame(w, config.region_w, config.region_h, config.ris_inset);
    const double extent = (ris_per_wall - 1) * config.ris_spacing;
    if (extent > f.length - 2.0)
      throw ConfigError(std::string("build_scene: ") + std::to_string(ris_per_wall) +
                        " RIS dipoles do not fit the wall");
    append_line(d, f.center, f.dir, ris_per_wall, config.ris_spacing, config.ris_params,
                Role::Ris);
  }
  mark(Role::Ris, begin);

  // Sensing elements: reflection disabled, i.e. absorbing environment
  // parameterization, on their own inset line at fixed positions.
  begin = static_cast<int>(d.size());
  {
    const WallFrame f =
        wall_frame(Wall::Bottom, config.region_w, config.region_h, config.sense_inset);
    const double extent = (dep.s_ris - 1) * config.sense_spacing;
    if (dep.s_ris > 0 && extent > f.length - 2.0)
      throw ConfigError("build_scene: sensing elements do not fit the wall");
    append_line(d, f.center, f.dir, dep.s_ris, config.sense_spacing, config.env_params,
                Role::Sense);
  }
  mark(Role::Sense, begin);

  s.validate();
  return s;
}

Scene with_ue_state(const Scene& s, const UEState& ue) {
  Scene out = s;
  out.ue = ue;
  out.ue.alpha = wrap_to_2pi(out.ue.alpha);
  const auto pos = place_ue_dipoles(out.ue, s.count(Role::UE), s.config.ue_spacing, s.region_w,
                                    s.region_h);
  const IndexRange& r = s.range(Role::UE);
  for (int i = 0; i < r.count(); ++i)
    out.dipoles[static_cast<std::size_t>(r.begin + i)].pos = pos[static_cast<std::size_t>(i)];
  return out;
}

Scene apply_ris_configuration(const Scene& s, const RISConfiguration& cfg) {
  const IndexRange& r = s.range(Role::Ris);
  if (cfg.k.size() != r.count())
    throw ConfigError("apply_ris_configuration: expected " + std::to_string(r.count()) +
                      " entries, got " + std::to_string(cfg.k.size()));
  Scene out = s;
  for (int n = 0; n < r.count(); ++n) {
    const double delta = wrap_to_2pi(std::arg(cfg.k[n]));
    out.dipoles[static_cast<std::size_t>(r.begin + n)].params.f_res =
        f_res_of_phase(delta, s.config.f_res_lo, s.config.f_res_hi);
  }
  return out;
}

Scene advance_scatterers(const Scene& s, Rng& rng) {
  const int m = static_cast<int>(s.so_centers.size());
  if (m == 0) return s;
  Scene out = s;
  // Re-draw all centers at once (simultaneous, independent motion).
  const double lx = -0.5 * s.region_w + s.config.so_margin;
  const double hx = 0.5 * s.region_w - s.config.so_margin;
  const double ly = -0.5 * s.region_h + s.config.so_margin;
  const double hy = 0.5 * s.region_h - s.config.so_margin;
  std::vector<Vec2> fresh;
  int draws = 0;
  while (static_cast<int>(fresh.size()) < m) {
    if (++draws > 10000)
      throw NumericError("advance_scatterers: separation rejection failed after 10000 draws");
    const Vec2 c{rng.uniform(lx, hx), rng.uniform(ly, hy)};
    bool ok = true;
    for (const auto& prev : fresh) {
      if ((c - prev).norm() < s.config.so_min_separation) {
        ok = false;
        break;
      }
    }
    if (ok) fresh.push_back(c);
  }
  for (int i = 0; i < m; ++i) {
    const Vec2 shift = fresh[static_cast<std::size_t>(i)] - s.so_centers[static_cast<std::size_t>(i)];
    const IndexRange cr = s.so_cluster_range(i);
    for (int j = cr.begin; j < cr.end; ++j)
      out.dipoles[static_cast<std::size_t>(j)].pos += shift;
  }
  out.so_centers = fresh;
  return out;
}

}  // namespace risloc::scene
