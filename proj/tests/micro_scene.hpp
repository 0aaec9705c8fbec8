// SPDX-License-Identifier: Apache-2.0
// Hand-rolled small scenes for unit tests: valid rosters without the full
// perimeter fence, so jacobian/gradient checks stay cheap.
#pragma once

#include <vector>

#include "risloc/core/rng.hpp"
#include "risloc/scene/scene.hpp"

namespace risloc::testutil {

inline scene::Scene make_micro_scene(Rng& rng, int n_bs, int n_ue, int n_env, int m_so,
                                     int n_ris, int n_sense, double box = 6.0) {
  using scene::Role;
  scene::Scene s;
  s.region_w = box + 2.0;
  s.region_h = box + 2.0;
  s.config = scene::SceneConfig::desk();
  s.config.region_w = s.region_w;
  s.config.region_h = s.region_h;
  s.config.n_bs = n_bs;
  s.config.n_ue = n_ue;
  s.config.m_so = m_so;
  s.config.deployment.n_ris_total = n_ris;
  s.config.deployment.s_ris = n_sense;

  std::vector<phys::Vec2> taken;
  auto draw_point = [&](double clearance) {
    for (int tries = 0; tries < 10000; ++tries) {
      phys::Vec2 p{rng.uniform(-0.5 * box, 0.5 * box), rng.uniform(-0.5 * box, 0.5 * box)};
      bool ok = true;
      for (const auto& q : taken) {
        if ((p - q).norm() < clearance) {
          ok = false;
          break;
        }
      }
      if (ok) {
        taken.push_back(p);
        return p;
      }
    }
    throw std::runtime_error("make_micro_scene: placement failed");
  };

  auto mark = [&](Role r, int begin) {
    s.index_ranges[static_cast<int>(r)] = {begin, static_cast<int>(s.dipoles.size())};
  };

  for (int i = 0; i < n_bs; ++i)
    s.dipoles.push_back({draw_point(0.4), s.config.transceiver_params, Role::BS});
  mark(Role::BS, 0);

  int begin = static_cast<int>(s.dipoles.size());
  s.ue.u = draw_point(1.6);
  s.ue.alpha = rng.uniform(0.0, kTwoPi);
  for (const auto& p :
       scene::place_ue_dipoles(s.ue, n_ue, s.config.ue_spacing, s.region_w, s.region_h))
    s.dipoles.push_back({p, s.config.transceiver_params, Role::UE});
  mark(Role::UE, begin);

  begin = static_cast<int>(s.dipoles.size());
  for (int i = 0; i < n_env; ++i)
    s.dipoles.push_back({draw_point(0.4), s.config.env_params, Role::Env});
  mark(Role::Env, begin);

  begin = static_cast<int>(s.dipoles.size());
  for (int m = 0; m < m_so; ++m) {
    const phys::Vec2 c = draw_point(1.2);
    const double h = 0.5 * s.config.so_spacing;
    for (const auto& off : {phys::Vec2{-h, -h}, phys::Vec2{h, -h}, phys::Vec2{-h, h},
                            phys::Vec2{h, h}})
      s.dipoles.push_back({c + off, s.config.env_params, Role::So});
    s.so_centers.push_back(c);
  }
  mark(Role::So, begin);

  begin = static_cast<int>(s.dipoles.size());
  for (int i = 0; i < n_ris; ++i) {
    auto params = s.config.ris_params;
    params.f_res = rng.uniform(s.config.f_res_lo, s.config.f_res_hi);
    s.dipoles.push_back({draw_point(0.4), params, Role::Ris});
  }
  mark(Role::Ris, begin);

  begin = static_cast<int>(s.dipoles.size());
  for (int i = 0; i < n_sense; ++i)
    s.dipoles.push_back({draw_point(0.4), s.config.env_params, Role::Sense});
  mark(Role::Sense, begin);

  s.validate();
  return s;
}

// Rigidly translate one SO cluster (finite-difference probes).
inline scene::Scene shift_so(const scene::Scene& s, int m, double dx, double dy) {
  scene::Scene out = s;
  const auto cr = s.so_cluster_range(m);
  for (int i = cr.begin; i < cr.end; ++i) out.dipoles[static_cast<std::size_t>(i)].pos += phys::Vec2{dx, dy};
  out.so_centers[static_cast<std::size_t>(m)] += phys::Vec2{dx, dy};
  return out;
}

}  // namespace risloc::testutil
