// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "risloc/core/rng.hpp"
#include "risloc/phys/dipole.hpp"

namespace risloc::scene {

using phys::DipoleParams;
using phys::Vec2;

enum class Role : int { BS = 0, UE = 1, Env = 2, So = 3, Ris = 4, Sense = 5 };
inline constexpr int kRoleCount = 6;
const char* role_name(Role r);

enum class Wall : int { Left = 0, Right = 1, Top = 2, Bottom = 3 };

struct Dipole {
  Vec2 pos;
  DipoleParams params;
  Role role;
};

struct IndexRange {
  int begin = 0;
  int end = 0;  // half-open
  int count() const { return end - begin; }
};

struct UEState {
  Vec2 u{0.0, 0.0};
  double alpha = 0.0;  // radians in [0, 2pi)
};

struct ScattererState {
  std::vector<Vec2> centers;  // M cluster centers
};

struct RISConfiguration {
  Eigen::VectorXcd k;  // unit modulus per entry
};

struct Deployment {
  std::vector<Wall> walls = {Wall::Left, Wall::Right, Wall::Top, Wall::Bottom};
  int n_ris_total = 100;
  int s_ris = 4;
};

// Everything needed to build one environment realization. Dipole parameter
// rows follow the simulation-parameter table; spacings are in wavelengths.
struct SceneConfig {
  double region_w = 35.0;
  double region_h = 55.0;
  Deployment deployment;
  int n_bs = 4;
  int n_ue = 4;
  int m_so = 4;

  DipoleParams transceiver_params{1.0, 0.5, sq(kTwoPi) / 4.0, 0.0};
  DipoleParams env_params{10.0, 50.0, sq(kTwoPi) / 4.0, 1e4};
  DipoleParams ris_params{0.8, 0.2, sq(kTwoPi) / 4.0, 0.03};

  double fence_spacing = 0.25;
  double ris_spacing = 0.25;
  double sense_spacing = 0.25;
  double bs_spacing = 0.5;
  double ue_spacing = 0.5;
  double so_spacing = 0.25;  // 2x2 cluster pitch

  // Phase-to-resonance control map endpoints.
  double f_res_lo = 0.8;
  double f_res_hi = 5.0;

  // Fixed-infrastructure placement. The RIS line sits one fence pitch inside
  // the boundary, the sensing line one more pitch inside, BS above the bottom
  // wall; all tunable.
  double ris_inset = 0.25;
  double sense_inset = 0.5;
  Vec2 bs_center{0.0, 0.0};  // (0,0) means "default": bottom-center, 1.5 up
  bool bs_center_set = false;

  double ue_margin = 1.0;   // service-region margin from the walls
  double so_margin = 0.5;   // >= cluster radius
  double so_min_separation = 1.0;

  phys::GreenConstants green;

  static SceneConfig desk();   // 12x12, N_RIS 16, S_RIS 4, M 4
  static SceneConfig paper();  // table defaults, 35x55
};

struct Scene {
  std::vector<Dipole> dipoles;  // ordered BS, UE, Env, So, Ris, Sense
  double region_w = 0.0;
  double region_h = 0.0;
  std::array<IndexRange, kRoleCount> index_ranges{};
  std::vector<Vec2> so_centers;
  UEState ue;
  SceneConfig config;

  int size() const { return static_cast<int>(dipoles.size()); }
  const IndexRange& range(Role r) const { return index_ranges[static_cast<int>(r)]; }
  int count(Role r) const { return range(r).count(); }
  int so_cluster_size() const { return 4; }
  IndexRange so_cluster_range(int m) const;

  // Service-region box (UE prior support).
  double ue_lo_x() const { return -0.5 * region_w + config.ue_margin; }
  double ue_hi_x() const { return 0.5 * region_w - config.ue_margin; }
  double ue_lo_y() const { return -0.5 * region_h + config.ue_margin; }
  double ue_hi_y() const { return 0.5 * region_h - config.ue_margin; }

  // Throws if ordering/coverage or the pairwise-distance floor is violated.
  void validate() const;
};

// Linear UE array centered on u along (cos alpha, sin alpha).
std::vector<Vec2> place_ue_dipoles(const UEState& ue, int n, double spacing, double region_w,
                                   double region_h);

// Draw episode ground truth: UE uniform over the service region, alpha
// uniform over [0, 2pi), SO centers i.i.d. uniform with rejection until the
// pairwise separation holds.
std::pair<UEState, ScattererState> sample_episode_truth(Rng& rng, double region_w, double region_h,
                                                        int m, double ue_margin = 1.0,
                                                        double so_margin = 0.5,
                                                        double so_min_separation = 1.0);

// Full roster for one realization; UE/SO truth sampled from rng.
Scene build_scene(const SceneConfig& config, Rng& rng);

// Same roster with explicitly provided truth.
Scene build_scene(const SceneConfig& config, const UEState& ue, const ScattererState& so);

// Pure updates.
Scene with_ue_state(const Scene& s, const UEState& ue);
Scene apply_ris_configuration(const Scene& s, const RISConfiguration& k);
Scene advance_scatterers(const Scene& s, Rng& rng);

// Phase -> resonance frequency control map (differentiable, linear).
inline double f_res_of_phase(double delta, double f_lo, double f_hi) {
  return f_lo + (f_hi - f_lo) * delta / kTwoPi;
}

}  // namespace risloc::scene
