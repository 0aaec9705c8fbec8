// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "risloc/phys/dipole.hpp"
#include "risloc/scene/scene.hpp"

namespace risloc::phys {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

// N x N coupled-dipole interaction matrix: diagonal 1/alpha_i, off-diagonal
// -G_ij. Symmetric because G depends only on |r_i - r_j|.
struct InteractionMatrix {
  MatrixXcd w;
};

struct ChannelBlock {
  MatrixXcd h;
  scene::Role row_role;  // receive side
  scene::Role col_role;  // transmit side
};

// Role-free kernel (also used for the relabeling-equivariance property).
MatrixXcd assemble_interaction(const std::vector<Vec2>& positions,
                               const std::vector<DipoleParams>& params, double f,
                               const GreenConstants& c);

InteractionMatrix assemble_interaction_matrix(const scene::Scene& s, double f,
                                              const GreenConstants& c);

VectorXcd polarizability_vector(const scene::Scene& s, double f);

// V = diag(alpha^-1) W^-1, via partial-pivot LU. Scenes whose condition
// estimate exceeds 1e12 are rejected instead of returning garbage.
MatrixXcd end_to_end_matrix(const InteractionMatrix& w, const VectorXcd& alphas);

ChannelBlock extract_block(const MatrixXcd& v, scene::Role row_role, scene::Role col_role,
                           const scene::Scene& s);

// Components of the augmented parameter vector theta = (u_x, u_y, alpha,
// p_1x, p_1y, ..., p_Mx, p_My).
enum class ThetaKind { UeX, UeY, UeAlpha, SoX, SoY };

struct ThetaComponent {
  ThetaKind kind = ThetaKind::UeX;
  int so_index = 0;
};

std::vector<ThetaComponent> augmented_theta(int m);

// Dipoles moved by a theta component together with dr/dtheta. Empty when the
// component refers to an SO not present in the scene.
struct MovedSet {
  std::vector<int> indices;
  std::vector<Vec2> velocity;
};

MovedSet moved_set(const scene::Scene& s, const ThetaComponent& t);

struct ChannelJacobian {
  ChannelBlock block;
  std::vector<MatrixXcd> d_block;  // one per requested theta component
};

// Analytic derivatives through d(W^-1)/dtheta = -W^-1 (dW/dtheta) W^-1, where
// dW/dtheta touches only Green's entries of moved dipoles. Rigid translations
// and rotations leave intra-set distances unchanged, so dW/dtheta is the
// symmetric low-rank sum over moved rows/columns.
ChannelJacobian channel_and_jacobian(const scene::Scene& s, double f, const GreenConstants& c,
                                     scene::Role row_role, scene::Role col_role,
                                     const std::vector<ThetaComponent>& wrt);

}  // namespace risloc::phys
