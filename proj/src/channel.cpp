// SPDX-License-Identifier: Apache-2.0
#include "risloc/phys/channel.hpp"

#include <cmath>
#include <string>

#include "risloc/core/error.hpp"

namespace risloc::phys {

namespace {

constexpr double kMaxCondition = 1e12;

void check_conditioning(const Eigen::PartialPivLU<MatrixXcd>& lu) {
  const double rc = lu.rcond();
  if (!(rc > 1.0 / kMaxCondition))
    throw NumericError("interaction matrix ill-conditioned: condition estimate " +
                       std::to_string(rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity()));
}

}  // namespace

MatrixXcd assemble_interaction(const std::vector<Vec2>& positions,
                               const std::vector<DipoleParams>& params, double f,
                               const GreenConstants& c) {
  const int n = static_cast<int>(positions.size());
  if (n < 2) throw ConfigError("assemble_interaction: need at least 2 dipoles");
  if (params.size() != positions.size())
    throw ConfigError("assemble_interaction: positions/params size mismatch");
  MatrixXcd w(n, n);
  for (int i = 0; i < n; ++i) {
    w(i, i) = 1.0 / polarizability(params[static_cast<std::size_t>(i)], f);
    for (int j = i + 1; j < n; ++j) {
      Complex g;
      try {
        g = greens_coupling(positions[static_cast<std::size_t>(i)],
                            positions[static_cast<std::size_t>(j)], c);
      } catch (const NumericError&) {
        throw NumericError("assemble_interaction: coincident dipoles " + std::to_string(i) +
                           " and " + std::to_string(j));
      }
      w(i, j) = -g;
      w(j, i) = -g;
    }
  }
  return w;
}

InteractionMatrix assemble_interaction_matrix(const scene::Scene& s, double f,
                                              const GreenConstants& c) {
  std::vector<Vec2> pos;
  std::vector<DipoleParams> par;
  pos.reserve(s.dipoles.size());
  par.reserve(s.dipoles.size());
  for (const auto& d : s.dipoles) {
    pos.push_back(d.pos);
    par.push_back(d.params);
  }
  return {assemble_interaction(pos, par, f, c)};
}

VectorXcd polarizability_vector(const scene::Scene& s, double f) {
  VectorXcd a(s.size());
  for (int i = 0; i < s.size(); ++i)
    a[i] = polarizability(s.dipoles[static_cast<std::size_t>(i)].params, f);
  return a;
}

MatrixXcd end_to_end_matrix(const InteractionMatrix& w, const VectorXcd& alphas) {
  const int n = static_cast<int>(w.w.rows());
  if (alphas.size() != n) throw ConfigError("end_to_end_matrix: alpha vector size mismatch");
  Eigen::PartialPivLU<MatrixXcd> lu(w.w);
  check_conditioning(lu);
  MatrixXcd v = lu.solve(MatrixXcd::Identity(n, n));
  for (int i = 0; i < n; ++i) v.row(i) /= alphas[i];
  return v;
}

ChannelBlock extract_block(const MatrixXcd& v, scene::Role row_role, scene::Role col_role,
                           const scene::Scene& s) {
  const auto& rr = s.range(row_role);
  const auto& cr = s.range(col_role);
  if (rr.count() == 0 || cr.count() == 0)
    throw ConfigError(std::string("extract_block: no dipoles with role ") +
                      scene::role_name(rr.count() == 0 ? row_role : col_role));
  if (rr.end > static_cast<int>(v.rows()) || cr.end > static_cast<int>(v.cols()))
    throw ConfigError("extract_block: scene ranges exceed matrix dimensions");
  return {v.block(rr.begin, cr.begin, rr.count(), cr.count()), row_role, col_role};
}

std::vector<ThetaComponent> augmented_theta(int m) {
  std::vector<ThetaComponent> out{{ThetaKind::UeX, 0}, {ThetaKind::UeY, 0}, {ThetaKind::UeAlpha, 0}};
  for (int i = 0; i < m; ++i) {
    out.push_back({ThetaKind::SoX, i});
    out.push_back({ThetaKind::SoY, i});
  }
  return out;
}

MovedSet moved_set(const scene::Scene& s, const ThetaComponent& t) {
  MovedSet ms;
  switch (t.kind) {
    case ThetaKind::UeX:
    case ThetaKind::UeY:
    case ThetaKind::UeAlpha: {
      const auto& r = s.range(scene::Role::UE);
      const int n = r.count();
      const Vec2 tangent{-std::sin(s.ue.alpha), std::cos(s.ue.alpha)};
      for (int i = 0; i < n; ++i) {
        ms.indices.push_back(r.begin + i);
        if (t.kind == ThetaKind::UeX)
          ms.velocity.emplace_back(1.0, 0.0);
        else if (t.kind == ThetaKind::UeY)
          ms.velocity.emplace_back(0.0, 1.0);
        else {
          const double arm = (i - 0.5 * (n - 1)) * s.config.ue_spacing;
          ms.velocity.push_back(arm * tangent);
        }
      }
      break;
    }
    case ThetaKind::SoX:
    case ThetaKind::SoY: {
      if (t.so_index >= static_cast<int>(s.so_centers.size())) return ms;  // absent: no dependence
      const auto cr = s.so_cluster_range(t.so_index);
      for (int i = cr.begin; i < cr.end; ++i) {
        ms.indices.push_back(i);
        ms.velocity.emplace_back(t.kind == ThetaKind::SoX ? 1.0 : 0.0,
                                 t.kind == ThetaKind::SoX ? 0.0 : 1.0);
      }
      break;
    }
  }
  return ms;
}

ChannelJacobian channel_and_jacobian(const scene::Scene& s, double f, const GreenConstants& c,
                                     scene::Role row_role, scene::Role col_role,
                                     const std::vector<ThetaComponent>& wrt) {
  const InteractionMatrix w = assemble_interaction_matrix(s, f, c);
  const VectorXcd alphas = polarizability_vector(s, f);
  const int n = s.size();
  Eigen::PartialPivLU<MatrixXcd> lu(w.w);
  check_conditioning(lu);

  const auto& rr = s.range(row_role);
  const auto& cr = s.range(col_role);
  const int n_r = rr.count(), n_c = cr.count();

  // Needed columns of P = W^-1 (P is symmetric, so P[rows,:] = P[:,rows]^T).
  MatrixXcd rhs_rows = MatrixXcd::Zero(n, n_r);
  for (int i = 0; i < n_r; ++i) rhs_rows(rr.begin + i, i) = 1.0;
  MatrixXcd rhs_cols = MatrixXcd::Zero(n, n_c);
  for (int j = 0; j < n_c; ++j) rhs_cols(cr.begin + j, j) = 1.0;
  const MatrixXcd p_rows = lu.solve(rhs_rows);  // N x n_r
  const MatrixXcd p_cols = lu.solve(rhs_cols);  // N x n_c

  ChannelJacobian out;
  out.block.row_role = row_role;
  out.block.col_role = col_role;
  out.block.h.resize(n_r, n_c);
  for (int i = 0; i < n_r; ++i)
    out.block.h.row(i) = p_cols.row(rr.begin + i) / alphas[rr.begin + i];

  out.d_block.reserve(wrt.size());
  for (const auto& t : wrt) {
    const MovedSet ms = moved_set(s, t);
    MatrixXcd db = MatrixXcd::Zero(n_r, n_c);
    if (!ms.indices.empty()) {
      // dW/dtheta = sum_m (e_m d_m^T + d_m e_m^T), d_m zero on moved entries.
      MatrixXcd acc = MatrixXcd::Zero(n_r, n_c);
      std::vector<char> moved(static_cast<std::size_t>(n), 0);
      for (int idx : ms.indices) moved[static_cast<std::size_t>(idx)] = 1;
      VectorXcd d_m(n);
      for (std::size_t mi = 0; mi < ms.indices.size(); ++mi) {
        const int m = ms.indices[mi];
        const Vec2 rm = s.dipoles[static_cast<std::size_t>(m)].pos;
        const Vec2 vm = ms.velocity[mi];
        for (int j = 0; j < n; ++j) {
          if (moved[static_cast<std::size_t>(j)]) {
            d_m[j] = 0.0;
            continue;
          }
          const Vec2 diff = rm - s.dipoles[static_cast<std::size_t>(j)].pos;
          const double dist = diff.norm();
          // W_mj = -G_mj, so dW_mj = -dG/dd * d(dist)/dtheta.
          d_m[j] = -greens_coupling_ddist(dist, c) * (diff.dot(vm) / dist);
        }
        // P_rows^T (e_m d^T + d e_m^T) P_cols accumulated as two outer products.
        const Eigen::RowVectorXcd dt_pc = d_m.transpose() * p_cols;  // 1 x n_c
        const Eigen::VectorXcd pr_d = p_rows.transpose() * d_m;      // n_r x 1
        acc.noalias() += p_rows.row(m).transpose() * dt_pc;
        acc.noalias() += pr_d * p_cols.row(m);
      }
      for (int i = 0; i < n_r; ++i) db.row(i) = -acc.row(i) / alphas[rr.begin + i];
    }
    out.d_block.push_back(std::move(db));
  }
  return out;
}

}  // namespace risloc::phys
