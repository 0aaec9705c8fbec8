// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>

#include "risloc/core/mathutil.hpp"

namespace risloc::phys {

using Vec2 = Eigen::Vector2d;
using Complex = std::complex<double>;

// Lorentzian dipole parameters in normalized units (operating frequency = 1,
// lengths in wavelengths). gamma_r defaults to k^2/4, the free-space 2D
// radiation condition; the absorptive term big_gamma_l must be >= 0.
struct DipoleParams {
  double f_res = 1.0;
  double chi = 0.5;
  double gamma_r = sq(kTwoPi) / 4.0;
  double big_gamma_l = 0.0;

  bool valid() const { return f_res > 0.0 && chi > 0.0 && gamma_r > 0.0 && big_gamma_l >= 0.0; }
};

// Green's function prefactor constants. The paper never assigns eps/delta;
// they only rescale the coupling uniformly, so both default to 1. k = 2*pi
// because lengths are in wavelengths.
struct GreenConstants {
  double k = kTwoPi;
  double eps = 1.0;
  double delta = 1.0;
};

// alpha(f) = chi^2 / (4 pi^2 f_res^2 - 4 pi^2 f^2 + j (gamma_r + 2 pi f GAMMA_L)).
Complex polarizability(const DipoleParams& p, double f);

// Derivative of the *inverse* polarizability with respect to f_res at fixed f.
// The denominator of alpha is linear in f_res^2, so this is real:
//   d(1/alpha)/df_res = 8 pi^2 f_res / chi^2.
inline double inverse_polarizability_dfres(const DipoleParams& p) {
  return 8.0 * sq(kPi) * p.f_res / sq(p.chi);
}

// G_ij = -j * k^2/(4 eps delta) * H0^(2)(k |r_i - r_j|).
Complex greens_coupling(const Vec2& ri, const Vec2& rj, const GreenConstants& c);

// d/d(distance) of greens_coupling; used by the analytic channel jacobians.
Complex greens_coupling_ddist(double dist, const GreenConstants& c);

}  // namespace risloc::phys
