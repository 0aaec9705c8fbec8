// SPDX-License-Identifier: Apache-2.0
#include "risloc/phys/dipole.hpp"

#include "risloc/core/error.hpp"
#include "risloc/phys/special.hpp"

namespace risloc::phys {

Complex polarizability(const DipoleParams& p, double f) {
  if (!(f > 0.0)) throw NumericError("polarizability: frequency must be > 0");
  if (!p.valid()) throw NumericError("polarizability: invalid dipole parameters");
  const Complex den(4.0 * sq(kPi) * (sq(p.f_res) - sq(f)),
                    p.gamma_r + kTwoPi * f * p.big_gamma_l);
  if (std::abs(den) < 1e-30)
    throw NumericError("polarizability: degenerate dipole (|denominator| < 1e-30)");
  return sq(p.chi) / den;
}

Complex greens_coupling(const Vec2& ri, const Vec2& rj, const GreenConstants& c) {
  const double dist = (ri - rj).norm();
  if (dist < 1e-9) throw NumericError("greens_coupling: coincident dipoles");
  const double pref = sq(c.k) / (4.0 * c.eps * c.delta);
  return Complex(0.0, -pref) * hankel_h2(0, c.k * dist);
}

Complex greens_coupling_ddist(double dist, const GreenConstants& c) {
  // dH0(2)/dx = -H1(2); chain through x = k*dist.
  const double pref = sq(c.k) / (4.0 * c.eps * c.delta);
  return Complex(0.0, -pref) * c.k * (-hankel_h2(1, c.k * dist));
}

}  // namespace risloc::phys
