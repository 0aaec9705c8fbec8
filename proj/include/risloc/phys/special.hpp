// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace risloc::phys {

// Cylindrical Bessel functions of the first and second kind, orders 0 and 1,
// for real positive argument. Self-contained: ascending power series for
// x <= 12 and the Hankel asymptotic expansion beyond, both accumulated in
// long double. Relative accuracy is well inside 1e-10 over the range used by
// the 2D Green's function (k*d up to a few hundred).
double bessel_j0(double x);
double bessel_j1(double x);
double bessel_y0(double x);
double bessel_y1(double x);

// Hankel function of the second kind, H_n^(2)(x) = J_n(x) - j*Y_n(x).
// order must be 0 or 1; x must be > 0.
std::complex<double> hankel_h2(int order, double x);

// d/dx H_0^(2)(x) = -H_1^(2)(x).
inline std::complex<double> hankel_h2_d0(double x) { return -hankel_h2(1, x); }

}  // namespace risloc::phys
