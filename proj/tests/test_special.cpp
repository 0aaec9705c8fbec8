// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "risloc/core/error.hpp"
#include "risloc/phys/special.hpp"

using risloc::phys::bessel_j0;
using risloc::phys::bessel_j1;
using risloc::phys::bessel_y0;
using risloc::phys::bessel_y1;
using risloc::phys::hankel_h2;

namespace {

// Independent series oracle: 40-term ascending power series for J and the
// Neumann (logarithmic) series for Y, accumulated in long double. Valid for
// the small/moderate arguments where the terms stay finite.
long double oracle_j0(long double x) {
  const long double q = 0.25L * x * x;
  long double term = 1.0L, sum = 1.0L;
  for (int m = 1; m <= 40; ++m) {
    term *= -q / (static_cast<long double>(m) * m);
    sum += term;
  }
  return sum;
}

long double oracle_j1(long double x) {
  const long double q = 0.25L * x * x;
  long double term = 1.0L, sum = 1.0L;
  for (int m = 1; m <= 40; ++m) {
    term *= -q / (static_cast<long double>(m) * (m + 1));
    sum += term;
  }
  return 0.5L * x * sum;
}

constexpr long double kGamma = 0.5772156649015328606065120900824024L;
constexpr long double kPi = 3.141592653589793238462643383279503L;

long double oracle_y0(long double x) {
  const long double q = 0.25L * x * x;
  long double term = 1.0L, sum = 0.0L, h = 0.0L;
  for (int m = 1; m <= 40; ++m) {
    term *= q / (static_cast<long double>(m) * m);
    h += 1.0L / m;
    sum += (m % 2 == 1 ? term : -term) * h;
  }
  return (2.0L / kPi) * ((std::log(0.5L * x) + kGamma) * oracle_j0(x) + sum);
}

long double oracle_y1(long double x) {
  const long double q = 0.25L * x * x;
  long double term = 0.5L * x, hm = 0.0L, hm1 = 1.0L;
  long double sum = term * (hm + hm1);
  for (int m = 1; m <= 40; ++m) {
    term *= -q / (static_cast<long double>(m) * (m + 1));
    hm += 1.0L / m;
    hm1 += 1.0L / (m + 1);
    sum += term * (hm + hm1);
  }
  return (2.0L / kPi) * (std::log(0.5L * x) + kGamma) * oracle_j1(x) - 2.0L / (kPi * x) -
         sum / kPi;
}

double rel_err(double got, long double want) {
  const long double denom = std::max<long double>(std::fabs(want), 1e-300L);
  return static_cast<double>(std::fabs(got - want) / denom);
}

}  // namespace

TEST_CASE("J/Y match the series oracle for x <= 12") {
  for (double x : {0.05, 0.3, 1.0, 2.0, 3.14159, 5.0, 7.5, 9.0, 11.0, 12.0}) {
    CAPTURE(x);
    CHECK(rel_err(bessel_j0(x), oracle_j0(x)) < 1e-10);
    CHECK(rel_err(bessel_j1(x), oracle_j1(x)) < 1e-10);
    CHECK(rel_err(bessel_y0(x), oracle_y0(x)) < 1e-10);
    CHECK(rel_err(bessel_y1(x), oracle_y1(x)) < 1e-10);
  }
}

TEST_CASE("hankel_h2(0, 1.0) equals J0(1) - j Y0(1) from the oracle") {
  const std::complex<double> got = hankel_h2(0, 1.0);
  CHECK(rel_err(got.real(), oracle_j0(1.0L)) < 1e-12);
  CHECK(rel_err(got.imag(), -oracle_y0(1.0L)) < 1e-12);
}

TEST_CASE("standard-library cross-check across the asymptotic range") {
  // libstdc++ ships the C++17 special math functions; use them as a second,
  // fully independent reference including x far beyond the series split.
  for (double x : {0.2, 1.0, 6.0, 11.9, 12.1, 15.0, 25.0, 40.0, 80.0, 150.0, 400.0}) {
    CAPTURE(x);
    CHECK(rel_err(bessel_j0(x), std::cyl_bessel_j(0.0, x)) < 1e-10);
    CHECK(rel_err(bessel_j1(x), std::cyl_bessel_j(1.0, x)) < 1e-10);
    CHECK(rel_err(bessel_y0(x), std::cyl_neumann(0.0, x)) < 1e-10);
    CHECK(rel_err(bessel_y1(x), std::cyl_neumann(1.0, x)) < 1e-10);
  }
}

TEST_CASE("J0 -> 1 as x -> 0+") {
  CHECK(hankel_h2(0, 1e-8).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hankel_h2(0, 1e-4).real() == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("derivative recurrence d/dx H0 = -H1 by central differences") {
  const double h = 1e-6;
  for (double x : {0.5, 2.0, 10.0}) {
    CAPTURE(x);
    const std::complex<double> fd = (hankel_h2(0, x + h) - hankel_h2(0, x - h)) / (2.0 * h);
    const std::complex<double> want = -hankel_h2(1, x);
    CHECK(std::abs(fd - want) / std::abs(want) < 1e-6);
  }
}

TEST_CASE("continuity at the series/asymptotic split") {
  const double a = 12.0 - 1e-9, b = 12.0 + 1e-9;
  CHECK(std::abs(hankel_h2(0, a) - hankel_h2(0, b)) < 1e-9);
  CHECK(std::abs(hankel_h2(1, a) - hankel_h2(1, b)) < 1e-9);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(hankel_h2(0, 0.0), risloc::NumericError);
  CHECK_THROWS_AS(hankel_h2(0, -1.0), risloc::NumericError);
  CHECK_THROWS_AS(hankel_h2(2, 1.0), risloc::NumericError);
}
