// SPDX-License-Identifier: Apache-2.0
#include "risloc/phys/special.hpp"

#include <cmath>
#include <limits>

#include "risloc/core/error.hpp"
#include "risloc/core/mathutil.hpp"

namespace risloc::phys {
namespace {

constexpr long double kEulerGamma = 0.5772156649015328606065120900824024L;
constexpr long double kPiL = 3.141592653589793238462643383279503L;
constexpr double kSeriesAsymptoticSplit = 12.0;

// J0 ascending series, long double accumulation to absorb the alternating-sum
// cancellation near the split point.
long double j0_series(long double x) {
  const long double q = 0.25L * x * x;
  long double term = 1.0L, sum = 1.0L;
  for (int m = 1; m < 200; ++m) {
    term *= -q / (static_cast<long double>(m) * m);
    sum += term;
    if (std::fabs(term) < 1e-25L * std::fabs(sum) + 1e-40L) break;
  }
  return sum;
}

long double j1_series(long double x) {
  const long double q = 0.25L * x * x;
  long double term = 1.0L, sum = 1.0L;  // sum of (-q)^m / (m! (m+1)!)
  for (int m = 1; m < 200; ++m) {
    term *= -q / (static_cast<long double>(m) * (m + 1));
    sum += term;
    if (std::fabs(term) < 1e-25L * std::fabs(sum) + 1e-40L) break;
  }
  return 0.5L * x * sum;
}

// Y0 = (2/pi) [ (ln(x/2), + gamma) J0 + sum_{m>=1} (-1)^{m+1} H_m q^m / (m!)^2 ].
long double y0_series(long double x) {
  const long double q = 0.25L * x * x;
  long double term = 1.0L, sum = 0.0L, harmonic = 0.0L;
  for (int m = 1; m < 200; ++m) {
    term *= q / (static_cast<long double>(m) * m);
    harmonic += 1.0L / m;
    const long double contrib = (m % 2 == 1 ? term : -term) * harmonic;
    sum += contrib;
    if (std::fabs(contrib) < 1e-25L * (std::fabs(sum) + 1.0L) + 1e-40L) break;
  }
  return (2.0L / kPiL) * ((std::log(0.5L * x) + kEulerGamma) * j0_series(x) + sum);
}

// Y1 = (2/pi)(ln(x/2)+gamma) J1 - 2/(pi x)
//      - (1/pi) sum_{m>=0} (-1)^m (H_m + H_{m+1}) (x/2)^{2m+1} / (m! (m+1)!).
long double y1_series(long double x) {
  const long double q = 0.25L * x * x;
  long double term = 0.5L * x;  // (x/2)^{2m+1} / (m!(m+1)!) at m = 0
  long double harmonic_m = 0.0L, harmonic_m1 = 1.0L;
  long double sum = term * (harmonic_m + harmonic_m1);
  for (int m = 1; m < 200; ++m) {
    term *= -q / (static_cast<long double>(m) * (m + 1));
    harmonic_m += 1.0L / m;
    harmonic_m1 += 1.0L / (m + 1);
    const long double contrib = term * (harmonic_m + harmonic_m1);
    sum += contrib;
    if (std::fabs(contrib) < 1e-25L * (std::fabs(sum) + 1.0L) + 1e-40L) break;
  }
  return (2.0L / kPiL) * (std::log(0.5L * x) + kEulerGamma) * j1_series(x) - 2.0L / (kPiL * x) -
         sum / kPiL;
}

// Hankel asymptotic expansion (A&S 9.2.5/9.2.6):
//   J_n = sqrt(2/(pi x)) (P cos w - Q sin w),  Y_n = sqrt(2/(pi x)) (P sin w + Q cos w),
//   w = x - n pi/2 - pi/4, with Hankel symbols (n,k) summed to the smallest term.
struct PQ {
  long double p, q;
};

PQ hankel_pq(int order, long double x) {
  const long double mu = 4.0L * order * order;
  const long double inv2x = 1.0L / (2.0L * x);
  long double symbol = 1.0L;  // (n, k)
  long double p = 1.0L, q = 0.0L;
  long double prev_mag = std::numeric_limits<long double>::max();
  for (int k = 1; k < 60; ++k) {
    const long double odd = 2.0L * k - 1.0L;
    symbol *= (mu - odd * odd) / (8.0L * k);
    const long double term = symbol * std::pow(inv2x, static_cast<long double>(k));
    const long double mag = std::fabs(term);
    if (mag > prev_mag) break;  // divergent tail reached
    prev_mag = mag;
    const int phase = (k / 2) % 2;  // sign pattern (-1)^floor(k/2)
    const long double signed_term = phase ? -term : term;
    if (k % 2 == 0)
      p += signed_term;
    else
      q += signed_term;
    if (mag < 1e-22L) break;
  }
  return {p, q};
}

void bessel_jy_asymptotic(int order, double x, double& j, double& y) {
  const long double xl = x;
  const PQ pq = hankel_pq(order, xl);
  const long double w = xl - (0.5L * order + 0.25L) * kPiL;
  const long double amp = std::sqrt(2.0L / (kPiL * xl));
  const long double cw = std::cos(w), sw = std::sin(w);
  j = static_cast<double>(amp * (pq.p * cw - pq.q * sw));
  y = static_cast<double>(amp * (pq.p * sw + pq.q * cw));
}

void check_domain(double x) {
  if (!(x > 0.0)) throw NumericError("bessel: argument must be > 0, got " + std::to_string(x));
}

}  // namespace

double bessel_j0(double x) {
  check_domain(x);
  if (x <= kSeriesAsymptoticSplit) return static_cast<double>(j0_series(x));
  double j, y;
  bessel_jy_asymptotic(0, x, j, y);
  return j;
}

double bessel_j1(double x) {
  check_domain(x);
  if (x <= kSeriesAsymptoticSplit) return static_cast<double>(j1_series(x));
  double j, y;
  bessel_jy_asymptotic(1, x, j, y);
  return j;
}

double bessel_y0(double x) {
  check_domain(x);
  if (x <= kSeriesAsymptoticSplit) return static_cast<double>(y0_series(x));
  double j, y;
  bessel_jy_asymptotic(0, x, j, y);
  return y;
}

double bessel_y1(double x) {
  check_domain(x);
  if (x <= kSeriesAsymptoticSplit) return static_cast<double>(y1_series(x));
  double j, y;
  bessel_jy_asymptotic(1, x, j, y);
  return y;
}

std::complex<double> hankel_h2(int order, double x) {
  if (order != 0 && order != 1)
    throw NumericError("hankel_h2: order must be 0 or 1, got " + std::to_string(order));
  check_domain(x);
  if (x <= kSeriesAsymptoticSplit) {
    if (order == 0) return {static_cast<double>(j0_series(x)), -static_cast<double>(y0_series(x))};
    return {static_cast<double>(j1_series(x)), -static_cast<double>(y1_series(x))};
  }
  double j, y;
  bessel_jy_asymptotic(order, x, j, y);
  return {j, -y};
}

}  // namespace risloc::phys
