// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace sfband::specfun {

// Order of a Bessel function restricted to the values that arise from
// ambient dimension d >= 1: nu = twice/2 with twice = d - 2 >= -1.
// Even twice is an integer order, odd twice a half-integer order.
struct BesselOrder {
  int twice;  // nu = twice / 2

  static BesselOrder from_twice(int twice) {
    if (twice < -1) throw std::invalid_argument("BesselOrder: twice < -1");
    return BesselOrder{twice};
  }
  static BesselOrder from_dimension(int d) {
    if (d < 1) throw std::invalid_argument("BesselOrder: dimension < 1");
    return BesselOrder{d - 2};
  }

  bool is_integer() const { return twice % 2 == 0; }
  int integer() const { return twice / 2; }
  // For half-integer nu = n + 1/2, the spherical index n (>= -1).
  int spherical_index() const { return (twice - 1) / 2; }
  double value() const { return 0.5 * twice; }
};

// Gamma(twice/2) for twice >= 1, by the recursion Gamma(x+1) = x Gamma(x)
// from Gamma(1/2) = sqrt(pi) and Gamma(1) = 1. Exact up to rounding.
inline double gamma_half_integer(int twice) {
  if (twice < 1) throw std::domain_error("gamma_half_integer: argument <= 0");
  double g = (twice % 2 == 1) ? std::sqrt(M_PI) : 1.0;
  for (int j = (twice % 2 == 1) ? 3 : 4; j <= twice; j += 2) g *= 0.5 * (j - 2);
  return g;
}

namespace detail {

// Power series for j_n(z) / z^n, n >= 0. Converges for all z; cancellation
// stays benign for z up to about max(2, n), which is where it is used.
inline double spherical_series_scaled(int n, double z) {
  double term = 1.0;
  for (int j = 1; j <= n; ++j) term /= 2 * j + 1;  // 1 / (2n+1)!!
  const double q = 0.5 * z * z;
  double sum = term;
  for (int m = 0; m < 120; ++m) {
    term *= -q / ((m + 1) * (2 * n + 2 * m + 3));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum) && m >= 8) break;
  }
  return sum;
}

// Power series for J_n(z) / z^n, integer n >= 0. Used for z <= 12, where the
// largest term is below ~1e5 times the result and full accuracy survives.
inline double integer_series_scaled(int n, double z) {
  double term = 1.0;
  for (int j = 1; j <= n; ++j) term /= 2.0 * j;  // 2^-n / n!
  const double q = 0.25 * z * z;
  double sum = term;
  for (int m = 0; m < 90; ++m) {
    term *= -q / ((m + 1.0) * (m + 1.0 + n));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum) && m >= 30) break;
  }
  return sum;
}

// Hankel asymptotic expansion for J_n(z), z > 12, n in {0, 1}. The terms
// c_k = a_k(n) / z^k fall below 1e-21 before diverging, so the truncation
// error is negligible at double precision.
inline double integer_asymptotic(int n, double z) {
  const double mu = 4.0 * n * n;
  double p = 0.0, q = 0.0, c = 1.0;
  for (int m = 0; m < 40; ++m) {
    const int k = m / 2;
    const double signed_c = (k % 2 == 0) ? c : -c;
    if (m % 2 == 0) {
      p += signed_c;
    } else {
      q += signed_c;
    }
    const double next = c * (mu - (2.0 * m + 1.0) * (2.0 * m + 1.0)) /
                        (8.0 * (m + 1.0) * z);
    if (std::abs(next) < 1e-21 || std::abs(next) > std::abs(c)) break;
    c = next;
  }
  const double omega = z - (0.5 * n + 0.25) * M_PI;
  return std::sqrt(2.0 / (M_PI * z)) *
         (p * std::cos(omega) - q * std::sin(omega));
}

// Miller downward recurrence for J_n(z) when n >= z > 12, normalized by
// J_0(z) + 2 sum_k J_2k(z) = 1.
inline double integer_miller(int n, double z) {
  int start = n + static_cast<int>(std::ceil(std::sqrt(40.0 * n)));
  if (start % 2 == 1) ++start;
  double jp = 0.0, j = 1e-30, result = 0.0, norm = 0.0;
  for (int m = start; m >= 0; --m) {
    const double jm = (2.0 * (m + 1) / z) * j - jp;
    jp = j;
    j = jm;
    if (m % 2 == 0) norm += (m == 0) ? j : 2.0 * j;
    if (m == n) result = j;
    if (std::abs(j) > 1e250) {  // rescale to avoid overflow
      jp /= 1e250;
      j /= 1e250;
      norm /= 1e250;
      result /= 1e250;
    }
  }
  return result / norm;
}

}  // namespace detail

// Spherical Bessel function j_n(z) for n >= -1, z >= 0, with
// j_-1(z) = cos(z) / z. Series below max(2, n), closed forms and upward
// recurrence (stable there since z >= n) otherwise.
inline double spherical_bessel_j(int n, double z) {
  if (n < -1) throw std::invalid_argument("spherical_bessel_j: n < -1");
  if (z < 0.0) throw std::invalid_argument("spherical_bessel_j: z < 0");
  if (n == -1) {
    if (z == 0.0) throw std::domain_error("spherical_bessel_j: j_-1 pole at 0");
    return std::cos(z) / z;
  }
  if (z == 0.0) return n == 0 ? 1.0 : 0.0;
  if (z < 2.0 || z < n) {
    double zn = 1.0;
    for (int j = 0; j < n; ++j) zn *= z;
    return zn * detail::spherical_series_scaled(n, z);
  }
  const double j0 = std::sin(z) / z;
  if (n == 0) return j0;
  const double j1 = (std::sin(z) / z - std::cos(z)) / z;
  if (n == 1) return j1;
  double prev = j0, cur = j1;
  for (int m = 1; m < n; ++m) {
    const double next = ((2.0 * m + 1.0) / z) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// j_n(z) / z^n for n >= 0; finite at z = 0 where it equals 1 / (2n+1)!!.
inline double spherical_bessel_j_scaled(int n, double z) {
  if (n < 0) throw std::invalid_argument("spherical_bessel_j_scaled: n < 0");
  if (z < 0.0) throw std::invalid_argument("spherical_bessel_j_scaled: z < 0");
  if (z < 2.0 || z < n) return detail::spherical_series_scaled(n, z);
  double zn = 1.0;
  for (int j = 0; j < n; ++j) zn *= z;
  return spherical_bessel_j(n, z) / zn;
}

// Bessel function J_nu(z) for z >= 0 and nu = twice/2 >= -1/2.
// Integer orders: power series for z <= 12, Hankel asymptotic plus
// recurrence above. Half-integer orders nu = n + 1/2 reduce to the closed
// spherical forms via J_{n+1/2}(z) = sqrt(2 z / pi) j_n(z), so kernel
// evaluations that meet through this identity share the same j_n value.
inline double bessel_j(BesselOrder nu, double z) {
  if (nu.twice < -1) throw std::invalid_argument("bessel_j: order < -1/2");
  if (z < 0.0) throw std::invalid_argument("bessel_j: z < 0");
  if (!nu.is_integer()) {
    const int n = nu.spherical_index();
    if (z == 0.0) {
      if (n == -1) throw std::domain_error("bessel_j: J_-1/2 pole at 0");
      return 0.0;
    }
    return std::sqrt(2.0 * z / M_PI) * spherical_bessel_j(n, z);
  }
  const int n = nu.integer();
  if (z == 0.0) return n == 0 ? 1.0 : 0.0;
  if (z <= 12.0) {
    double zn = 1.0;
    for (int j = 0; j < n; ++j) zn *= z;
    return zn * detail::integer_series_scaled(n, z);
  }
  if (n == 0) return detail::integer_asymptotic(0, z);
  if (n == 1) return detail::integer_asymptotic(1, z);
  if (n >= z) return detail::integer_miller(n, z);
  double prev = detail::integer_asymptotic(0, z);
  double cur = detail::integer_asymptotic(1, z);
  for (int m = 1; m < n; ++m) {
    const double next = (2.0 * m / z) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// J_nu(z) / z^nu, finite at z = 0 where it equals 2^-nu / Gamma(nu + 1).
// This is the numerically safe entry for near-coincident kernel arguments.
inline double bessel_j_scaled(BesselOrder nu, double z) {
  if (nu.twice < -1) throw std::invalid_argument("bessel_j_scaled: order < -1/2");
  if (z < 0.0) throw std::invalid_argument("bessel_j_scaled: z < 0");
  if (!nu.is_integer()) {
    const int n = nu.spherical_index();
    if (n == -1) return std::sqrt(2.0 / M_PI) * std::cos(z);
    return std::sqrt(2.0 / M_PI) * spherical_bessel_j_scaled(n, z);
  }
  const int n = nu.integer();
  if (z <= 12.0) return detail::integer_series_scaled(n, z);
  double zn = 1.0;
  for (int j = 0; j < n; ++j) zn *= z;
  return bessel_j(nu, z) / zn;
}

}  // namespace sfband::specfun
