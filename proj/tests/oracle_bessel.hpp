// SPDX-License-Identifier: Apache-2.0
//
// Test-side reference implementation of the radial functions, independent of
// the library under test: the defining power series evaluated in 128-bit
// floating point. The series alternates, and at z = 50 its largest term is
// near 3e20, so double or even 80-bit precision would lose the result to
// cancellation; __float128 keeps the absolute error near 1e-13 there and far
// below everywhere closer in.
#pragma once

#include <cmath>
#include <stdexcept>

namespace oracle {

using f128 = __float128;

inline f128 f128_abs(f128 x) { return x < 0 ? -x : x; }

// pi as a double-double sum, accurate to ~1e-32 relative.
inline f128 f128_pi() {
  return static_cast<f128>(3.141592653589793116) +
         static_cast<f128>(1.2246467991473531772e-16);
}

// Newton refinement of the double sqrt; three steps exceed 113-bit accuracy.
inline f128 f128_sqrt(f128 x) {
  if (x < 0) throw std::domain_error("f128_sqrt: negative");
  if (x == 0) return 0;
  f128 s = static_cast<f128>(std::sqrt(static_cast<double>(x)));
  for (int i = 0; i < 3; ++i) s = static_cast<f128>(0.5) * (s + x / s);
  return s;
}

inline f128 f128_pow_int(f128 base, int exponent) {
  f128 out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

// Gamma(twice/2 + 1) for twice >= -1.
inline f128 f128_gamma_nu_plus_1(int twice) {
  if (twice < -1) throw std::domain_error("gamma: order below -1/2");
  f128 g;
  if (twice % 2 == 0) {
    g = 1;
    for (int j = 2; j <= twice / 2; ++j) g *= j;  // (twice/2)!
  } else {
    g = f128_sqrt(f128_pi());  // Gamma(1/2)
    const int n = (twice - 1) / 2;  // nu = n + 1/2
    for (int j = 0; j <= n; ++j)
      g *= static_cast<f128>(j) + static_cast<f128>(0.5);
  }
  return g;
}

// J_nu(z) for nu = twice/2 >= -1/2, z >= 0, by the power series
//   sum_m (-1)^m (z/2)^{2m+nu} / (m! Gamma(m + nu + 1)).
inline f128 bessel_j_series_f128(int twice, f128 z) {
  if (twice < -1) throw std::domain_error("bessel series: order below -1/2");
  if (z < 0) throw std::domain_error("bessel series: z < 0");
  if (z == 0) {
    if (twice == 0) return 1;
    if (twice == -1) throw std::domain_error("bessel series: pole at 0");
    return 0;
  }
  const f128 half_z = z * static_cast<f128>(0.5);
  f128 front;  // (z/2)^nu
  if (twice % 2 == 0) {
    front = f128_pow_int(half_z, twice / 2);
  } else if (twice == -1) {
    front = 1 / f128_sqrt(half_z);
  } else {
    front = f128_pow_int(half_z, (twice - 1) / 2) * f128_sqrt(half_z);
  }
  f128 term = front / f128_gamma_nu_plus_1(twice);
  f128 sum = term;
  const f128 ratio_num = -(half_z * half_z);
  const f128 tiny = static_cast<f128>(1e-40);
  for (int m = 1; m <= 500; ++m) {
    term *= ratio_num /
            (static_cast<f128>(m) *
             (static_cast<f128>(m) + static_cast<f128>(twice) * static_cast<f128>(0.5)));
    sum += term;
    if (f128_abs(term) < tiny * f128_abs(sum) + tiny) break;
  }
  return sum;
}

inline double bessel_j_oracle(int twice, double z) {
  return static_cast<double>(bessel_j_series_f128(twice, static_cast<f128>(z)));
}

// j_n(z) = sqrt(pi / (2 z)) J_{n+1/2}(z), n >= -1, z > 0.
inline double spherical_j_oracle(int n, double z) {
  if (z <= 0) throw std::domain_error("spherical oracle: z <= 0");
  const f128 zq = static_cast<f128>(z);
  const f128 factor = f128_sqrt(f128_pi() / (2 * zq));
  return static_cast<double>(factor * bessel_j_series_f128(2 * n + 1, zq));
}

// First positive root of J_0, bracketed in [2, 3] and bisected on the
// 128-bit series down to double-precision spacing.
inline double first_j0_zero() {
  f128 lo = 2, hi = 3;
  for (int i = 0; i < 200; ++i) {
    const f128 mid = static_cast<f128>(0.5) * (lo + hi);
    if (static_cast<double>(lo) == static_cast<double>(hi)) break;
    const f128 val = bessel_j_series_f128(0, mid);
    if (val < 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return static_cast<double>(static_cast<f128>(0.5) * (lo + hi));
}

}  // namespace oracle
