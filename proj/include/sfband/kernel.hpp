// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "sfband/errors.hpp"
#include "sfband/quadrature.hpp"
#include "sfband/specfun.hpp"

namespace sfband {

// Band-limited field space on wavenumber k in ambient dimension d.
struct KernelSpec {
  int dimension;     // d >= 1
  double wavenumber;  // k > 0

  void validate() const {
    if (dimension < 1) throw std::invalid_argument("KernelSpec: dimension < 1");
    if (!(wavenumber > 0.0) || !std::isfinite(wavenumber))
      throw std::invalid_argument("KernelSpec: wavenumber must be positive");
  }
};

// Surface area of the unit sphere S^{d-1}: 2 pi^{d/2} / Gamma(d/2).
// This is the kernel's coincidence value; the d = 2 and d = 3 cases are
// returned as exact multiples of pi.
inline double surface_area(int d) {
  if (d < 1) throw std::invalid_argument("surface_area: dimension < 1");
  switch (d) {
    case 1: return 2.0;
    case 2: return 2.0 * M_PI;
    case 3: return 4.0 * M_PI;
    default:
      return 2.0 * std::pow(M_PI, 0.5 * d) / specfun::gamma_half_integer(d);
  }
}

// Threshold below which kernel evaluation switches to the scaled series
// J_nu(z) / z^nu, avoiding the 0/0 quotient near coincidence.
inline constexpr double kKernelSeriesThreshold = 1e-6;

// Reproducing kernel of the band-limited space:
//   kappa(r, r') = 2 pi (2 pi / (k rho))^{d/2 - 1} J_{d/2-1}(k rho),
// with rho = |r - r'|; d = 1 reduces to 2 cos(k (x - x')) and rho = 0 to the
// sphere surface area. Symmetric and real for all d >= 1.
inline double kernel_eval(const KernelSpec& spec,
                          const Eigen::Ref<const Eigen::VectorXd>& r,
                          const Eigen::Ref<const Eigen::VectorXd>& rp) {
  spec.validate();
  const int d = spec.dimension;
  if (r.size() != d || rp.size() != d)
    throw std::invalid_argument("kernel_eval: position dimension mismatch");
  if (d == 1) return 2.0 * std::cos(spec.wavenumber * (r[0] - rp[0]));
  const double z = spec.wavenumber * (r - rp).norm();
  if (z == 0.0) return surface_area(d);
  const auto nu = specfun::BesselOrder::from_dimension(d);
  if (z < kKernelSeriesThreshold)
    return 2.0 * M_PI * std::pow(2.0 * M_PI, nu.value()) *
           specfun::bessel_j_scaled(nu, z);
  return 2.0 * M_PI * std::pow(2.0 * M_PI / z, nu.value()) *
         specfun::bessel_j(nu, z);
}

// Odd-dimension closed form, d odd and >= 3:
//   kappa(r, r') = 4 pi (2 pi / (k rho))^{(d-3)/2} j_{(d-3)/2}(k rho).
// Agrees with kernel_eval to rounding because both routes share the same
// spherical Bessel evaluation and differ only in exact-prefactor algebra.
inline double kernel_eval_odd(const KernelSpec& spec,
                              const Eigen::Ref<const Eigen::VectorXd>& r,
                              const Eigen::Ref<const Eigen::VectorXd>& rp) {
  spec.validate();
  const int d = spec.dimension;
  if (d < 3 || d % 2 == 0)
    throw std::invalid_argument("kernel_eval_odd: requires odd dimension >= 3");
  if (r.size() != d || rp.size() != d)
    throw std::invalid_argument("kernel_eval_odd: position dimension mismatch");
  const int n = (d - 3) / 2;
  const double z = spec.wavenumber * (r - rp).norm();
  if (z == 0.0) return surface_area(d);
  if (z < kKernelSeriesThreshold)
    return 4.0 * M_PI * std::pow(2.0 * M_PI, static_cast<double>(n)) *
           specfun::spherical_bessel_j_scaled(n, z);
  return 4.0 * M_PI * std::pow(2.0 * M_PI / z, static_cast<double>(n)) *
         specfun::spherical_bessel_j(n, z);
}

// Direct numerical integration of the kernel's defining integral
//   kappa(r, r') = integral over S^{d-1} of e^{i k theta . (r - r')} dtheta,
// for d in {1, 2, 3}. Serves as an independent oracle for kernel_eval: the
// imaginary part must vanish to rounding. d = 1 sums the two-point measure
// exactly; d = 2 uses the trapezoid rule with `resolution` nodes; d = 3 uses
// Gauss-Legendre in the polar cosine (`resolution` nodes) times a trapezoid
// in azimuth (2 x resolution nodes).
inline std::complex<double> kernel_quadrature(
    const KernelSpec& spec, const Eigen::Ref<const Eigen::VectorXd>& r,
    const Eigen::Ref<const Eigen::VectorXd>& rp, int resolution) {
  spec.validate();
  const int d = spec.dimension;
  if (r.size() != d || rp.size() != d)
    throw std::invalid_argument("kernel_quadrature: position dimension mismatch");
  if (resolution < 1)
    throw std::invalid_argument("kernel_quadrature: resolution < 1");
  const double k = spec.wavenumber;
  const Eigen::VectorXd delta = r - rp;
  if (d == 1) {
    const double phase = k * delta[0];
    return std::polar(1.0, phase) + std::polar(1.0, -phase);
  }
  if (d == 2) {
    std::complex<double> sum{0.0, 0.0};
    const double w = 2.0 * M_PI / resolution;
    for (int m = 0; m < resolution; ++m) {
      const double phi = 2.0 * M_PI * m / resolution;
      const double dot = std::cos(phi) * delta[0] + std::sin(phi) * delta[1];
      sum += std::polar(w, k * dot);
    }
    return sum;
  }
  if (d == 3) {
    const QuadratureRule rule = gauss_legendre(resolution);
    const int n_az = 2 * resolution;
    const double w_az = 2.0 * M_PI / n_az;
    std::complex<double> sum{0.0, 0.0};
    for (int j = 0; j < resolution; ++j) {
      const double u = rule.nodes[j];
      const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
      const double w = rule.weights[j] * w_az;
      for (int m = 0; m < n_az; ++m) {
        const double phi = 2.0 * M_PI * m / n_az;
        const double dot =
            s * std::cos(phi) * delta[0] + s * std::sin(phi) * delta[1] +
            u * delta[2];
        sum += std::polar(w, k * dot);
      }
    }
    return sum;
  }
  throw std::invalid_argument("kernel_quadrature: only d in {1, 2, 3}");
}

}  // namespace sfband
