// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "sfband/errors.hpp"
#include "sfband/scenario.hpp"
#include "sfband/specfun.hpp"

namespace sfband {

// Truncated circular-harmonic expansion about the origin (d = 2 only):
//   p(r, theta) = sum_{n=-N..N} b_n J_|n|(k r) e^{i n theta}.
struct HarmonicModel {
  int order;                      // N
  double wavenumber;
  double lambda;
  Eigen::VectorXcd coefficients;  // 2N + 1 entries, index n + N
  double residual;                // relative residual of the solved system
  std::vector<std::string> warnings;

  std::complex<double> coefficient(int n) const {
    if (std::abs(n) > order)
      throw std::invalid_argument("HarmonicModel: coefficient index out of range");
    return coefficients[n + order];
  }
};

// Ridge penalty scale that makes lambda act in the orthonormalized basis
// e^{i n theta} / sqrt(2 pi): the raw-basis normal equations carry an
// effective penalty of 2 pi lambda. This keeps a given lambda comparable
// between the harmonic baseline and the kernel ridge fit.
inline constexpr double kHarmonicRidgeScale = 2.0 * M_PI;

// Basis matrix B(m, n + order) = J_|n|(k r_m) e^{i n theta_m} in polar
// coordinates about the origin, for each row of `points`.
inline Eigen::MatrixXcd harmonic_basis(const Eigen::Ref<const Eigen::MatrixXd>& points,
                                       int order, double wavenumber) {
  if (points.cols() != 2)
    throw std::invalid_argument("harmonic_basis: points must be 2-D");
  if (order < 0) throw std::invalid_argument("harmonic_basis: order < 0");
  if (!(wavenumber > 0.0))
    throw std::invalid_argument("harmonic_basis: wavenumber must be positive");
  const Eigen::Index m = points.rows();
  Eigen::MatrixXcd basis(m, 2 * order + 1);
  std::vector<double> radial(static_cast<size_t>(order) + 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double r = points.row(i).norm();
    const double theta = std::atan2(points(i, 1), points(i, 0));
    for (int n = 0; n <= order; ++n)
      radial[static_cast<size_t>(n)] =
          specfun::bessel_j(specfun::BesselOrder::from_twice(2 * n),
                            wavenumber * r);
    for (int n = -order; n <= order; ++n)
      basis(i, n + order) =
          radial[static_cast<size_t>(std::abs(n))] * std::polar(1.0, n * theta);
  }
  return basis;
}

// Ridge fit of the harmonic expansion. With lambda > 0 solves the normal
// equations (B^H B + 2 pi lambda I) b = B^H p (see kHarmonicRidgeScale);
// with lambda = 0 solves the least-squares problem by rank-revealing QR and
// raises ill_posed_error when B is rank-deficient.
inline HarmonicModel fit_harmonic(const SampleSet& samples, int order,
                                  double wavenumber, double lambda) {
  if (samples.positions.rows() != samples.pressures.size())
    throw std::invalid_argument("fit_harmonic: positions/pressures size mismatch");
  if (samples.positions.rows() < 1)
    throw std::invalid_argument("fit_harmonic: no samples");
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("fit_harmonic: lambda must be >= 0");
  std::vector<std::string> warnings;
  const Eigen::Index n_samples = samples.positions.rows();
  const Eigen::Index n_basis = 2 * static_cast<Eigen::Index>(order) + 1;
  if (n_basis > n_samples)
    warnings.push_back("harmonic order " + std::to_string(order) +
                       " gives more basis functions than samples; fit is underdetermined");

  const Eigen::MatrixXcd basis = harmonic_basis(samples.positions, order, wavenumber);
  Eigen::VectorXcd coeffs;
  double residual = 0.0;
  if (lambda == 0.0) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(basis);
    if (qr.rank() < std::min(n_basis, n_samples))
      throw ill_posed_error("fit_harmonic: rank-deficient basis at lambda = 0");
    coeffs = qr.solve(samples.pressures);
    const double scale = samples.pressures.norm();
    if (scale > 0.0) {
      // Residual of the normal equations: zero at the least-squares optimum.
      residual = (basis.adjoint() * (basis * coeffs - samples.pressures)).norm() /
                 (basis.adjoint() * samples.pressures).norm();
    }
  } else {
    Eigen::MatrixXcd normal = basis.adjoint() * basis;
    normal.diagonal().array() += kHarmonicRidgeScale * lambda;
    const Eigen::VectorXcd rhs = basis.adjoint() * samples.pressures;
    Eigen::LLT<Eigen::MatrixXcd> llt(normal);
    if (llt.info() != Eigen::Success)
      throw numerical_error("fit_harmonic: factorization failed");
    coeffs = llt.solve(rhs);
    const double rhs_norm = rhs.norm();
    for (int pass = 0; pass < 4 && rhs_norm > 0.0; ++pass) {
      const Eigen::VectorXcd r = rhs - normal * coeffs;
      residual = r.norm() / rhs_norm;
      if (residual <= 1e-10) break;
      coeffs += llt.solve(r);
    }
    if (residual > 1e-10)
      throw numerical_error("fit_harmonic: residual above 1e-10");
  }
  return HarmonicModel{order, wavenumber, lambda, std::move(coeffs), residual,
                       std::move(warnings)};
}

// Expansion values at each row of `queries`.
inline Eigen::VectorXcd evaluate_harmonic(const HarmonicModel& model,
                                          const Eigen::Ref<const Eigen::MatrixXd>& queries) {
  return harmonic_basis(queries, model.order, model.wavenumber) *
         model.coefficients;
}

}  // namespace sfband
