// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "sfband/reconstruct.hpp"

namespace sfband {

// Directional wavenumber density sampled on a grid of unit directions.
struct SpectrumEstimate {
  KernelSpec spec;
  Eigen::MatrixXd directions;  // M x d, unit rows
  Eigen::VectorXcd values;     // M
};

// Deterministic unit-direction grids:
//   d = 1: the two directions +1, -1 (m must be 2);
//   d = 2: m equiangular azimuths starting at angle 0;
//   d = 3: product of p midpoint-equiangular polar rings and 2p azimuths,
//          m = 2 p^2.
inline Eigen::MatrixXd direction_grid(int d, int m) {
  if (m < 1) throw std::invalid_argument("direction_grid: m < 1");
  if (d == 1) {
    if (m != 2) throw std::invalid_argument("direction_grid: d = 1 requires m = 2");
    Eigen::MatrixXd dirs(2, 1);
    dirs(0, 0) = 1.0;
    dirs(1, 0) = -1.0;
    return dirs;
  }
  if (d == 2) {
    Eigen::MatrixXd dirs(m, 2);
    for (int i = 0; i < m; ++i) {
      const double phi = 2.0 * M_PI * i / m;
      dirs(i, 0) = std::cos(phi);
      dirs(i, 1) = std::sin(phi);
    }
    return dirs;
  }
  if (d == 3) {
    const int p = static_cast<int>(std::lround(std::sqrt(0.5 * m)));
    if (p < 1 || 2 * p * p != m)
      throw std::invalid_argument("direction_grid: d = 3 requires m = 2 p^2");
    Eigen::MatrixXd dirs(m, 3);
    int row = 0;
    for (int j = 0; j < p; ++j) {
      const double theta = M_PI * (j + 0.5) / p;
      const double ct = std::cos(theta), st = std::sin(theta);
      for (int i = 0; i < 2 * p; ++i) {
        const double phi = 2.0 * M_PI * i / (2 * p);
        dirs(row, 0) = st * std::cos(phi);
        dirs(row, 1) = st * std::sin(phi);
        dirs(row, 2) = ct;
        ++row;
      }
    }
    return dirs;
  }
  throw std::invalid_argument("direction_grid: only d in {1, 2, 3}");
}

// Wavenumber spectrum of a fitted interpolant on the given directions:
//   P(k theta) = (2 pi)^{(d-1)/2} k^{1-d} sum_n a_n e^{-i k theta . r_n}.
// Linear in the coefficients.
inline SpectrumEstimate estimate_spectrum(const FittedModel& model,
                                          const Eigen::Ref<const Eigen::MatrixXd>& directions) {
  model.spec.validate();
  const int d = model.spec.dimension;
  if (directions.cols() != d)
    throw std::invalid_argument("estimate_spectrum: direction dimension mismatch");
  if (directions.rows() < 1)
    throw std::invalid_argument("estimate_spectrum: no directions");
  for (Eigen::Index i = 0; i < directions.rows(); ++i)
    if (std::abs(directions.row(i).norm() - 1.0) > 1e-12)
      throw std::invalid_argument("estimate_spectrum: directions must be unit vectors");
  const double k = model.spec.wavenumber;
  const double scale =
      std::pow(2.0 * M_PI, 0.5 * (d - 1)) * std::pow(k, 1.0 - d);
  Eigen::VectorXcd values(directions.rows());
  for (Eigen::Index i = 0; i < directions.rows(); ++i) {
    std::complex<double> sum{0.0, 0.0};
    for (Eigen::Index n = 0; n < model.centers.rows(); ++n)
      sum += model.coefficients[n] *
             std::polar(1.0, -k * directions.row(i).dot(model.centers.row(n)));
    values[i] = scale * sum;
  }
  return SpectrumEstimate{model.spec, directions, values};
}

// Herglotz synthesis: integrates the rescaled density
//   (2 pi)^{-(d-1)/2} k^{d-1} P(k theta) e^{i k theta . r}
// over the direction sphere with uniform weights (exact two-point measure
// for d = 1, periodic trapezoid for the d = 2 equiangular grid). With the
// spectrum of a fitted model this reproduces the model's field.
inline Eigen::VectorXcd herglotz_synthesize(const SpectrumEstimate& estimate,
                                            const Eigen::Ref<const Eigen::MatrixXd>& points) {
  const int d = estimate.spec.dimension;
  if (d > 2)
    throw std::invalid_argument("herglotz_synthesize: only d in {1, 2}");
  if (points.cols() != d)
    throw std::invalid_argument("herglotz_synthesize: point dimension mismatch");
  const Eigen::Index m = estimate.directions.rows();
  if (estimate.values.size() != m)
    throw std::invalid_argument("herglotz_synthesize: values/directions mismatch");
  const double k = estimate.spec.wavenumber;
  const double weight = d == 1 ? 1.0 : 2.0 * M_PI / static_cast<double>(m);
  const double scale =
      weight * std::pow(2.0 * M_PI, -0.5 * (d - 1)) * std::pow(k, d - 1.0);
  Eigen::VectorXcd out(points.rows());
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    std::complex<double> sum{0.0, 0.0};
    for (Eigen::Index j = 0; j < m; ++j)
      sum += estimate.values[j] *
             std::polar(1.0, k * estimate.directions.row(j).dot(points.row(i)));
    out[i] = scale * sum;
  }
  return out;
}

}  // namespace sfband
