// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace sfband {

// How region_mean_ne aggregates the pointwise errors: mean of the decibel
// values, or decibels of the mean error power.
enum class Averaging { kDecibel, kLinearPower };

// Pointwise normalized error 20 log10(|ref - est| / |ref|) in dB.
// An exact match returns -inf; a zero reference has no scale and throws.
inline double normalized_error_db(std::complex<double> ref,
                                  std::complex<double> est) {
  const double ref_abs = std::abs(ref);
  if (ref_abs == 0.0)
    throw std::domain_error("normalized_error_db: zero reference value");
  const double err = std::abs(ref - est);
  if (err == 0.0) return -std::numeric_limits<double>::infinity();
  return 20.0 * std::log10(err / ref_abs);
}

struct RegionStats {
  double mean_db;
  int included;  // points entering the mean
  int excluded;  // exact matches (-inf dB) left out of a decibel mean
};

// Region-averaged normalized error over paired reference/estimate values.
// The decibel mean excludes exact matches (whose pointwise value is -inf)
// and reports how many were excluded; the linear-power mean includes them.
inline RegionStats region_mean_ne(const Eigen::VectorXcd& ref,
                                  const Eigen::VectorXcd& est,
                                  Averaging averaging = Averaging::kDecibel) {
  if (ref.size() != est.size())
    throw std::invalid_argument("region_mean_ne: size mismatch");
  if (ref.size() < 1) throw std::invalid_argument("region_mean_ne: empty input");
  double sum = 0.0;
  int included = 0, excluded = 0;
  for (Eigen::Index i = 0; i < ref.size(); ++i) {
    const double ref_abs = std::abs(ref[i]);
    if (ref_abs == 0.0)
      throw std::domain_error("region_mean_ne: zero reference value");
    const double err = std::abs(ref[i] - est[i]);
    if (averaging == Averaging::kDecibel) {
      if (err == 0.0) {
        ++excluded;
        continue;
      }
      sum += 20.0 * std::log10(err / ref_abs);
      ++included;
    } else {
      const double q = err / ref_abs;
      sum += q * q;
      ++included;
    }
  }
  double mean;
  if (averaging == Averaging::kDecibel) {
    mean = included == 0 ? -std::numeric_limits<double>::infinity()
                         : sum / included;
  } else {
    const double power = sum / included;
    mean = power == 0.0 ? -std::numeric_limits<double>::infinity()
                        : 10.0 * std::log10(power);
  }
  return RegionStats{mean, included, excluded};
}

// Regular (per_axis x per_axis) evaluation grid over the square
// [-side/2, side/2]^2, endpoints included. Row i * per_axis + j holds
// (x_i, y_j), i.e. x varies in the outer loop.
inline Eigen::MatrixXd square_grid(double side, int per_axis) {
  if (!(side > 0.0)) throw std::invalid_argument("square_grid: side <= 0");
  if (per_axis < 2) throw std::invalid_argument("square_grid: per_axis < 2");
  Eigen::MatrixXd grid(static_cast<Eigen::Index>(per_axis) * per_axis, 2);
  const double half = 0.5 * side;
  for (int i = 0; i < per_axis; ++i) {
    const double x = -half + side * i / (per_axis - 1.0);
    for (int j = 0; j < per_axis; ++j) {
      const double y = -half + side * j / (per_axis - 1.0);
      const Eigen::Index row = static_cast<Eigen::Index>(i) * per_axis + j;
      grid(row, 0) = x;
      grid(row, 1) = y;
    }
  }
  return grid;
}

// Pointwise normalized error field in dB for paired values.
inline Eigen::VectorXd error_field_db(const Eigen::VectorXcd& ref,
                                      const Eigen::VectorXcd& est) {
  if (ref.size() != est.size())
    throw std::invalid_argument("error_field_db: size mismatch");
  Eigen::VectorXd out(ref.size());
  for (Eigen::Index i = 0; i < ref.size(); ++i)
    out[i] = normalized_error_db(ref[i], est[i]);
  return out;
}

}  // namespace sfband
