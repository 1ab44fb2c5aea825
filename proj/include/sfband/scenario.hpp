// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "sfband/kernel.hpp"
#include "sfband/rng.hpp"

namespace sfband {

// Monochromatic plane-wave scene: unit-amplitude by default, propagation
// direction given as a unit vector, wavenumber k = 2 pi f / c.
struct Scenario {
  double frequency;                        // Hz, > 0
  Eigen::VectorXd direction;               // unit propagation direction
  std::complex<double> amplitude{1.0, 0.0};
  double sound_speed = 343.0;              // m/s, > 0

  int dimension() const { return static_cast<int>(direction.size()); }
  double wavenumber() const { return 2.0 * M_PI * frequency / sound_speed; }
  KernelSpec kernel() const { return KernelSpec{dimension(), wavenumber()}; }

  void validate() const {
    if (!(frequency > 0.0) || !std::isfinite(frequency))
      throw std::invalid_argument("Scenario: frequency must be positive");
    if (!(sound_speed > 0.0) || !std::isfinite(sound_speed))
      throw std::invalid_argument("Scenario: sound_speed must be positive");
    if (direction.size() < 1)
      throw std::invalid_argument("Scenario: empty direction");
    if (std::abs(direction.norm() - 1.0) > 1e-12)
      throw std::invalid_argument("Scenario: direction must be a unit vector");
  }

  static Scenario plane_wave_2d(double frequency_hz, double direction_deg,
                                double sound_speed_mps = 343.0) {
    const double phi = direction_deg * M_PI / 180.0;
    Scenario s;
    s.frequency = frequency_hz;
    s.direction = Eigen::Vector2d(std::cos(phi), std::sin(phi));
    s.sound_speed = sound_speed_mps;
    s.validate();
    return s;
  }
};

// Positions paired with the complex pressures observed there.
struct SampleSet {
  Eigen::MatrixXd positions;   // N x d, one row per sample
  Eigen::VectorXcd pressures;  // N

  int size() const { return static_cast<int>(positions.rows()); }
  int dimension() const { return static_cast<int>(positions.cols()); }
};

// Plane-wave pressure amplitude e^{i k theta . r} at one point.
inline std::complex<double> plane_wave_pressure(
    const Scenario& s, const Eigen::Ref<const Eigen::VectorXd>& r) {
  s.validate();
  if (r.size() != s.dimension())
    throw std::invalid_argument("plane_wave_pressure: dimension mismatch");
  return s.amplitude * std::polar(1.0, s.wavenumber() * s.direction.dot(r));
}

// Plane-wave pressures at each row of `points`.
inline Eigen::VectorXcd plane_wave_field(
    const Scenario& s, const Eigen::Ref<const Eigen::MatrixXd>& points) {
  s.validate();
  if (points.cols() != s.dimension())
    throw std::invalid_argument("plane_wave_pressure: dimension mismatch");
  const double k = s.wavenumber();
  Eigen::VectorXcd out(points.rows());
  for (Eigen::Index i = 0; i < points.rows(); ++i)
    out[i] = s.amplitude * std::polar(1.0, k * s.direction.dot(points.row(i)));
  return out;
}

// n positions drawn independently and uniformly from the axis-aligned
// square [-side/2, side/2)^2 centered at the origin. Draw order is x then y
// per point, from the (seed, "positions") stream, so results are
// reproducible bit for bit.
inline Eigen::MatrixXd sample_positions_uniform_square(double side, int n,
                                                       std::uint64_t seed) {
  if (!(side > 0.0) || !std::isfinite(side))
    throw std::invalid_argument("sample_positions_uniform_square: side <= 0");
  if (n < 1)
    throw std::invalid_argument("sample_positions_uniform_square: n < 1");
  RandomStream stream(seed, "positions");
  Eigen::MatrixXd positions(n, 2);
  const double half = 0.5 * side;
  for (int i = 0; i < n; ++i) {
    positions(i, 0) = stream.uniform(-half, half);
    positions(i, 1) = stream.uniform(-half, half);
  }
  return positions;
}

// Adds circularly symmetric complex Gaussian noise at the given SNR:
// the noise variance is mean |p|^2 / 10^(snr_db / 10). An infinite snr_db
// returns the input unchanged. Draws come from the (seed, "noise") stream,
// one complex sample per element in order.
inline Eigen::VectorXcd add_noise(const Eigen::VectorXcd& pressures,
                                  double snr_db, std::uint64_t seed) {
  if (pressures.size() < 1) throw std::invalid_argument("add_noise: empty input");
  if (std::isnan(snr_db)) throw std::invalid_argument("add_noise: NaN snr_db");
  if (std::isinf(snr_db) && snr_db > 0.0) return pressures;
  const double power = pressures.squaredNorm() / pressures.size();
  if (power == 0.0)
    throw std::domain_error("add_noise: zero signal has no SNR scale");
  const double sigma_sq = power / std::pow(10.0, snr_db / 10.0);
  RandomStream stream(seed, "noise");
  Eigen::VectorXcd noisy(pressures.size());
  for (Eigen::Index i = 0; i < pressures.size(); ++i)
    noisy[i] = pressures[i] + stream.complex_normal(sigma_sq);
  return noisy;
}

}  // namespace sfband
