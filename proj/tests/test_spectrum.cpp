// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "sfband/metrics.hpp"
#include "sfband/reconstruct.hpp"
#include "sfband/scenario.hpp"
#include "sfband/spectrum.hpp"

using sfband::direction_grid;
using sfband::estimate_spectrum;
using sfband::evaluate;
using sfband::fit;
using sfband::FittedModel;
using sfband::herglotz_synthesize;
using sfband::KernelSpec;
using sfband::plane_wave_field;
using sfband::sample_positions_uniform_square;
using sfband::SampleSet;
using sfband::Scenario;
using sfband::SpectrumEstimate;
using sfband::square_grid;

namespace {

const Scenario kScenario = Scenario::plane_wave_2d(2000.0, 45.0);
constexpr std::uint64_t kSeed = 38;

FittedModel reference_fit(double lambda) {
  const Eigen::MatrixXd positions = sample_positions_uniform_square(0.4, 21, kSeed);
  const SampleSet samples{positions, plane_wave_field(kScenario, positions)};
  return fit(kScenario.kernel(), samples, lambda);
}

}  // namespace

TEST_CASE("direction grid on the line is the two signs") {
  const Eigen::MatrixXd dirs = direction_grid(1, 2);
  REQUIRE(dirs.rows() == 2);
  CHECK(dirs(0, 0) == 1.0);
  CHECK(dirs(1, 0) == -1.0);
  CHECK_THROWS_AS(direction_grid(1, 3), std::invalid_argument);
}

TEST_CASE("direction grid on the circle is equiangular from zero") {
  const Eigen::MatrixXd dirs = direction_grid(2, 4);
  REQUIRE(dirs.rows() == 4);
  CHECK(dirs(0, 0) == 1.0);
  CHECK(dirs(0, 1) == 0.0);
  CHECK(dirs(1, 0) == Catch::Approx(0.0).margin(1e-15));
  CHECK(dirs(1, 1) == Catch::Approx(1.0).epsilon(1e-15));
  CHECK(dirs(2, 0) == Catch::Approx(-1.0).epsilon(1e-15));
  CHECK(dirs(2, 1) == Catch::Approx(0.0).margin(1e-15));
  CHECK(dirs(3, 0) == Catch::Approx(0.0).margin(1e-15));
  CHECK(dirs(3, 1) == Catch::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("direction grid on the sphere is a unit product grid") {
  const Eigen::MatrixXd dirs = direction_grid(3, 128);
  REQUIRE(dirs.rows() == 128);
  for (Eigen::Index i = 0; i < dirs.rows(); ++i)
    CHECK(dirs.row(i).norm() == Catch::Approx(1.0).epsilon(1e-15));
  // Polar rings avoid the poles, so no direction repeats.
  for (Eigen::Index i = 1; i < dirs.rows(); ++i)
    CHECK((dirs.row(0) - dirs.row(i)).norm() > 1e-12);
  CHECK_THROWS_AS(direction_grid(3, 100), std::invalid_argument);
  CHECK_THROWS_AS(direction_grid(4, 8), std::invalid_argument);
  CHECK_THROWS_AS(direction_grid(2, 0), std::invalid_argument);
}

TEST_CASE("zero coefficients give a zero spectrum") {
  const FittedModel model{KernelSpec{2, 17.0},
                          Eigen::MatrixXd::Zero(3, 2),
                          Eigen::VectorXcd::Zero(3),
                          0.0,
                          0.0,
                          0.0,
                          {}};
  const SpectrumEstimate est = estimate_spectrum(model, direction_grid(2, 12));
  for (Eigen::Index i = 0; i < est.values.size(); ++i)
    CHECK(est.values[i] == std::complex<double>{0.0, 0.0});
}

TEST_CASE("a single center at the origin gives a flat spectrum") {
  const double k = 17.0;
  const FittedModel model{KernelSpec{2, k},
                          Eigen::MatrixXd::Zero(1, 2),
                          Eigen::VectorXcd::Constant(1, {1.0, 0.0}),
                          0.0,
                          0.0,
                          0.0,
                          {}};
  const SpectrumEstimate est = estimate_spectrum(model, direction_grid(2, 16));
  const double expected = std::sqrt(2.0 * M_PI) / k;
  for (Eigen::Index i = 0; i < est.values.size(); ++i) {
    CHECK(est.values[i].real() == Catch::Approx(expected).epsilon(1e-15));
    CHECK(est.values[i].imag() == 0.0);
  }
}

TEST_CASE("doubling the coefficients doubles the spectrum exactly") {
  FittedModel model = reference_fit(0.01);
  const Eigen::MatrixXd dirs = direction_grid(2, 90);
  const SpectrumEstimate base = estimate_spectrum(model, dirs);
  model.coefficients *= 2.0;
  const SpectrumEstimate doubled = estimate_spectrum(model, dirs);
  for (Eigen::Index i = 0; i < dirs.rows(); ++i)
    CHECK(doubled.values[i] == 2.0 * base.values[i]);
}

TEST_CASE("spectrum of the reference fit peaks at the incidence angle") {
  const FittedModel model = reference_fit(0.01);
  const SpectrumEstimate est = estimate_spectrum(model, direction_grid(2, 360));
  Eigen::Index peak;
  est.values.real().maxCoeff(&peak);
  CHECK(peak == 45);
  // The peak is essentially real: its imaginary part is a small fraction.
  CHECK(std::abs(est.values[peak].imag()) <= 0.2 * est.values[peak].real());
}

TEST_CASE("herglotz synthesis from the spectrum reproduces the field") {
  const FittedModel model = reference_fit(0.01);
  const SpectrumEstimate est = estimate_spectrum(model, direction_grid(2, 720));
  const Eigen::MatrixXd grid = square_grid(0.4, 21);
  const Eigen::VectorXcd direct = evaluate(model, grid);
  const Eigen::VectorXcd synthesized = herglotz_synthesize(est, grid);
  // The quadrature is spectrally convergent; 1e-8 leaves a wide margin.
  CHECK((synthesized - direct).norm() <= 1e-8 * direct.norm());
}

TEST_CASE("spectrum and synthesis validate their inputs") {
  const FittedModel model = reference_fit(0.01);
  Eigen::MatrixXd skewed(1, 2);
  skewed << 1.0, 1.0;
  CHECK_THROWS_AS(estimate_spectrum(model, skewed), std::invalid_argument);
  CHECK_THROWS_AS(estimate_spectrum(model, Eigen::MatrixXd::Zero(0, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimate_spectrum(model, direction_grid(1, 2)),
                  std::invalid_argument);

  SpectrumEstimate sphere{KernelSpec{3, 17.0}, direction_grid(3, 8),
                          Eigen::VectorXcd::Zero(8)};
  CHECK_THROWS_AS(herglotz_synthesize(sphere, Eigen::MatrixXd::Zero(1, 3)),
                  std::invalid_argument);

  const SpectrumEstimate circle = estimate_spectrum(model, direction_grid(2, 8));
  CHECK_THROWS_AS(herglotz_synthesize(circle, Eigen::MatrixXd::Zero(1, 3)),
                  std::invalid_argument);
}
