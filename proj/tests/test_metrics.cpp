// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>

#include "sfband/metrics.hpp"

using sfband::Averaging;
using sfband::error_field_db;
using sfband::normalized_error_db;
using sfband::region_mean_ne;
using sfband::RegionStats;
using sfband::square_grid;

namespace {

Eigen::VectorXcd spiral(int n) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i)
    v[i] = std::polar(1.0 + 0.1 * i, 0.7 * i);
  return v;
}

}  // namespace

TEST_CASE("pointwise normalized error fixes its anchor cases") {
  const std::complex<double> p{0.3, -0.8};
  CHECK(normalized_error_db(p, p) == -std::numeric_limits<double>::infinity());
  CHECK(normalized_error_db(p, {0.0, 0.0}) == 0.0);
  CHECK(normalized_error_db({1.0, 0.0}, {1.0, 0.1}) ==
        Catch::Approx(-20.0).margin(1e-12));
  CHECK_THROWS_AS(normalized_error_db({0.0, 0.0}, p), std::domain_error);
}

TEST_CASE("normalized error is scale invariant and monotone") {
  const std::complex<double> ref{0.4, 1.1}, est{0.3, 0.9};
  const std::complex<double> scale{2.0, -3.0};
  CHECK(normalized_error_db(scale * ref, scale * est) ==
        Catch::Approx(normalized_error_db(ref, est)).margin(1e-12));

  const double closer = normalized_error_db(ref, ref + std::complex<double>{0.01, 0.0});
  const double farther = normalized_error_db(ref, ref + std::complex<double>{0.02, 0.0});
  CHECK(closer < farther);
}

TEST_CASE("uniform relative error averages to its pointwise value") {
  const Eigen::VectorXcd ref = spiral(32);
  const Eigen::VectorXcd est = 1.1 * ref;
  const RegionStats stats = region_mean_ne(ref, est);
  CHECK(stats.mean_db == Catch::Approx(-20.0).margin(1e-9));
  CHECK(stats.included == 32);
  CHECK(stats.excluded == 0);
}

TEST_CASE("the decibel mean averages the decibel values") {
  const int n = 10;
  Eigen::VectorXcd ref = Eigen::VectorXcd::Constant(n, {1.0, 0.0});
  Eigen::VectorXcd est = ref;
  for (int i = 0; i < n; ++i) {
    const double level = i < n / 2 ? -10.0 : -30.0;
    est[i] += std::complex<double>{0.0, std::pow(10.0, level / 20.0)};
  }
  const RegionStats stats = region_mean_ne(ref, est);
  CHECK(stats.mean_db == Catch::Approx(-20.0).margin(1e-9));
}

TEST_CASE("exact matches are excluded from the decibel mean") {
  Eigen::VectorXcd ref = spiral(8);
  Eigen::VectorXcd est = 1.1 * ref;
  est[2] = ref[2];
  est[6] = ref[6];
  const RegionStats stats = region_mean_ne(ref, est);
  CHECK(stats.included == 6);
  CHECK(stats.excluded == 2);
  CHECK(stats.mean_db == Catch::Approx(-20.0).margin(1e-9));

  const RegionStats all_exact = region_mean_ne(ref, ref);
  CHECK(all_exact.included == 0);
  CHECK(all_exact.excluded == 8);
  CHECK(all_exact.mean_db == -std::numeric_limits<double>::infinity());
}

TEST_CASE("the linear-power mean averages error powers") {
  Eigen::VectorXcd ref = Eigen::VectorXcd::Constant(4, {1.0, 0.0});
  Eigen::VectorXcd est = ref;
  est[0] += std::complex<double>{0.1, 0.0};
  est[1] += std::complex<double>{0.1, 0.0};
  est[2] += std::complex<double>{0.01, 0.0};
  // est[3] matches exactly and still enters the linear mean.
  const RegionStats stats = region_mean_ne(ref, est, Averaging::kLinearPower);
  CHECK(stats.included == 4);
  CHECK(stats.excluded == 0);
  const double power = (0.1 * 0.1 + 0.1 * 0.1 + 0.01 * 0.01) / 4.0;
  CHECK(stats.mean_db == Catch::Approx(10.0 * std::log10(power)).margin(1e-12));
}

TEST_CASE("region mean validates its inputs") {
  const Eigen::VectorXcd ref = spiral(4);
  CHECK_THROWS_AS(region_mean_ne(ref, spiral(5)), std::invalid_argument);
  CHECK_THROWS_AS(region_mean_ne(Eigen::VectorXcd(), Eigen::VectorXcd()),
                  std::invalid_argument);
  Eigen::VectorXcd zeroed = ref;
  zeroed[1] = {0.0, 0.0};
  CHECK_THROWS_AS(region_mean_ne(zeroed, ref), std::domain_error);
}

TEST_CASE("the square grid covers the region with x in the outer loop") {
  const Eigen::MatrixXd grid = square_grid(0.4, 3);
  REQUIRE(grid.rows() == 9);
  CHECK(grid(0, 0) == -0.2);
  CHECK(grid(0, 1) == -0.2);
  CHECK(grid(1, 0) == -0.2);
  CHECK(grid(1, 1) == Catch::Approx(0.0).margin(1e-17));
  CHECK(grid(3, 0) == Catch::Approx(0.0).margin(1e-17));
  CHECK(grid(3, 1) == -0.2);
  CHECK(grid(8, 0) == Catch::Approx(0.2).epsilon(1e-15));
  CHECK(grid(8, 1) == Catch::Approx(0.2).epsilon(1e-15));

  const Eigen::MatrixXd fine = square_grid(0.4, 101);
  CHECK(fine.rows() == 101 * 101);
  CHECK(fine.col(0).minCoeff() == -0.2);
  CHECK(fine.col(0).maxCoeff() == Catch::Approx(0.2).epsilon(1e-15));

  CHECK_THROWS_AS(square_grid(0.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(square_grid(0.4, 1), std::invalid_argument);
}

TEST_CASE("the error field maps pointwise errors") {
  const Eigen::VectorXcd ref = spiral(6);
  Eigen::VectorXcd est = 1.1 * ref;
  est[4] = ref[4];
  const Eigen::VectorXd field = error_field_db(ref, est);
  REQUIRE(field.size() == 6);
  CHECK(field[0] == Catch::Approx(-20.0).margin(1e-9));
  CHECK(field[4] == -std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(error_field_db(ref, spiral(5)), std::invalid_argument);
}
