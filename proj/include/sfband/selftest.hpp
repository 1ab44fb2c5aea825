// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "sfband/kernel.hpp"
#include "sfband/rng.hpp"
#include "sfband/scenario.hpp"
#include "sfband/solver.hpp"
#include "sfband/specfun.hpp"

namespace sfband {

struct SelftestCheck {
  std::string name;
  bool passed;
  double worst;  // largest deviation seen, in the units of the check
  double tolerance;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;

  bool all_passed() const {
    for (const SelftestCheck& c : checks)
      if (!c.passed) return false;
    return true;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["passed"] = all_passed();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const SelftestCheck& c : checks) {
      nlohmann::ordered_json row;
      row["name"] = c.name;
      row["passed"] = c.passed;
      row["worst"] = c.worst;
      row["tolerance"] = c.tolerance;
      rows.push_back(row);
    }
    j["checks"] = rows;
    return j;
  }
};

// Built-in consistency checks of the numerical core, usable in any install
// to confirm the build computes what it should. `kernel_perturbation`
// multiplies kernel values by (1 + eps) inside the kernel-facing checks; a
// nonzero value must make the selftest fail, which gives a negative control
// for the checks themselves.
inline SelftestReport run_selftest(double kernel_perturbation = 0.0) {
  SelftestReport report;
  const double bump = 1.0 + kernel_perturbation;

  {  // Coincidence value equals the unit-sphere surface area, d = 1..6.
    double worst = 0.0;
    for (int d = 1; d <= 6; ++d) {
      const KernelSpec spec{d, 3.7};
      const Eigen::VectorXd r = Eigen::VectorXd::Constant(d, 0.25);
      const double expected = surface_area(d);
      const double got = bump * kernel_eval(spec, r, r);
      worst = std::max(worst, std::abs(got - expected) / expected);
    }
    report.checks.push_back({"kernel-coincidence", worst <= 1e-12, worst, 1e-12});
  }

  {  // Closed kernel forms match the defining sphere integral, d = 1..3.
    RandomStream stream(12345, "selftest");
    double worst = 0.0, worst_imag = 0.0;
    for (int d = 1; d <= 3; ++d) {
      const KernelSpec spec{d, 36.0};
      for (int trial = 0; trial < 8; ++trial) {
        Eigen::VectorXd r(d), rp(d);
        for (int c = 0; c < d; ++c) {
          r[c] = stream.uniform(-0.3, 0.3);
          rp[c] = stream.uniform(-0.3, 0.3);
        }
        const std::complex<double> quad = kernel_quadrature(spec, r, rp, 256);
        const double direct = bump * kernel_eval(spec, r, rp);
        const double scale = std::max(1.0, std::abs(direct));
        worst = std::max(worst, std::abs(quad.real() - direct) / scale);
        worst_imag = std::max(worst_imag, std::abs(quad.imag()) / scale);
      }
    }
    report.checks.push_back({"kernel-integral-oracle", worst <= 1e-8, worst, 1e-8});
    report.checks.push_back(
        {"kernel-integral-imaginary", worst_imag <= 1e-10, worst_imag, 1e-10});
  }

  {  // General and odd-dimension kernel forms agree, d in {3, 5}.
    RandomStream stream(777, "selftest");
    double worst = 0.0;
    for (int d : {3, 5}) {
      const KernelSpec spec{d, 21.5};
      for (int trial = 0; trial < 16; ++trial) {
        Eigen::VectorXd r(d), rp(d);
        for (int c = 0; c < d; ++c) {
          r[c] = stream.uniform(-0.5, 0.5);
          rp[c] = stream.uniform(-0.5, 0.5);
        }
        const double general = bump * kernel_eval(spec, r, rp);
        const double odd = kernel_eval_odd(spec, r, rp);
        const double scale = std::max(std::abs(odd), 1e-3 * surface_area(d));
        worst = std::max(worst, std::abs(general - odd) / scale);
      }
    }
    report.checks.push_back({"kernel-odd-form", worst <= 1e-12, worst, 1e-12});
  }

  {  // Three-term recurrence of the radial functions.
    double worst = 0.0;
    for (int twice = 1; twice <= 6; ++twice) {
      const auto low = specfun::BesselOrder::from_twice(twice - 2);
      const auto mid = specfun::BesselOrder::from_twice(twice);
      const auto high = specfun::BesselOrder::from_twice(twice + 2);
      for (double z = 0.5; z <= 40.0; z += 0.83) {
        const double lhs = specfun::bessel_j(low, z) + specfun::bessel_j(high, z);
        const double rhs = (2.0 * mid.value() / z) * specfun::bessel_j(mid, z);
        const double envelope = std::sqrt(2.0 / (M_PI * z));
        worst = std::max(worst,
                         std::abs(lhs - rhs) / std::max(envelope, std::abs(rhs)));
      }
    }
    report.checks.push_back({"bessel-recurrence", worst <= 1e-9, worst, 1e-9});
  }

  {  // Spherical and half-integer cylindrical functions are proportional.
    double worst = 0.0;
    for (int n = -1; n <= 3; ++n) {
      for (double z = 0.25; z <= 50.0; z += 0.61) {
        const double lhs = specfun::spherical_bessel_j(n, z);
        const double rhs =
            std::sqrt(M_PI / (2.0 * z)) *
            specfun::bessel_j(specfun::BesselOrder::from_twice(2 * n + 1), z);
        worst = std::max(worst, std::abs(lhs - rhs) /
                                     std::max(1.0 / z, std::abs(rhs)));
      }
    }
    report.checks.push_back({"spherical-relation", worst <= 1e-10, worst, 1e-10});
  }

  {  // Gram matrices are positive semidefinite and solvable.
    const Eigen::MatrixXd positions = sample_positions_uniform_square(0.4, 21, 99);
    const KernelSpec spec{2, 36.0};
    const Eigen::MatrixXd gram = assemble_gram(spec, positions);
    const SpectralDiagnostics diag = gram_diagnostics(gram);
    const double floor = -1e-8 * diag.max_eigenvalue;
    report.checks.push_back({"gram-psd", diag.min_eigenvalue >= floor,
                             diag.min_eigenvalue, floor});

    RandomStream stream(4242, "selftest");
    Eigen::VectorXcd rhs(21);
    for (int i = 0; i < 21; ++i) rhs[i] = {stream.normal(), stream.normal()};
    const TikhonovSolution sol = solve_tikhonov(GramSystem{gram, rhs, 0.01});
    report.checks.push_back(
        {"solve-residual", sol.residual <= kSolveResidualTol, sol.residual,
         kSolveResidualTol});
  }

  return report;
}

}  // namespace sfband
