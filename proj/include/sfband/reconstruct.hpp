// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "sfband/scenario.hpp"
#include "sfband/solver.hpp"

namespace sfband {

// Kernel interpolant p(r) = sum_n a_n kappa(r, r_n) fitted to samples.
struct FittedModel {
  KernelSpec spec;
  Eigen::MatrixXd centers;         // N x d
  Eigen::VectorXcd coefficients;   // N
  double lambda;
  double residual;                 // relative residual of the ridge system
  double jitter;                   // diagonal boost applied by the solver
  std::vector<std::string> warnings;
};

namespace detail {

// Groups of row indices with bitwise-identical positions.
inline std::vector<std::vector<Eigen::Index>> duplicate_groups(
    const Eigen::MatrixXd& positions) {
  const Eigen::Index n = positions.rows();
  std::vector<std::vector<Eigen::Index>> groups;
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (used[static_cast<size_t>(i)]) continue;
    std::vector<Eigen::Index> group{i};
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      if ((positions.row(i).array() == positions.row(j).array()).all()) {
        group.push_back(j);
        used[static_cast<size_t>(j)] = true;
      }
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

}  // namespace detail

// Ridge fit of the kernel interpolant: a = (K + lambda I)^{-1} p.
// Exactly duplicated positions make the unregularized Gram matrix singular,
// so at lambda = 0 duplicates are merged and their pressures averaged (with
// a warning); at lambda > 0 they are kept and only warned about.
inline FittedModel fit(const KernelSpec& spec, const SampleSet& samples,
                       double lambda) {
  spec.validate();
  if (samples.positions.rows() != samples.pressures.size())
    throw std::invalid_argument("fit: positions/pressures size mismatch");
  if (samples.positions.rows() < 1) throw std::invalid_argument("fit: no samples");
  if (samples.positions.cols() != spec.dimension)
    throw std::invalid_argument("fit: sample dimension mismatch");
  if (!(lambda >= 0.0)) throw std::invalid_argument("fit: lambda must be >= 0");

  Eigen::MatrixXd centers = samples.positions;
  Eigen::VectorXcd pressures = samples.pressures;
  std::vector<std::string> warnings;

  const auto groups = detail::duplicate_groups(samples.positions);
  if (groups.size() != static_cast<size_t>(samples.positions.rows())) {
    if (lambda == 0.0) {
      centers.resize(static_cast<Eigen::Index>(groups.size()), samples.positions.cols());
      pressures.resize(static_cast<Eigen::Index>(groups.size()));
      for (size_t g = 0; g < groups.size(); ++g) {
        centers.row(static_cast<Eigen::Index>(g)) =
            samples.positions.row(groups[g].front());
        std::complex<double> mean{0.0, 0.0};
        for (Eigen::Index idx : groups[g]) mean += samples.pressures[idx];
        pressures[static_cast<Eigen::Index>(g)] =
            mean / static_cast<double>(groups[g].size());
      }
      warnings.push_back(
          "merged " +
          std::to_string(samples.positions.rows() - static_cast<Eigen::Index>(groups.size())) +
          " duplicate positions (averaged pressures); duplicates are degenerate at lambda = 0");
    } else {
      warnings.push_back(
          "duplicate sample positions present; the ridge term keeps the system solvable");
    }
  }

  const Eigen::MatrixXd gram = assemble_gram(spec, centers);
  TikhonovSolution sol = solve_tikhonov(GramSystem{gram, pressures, lambda});
  return FittedModel{spec,         std::move(centers),
                     std::move(sol.coefficients), lambda,
                     sol.residual, sol.jitter,
                     std::move(warnings)};
}

// Interpolant values at each row of `queries`.
inline Eigen::VectorXcd evaluate(const FittedModel& model,
                                 const Eigen::Ref<const Eigen::MatrixXd>& queries) {
  if (queries.cols() != model.spec.dimension)
    throw std::invalid_argument("evaluate: query dimension mismatch");
  const Eigen::Index m = queries.rows();
  const Eigen::Index n = model.centers.rows();
  Eigen::MatrixXd cross(m, n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      cross(i, j) = kernel_eval(model.spec, queries.row(i).transpose(),
                                model.centers.row(j).transpose());
  Eigen::VectorXcd out(m);
  out.real() = cross * model.coefficients.real();
  out.imag() = cross * model.coefficients.imag();
  return out;
}

// Interpolant value at a single point.
inline std::complex<double> evaluate_at(const FittedModel& model,
                                        const Eigen::Ref<const Eigen::VectorXd>& r) {
  Eigen::MatrixXd q(1, r.size());
  q.row(0) = r.transpose();
  return evaluate(model, q)[0];
}

// Ridge objective sum_n |p_n - (K a)_n|^2 + lambda a^H K a for coefficients
// `a` against the given samples; the fitted coefficients minimize it.
inline double krr_objective(const KernelSpec& spec, const SampleSet& samples,
                            const Eigen::VectorXcd& coefficients, double lambda) {
  spec.validate();
  if (samples.positions.rows() != samples.pressures.size())
    throw std::invalid_argument("krr_objective: positions/pressures size mismatch");
  if (coefficients.size() != samples.positions.rows())
    throw std::invalid_argument("krr_objective: coefficient size mismatch");
  if (!(lambda >= 0.0)) throw std::invalid_argument("krr_objective: lambda >= 0");
  const Eigen::MatrixXd gram = assemble_gram(spec, samples.positions);
  const Eigen::VectorXcd fitted = detail::apply_real(gram, coefficients);
  const double misfit = (samples.pressures - fitted).squaredNorm();
  const double penalty = lambda * coefficients.dot(fitted).real();
  return misfit + penalty;
}

}  // namespace sfband
