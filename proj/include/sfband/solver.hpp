// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "sfband/errors.hpp"
#include "sfband/kernel.hpp"

namespace sfband {

// Ridge-regularized interpolation system (K + lambda I) a = rhs with a
// symmetric real Gram matrix K and complex right-hand side.
struct GramSystem {
  Eigen::MatrixXd matrix;
  Eigen::VectorXcd rhs;
  double lambda = 0.0;
};

struct TikhonovSolution {
  Eigen::VectorXcd coefficients;
  double residual;  // ||(K + lambda I) a - rhs|| / ||rhs||
  double jitter;    // diagonal boost applied to rescue the factorization
};

struct SpectralDiagnostics {
  double min_eigenvalue;  // signed
  double max_eigenvalue;  // signed
  double condition;       // max |eig| / min |eig|, inf if singular
};

// Condition number above which an unregularized solve is refused.
inline constexpr double kIllPosedCondition = 1e12;

// Relative residual every solve must reach.
inline constexpr double kSolveResidualTol = 1e-10;

// Gram matrix K_ij = kappa(r_i, r_j) over the rows of `positions`. Only the
// upper triangle is evaluated and then mirrored, so K is exactly symmetric.
inline Eigen::MatrixXd assemble_gram(const KernelSpec& spec,
                                     const Eigen::Ref<const Eigen::MatrixXd>& positions) {
  spec.validate();
  if (positions.cols() != spec.dimension)
    throw std::invalid_argument("assemble_gram: position dimension mismatch");
  const Eigen::Index n = positions.rows();
  if (n < 1) throw std::invalid_argument("assemble_gram: no positions");
  Eigen::MatrixXd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double v =
          kernel_eval(spec, positions.row(i).transpose(), positions.row(j).transpose());
      gram(i, j) = v;
      gram(j, i) = v;
    }
  }
  return gram;
}

// Eigenvalue extremes and condition number of a symmetric matrix.
inline SpectralDiagnostics gram_diagnostics(const Eigen::Ref<const Eigen::MatrixXd>& matrix) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigen(matrix,
                                                       Eigen::EigenvaluesOnly);
  const Eigen::VectorXd vals = eigen.eigenvalues();
  const double min_abs = vals.cwiseAbs().minCoeff();
  const double max_abs = vals.cwiseAbs().maxCoeff();
  return SpectralDiagnostics{
      vals.minCoeff(), vals.maxCoeff(),
      min_abs == 0.0 ? std::numeric_limits<double>::infinity()
                     : max_abs / min_abs};
}

namespace detail {

// M x for real symmetric M and complex x, without forming a complex matrix.
inline Eigen::VectorXcd apply_real(const Eigen::MatrixXd& m,
                                   const Eigen::VectorXcd& x) {
  const Eigen::VectorXd re = m * x.real().matrix();
  const Eigen::VectorXd im = m * x.imag().matrix();
  Eigen::VectorXcd out(re.size());
  out.real() = re;
  out.imag() = im;
  return out;
}

}  // namespace detail

// Solves (K + lambda I) a = rhs for symmetric K. Cholesky first; on
// factorization failure, retries with a diagonal jitter of
// 1e-12 trace(K)/N, then falls back to LDLT. The solution is polished by
// iterative refinement against the unjittered matrix until the relative
// residual is at most 1e-10; failure to reach that raises numerical_error.
// With lambda = 0 the matrix's condition number is estimated first and an
// ill_posed_error is raised beyond 1e12.
inline TikhonovSolution solve_tikhonov(const GramSystem& system) {
  const Eigen::Index n = system.matrix.rows();
  if (system.matrix.cols() != n)
    throw std::invalid_argument("solve_tikhonov: matrix not square");
  if (system.rhs.size() != n)
    throw std::invalid_argument("solve_tikhonov: rhs size mismatch");
  if (!(system.lambda >= 0.0) || !std::isfinite(system.lambda))
    throw std::invalid_argument("solve_tikhonov: lambda must be >= 0");
  const double scale = std::max(1.0, system.matrix.cwiseAbs().maxCoeff());
  if ((system.matrix - system.matrix.transpose()).cwiseAbs().maxCoeff() >
      1e-12 * scale)
    throw std::invalid_argument("solve_tikhonov: matrix not symmetric");

  Eigen::MatrixXd m = system.matrix;
  m.diagonal().array() += system.lambda;

  if (system.lambda == 0.0) {
    const SpectralDiagnostics diag = gram_diagnostics(m);
    if (!(diag.condition < kIllPosedCondition))
      throw ill_posed_error(
          "solve_tikhonov: condition number " + std::to_string(diag.condition) +
          " exceeds 1e12 at lambda = 0; increase lambda or thin the samples");
  }

  const double jitter_unit = 1e-12 * system.matrix.trace() / n;
  double jitter = 0.0;
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  Eigen::LDLT<Eigen::MatrixXd> ldlt;
  bool use_ldlt = false;
  if (llt.info() != Eigen::Success) {
    jitter = jitter_unit;
    Eigen::MatrixXd boosted = m;
    boosted.diagonal().array() += jitter;
    llt.compute(boosted);
    if (llt.info() != Eigen::Success) {
      ldlt.compute(boosted);
      if (ldlt.info() != Eigen::Success)
        throw numerical_error("solve_tikhonov: factorization failed");
      use_ldlt = true;
    }
  }

  const auto factor_solve = [&](const Eigen::MatrixXd& b) -> Eigen::MatrixXd {
    return use_ldlt ? Eigen::MatrixXd(ldlt.solve(b)) : Eigen::MatrixXd(llt.solve(b));
  };
  Eigen::MatrixXd rhs(n, 2);
  rhs.col(0) = system.rhs.real();
  rhs.col(1) = system.rhs.imag();
  Eigen::MatrixXd x = factor_solve(rhs);

  // Refinement measures against the exact K + lambda I, so the reported
  // residual is meaningful even when a jitter rescued the factorization.
  const double rhs_norm = rhs.norm();
  double residual = 0.0;
  for (int pass = 0; pass < 6; ++pass) {
    const Eigen::MatrixXd r = rhs - m * x;
    residual = rhs_norm == 0.0 ? 0.0 : r.norm() / rhs_norm;
    if (residual <= kSolveResidualTol) break;
    x += factor_solve(r);
  }
  if (residual > kSolveResidualTol)
    throw numerical_error("solve_tikhonov: residual " + std::to_string(residual) +
                          " above 1e-10; system too ill-conditioned");

  Eigen::VectorXcd coeffs(n);
  coeffs.real() = x.col(0);
  coeffs.imag() = x.col(1);
  return TikhonovSolution{std::move(coeffs), residual, jitter};
}

}  // namespace sfband
