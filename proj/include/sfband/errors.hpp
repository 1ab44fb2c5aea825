// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace sfband {

// Raised when a linear system is too ill-conditioned to solve reliably,
// e.g. an unregularized Gram matrix with condition number above 1e12.
class ill_posed_error : public std::runtime_error {
 public:
  explicit ill_posed_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a numerical routine cannot reach its accuracy contract,
// e.g. a factorization fails or a solve residual stays above tolerance.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised for malformed experiment configuration (bad values, unknown keys).
class config_error : public std::invalid_argument {
 public:
  explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace sfband
