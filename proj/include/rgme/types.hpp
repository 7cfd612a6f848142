#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgme {

using Real = double;
using Complex = std::complex<Real>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Ordered subsystem dimensions d_1..d_k; the composite index runs with the
/// first factor slowest (row-major tensor layout).
using Dims = std::vector<Index>;

/// Shape, Hermiticity, normalization or parameter-domain violation.
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A matrix required to be positive semidefinite has an eigenvalue below
/// the allowed tolerance.
struct NotPsdError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Failure of a numerical procedure (non-convergence, solver breakdown).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Index dims_product(const Dims& dims) {
  Index p = 1;
  for (Index d : dims) p *= d;
  return p;
}

inline std::string dims_to_string(const Dims& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += "x";
    s += std::to_string(dims[i]);
  }
  return s;
}

}  // namespace rgme
