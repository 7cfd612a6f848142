#pragma once

#include <unsupported/Eigen/KroneckerProduct>

#include <cstddef>
#include <set>

#include "rgme/types.hpp"

namespace rgme {

struct EigResult {
  RealVector values;  // ascending
  Matrix vectors;     // columns are eigenvectors, unitary
};

/// max_ij |m(i,j) - conj(m(j,i))|
template <typename Derived>
Real hermiticity_error(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
/// Throws StructuralError for non-square or non-Hermitian (beyond herm_tol) input.
EigResult eig_hermitian(const Matrix& m, Real herm_tol = 1e-10);

/// Principal square root of a PSD matrix. Eigenvalues in [-psd_tol, 0) are
/// clamped to zero; anything more negative raises NotPsdError.
Matrix mat_sqrt_psd(const Matrix& m, Real psd_tol = 1e-10);

/// Base-2 logarithm on the support: eigenvalues above support_cutoff are
/// mapped to log2, the null space contributes zero (0 log 0 = 0 convention).
Matrix mat_log2_on_support(const Matrix& m, Real support_cutoff = 1e-14);

/// Sum of absolute eigenvalues of a Hermitian matrix.
Real trace_norm(const Matrix& m);

/// Tensor (Kronecker) product.
template <typename DerivedA, typename DerivedB>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a,
            const Eigen::MatrixBase<DerivedB>& b) {
  return Eigen::kroneckerProduct(a, b);
}

/// Decompose a composite index into per-subsystem digits (first factor slowest).
void unpack_index(Index idx, const Dims& dims, std::vector<Index>& digits);

/// Inverse of unpack_index.
Index pack_index(const std::vector<Index>& digits, const Dims& dims);

/// Transpose the tensor factors listed in `subsystems`.
Matrix partial_transpose(const Matrix& m, const Dims& dims,
                         const std::set<std::size_t>& subsystems);

Matrix partial_transpose(const Matrix& m, const Dims& dims, std::size_t subsystem);

/// Trace out every factor not listed in `keep`; result lives on the kept
/// factors in their original order.
Matrix partial_trace(const Matrix& m, const Dims& dims,
                     const std::vector<std::size_t>& keep);

}  // namespace rgme
