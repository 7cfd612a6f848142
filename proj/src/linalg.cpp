#include "rgme/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace rgme {

EigResult eig_hermitian(const Matrix& m, Real herm_tol) {
  if (m.rows() != m.cols())
    throw StructuralError("eig_hermitian: matrix is not square");
  if (hermiticity_error(m) > herm_tol)
    throw StructuralError("eig_hermitian: matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw NumericalError("eig_hermitian: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix mat_sqrt_psd(const Matrix& m, Real psd_tol) {
  EigResult eig = eig_hermitian(m);
  // Null-space noise must be flattened to exact zero: rooting eigenvalues of
  // size eps would inject sqrt(eps)-sized spurious components.
  const Real cutoff =
      std::max<Real>(eig.values.size() ? eig.values.maxCoeff() : 0, 0) * 1e-13;
  RealVector roots(eig.values.size());
  for (Index i = 0; i < eig.values.size(); ++i) {
    Real lambda = eig.values[i];
    if (lambda < -psd_tol)
      throw NotPsdError("mat_sqrt_psd: eigenvalue " + std::to_string(lambda) +
                        " below PSD tolerance");
    roots[i] = lambda > cutoff ? std::sqrt(lambda) : 0;
  }
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

Matrix mat_log2_on_support(const Matrix& m, Real support_cutoff) {
  EigResult eig = eig_hermitian(m);
  RealVector logs = RealVector::Zero(eig.values.size());
  for (Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values[i] > support_cutoff) logs[i] = std::log2(eig.values[i]);
  }
  return eig.vectors * logs.asDiagonal() * eig.vectors.adjoint();
}

Real trace_norm(const Matrix& m) {
  EigResult eig = eig_hermitian(m);
  return eig.values.cwiseAbs().sum();
}

void unpack_index(Index idx, const Dims& dims, std::vector<Index>& digits) {
  digits.resize(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = idx % dims[k];
    idx /= dims[k];
  }
}

Index pack_index(const std::vector<Index>& digits, const Dims& dims) {
  Index idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
  return idx;
}

Matrix partial_transpose(const Matrix& m, const Dims& dims,
                         const std::set<std::size_t>& subsystems) {
  const Index d = dims_product(dims);
  if (m.rows() != d || m.cols() != d)
    throw StructuralError("partial_transpose: matrix size does not match dims");
  for (std::size_t s : subsystems)
    if (s >= dims.size())
      throw StructuralError("partial_transpose: subsystem index out of range");

  Matrix out(d, d);
  std::vector<Index> row, col;
  for (Index i = 0; i < d; ++i) {
    unpack_index(i, dims, row);
    for (Index j = 0; j < d; ++j) {
      unpack_index(j, dims, col);
      std::vector<Index> r = row, c = col;
      for (std::size_t s : subsystems) std::swap(r[s], c[s]);
      out(pack_index(r, dims), pack_index(c, dims)) = m(i, j);
    }
  }
  return out;
}

Matrix partial_transpose(const Matrix& m, const Dims& dims, std::size_t subsystem) {
  return partial_transpose(m, dims, std::set<std::size_t>{subsystem});
}

Matrix partial_trace(const Matrix& m, const Dims& dims,
                     const std::vector<std::size_t>& keep) {
  const Index d = dims_product(dims);
  if (m.rows() != d || m.cols() != d)
    throw StructuralError("partial_trace: matrix size does not match dims");
  if (keep.empty()) throw StructuralError("partial_trace: empty keep set");
  std::set<std::size_t> keep_set(keep.begin(), keep.end());
  if (keep_set.size() != keep.size())
    throw StructuralError("partial_trace: repeated subsystem in keep set");
  for (std::size_t s : keep)
    if (s >= dims.size())
      throw StructuralError("partial_trace: subsystem index out of range");

  Dims kept_dims;
  std::vector<std::size_t> kept_pos(keep.begin(), keep.end());
  std::sort(kept_pos.begin(), kept_pos.end());
  for (std::size_t s : kept_pos) kept_dims.push_back(dims[s]);
  const Index dk = dims_product(kept_dims);

  Matrix out = Matrix::Zero(dk, dk);
  std::vector<Index> row, col;
  std::vector<Index> rk(kept_pos.size()), ck(kept_pos.size());
  for (Index i = 0; i < d; ++i) {
    unpack_index(i, dims, row);
    for (Index j = 0; j < d; ++j) {
      unpack_index(j, dims, col);
      bool diagonal_on_traced = true;
      for (std::size_t s = 0; s < dims.size(); ++s) {
        if (!keep_set.count(s) && row[s] != col[s]) {
          diagonal_on_traced = false;
          break;
        }
      }
      if (!diagonal_on_traced) continue;
      for (std::size_t k = 0; k < kept_pos.size(); ++k) {
        rk[k] = row[kept_pos[k]];
        ck[k] = col[kept_pos[k]];
      }
      out(pack_index(rk, kept_dims), pack_index(ck, kept_dims)) += m(i, j);
    }
  }
  return out;
}

}  // namespace rgme
