#include "rgme/state.hpp"

#include <cmath>

namespace rgme {

DensityMatrix::DensityMatrix(Matrix m, Dims dims, Real psd_tolerance) {
  if (m.rows() != m.cols())
    throw StructuralError("DensityMatrix: matrix is not square");
  if (dims.empty()) throw StructuralError("DensityMatrix: empty dims");
  for (Index d : dims)
    if (d < 1) throw StructuralError("DensityMatrix: nonpositive subsystem dimension");
  if (dims_product(dims) != m.rows())
    throw StructuralError("DensityMatrix: dims product " +
                          std::to_string(dims_product(dims)) +
                          " does not match matrix size " + std::to_string(m.rows()));
  if (hermiticity_error(m) > kHermTol)
    throw StructuralError("DensityMatrix: not Hermitian within tolerance");
  if (std::abs(m.trace().real() - 1.0) > kTraceTol || std::abs(m.trace().imag()) > kTraceTol)
    throw StructuralError("DensityMatrix: trace differs from 1");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalError("DensityMatrix: eigensolver failed during validation");
  if (solver.eigenvalues().minCoeff() < -psd_tolerance)
    throw NotPsdError("DensityMatrix: minimum eigenvalue " +
                      std::to_string(solver.eigenvalues().minCoeff()) +
                      " below -psd_tolerance");
  matrix_ = std::move(m);
  dims_ = std::move(dims);
  psd_tolerance_ = psd_tolerance;
}

DensityMatrix DensityMatrix::unchecked(Matrix m, Dims dims, Real psd_tolerance) {
  DensityMatrix rho;
  rho.matrix_ = std::move(m);
  rho.dims_ = std::move(dims);
  rho.psd_tolerance_ = psd_tolerance;
  return rho;
}

PureState::PureState(Vector amplitudes, Dims dims) {
  if (dims.empty()) throw StructuralError("PureState: empty dims");
  if (dims_product(dims) != amplitudes.size())
    throw StructuralError("PureState: dims product does not match vector size");
  if (std::abs(amplitudes.norm() - 1.0) > kNormTol)
    throw StructuralError("PureState: vector is not normalized");
  amplitudes_ = std::move(amplitudes);
  dims_ = std::move(dims);
}

DensityMatrix PureState::projector() const {
  return DensityMatrix(amplitudes_ * amplitudes_.adjoint(), dims_);
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::size_t>& keep) {
  Matrix reduced = partial_trace(rho.matrix(), rho.dims(), keep);
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  Dims kept_dims;
  for (std::size_t s : kept) kept_dims.push_back(rho.dims()[s]);
  // Re-hermitize to absorb float noise before validation.
  reduced = ((reduced + reduced.adjoint()) / 2.0).eval();
  return DensityMatrix(std::move(reduced), std::move(kept_dims),
                       rho.psd_tolerance());
}

Matrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem) {
  return partial_transpose(rho.matrix(), rho.dims(), subsystem);
}

Matrix partial_transpose(const DensityMatrix& rho,
                         const std::set<std::size_t>& subsystems) {
  return partial_transpose(rho.matrix(), rho.dims(), subsystems);
}

}  // namespace rgme
