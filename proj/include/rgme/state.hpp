#pragma once

#include <set>
#include <utility>

#include "rgme/linalg.hpp"
#include "rgme/types.hpp"

namespace rgme {

/// Hermitian, PSD, unit-trace operator with a subsystem-dimension signature.
class DensityMatrix {
 public:
  static constexpr Real kHermTol = 1e-12;
  static constexpr Real kTraceTol = 1e-12;
  static constexpr Real kDefaultPsdTol = 1e-10;

  DensityMatrix(Matrix m, Dims dims, Real psd_tolerance = kDefaultPsdTol);

  /// Skips validation; for tests probing boundary or invalid regions.
  static DensityMatrix unchecked(Matrix m, Dims dims,
                                 Real psd_tolerance = kDefaultPsdTol);

  const Matrix& matrix() const { return matrix_; }
  const Dims& dims() const { return dims_; }
  Index dim() const { return matrix_.rows(); }
  Real psd_tolerance() const { return psd_tolerance_; }

 private:
  DensityMatrix() = default;
  Matrix matrix_;
  Dims dims_;
  Real psd_tolerance_ = kDefaultPsdTol;
};

/// Normalized state vector with a subsystem-dimension signature.
class PureState {
 public:
  static constexpr Real kNormTol = 1e-12;

  PureState(Vector amplitudes, Dims dims);

  const Vector& amplitudes() const { return amplitudes_; }
  const Dims& dims() const { return dims_; }
  Index dim() const { return amplitudes_.size(); }

  DensityMatrix projector() const;

 private:
  Vector amplitudes_;
  Dims dims_;
};

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::size_t>& keep);

Matrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem);
Matrix partial_transpose(const DensityMatrix& rho,
                         const std::set<std::size_t>& subsystems);

}  // namespace rgme
