#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "rgme/families.hpp"
#include "rgme/state.hpp"

namespace rgme {

/// Named measure value plus the achieving state (when one exists) and
/// solver diagnostics.
struct MeasureReport {
  std::string measure;
  Real value = 0;
  std::optional<DensityMatrix> witness_state;
  std::optional<PureState> witness_pure;
  std::optional<StateFamily> family;
  std::map<std::string, Real> diagnostics;
};

/// Uhlmann fidelity tr sqrt(sqrt(rho) sigma sqrt(rho)), clamped to [0, 1].
Real fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// 1 - F^2.
Real bures_sq(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Von Neumann entropy, base 2.
Real von_neumann_entropy(const DensityMatrix& rho);

/// (1/2) tr|rho - sigma|.
Real trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Quantum relative entropy tr(rho log2 rho - rho log2 sigma).
/// Returns +infinity when supp(rho) is not contained in supp(sigma).
Real relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                      Real support_cutoff = 1e-14, Real support_tol = 1e-10);

/// Wootters concurrence of a two-qubit state.
Real concurrence(const DensityMatrix& rho);

/// Two-qubit geometric measure (1 - sqrt(1 - C^2)) / 2.
Real gme_two_qubit(const DensityMatrix& rho);

/// Trace norm of the partial transpose minus one, floored at zero.
Real negativity(const DensityMatrix& rho, const std::set<std::size_t>& cut);
Real negativity(const DensityMatrix& rho, std::size_t cut_subsystem);

struct GmeOptions {
  int starts = 32;
  int max_sweeps = 500;
  Real lambda_tol = 1e-12;
  std::uint64_t seed = 7u;
};

/// Geometric measure of a pure state: 1 - max overlap^2 with product states,
/// computed by alternating single-site updates with seeded multi-start.
/// The witness is the closest product state.
MeasureReport gme_pure(const PureState& psi, const GmeOptions& opts = {});

/// Best product-state approximation of an arbitrary vector (not necessarily
/// normalized): returns the product factors and the achieved |<z|Phi>|.
Real best_product_approx(const Vector& z, const Dims& dims,
                         std::vector<Vector>& factors, int max_sweeps = 200,
                         Real tol = 1e-13);

}  // namespace rgme
