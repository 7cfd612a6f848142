#pragma once

#include "rgme/families.hpp"
#include "rgme/measures.hpp"

namespace rgme {
namespace closed_forms {

// Raw per-family formulas. The fidelity/RGME formulas describe the distance
// to the family's analytic closest separable state and quantify entanglement
// on the entangled parameter range; outside it the family dispatchers below
// clamp to zero.

Real example1_fidelity(Real lambda);
Real example1_rgme(Real lambda);
Real example1_gme(Real lambda);
Real example1_re(Real lambda);

Real example2_rgme(Real A, Real G);
Real example2_gme(Real G);

Real pure_alpha_rgme(Real alpha);
Real pure_alpha_gme(Real alpha);
Real pure_alpha_re(Real alpha);
Real pure_alpha_concurrence(Real alpha);

Real two_param_fidelity(Index n, Real alpha, Real gamma);
Real two_param_rgme(Index n, Real alpha, Real gamma);
Real two_param_re(Index n, Real alpha, Real gamma);
Real two_param_negativity(Index n, Real alpha, Real gamma);

Real mems_fidelity(const std::array<Real, 4>& lambda);
Real mems_rgme(const std::array<Real, 4>& lambda);
Real mems_re(const std::array<Real, 4>& lambda);
/// Maximal negativity achievable at fixed spectrum (realized by
/// families::max_negativity_two_qubit, not by the 2 x n construction itself).
Real mems_negativity(const std::array<Real, 4>& lambda);

Real isotropic_fprime(Index d, Real alpha);
Real isotropic_fidelity(Index d, Real alpha);
Real isotropic_rgme(Index d, Real alpha);
/// Geometric measure expressed through F' = (1 + (d^2-1) alpha) / d^2;
/// agrees with isotropic_rgme identically.
Real isotropic_gme(Index d, Real alpha);
Real isotropic_re(Index d, Real alpha);
Real isotropic_eof(Index d, Real alpha);
Real isotropic_iconcurrence(Index d, Real alpha);

Real gen_isotropic_fidelity(Index n, Index d, Real alpha);
Real gen_isotropic_rgme(Index n, Index d, Real alpha);

Real smolin_fidelity();
Real smolin_rgme();
Real smolin_re();

Real dur_fidelity(Real x);
Real dur_rgme(Real x);

}  // namespace closed_forms

/// Closed-form RGME for a covered family (zero on separable parameter
/// ranges); diagnostics carry the closed-form fidelity.
MeasureReport rgme_closed(const StateFamily& family);

/// Closed-form relative entropy to the family's analytic closest separable
/// state. Families without a closed form raise StructuralError.
Real re_closed(const StateFamily& family);

/// Closed-form geometric measure where one is available
/// (example1/example2/pure_alpha/isotropic; smolin and dur coincide with the
/// RGME). Raises StructuralError otherwise.
Real gme_closed(const StateFamily& family);

/// Closed-form negativity (two_param_2xn and mems).
Real negativity_closed(const StateFamily& family);

Real eof_isotropic(Index d, Real alpha);
Real iconcurrence_isotropic(Index d, Real alpha);

}  // namespace rgme
