#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "rgme/state.hpp"

namespace rgme {

enum class FamilyTag {
  Example1,
  Example2,
  PureAlpha,
  TwoParam2xN,
  MEMS,
  Isotropic,
  GenIsotropic,
  Smolin,
  Dur,
};

std::string family_tag_name(FamilyTag tag);
FamilyTag family_tag_from_name(const std::string& name);

/// Tagged parameter record identifying one analytic state family.
/// Parameter names per tag:
///   Example1:     lambda
///   Example2:     A, G
///   PureAlpha:    alpha
///   TwoParam2xN:  n, alpha, gamma
///   MEMS:         n, lambda1..lambda4 (descending, sum 1)
///   Isotropic:    d, alpha
///   GenIsotropic: n, d, alpha
///   Smolin:       (none)
///   Dur:          N, x
struct StateFamily {
  FamilyTag tag;
  std::map<std::string, Real> params;

  Real param(const std::string& name) const;
  Index iparam(const std::string& name) const;
};

namespace families {

constexpr Index kMaxDim = 256;

// Computational basis vector |digits> for the given dims.
Vector basis_vector(const Dims& dims, const std::vector<Index>& digits);

/// The four Bell vectors |phi+-> = (|00> +- |11>)/sqrt2 and
/// |psi+-> = (|01> +- |10>)/sqrt2 embedded in a 2 x n space
/// (the two-level part of the second factor is its {0,1} subspace).
struct BellBasis {
  PureState phi_plus, phi_minus, psi_plus, psi_minus;
};
BellBasis bell_basis(Index n);

DensityMatrix example1(Real lambda);
DensityMatrix example1_closest_sep(Real lambda);

DensityMatrix example2(Real A, Real G);
DensityMatrix example2_closest_sep(Real A);

PureState pure_alpha_state(Real alpha);
DensityMatrix pure_alpha(Real alpha);
/// Candidate separable state minimizing the relative entropy:
/// diag(alpha^2, 1-alpha^2) on {|00>,|11>}.
DensityMatrix pure_alpha_sigma_re(Real alpha);
/// Diagonal candidate with weights ((1-u)/2, (1+u)/2) on {|00>,|11>},
/// u = sqrt(1 - 4 alpha^2 (1-alpha^2)).
DensityMatrix pure_alpha_sigma_prime(Real alpha);

Real two_param_beta(Index n, Real alpha, Real gamma);
DensityMatrix two_param_2xn(Index n, Real alpha, Real gamma);
DensityMatrix two_param_closest_sep(Index n, Real alpha, Real gamma);

DensityMatrix mems(Index n, const std::array<Real, 4>& lambda);
DensityMatrix mems_closest_sep(Index n, const std::array<Real, 4>& lambda);
/// Two-qubit state with spectrum lambda realizing the maximal negativity at
/// fixed spectrum: l1 |psi-><psi-| + l3 |psi+><psi+| + l2 |00><00| + l4 |11><11|.
DensityMatrix max_negativity_two_qubit(const std::array<Real, 4>& lambda);

DensityMatrix isotropic(Index d, Real alpha);
DensityMatrix isotropic_closest_sep(Index d);

Real gen_isotropic_alpha0(Index n, Index d);
DensityMatrix gen_isotropic(Index n, Index d, Real alpha);
DensityMatrix gen_isotropic_closest_sep(Index n, Index d);

DensityMatrix smolin();
DensityMatrix smolin_conjectured_sep();

DensityMatrix dur(Index N, Real x);
DensityMatrix dur_conjectured_sep(Index N, Real x);
/// Pure superposition sqrt(x)|GHZ> + sqrt(1-x) sum_k (s_k sqrt(q_k)|u_k> +
/// t_k sqrt(r_k)|v_k>) with sign choices s,t; averaging the projector over
/// all sign patterns with q = r = 1/(2N) recovers dur(N, x).
PureState dur_qr_state(Index N, Real x, const std::vector<Real>& q,
                       const std::vector<Real>& r, const std::vector<int>& s,
                       const std::vector<int>& t);

DensityMatrix make_state(const StateFamily& family);
/// The closed-form closest separable state, where the source material gives
/// one (for Dur this is the conjectured state, which is not optimal).
std::optional<DensityMatrix> closest_sep(const StateFamily& family);

}  // namespace families
}  // namespace rgme
