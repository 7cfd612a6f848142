#pragma once

#include <string>
#include <vector>

#include "rgme/sep_search.hpp"

namespace rgme {
namespace verify {

/// One checked inequality or equality instance. An inequality lhs <= rhs is
/// encoded with margin = rhs - lhs; pass iff margin >= -tolerance.
struct ClaimResult {
  std::string claim_id;
  std::string instance;
  Real lhs = 0;
  Real rhs = 0;
  Real margin = 0;
  Real tolerance = 0;
  bool pass = false;
  bool skipped = false;

  static ClaimResult leq(std::string id, std::string instance, Real lhs, Real rhs,
                         Real tol);
  static ClaimResult close(std::string id, std::string instance, Real lhs,
                           Real rhs, Real tol);
  static ClaimResult skip(std::string id, std::string instance);
};

/// 1 - F(rho, sigma) <= sqrt(rgme) for the optimizing separable sigma;
/// f_at_sigma and rgme_value come from the same numeric search.
ClaimResult prop1(Real f_at_sigma, Real rgme_value, const std::string& instance,
                  Real tol = 1e-6);

/// Bipartite pure state: rgme <= S_A and (for S_A <= 2, the range covered by
/// its derivation) rgme <= S_A - S_A^2/4.
std::vector<ClaimResult> prop2(const PureState& psi, Real rgme_value,
                               const std::string& instance, Real tol = 1e-6);

/// rgme <= trace distance to the separable witness.
ClaimResult prop3(const DensityMatrix& rho, const DensityMatrix& sigma,
                  Real rgme_value, const std::string& instance, Real tol = 1e-6);

/// Entropy versus trace distance to a pure state, dimension >= 4:
/// S(rho) <= tr|rho - sigma| log2(d) + 1/e.
ClaimResult prop4(const DensityMatrix& rho, const DensityMatrix& sigma_pure,
                  const std::string& instance, Real tol = 1e-9);

/// The six-link chain through (1-F)^2, 1-F, rgme, 1-F^2, D, sqrt(1-F^2),
/// sqrt(D) for a pure rho and its separable witness.
std::vector<ClaimResult> chain44(const DensityMatrix& rho_pure,
                                 const DensityMatrix& sigma, Real f,
                                 const std::string& instance, Real tol = 1e-6);

std::vector<ClaimResult> family_orderings(FamilyTag tag, int grid_points,
                                          std::uint64_t seed);

std::vector<ClaimResult> closed_vs_numeric(FamilyTag tag, const SearchConfig& cfg,
                                           int grid_points, std::uint64_t seed);

struct SuiteOptions {
  std::uint64_t seed = 1;
  // Scaled-down instance counts for quick runs; the acceptance suite uses
  // full-size counts.
  int random_instances = 60;
  int prop4_instances = 60;
  int grid_points = 9;
  int probe_count = 40;
  bool include_slow = true;  // Dur N=5 numeric search
};

std::vector<ClaimResult> run_suite(const std::string& selector,
                                   const SuiteOptions& opts);

std::vector<std::string> suite_names();

/// Aligned text table, one row per claim.
std::string summary_table(const std::vector<ClaimResult>& results);

bool all_pass(const std::vector<ClaimResult>& results);

}  // namespace verify
}  // namespace rgme
