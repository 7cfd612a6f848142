#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rgme/measures.hpp"
#include "rgme/state.hpp"

namespace rgme {

/// Separable state as a convex mixture of product pure states.
struct ProductEnsemble {
  struct Term {
    Real weight = 0;
    std::vector<Vector> factors;  // one normalized vector per subsystem
  };
  Dims dims;
  std::vector<Term> terms;

  /// Full product vector of a term.
  Vector term_vector(std::size_t t) const;
  /// Realized density matrix sum_t w_t |Phi_t><Phi_t|.
  DensityMatrix realize() const;
  void validate() const;
};

struct SearchConfig {
  int term_count = 0;  // 0 selects D^2
  int starts = 64;
  int max_iters = 500;
  int als_sweeps = 2;
  Real f_tol = 1e-12;
  int stall_iters = 4;
  Real stationarity_tol = 1e-10;
  std::uint64_t seed = 20240817ULL;
  int threads = 0;  // 0 selects hardware concurrency
};

struct SearchResult {
  Real f_max = 0;
  ProductEnsemble witness;
  bool converged = false;
  int best_start = -1;
  int iterations = 0;
};

/// Maximize the fidelity F(rho, sigma) over separable sigma, parameterized as
/// a weighted ensemble of product pure states across the factors of
/// rho.dims(). Monotone alternating ascent with seeded multi-start:
/// ancilla alignment (polar factor), per-term rank-1 factor updates, and
/// closed-form simplex reweighting.
SearchResult max_fidelity_separable(const DensityMatrix& rho,
                                    const SearchConfig& cfg = {});

/// 1 - F_max^2 with the achieving ensemble attached.
MeasureReport rgme_numeric(const DensityMatrix& rho, const SearchConfig& cfg = {});

struct StationarityReport {
  std::vector<Real> derivatives;  // one per probe
  Real worst = 0;                 // max for fidelity, min for relative entropy
  int worst_probe = -1;
  int violations = 0;
  Real tolerance = 0;
  bool pass = false;
};

/// One-sided derivative of tr sqrt(sqrt(rho) sigma_l sqrt(rho)) at l = 0+
/// along sigma_l = (1-l) sigma_star + l probe, Richardson-refined; at a
/// fidelity-closest separable state every derivative is <= tolerance.
StationarityReport stationarity_fidelity(const DensityMatrix& rho,
                                         const DensityMatrix& sigma_star,
                                         const std::vector<DensityMatrix>& probes,
                                         Real step = 1e-6, Real tol = 1e-7);

/// One-sided derivative of S(rho || (1-x) sigma_star + x probe) at x = 0+;
/// at an RE-closest separable state every derivative is >= -tolerance.
StationarityReport stationarity_re(const DensityMatrix& rho,
                                   const DensityMatrix& sigma_star,
                                   const std::vector<DensityMatrix>& probes,
                                   Real step = 1e-6, Real tol = 1e-7);

/// Seeded random fully-product pure-state probes on the given dims.
std::vector<DensityMatrix> random_product_probes(const Dims& dims, int count,
                                                 std::uint64_t seed);

struct LagrangeSolution {
  std::array<Real, 6> weights_first;
  std::array<Real, 6> weights_second;
  Real objective_first = 0;
  Real objective_second = 0;
  int chosen = 0;  // 0 -> first group
  std::array<Real, 6> chosen_weights;
  std::optional<DensityMatrix> chosen_state;
};

/// Both stationary weight groups of the constrained relative-entropy
/// minimization for the 2x3 two-parameter family, with the minimizing group
/// selected; the chosen weights rebuild the family's closest separable state.
LagrangeSolution lagrange_two_param_2x3(Real alpha, Real gamma);

struct ConjectureReport {
  Real fidelity_value = 0;
  Real claimed_value = 0;
  Real margin = 0;  // |fidelity - claimed|
  bool conjecture_holds = false;
  Real rgme_closed_value = 0;
};

/// F(smolin, conjectured sigma) reproduces sqrt(1/2): the conjecture is valid.
ConjectureReport check_smolin_conjecture();

/// F(dur, conjectured sigma) differs from sqrt(1 - x/2): invalid for x in (0,1).
ConjectureReport check_dur_conjecture(Index N, Real x);

struct PptResult {
  bool ppt = false;
  Real min_eigenvalue = 0;
};

PptResult ppt_check(const DensityMatrix& rho, const std::set<std::size_t>& cut,
                    Real tol = 1e-10);

/// PPT on every nontrivial bipartition of the subsystem list.
bool ppt_all_cuts(const DensityMatrix& rho, Real tol = 1e-10);

}  // namespace rgme
