#include "rgme/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "rgme/closed_forms.hpp"
#include "rgme/linalg.hpp"

namespace rgme {
namespace verify {
namespace {

std::string format_real(Real v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

Real halton(std::uint64_t index, std::uint64_t base) {
  Real f = 1, r = 0;
  while (index > 0) {
    f /= static_cast<Real>(base);
    r += f * static_cast<Real>(index % base);
    index /= base;
  }
  return r;
}

/// Low-discrepancy point on the 4-simplex with descending coordinates.
std::array<Real, 4> halton_simplex4_descending(std::uint64_t index) {
  std::array<Real, 5> cuts = {0, halton(index + 1, 2), halton(index + 1, 3),
                              halton(index + 1, 5), 1};
  std::sort(cuts.begin(), cuts.end());
  std::array<Real, 4> w;
  for (int i = 0; i < 4; ++i) w[i] = cuts[i + 1] - cuts[i];
  std::sort(w.begin(), w.end(), std::greater<Real>());
  Real sum = w[0] + w[1] + w[2] + w[3];
  for (auto& v : w) v /= sum;
  // Absorb float residue into the largest weight so the sum is exactly 1.
  w[0] += 1 - (w[0] + w[1] + w[2] + w[3]);
  return w;
}

PureState random_bipartite_pure(const Dims& dims, std::mt19937_64& rng) {
  std::normal_distribution<Real> gauss(0, 1);
  Vector v(dims_product(dims));
  for (Index i = 0; i < v.size(); ++i) v[i] = Complex(gauss(rng), gauss(rng));
  v /= v.norm();
  return PureState(v, dims);
}

DensityMatrix random_density(Index d, std::mt19937_64& rng) {
  std::normal_distribution<Real> gauss(0, 1);
  Matrix g(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  m = ((m + m.adjoint()) / 2.0).eval();
  return DensityMatrix(std::move(m), Dims{d});
}

SearchConfig pure_instance_config(std::uint64_t seed) {
  SearchConfig cfg;
  cfg.term_count = 8;
  cfg.starts = 8;
  cfg.max_iters = 250;
  cfg.seed = seed;
  return cfg;
}

constexpr Real kInvE = 0.36787944117144233;  // 1/e

}  // namespace

ClaimResult ClaimResult::leq(std::string id, std::string instance, Real lhs,
                             Real rhs, Real tol) {
  ClaimResult r;
  r.claim_id = std::move(id);
  r.instance = std::move(instance);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.tolerance = tol;
  r.pass = r.margin >= -tol;
  return r;
}

ClaimResult ClaimResult::close(std::string id, std::string instance, Real lhs,
                               Real rhs, Real tol) {
  ClaimResult r;
  r.claim_id = std::move(id);
  r.instance = std::move(instance);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = tol - std::abs(lhs - rhs);
  r.tolerance = tol;
  r.pass = std::abs(lhs - rhs) <= tol;
  return r;
}

ClaimResult ClaimResult::skip(std::string id, std::string instance) {
  ClaimResult r;
  r.claim_id = std::move(id);
  r.instance = std::move(instance);
  r.pass = true;
  r.skipped = true;
  return r;
}

ClaimResult prop1(Real f_at_sigma, Real rgme_value, const std::string& instance,
                  Real tol) {
  return ClaimResult::leq("prop1", instance, 1 - f_at_sigma,
                          std::sqrt(std::max<Real>(rgme_value, 0)), tol);
}

std::vector<ClaimResult> prop2(const PureState& psi, Real rgme_value,
                               const std::string& instance, Real tol) {
  DensityMatrix reduced = partial_trace(psi.projector(), {0});
  Real s_a = von_neumann_entropy(reduced);
  std::vector<ClaimResult> out;
  out.push_back(ClaimResult::leq("prop2", instance, rgme_value, s_a, tol));
  if (s_a <= 2) {
    out.push_back(ClaimResult::leq("prop2-quadratic", instance, rgme_value,
                                   s_a - s_a * s_a / 4, tol));
  } else {
    out.push_back(ClaimResult::skip("prop2-quadratic",
                                    instance + " S_A > 2, bound out of range"));
  }
  return out;
}

ClaimResult prop3(const DensityMatrix& rho, const DensityMatrix& sigma,
                  Real rgme_value, const std::string& instance, Real tol) {
  return ClaimResult::leq("prop3", instance, rgme_value, trace_distance(rho, sigma),
                          tol);
}

ClaimResult prop4(const DensityMatrix& rho, const DensityMatrix& sigma_pure,
                  const std::string& instance, Real tol) {
  if (rho.dim() < 4)
    throw StructuralError("prop4: requires dimension >= 4");
  Real entropy = von_neumann_entropy(rho);
  Real td = trace_distance(rho, sigma_pure);
  Real rhs = 2 * td * std::log2(static_cast<Real>(rho.dim())) + kInvE;
  return ClaimResult::leq("prop4", instance, entropy, rhs, tol);
}

std::vector<ClaimResult> chain44(const DensityMatrix& rho_pure,
                                 const DensityMatrix& sigma, Real f,
                                 const std::string& instance, Real tol) {
  const Real rgme = 1 - f * f;
  const Real dist = trace_distance(rho_pure, sigma);
  std::vector<ClaimResult> out;
  out.push_back(
      ClaimResult::leq("chain44-1", instance, (1 - f) * (1 - f), 1 - f, tol));
  out.push_back(ClaimResult::leq("chain44-2", instance, 1 - f, rgme, tol));
  out.push_back(ClaimResult::leq("chain44-3", instance, rgme, 1 - f * f, tol));
  out.push_back(ClaimResult::leq("chain44-4", instance, 1 - f * f, dist, tol));
  out.push_back(ClaimResult::leq("chain44-5", instance, dist,
                                 std::sqrt(std::max<Real>(1 - f * f, 0)), tol));
  out.push_back(ClaimResult::leq("chain44-6", instance,
                                 std::sqrt(std::max<Real>(1 - f * f, 0)),
                                 std::sqrt(dist), tol));
  return out;
}

namespace {

std::vector<ClaimResult> props_and_chain_suite(const SuiteOptions& opts,
                                               bool props, bool chain) {
  std::vector<ClaimResult> out;
  std::mt19937_64 rng(opts.seed);
  const std::vector<Dims> dim_choices = {{2, 2}, {2, 3}, {3, 3}};
  const Real tol = 1e-6;
  for (int i = 0; i < opts.random_instances; ++i) {
    const Dims& dims = dim_choices[i % dim_choices.size()];
    PureState psi = random_bipartite_pure(dims, rng);
    DensityMatrix rho = psi.projector();
    SearchResult search =
        max_fidelity_separable(rho, pure_instance_config(opts.seed + i));
    DensityMatrix sigma = search.witness.realize();
    Real rgme = 1 - search.f_max * search.f_max;
    std::string inst = dims_to_string(dims) + " #" + std::to_string(i);
    if (props) {
      out.push_back(prop1(search.f_max, rgme, inst, tol));
      auto p2 = prop2(psi, rgme, inst, tol);
      out.insert(out.end(), p2.begin(), p2.end());
      out.push_back(prop3(rho, sigma, rgme, inst, tol));
    }
    if (chain) {
      auto links = chain44(rho, sigma, search.f_max, inst, tol);
      out.insert(out.end(), links.begin(), links.end());
    }
  }

  if (props) {
    std::mt19937_64 rng4(opts.seed ^ 0xabcdefULL);
    const std::array<Index, 3> dims4 = {4, 8, 16};
    for (int i = 0; i < opts.prop4_instances; ++i) {
      Index d = dims4[i % dims4.size()];
      DensityMatrix rho = random_density(d, rng4);
      PureState sigma = random_bipartite_pure({d}, rng4);
      out.push_back(prop4(rho, sigma.projector(),
                          "d=" + std::to_string(d) + " #" + std::to_string(i)));
    }
    // Precondition gate: dimensions below 4 are rejected.
    bool rejected = false;
    try {
      std::mt19937_64 rng2(opts.seed);
      prop4(random_density(2, rng2), random_bipartite_pure({2}, rng2).projector(),
            "gate");
    } catch (const StructuralError&) {
      rejected = true;
    }
    ClaimResult gate = ClaimResult::skip("prop4-gate", "d=2 rejected: requires d >= 4");
    gate.pass = rejected;
    gate.skipped = true;
    out.push_back(gate);
  }
  return out;
}

std::vector<ClaimResult> orderings_suite(const SuiteOptions& opts) {
  std::vector<ClaimResult> out;
  const Real tol = 1e-6;
  const int gp = std::max(opts.grid_points, 3);

  for (int i = 0; i < gp; ++i) {
    Real lambda = static_cast<Real>(i) / (gp - 1);
    out.push_back(ClaimResult::leq(
        "ordering-example1", "lambda=" + format_real(lambda),
        closed_forms::example1_rgme(lambda), closed_forms::example1_re(lambda),
        tol));
  }

  for (int i = 0; i < gp; ++i) {
    Real alpha = static_cast<Real>(i) / (gp - 1);
    out.push_back(ClaimResult::leq(
        "ordering-pure-alpha-re", "alpha=" + format_real(alpha),
        closed_forms::pure_alpha_rgme(alpha), closed_forms::pure_alpha_re(alpha),
        tol));
    out.push_back(ClaimResult::leq("ordering-pure-alpha-concurrence",
                                   "alpha=" + format_real(alpha),
                                   closed_forms::pure_alpha_re(alpha),
                                   closed_forms::pure_alpha_concurrence(alpha),
                                   tol));
  }

  const Index n = 3;
  for (int i = 0; i < gp; ++i) {
    Real gamma = 0.5 + 0.5 * static_cast<Real>(i) / (gp - 1);
    for (int j = 0; j < gp; ++j) {
      Real alpha = (1 - gamma) / 2 * static_cast<Real>(j) / (gp - 1);
      std::string inst =
          "alpha=" + format_real(alpha) + " gamma=" + format_real(gamma);
      Real rgme = closed_forms::two_param_rgme(n, alpha, gamma);
      Real re = closed_forms::two_param_re(n, alpha, gamma);
      Real neg = closed_forms::two_param_negativity(n, alpha, gamma);
      out.push_back(ClaimResult::leq("ordering-two-param-re", inst, rgme, re, tol));
      out.push_back(ClaimResult::leq("ordering-two-param-neg", inst, re, neg, tol));
    }
  }

  for (Index d : {2, 3, 4}) {
    Real threshold = 1.0 / (static_cast<Real>(d) + 1);
    for (int i = 0; i < gp; ++i) {
      Real alpha =
          threshold + (1 - threshold) * (static_cast<Real>(i) + 1) / gp;
      out.push_back(ClaimResult::leq(
          "ordering-isotropic-d" + std::to_string(d), "alpha=" + format_real(alpha),
          closed_forms::isotropic_rgme(d, alpha),
          closed_forms::isotropic_re(d, alpha), tol));
    }
  }

  for (int s = 0; s < 24; ++s) {
    auto lambda = halton_simplex4_descending(opts.seed + s);
    out.push_back(ClaimResult::leq(
        "ordering-mems", "sample #" + std::to_string(s),
        closed_forms::mems_rgme(lambda), closed_forms::mems_re(lambda), tol));
  }

  out.push_back(ClaimResult::leq("ordering-smolin", "rgme <= re",
                                 closed_forms::smolin_rgme(),
                                 closed_forms::smolin_re(), tol));
  return out;
}

std::vector<ClaimResult> equalities_suite(const SuiteOptions&) {
  std::vector<ClaimResult> out;
  for (Index d : {2, 3, 4}) {
    for (int i = 0; i < 21; ++i) {
      Real alpha = static_cast<Real>(i) / 20;
      out.push_back(ClaimResult::close(
          "equality-gme-rgme-d" + std::to_string(d), "alpha=" + format_real(alpha),
          closed_forms::isotropic_rgme(d, alpha),
          closed_forms::isotropic_gme(d, alpha), 1e-12));
    }
    for (int i = 0; i < 11; ++i) {
      Real alpha = static_cast<Real>(i) / 10;
      out.push_back(ClaimResult::close(
          "equality-gen-isotropic-n2-d" + std::to_string(d),
          "alpha=" + format_real(alpha),
          closed_forms::gen_isotropic_fidelity(2, d, alpha),
          closed_forms::isotropic_fidelity(d, alpha), 1e-12));
    }
  }
  return out;
}

std::vector<ClaimResult> appendix_suite(const SuiteOptions& opts) {
  std::vector<ClaimResult> out;

  for (int s = 0; s < 8; ++s) {
    auto lambda = halton_simplex4_descending(opts.seed + 17 * s);
    DensityMatrix rho3 = families::mems(3, lambda);
    DensityMatrix sig3 = families::mems_closest_sep(3, lambda);
    DensityMatrix rho4 = families::mems(4, lambda);
    DensityMatrix sig4 = families::mems_closest_sep(4, lambda);
    Real f3 = fidelity(rho3, sig3);
    Real f4 = fidelity(rho4, sig4);
    std::string inst = "sample #" + std::to_string(s);
    out.push_back(ClaimResult::close("appendix-d-n-independence", inst, f3, f4, 1e-12));
    out.push_back(ClaimResult::close("appendix-d-closed-form", inst, f3,
                                     closed_forms::mems_fidelity(lambda), 1e-10));
  }

  const std::array<std::pair<Real, Real>, 3> points = {
      {{0.1, 0.6}, {0.05, 0.8}, {0.0, 0.55}}};
  for (const auto& [alpha, gamma] : points) {
    LagrangeSolution sol = lagrange_two_param_2x3(alpha, gamma);
    std::string inst = "alpha=" + format_real(alpha) + " gamma=" + format_real(gamma);
    Real sum = 0;
    for (Real w : sol.chosen_weights) sum += w;
    out.push_back(ClaimResult::close("appendix-a-weight-sum", inst, sum, 1, 1e-12));
    DensityMatrix target = families::two_param_closest_sep(3, alpha, gamma);
    Real entrywise =
        (sol.chosen_state->matrix() - target.matrix()).cwiseAbs().maxCoeff();
    out.push_back(
        ClaimResult::leq("appendix-a-reconstruction", inst, entrywise, 1e-14, 0));
    const auto& p = sol.chosen_weights;
    Real ppt_cond = p[2] * p[3] - (p[0] - p[1]) * (p[0] - p[1]) / 4;
    out.push_back(ClaimResult::leq("appendix-a-ppt-condition", inst, 0, ppt_cond,
                                   1e-12));
    out.push_back(ClaimResult::leq("appendix-a-selection", inst,
                                   sol.objective_first, sol.objective_second,
                                   1e-12));
  }
  return out;
}

std::vector<ClaimResult> smolin_suite(const SuiteOptions&) {
  std::vector<ClaimResult> out;
  ConjectureReport report = check_smolin_conjecture();
  out.push_back(ClaimResult::close("conjecture-smolin-f", "F vs sqrt(1/2)",
                                   report.fidelity_value, report.claimed_value,
                                   1e-10));
  out.push_back(ClaimResult::close("conjecture-smolin-rgme", "closed value",
                                   report.rgme_closed_value, 0.5, 0));
  Real re = relative_entropy(families::smolin(), families::smolin_conjectured_sep());
  out.push_back(ClaimResult::close("smolin-re", "RE vs 1", re, 1, 1e-10));
  return out;
}

std::vector<ClaimResult> dur_suite(const SuiteOptions& opts) {
  std::vector<ClaimResult> out;
  std::vector<Index> ns = {4};
  if (opts.include_slow) ns.push_back(5);
  for (Index N : ns) {
    for (Real x : {0.2, 0.5, 0.8}) {
      ConjectureReport report = check_dur_conjecture(N, x);
      std::string inst = "N=" + std::to_string(N) + " x=" + format_real(x);
      // The conjecture is invalid: the margin must exceed 1e-6.
      out.push_back(
          ClaimResult::leq("conjecture-dur-invalid", inst, 1e-6, report.margin, 0));
    }
    Matrix diff = families::dur(N, 0).matrix() -
                  families::dur_conjectured_sep(N, 0).matrix();
    out.push_back(ClaimResult::leq("conjecture-dur-x0",
                                   "N=" + std::to_string(N) + " x=0 trivial point",
                                   diff.cwiseAbs().maxCoeff(), 1e-14, 0));
  }
  return out;
}

}  // namespace

std::vector<ClaimResult> closed_vs_numeric(FamilyTag tag, const SearchConfig& cfg,
                                           int grid_points, std::uint64_t seed) {
  std::vector<ClaimResult> out;
  const int gp = std::max(grid_points, 2);
  auto check = [&](const StateFamily& family, const DensityMatrix& rho, Real tol) {
    Real closed = rgme_closed(family).value;
    MeasureReport numeric = rgme_numeric(rho, cfg);
    std::ostringstream inst;
    inst << family_tag_name(family.tag);
    for (const auto& [k, v] : family.params) inst << " " << k << "=" << format_real(v);
    out.push_back(ClaimResult::close("closed-vs-numeric-" + family_tag_name(tag),
                                     inst.str(), closed, numeric.value, tol));
  };

  switch (tag) {
    case FamilyTag::TwoParam2xN: {
      for (int i = 0; i < gp; ++i) {
        Real gamma = 0.55 + 0.45 * static_cast<Real>(i) / (gp - 1);
        for (int j = 0; j < gp; ++j) {
          Real alpha = (1 - gamma) / 2 * static_cast<Real>(j) / (gp - 1);
          StateFamily f{FamilyTag::TwoParam2xN,
                        {{"n", 3}, {"alpha", alpha}, {"gamma", gamma}}};
          check(f, families::two_param_2xn(3, alpha, gamma), 1e-5);
        }
      }
      break;
    }
    case FamilyTag::MEMS: {
      int found = 0;
      for (std::uint64_t s = 0; found < gp * 2 && s < 4000; ++s) {
        auto lambda = halton_simplex4_descending(seed + s);
        if (closed_forms::mems_negativity(lambda) < 0.05) continue;
        ++found;
        StateFamily f{FamilyTag::MEMS,
                      {{"n", 3},
                       {"lambda1", lambda[0]},
                       {"lambda2", lambda[1]},
                       {"lambda3", lambda[2]},
                       {"lambda4", lambda[3]}}};
        check(f, families::mems(3, lambda), 1e-5);
      }
      break;
    }
    case FamilyTag::Isotropic: {
      for (Index d : {2, 3}) {
        for (Real alpha : {0.4, 0.6, 0.8, 1.0}) {
          StateFamily f{FamilyTag::Isotropic, {{"d", Real(d)}, {"alpha", alpha}}};
          check(f, families::isotropic(d, alpha), 1e-5);
        }
      }
      break;
    }
    case FamilyTag::GenIsotropic: {
      for (Real alpha : {0.4, 0.7, 1.0}) {
        StateFamily f{FamilyTag::GenIsotropic,
                      {{"n", 3}, {"d", 2}, {"alpha", alpha}}};
        check(f, families::gen_isotropic(3, 2, alpha), 1e-5);
      }
      break;
    }
    case FamilyTag::Smolin: {
      StateFamily f{FamilyTag::Smolin, {}};
      check(f, families::smolin(), 1e-4);
      break;
    }
    case FamilyTag::Dur: {
      for (Real x : {0.2, 0.5, 0.8}) {
        StateFamily f{FamilyTag::Dur, {{"N", 4}, {"x", x}}};
        check(f, families::dur(4, x), 1e-4);
      }
      break;
    }
    default:
      throw StructuralError("closed_vs_numeric: no numeric grid for family " +
                            family_tag_name(tag));
  }
  return out;
}

std::vector<ClaimResult> family_orderings(FamilyTag tag, int grid_points,
                                          std::uint64_t seed) {
  SuiteOptions opts;
  opts.grid_points = grid_points;
  opts.seed = seed;
  std::vector<ClaimResult> all = orderings_suite(opts);
  std::string needle;
  switch (tag) {
    case FamilyTag::Example1: needle = "ordering-example1"; break;
    case FamilyTag::PureAlpha: needle = "ordering-pure-alpha"; break;
    case FamilyTag::TwoParam2xN: needle = "ordering-two-param"; break;
    case FamilyTag::MEMS: needle = "ordering-mems"; break;
    case FamilyTag::Isotropic: needle = "ordering-isotropic"; break;
    case FamilyTag::Smolin: needle = "ordering-smolin"; break;
    default:
      throw StructuralError("family_orderings: no ordering grid for family " +
                            family_tag_name(tag));
  }
  std::vector<ClaimResult> filtered;
  for (auto& claim : all)
    if (claim.claim_id.rfind(needle, 0) == 0) filtered.push_back(claim);
  return filtered;
}

namespace {

std::vector<ClaimResult> stationarity_suite(const SuiteOptions& opts) {
  std::vector<ClaimResult> out;
  const int probes_count = std::max(opts.probe_count, 8);

  const std::array<std::pair<Real, Real>, 2> points = {{{0.1, 0.6}, {0.02, 0.8}}};
  for (const auto& [alpha, gamma] : points) {
    DensityMatrix rho = families::two_param_2xn(3, alpha, gamma);
    DensityMatrix sigma = families::two_param_closest_sep(3, alpha, gamma);
    auto probes = random_product_probes(rho.dims(), probes_count, opts.seed + 3);
    StationarityReport fid = stationarity_fidelity(rho, sigma, probes);
    StationarityReport re = stationarity_re(rho, sigma, probes);
    std::string inst = "alpha=" + format_real(alpha) + " gamma=" + format_real(gamma);
    out.push_back(ClaimResult::leq("stationarity-two-param-fidelity", inst,
                                   fid.worst, fid.tolerance, 0));
    out.push_back(
        ClaimResult::leq("stationarity-two-param-re", inst, -re.tolerance, re.worst, 0));
  }

  {
    auto lambda = halton_simplex4_descending(opts.seed + 11);
    DensityMatrix rho = families::mems(3, lambda);
    DensityMatrix sigma = families::mems_closest_sep(3, lambda);
    auto probes = random_product_probes(rho.dims(), probes_count, opts.seed + 5);
    StationarityReport fid = stationarity_fidelity(rho, sigma, probes);
    out.push_back(ClaimResult::leq("stationarity-mems-fidelity", "halton sample",
                                   fid.worst, fid.tolerance, 0));
  }

  {
    // A deliberately wrong candidate must be detected by both checkers.
    DensityMatrix rho = families::isotropic(2, 1.0);
    Matrix mixed = Matrix::Identity(4, 4) / 4.0;
    DensityMatrix wrong(std::move(mixed), Dims{2, 2});
    auto probes = random_product_probes(rho.dims(), probes_count, opts.seed + 7);
    std::vector<DensityMatrix> with_good = probes;
    with_good.push_back(families::isotropic_closest_sep(2));
    StationarityReport fid = stationarity_fidelity(rho, wrong, with_good);
    out.push_back(ClaimResult::leq("stationarity-detects-wrong-fidelity",
                                   "isotropic d=2 alpha=1 vs I/4", fid.tolerance,
                                   fid.worst, 0));
    StationarityReport re = stationarity_re(rho, wrong, with_good);
    out.push_back(ClaimResult::leq("stationarity-detects-wrong-re",
                                   "isotropic d=2 alpha=1 vs I/4", re.worst,
                                   -re.tolerance, 0));
  }

  {
    // Separable rho: sigma* = rho sits at F = 1, derivatives cannot be positive.
    auto probes = random_product_probes({2, 2}, probes_count, opts.seed + 9);
    DensityMatrix rho = families::example2_closest_sep(0.3);
    StationarityReport fid = stationarity_fidelity(rho, rho, probes);
    out.push_back(ClaimResult::leq("stationarity-separable-self", "example2 A=0.3",
                                   fid.worst, fid.tolerance, 0));
  }
  return out;
}

std::vector<ClaimResult> closed_vs_numeric_suite(const SuiteOptions& opts) {
  std::vector<ClaimResult> out;

  SearchConfig small;
  small.starts = 24;
  small.max_iters = 600;
  small.seed = opts.seed;

  SearchConfig large;
  large.term_count = 64;
  large.starts = 12;
  large.max_iters = 400;
  large.seed = opts.seed;

  auto append = [&out](std::vector<ClaimResult> v) {
    out.insert(out.end(), v.begin(), v.end());
  };
  append(closed_vs_numeric(FamilyTag::TwoParam2xN, small, 3, opts.seed));
  append(closed_vs_numeric(FamilyTag::MEMS, small, 2, opts.seed));
  append(closed_vs_numeric(FamilyTag::Isotropic, small, 2, opts.seed));
  append(closed_vs_numeric(FamilyTag::GenIsotropic, small, 2, opts.seed));
  append(closed_vs_numeric(FamilyTag::Smolin, large, 1, opts.seed));
  if (opts.include_slow) {
    SearchConfig dur_cfg = large;
    dur_cfg.term_count = 48;
    append(closed_vs_numeric(FamilyTag::Dur, dur_cfg, 1, opts.seed));
  }
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"props",  "chain",          "orderings",        "equalities",
          "appendix", "smolin",       "dur-conjecture",   "closed-vs-numeric",
          "stationarity", "all"};
}

std::vector<ClaimResult> run_suite(const std::string& selector,
                                   const SuiteOptions& opts) {
  std::vector<ClaimResult> out;
  auto append = [&out](std::vector<ClaimResult> v) {
    out.insert(out.end(), v.begin(), v.end());
  };
  bool all = selector == "all";
  bool known = all;
  if (all || selector == "props") {
    append(props_and_chain_suite(opts, true, false));
    known = true;
  }
  if (all || selector == "chain") {
    append(props_and_chain_suite(opts, false, true));
    known = true;
  }
  if (all || selector == "orderings") {
    append(orderings_suite(opts));
    known = true;
  }
  if (all || selector == "equalities") {
    append(equalities_suite(opts));
    known = true;
  }
  if (all || selector == "appendix") {
    append(appendix_suite(opts));
    known = true;
  }
  if (all || selector == "smolin") {
    append(smolin_suite(opts));
    known = true;
  }
  if (all || selector == "dur-conjecture") {
    append(dur_suite(opts));
    known = true;
  }
  if (all || selector == "closed-vs-numeric") {
    append(closed_vs_numeric_suite(opts));
    known = true;
  }
  if (all || selector == "stationarity") {
    append(stationarity_suite(opts));
    known = true;
  }
  if (!known) throw StructuralError("unknown verify suite: " + selector);
  std::stable_sort(out.begin(), out.end(),
                   [](const ClaimResult& a, const ClaimResult& b) {
                     return a.claim_id < b.claim_id;
                   });
  return out;
}

std::string summary_table(const std::vector<ClaimResult>& results) {
  std::size_t id_width = 8;
  for (const auto& r : results) id_width = std::max(id_width, r.claim_id.size());
  std::ostringstream os;
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& r : results) {
    std::string status = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
    if (r.skipped)
      ++skipped;
    else if (r.pass)
      ++passed;
    else
      ++failed;
    os << status << "  " << r.claim_id;
    os << std::string(id_width - r.claim_id.size() + 2, ' ');
    if (!r.skipped) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "lhs=%-12.6g rhs=%-12.6g margin=%-10.3g ",
                    r.lhs, r.rhs, r.margin);
      os << buf;
    }
    os << r.instance << "\n";
  }
  os << "---\n"
     << passed << " passed, " << failed << " failed, " << skipped << " skipped ("
     << results.size() << " claims)\n";
  return os.str();
}

bool all_pass(const std::vector<ClaimResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace verify
}  // namespace rgme
