#include "rgme/closed_forms.hpp"

#include <cmath>

namespace rgme {
namespace closed_forms {
namespace {

Real xlog2x(Real x) { return x > 0 ? x * std::log2(x) : 0.0; }

Real clamp01(Real v) { return std::clamp<Real>(v, 0, 1); }

Real rgme_from_fidelity(Real f) { return clamp01(1 - f * f); }

}  // namespace

Real example1_fidelity(Real lambda) {
  return (1 - lambda / 2) * std::sqrt(1 - lambda) +
         lambda * std::sqrt(1 - lambda / 2);
}

Real example1_rgme(Real lambda) { return rgme_from_fidelity(example1_fidelity(lambda)); }

Real example1_gme(Real lambda) {
  return 0.5 * (1 - std::sqrt(std::max<Real>(0, 1 - lambda * lambda)));
}

Real example1_re(Real lambda) {
  Real value = (lambda - 2) * std::log2(1 - lambda / 2);
  if (lambda < 1) value += (1 - lambda) * std::log2(1 - lambda);
  return value;
}

Real example2_rgme(Real A, Real G) {
  const Real t = 1 - 2 * A + 2 * A * A;
  const Real r =
      std::sqrt(std::max<Real>(0, 1 - 4 * A + 4 * A * A + A * G * G - A * A * G * G));
  const Real bracket = std::sqrt(std::max<Real>(0, (t - r) / 2)) +
                       std::sqrt(std::max<Real>(0, (t + r) / 2));
  return clamp01(1 - bracket * bracket);
}

Real example2_gme(Real G) {
  return 0.5 * (1 - std::sqrt(std::max<Real>(0, 1 - G * G)));
}

Real pure_alpha_rgme(Real alpha) {
  const Real a2 = alpha * alpha;
  return 0.5 * (1 - std::sqrt(std::max<Real>(0, 1 - 4 * a2 * (1 - a2))));
}

Real pure_alpha_gme(Real alpha) { return pure_alpha_rgme(alpha); }

Real pure_alpha_re(Real alpha) {
  const Real a2 = alpha * alpha;
  return -xlog2x(a2) - xlog2x(1 - a2);
}

Real pure_alpha_concurrence(Real alpha) {
  return 2 * alpha * std::sqrt(std::max<Real>(0, 1 - alpha * alpha));
}

Real two_param_fidelity(Index n, Real alpha, Real gamma) {
  const Real beta = std::max<Real>(families::two_param_beta(n, alpha, gamma), 0);
  const Real s = 3 * beta + gamma;
  return 2 * static_cast<Real>(n - 2) * alpha + 3 * std::sqrt(beta * s / 6) +
         std::sqrt(gamma * s / 2);
}

Real two_param_rgme(Index n, Real alpha, Real gamma) {
  return rgme_from_fidelity(two_param_fidelity(n, alpha, gamma));
}

Real two_param_re(Index n, Real alpha, Real gamma) {
  const Real beta = std::max<Real>(families::two_param_beta(n, alpha, gamma), 0);
  const Real s = 3 * beta + gamma;
  Real value = 0;
  if (beta > 0) value += 3 * beta * std::log2(6 * beta / s);
  if (gamma > 0) value += gamma * std::log2(2 * gamma / s);
  return value;
}

Real two_param_negativity(Index n, Real alpha, Real gamma) {
  const Real beta = families::two_param_beta(n, alpha, gamma);
  return 2 * static_cast<Real>(n - 2) * alpha + 3 * std::abs((beta + gamma) / 2) +
         std::abs(3 * beta - gamma) / 2 - 1;
}

Real mems_fidelity(const std::array<Real, 4>& lambda) {
  const Real l1 = lambda[0], l2 = lambda[1], l3 = lambda[2], l4 = lambda[3];
  const Real denom = l1 + l4;
  if (denom <= 0) throw StructuralError("mems_fidelity: lambda1 + lambda4 = 0");
  return l2 + l3 + (l1 + 2 * l4) / 2 * std::sqrt(l4 / denom) +
         l1 * std::sqrt((l1 + 2 * l4) / (2 * denom));
}

Real mems_rgme(const std::array<Real, 4>& lambda) {
  return rgme_from_fidelity(mems_fidelity(lambda));
}

Real mems_re(const std::array<Real, 4>& lambda) {
  const Real l1 = lambda[0], l4 = lambda[3];
  Real value = 0;
  if (l1 > 0) value += l1 * std::log2(2 * (l1 + l4) / (l1 + 2 * l4));
  if (l4 > 0)
    value += l4 * std::log2(4 * l4 * (l1 + l4) / ((l1 + 2 * l4) * (l1 + 2 * l4)));
  return value;
}

Real mems_negativity(const std::array<Real, 4>& lambda) {
  const Real l1 = lambda[0], l2 = lambda[1], l3 = lambda[2], l4 = lambda[3];
  return std::max<Real>(
      0, std::sqrt((l1 - l3) * (l1 - l3) + (l2 - l4) * (l2 - l4)) - l2 - l4);
}

Real isotropic_fprime(Index d, Real alpha) {
  const Real dd = static_cast<Real>(d);
  return (1 + (dd * dd - 1) * alpha) / (dd * dd);
}

Real isotropic_fidelity(Index d, Real alpha) {
  const Real dd = static_cast<Real>(d);
  return (dd * dd - 1) / dd * std::sqrt((1 - alpha) / (dd * (dd + 1))) +
         std::sqrt((1 + (dd * dd - 1) * alpha) / dd) / dd;
}

Real isotropic_rgme(Index d, Real alpha) {
  return rgme_from_fidelity(isotropic_fidelity(d, alpha));
}

Real isotropic_gme(Index d, Real alpha) {
  const Real dd = static_cast<Real>(d);
  const Real fp = isotropic_fprime(d, alpha);
  const Real bracket =
      std::sqrt(fp) + std::sqrt(std::max<Real>(0, (1 - fp) * (dd - 1)));
  return 1 - bracket * bracket / dd;
}

Real isotropic_re(Index d, Real alpha) {
  const Real dd = static_cast<Real>(d);
  const Real fp = isotropic_fprime(d, alpha);
  return std::log2(dd) + xlog2x(fp) +
         (fp < 1 ? (1 - fp) * std::log2((1 - fp) / (dd - 1)) : 0.0);
}

Real isotropic_eof(Index d, Real alpha) {
  const Real dd = static_cast<Real>(d);
  const Real fp = isotropic_fprime(d, alpha);
  if (fp < 1.0 / dd) return 0;
  // Middle/upper branch boundary at F' = 4(d-1)/d^2, where the two branches
  // join continuously.
  const Real boundary = 4 * (dd - 1) / (dd * dd);
  if (d == 2 || fp < boundary) {
    const Real x =
        fp / dd *
        std::pow(1 + std::sqrt(std::max<Real>(0, (dd - 1) * (1 - fp) / fp)), 2);
    const Real h = -xlog2x(x) - xlog2x(1 - x);
    return h + (1 - std::min<Real>(x, 1)) * std::log2(dd - 1);
  }
  return dd * std::log2(dd - 1) / (dd - 2) * (fp - 1) + std::log2(dd);
}

Real isotropic_iconcurrence(Index d, Real alpha) {
  const Real dd = static_cast<Real>(d);
  const Real fp = isotropic_fprime(d, alpha);
  if (fp < 1.0 / dd) return 0;
  return std::sqrt(2 * dd / (dd - 1)) * (fp - 1.0 / dd);
}

Real gen_isotropic_fidelity(Index n, Index d, Real alpha) {
  const Real dn = std::pow(static_cast<Real>(d), static_cast<Real>(n));
  const Real dd = static_cast<Real>(d);
  return (dn - 1) * std::sqrt((1 - alpha) / (dn * (dn + dd))) +
         std::sqrt((1 + (dn - 1) * alpha) / dn * (dd + 1) / (dn + dd));
}

Real gen_isotropic_rgme(Index n, Index d, Real alpha) {
  return rgme_from_fidelity(gen_isotropic_fidelity(n, d, alpha));
}

Real smolin_fidelity() { return std::sqrt(0.5); }
Real smolin_rgme() { return 0.5; }
Real smolin_re() { return 1.0; }

Real dur_fidelity(Real x) { return std::sqrt((2 - x) / 2); }
Real dur_rgme(Real x) { return x / 2; }

}  // namespace closed_forms

MeasureReport rgme_closed(const StateFamily& family) {
  namespace cf = closed_forms;
  MeasureReport report;
  report.measure = "rgme_closed";
  report.family = family;
  Real f = 1;
  Real value = 0;
  switch (family.tag) {
    case FamilyTag::Example1: {
      Real lambda = family.param("lambda");
      f = cf::example1_fidelity(lambda);
      value = cf::example1_rgme(lambda);
      break;
    }
    case FamilyTag::Example2: {
      value = cf::example2_rgme(family.param("A"), family.param("G"));
      f = std::sqrt(1 - value);
      break;
    }
    case FamilyTag::PureAlpha: {
      value = cf::pure_alpha_rgme(family.param("alpha"));
      f = std::sqrt(1 - value);
      break;
    }
    case FamilyTag::TwoParam2xN: {
      Index n = family.iparam("n");
      Real alpha = family.param("alpha"), gamma = family.param("gamma");
      if (gamma > 0.5) {
        f = cf::two_param_fidelity(n, alpha, gamma);
        value = cf::two_param_rgme(n, alpha, gamma);
      }
      break;
    }
    case FamilyTag::MEMS: {
      if (family.iparam("n") < 3)
        throw StructuralError("rgme_closed: MEMS closed form requires n >= 3");
      std::array<Real, 4> lambda = {family.param("lambda1"), family.param("lambda2"),
                                    family.param("lambda3"), family.param("lambda4")};
      if (cf::mems_negativity(lambda) > 0) {
        f = cf::mems_fidelity(lambda);
        value = cf::mems_rgme(lambda);
      }
      break;
    }
    case FamilyTag::Isotropic: {
      Index d = family.iparam("d");
      Real alpha = family.param("alpha");
      if (alpha > 1.0 / (static_cast<Real>(d) + 1)) {
        f = cf::isotropic_fidelity(d, alpha);
        value = cf::isotropic_rgme(d, alpha);
      }
      break;
    }
    case FamilyTag::GenIsotropic: {
      Index n = family.iparam("n"), d = family.iparam("d");
      Real alpha = family.param("alpha");
      if (alpha > families::gen_isotropic_alpha0(n, d)) {
        f = cf::gen_isotropic_fidelity(n, d, alpha);
        value = cf::gen_isotropic_rgme(n, d, alpha);
      }
      break;
    }
    case FamilyTag::Smolin:
      f = cf::smolin_fidelity();
      value = cf::smolin_rgme();
      break;
    case FamilyTag::Dur:
      f = cf::dur_fidelity(family.param("x"));
      value = cf::dur_rgme(family.param("x"));
      break;
  }
  report.value = value;
  report.diagnostics["F"] = f;
  return report;
}

Real re_closed(const StateFamily& family) {
  namespace cf = closed_forms;
  switch (family.tag) {
    case FamilyTag::Example1: return cf::example1_re(family.param("lambda"));
    case FamilyTag::PureAlpha: return cf::pure_alpha_re(family.param("alpha"));
    case FamilyTag::TwoParam2xN:
      return cf::two_param_re(family.iparam("n"), family.param("alpha"),
                              family.param("gamma"));
    case FamilyTag::MEMS:
      if (family.iparam("n") < 3)
        throw StructuralError("re_closed: MEMS closed form requires n >= 3");
      return cf::mems_re({family.param("lambda1"), family.param("lambda2"),
                          family.param("lambda3"), family.param("lambda4")});
    case FamilyTag::Isotropic: {
      Index d = family.iparam("d");
      Real alpha = family.param("alpha");
      if (alpha <= 1.0 / (static_cast<Real>(d) + 1)) return 0;
      return cf::isotropic_re(d, alpha);
    }
    case FamilyTag::Smolin: return cf::smolin_re();
    default:
      throw StructuralError("re_closed: no closed form for family " +
                            family_tag_name(family.tag));
  }
}

Real gme_closed(const StateFamily& family) {
  namespace cf = closed_forms;
  switch (family.tag) {
    case FamilyTag::Example1: return cf::example1_gme(family.param("lambda"));
    case FamilyTag::Example2: return cf::example2_gme(family.param("G"));
    case FamilyTag::PureAlpha: return cf::pure_alpha_gme(family.param("alpha"));
    case FamilyTag::Isotropic: {
      Index d = family.iparam("d");
      Real alpha = family.param("alpha");
      if (alpha <= 1.0 / (static_cast<Real>(d) + 1)) return 0;
      return cf::isotropic_gme(d, alpha);
    }
    case FamilyTag::Smolin: return cf::smolin_rgme();
    case FamilyTag::Dur: return cf::dur_rgme(family.param("x"));
    default:
      throw StructuralError("gme_closed: no closed form for family " +
                            family_tag_name(family.tag));
  }
}

Real negativity_closed(const StateFamily& family) {
  namespace cf = closed_forms;
  switch (family.tag) {
    case FamilyTag::TwoParam2xN:
      return cf::two_param_negativity(family.iparam("n"), family.param("alpha"),
                                      family.param("gamma"));
    case FamilyTag::MEMS:
      return cf::mems_negativity({family.param("lambda1"), family.param("lambda2"),
                                  family.param("lambda3"),
                                  family.param("lambda4")});
    case FamilyTag::Example2: return family.param("G");
    case FamilyTag::PureAlpha:
      return cf::pure_alpha_concurrence(family.param("alpha"));
    default:
      throw StructuralError("negativity_closed: no closed form for family " +
                            family_tag_name(family.tag));
  }
}

Real eof_isotropic(Index d, Real alpha) {
  if (d < 2) throw StructuralError("eof_isotropic: d must be >= 2");
  return closed_forms::isotropic_eof(d, alpha);
}

Real iconcurrence_isotropic(Index d, Real alpha) {
  if (d < 2) throw StructuralError("iconcurrence_isotropic: d must be >= 2");
  return closed_forms::isotropic_iconcurrence(d, alpha);
}

}  // namespace rgme
