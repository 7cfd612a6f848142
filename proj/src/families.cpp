#include "rgme/families.hpp"

#include <cmath>

namespace rgme {

std::string family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Example1: return "example1";
    case FamilyTag::Example2: return "example2";
    case FamilyTag::PureAlpha: return "pure_alpha";
    case FamilyTag::TwoParam2xN: return "two_param_2xn";
    case FamilyTag::MEMS: return "mems";
    case FamilyTag::Isotropic: return "isotropic";
    case FamilyTag::GenIsotropic: return "gen_isotropic";
    case FamilyTag::Smolin: return "smolin";
    case FamilyTag::Dur: return "dur";
  }
  throw StructuralError("unknown family tag");
}

FamilyTag family_tag_from_name(const std::string& name) {
  for (FamilyTag tag :
       {FamilyTag::Example1, FamilyTag::Example2, FamilyTag::PureAlpha,
        FamilyTag::TwoParam2xN, FamilyTag::MEMS, FamilyTag::Isotropic,
        FamilyTag::GenIsotropic, FamilyTag::Smolin, FamilyTag::Dur}) {
    if (family_tag_name(tag) == name) return tag;
  }
  throw StructuralError("unknown family name: " + name);
}

Real StateFamily::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end())
    throw StructuralError("family " + family_tag_name(tag) +
                          ": missing parameter " + name);
  return it->second;
}

Index StateFamily::iparam(const std::string& name) const {
  Real v = param(name);
  Index i = static_cast<Index>(std::llround(v));
  if (std::abs(v - static_cast<Real>(i)) > 1e-9)
    throw StructuralError("family parameter " + name + " must be an integer");
  return i;
}

namespace families {
namespace {

DensityMatrix finish(Matrix m, Dims dims) {
  m = ((m + m.adjoint()) / 2.0).eval();
  return DensityMatrix(std::move(m), std::move(dims));
}

void require_unit_interval(Real v, const std::string& name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw StructuralError(name + " must lie in [0, 1], got " + std::to_string(v));
}

}  // namespace

Vector basis_vector(const Dims& dims, const std::vector<Index>& digits) {
  Vector v = Vector::Zero(dims_product(dims));
  v[pack_index(digits, dims)] = 1.0;
  return v;
}

BellBasis bell_basis(Index n) {
  if (n < 2) throw StructuralError("bell_basis: second factor needs dimension >= 2");
  Dims dims{2, n};
  const Real s = 1.0 / std::sqrt(2.0);
  Vector phi_p = s * (basis_vector(dims, {0, 0}) + basis_vector(dims, {1, 1}));
  Vector phi_m = s * (basis_vector(dims, {0, 0}) - basis_vector(dims, {1, 1}));
  Vector psi_p = s * (basis_vector(dims, {0, 1}) + basis_vector(dims, {1, 0}));
  Vector psi_m = s * (basis_vector(dims, {0, 1}) - basis_vector(dims, {1, 0}));
  return {PureState(phi_p, dims), PureState(phi_m, dims), PureState(psi_p, dims),
          PureState(psi_m, dims)};
}

DensityMatrix example1(Real lambda) {
  require_unit_interval(lambda, "lambda");
  Dims dims{2, 2};
  BellBasis bell = bell_basis(2);
  const Vector& phi = bell.phi_plus.amplitudes();
  Vector v01 = basis_vector(dims, {0, 1});
  Matrix m = lambda * (phi * phi.adjoint()) + (1 - lambda) * (v01 * v01.adjoint());
  return finish(std::move(m), dims);
}

DensityMatrix example1_closest_sep(Real lambda) {
  require_unit_interval(lambda, "lambda");
  Dims dims{2, 2};
  const Real a = (lambda / 2) * (1 - lambda / 2);
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = a;
  m(0, 3) = a;
  m(3, 0) = a;
  m(3, 3) = a;
  m(1, 1) = (1 - lambda / 2) * (1 - lambda / 2);
  m(2, 2) = lambda * lambda / 4;
  return finish(std::move(m), dims);
}

DensityMatrix example2(Real A, Real G) {
  require_unit_interval(A, "A");
  if (G < 0 || G > 2 * std::sqrt(A * (1 - A)) + 1e-12)
    throw StructuralError("example2: G must satisfy 0 <= G <= 2 sqrt(A(1-A))");
  Matrix m = Matrix::Zero(4, 4);
  m(1, 1) = A;
  m(2, 2) = 1 - A;
  m(1, 2) = G / 2;
  m(2, 1) = G / 2;
  return finish(std::move(m), Dims{2, 2});
}

DensityMatrix example2_closest_sep(Real A) {
  require_unit_interval(A, "A");
  Matrix m = Matrix::Zero(4, 4);
  m(1, 1) = A;
  m(2, 2) = 1 - A;
  return finish(std::move(m), Dims{2, 2});
}

PureState pure_alpha_state(Real alpha) {
  require_unit_interval(alpha, "alpha");
  Dims dims{2, 2};
  Vector v = alpha * basis_vector(dims, {0, 0}) +
             std::sqrt(1 - alpha * alpha) * basis_vector(dims, {1, 1});
  return PureState(v, dims);
}

DensityMatrix pure_alpha(Real alpha) { return pure_alpha_state(alpha).projector(); }

DensityMatrix pure_alpha_sigma_re(Real alpha) {
  require_unit_interval(alpha, "alpha");
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = alpha * alpha;
  m(3, 3) = 1 - alpha * alpha;
  return finish(std::move(m), Dims{2, 2});
}

DensityMatrix pure_alpha_sigma_prime(Real alpha) {
  require_unit_interval(alpha, "alpha");
  const Real a2 = alpha * alpha;
  const Real u = std::sqrt(std::max<Real>(0, 1 - 4 * a2 * (1 - a2)));
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = (1 - u) / 2;
  m(3, 3) = (1 + u) / 2;
  return finish(std::move(m), Dims{2, 2});
}

Real two_param_beta(Index n, Real alpha, Real gamma) {
  return (1 - 2 * static_cast<Real>(n - 2) * alpha - gamma) / 3;
}

namespace {

Matrix two_param_matrix(Index n, Real alpha, Real gamma, Real beta) {
  Dims dims{2, n};
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  for (Index i = 0; i <= 1; ++i)
    for (Index j = 2; j < n; ++j) {
      Index idx = pack_index({i, j}, dims);
      m(idx, idx) += alpha;
    }
  Index i00 = pack_index({0, 0}, dims), i11 = pack_index({1, 1}, dims);
  Index i01 = pack_index({0, 1}, dims), i10 = pack_index({1, 0}, dims);
  m(i00, i00) += beta;
  m(i11, i11) += beta;
  m(i01, i01) += (beta + gamma) / 2;
  m(i10, i10) += (beta + gamma) / 2;
  m(i01, i10) += (beta - gamma) / 2;
  m(i10, i01) += (beta - gamma) / 2;
  return m;
}

void two_param_check(Index n, Real alpha, Real gamma, Real beta) {
  if (n < 3) throw StructuralError("two_param_2xn: n must be >= 3");
  if (2 * n > kMaxDim) throw StructuralError("two_param_2xn: dimension cap exceeded");
  if (alpha < -1e-12 || alpha > 1.0 / (2.0 * static_cast<Real>(n) - 4.0) + 1e-12)
    throw StructuralError("two_param_2xn: alpha outside [0, 1/(2n-4)]");
  if (gamma < -1e-12 || gamma > 1 + 1e-12)
    throw StructuralError("two_param_2xn: gamma outside [0, 1]");
  // The spectrum is {alpha, beta, gamma}; beta < 0 breaks positivity.
  if (beta < -1e-12)
    throw NotPsdError("two_param_2xn: derived beta = " + std::to_string(beta) +
                      " is negative, state not PSD");
}

}  // namespace

DensityMatrix two_param_2xn(Index n, Real alpha, Real gamma) {
  const Real beta = two_param_beta(n, alpha, gamma);
  two_param_check(n, alpha, gamma, beta);
  return finish(two_param_matrix(n, alpha, gamma, std::max<Real>(beta, 0)),
                Dims{2, n});
}

DensityMatrix two_param_closest_sep(Index n, Real alpha, Real gamma) {
  const Real beta = two_param_beta(n, alpha, gamma);
  two_param_check(n, alpha, gamma, beta);
  const Real s = 3 * std::max<Real>(beta, 0) + gamma;
  Dims dims{2, n};
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  for (Index i = 0; i <= 1; ++i)
    for (Index j = 2; j < n; ++j) {
      Index idx = pack_index({i, j}, dims);
      m(idx, idx) += alpha;
    }
  BellBasis bell = bell_basis(n);
  auto add = [&m](const PureState& v, Real w) {
    m += w * (v.amplitudes() * v.amplitudes().adjoint());
  };
  add(bell.phi_plus, s / 6);
  add(bell.phi_minus, s / 6);
  add(bell.psi_plus, s / 6);
  add(bell.psi_minus, s / 2);
  return finish(std::move(m), dims);
}

namespace {

void mems_check(Index n, const std::array<Real, 4>& lambda) {
  if (n < 2) throw StructuralError("mems: n must be >= 2");
  if (2 * n > kMaxDim) throw StructuralError("mems: dimension cap exceeded");
  Real sum = 0;
  for (int i = 0; i < 4; ++i) {
    if (lambda[i] < -1e-12)
      throw StructuralError("mems: negative eigenvalue in spectrum");
    if (i > 0 && lambda[i] > lambda[i - 1] + 1e-12)
      throw StructuralError("mems: spectrum must be descending");
    sum += lambda[i];
  }
  if (std::abs(sum - 1) > 1e-12)
    throw StructuralError("mems: spectrum must sum to 1");
}

}  // namespace

DensityMatrix mems(Index n, const std::array<Real, 4>& lambda) {
  mems_check(n, lambda);
  Dims dims{2, n};
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  Index i00 = pack_index({0, 0}, dims);
  m(i00, i00) += lambda[3];
  BellBasis bell = bell_basis(n);
  const Vector& psi_m = bell.psi_minus.amplitudes();
  m += lambda[0] * (psi_m * psi_m.adjoint());
  Index i0n = pack_index({0, n - 1}, dims), i1n = pack_index({1, n - 1}, dims);
  m(i0n, i0n) += lambda[2];
  m(i1n, i1n) += lambda[1];
  return finish(std::move(m), dims);
}

DensityMatrix mems_closest_sep(Index n, const std::array<Real, 4>& lambda) {
  mems_check(n, lambda);
  const Real l1 = lambda[0], l2 = lambda[1], l3 = lambda[2], l4 = lambda[3];
  const Real denom = 4 * (l1 + l4);
  if (denom <= 0) throw StructuralError("mems_closest_sep: lambda1 + lambda4 = 0");
  Dims dims{2, n};
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  Index i00 = pack_index({0, 0}, dims), i11 = pack_index({1, 1}, dims);
  Index i01 = pack_index({0, 1}, dims), i10 = pack_index({1, 0}, dims);
  m(i00, i00) += (l1 + 2 * l4) * (l1 + 2 * l4) / denom;
  m(i11, i11) += l1 * l1 / denom;
  const Real q = l1 * (l1 + 2 * l4) / denom;
  m(i01, i01) += q;
  m(i10, i10) += q;
  m(i01, i10) -= q;
  m(i10, i01) -= q;
  Index i0n = pack_index({0, n - 1}, dims), i1n = pack_index({1, n - 1}, dims);
  m(i0n, i0n) += l3;
  m(i1n, i1n) += l2;
  return finish(std::move(m), dims);
}

DensityMatrix max_negativity_two_qubit(const std::array<Real, 4>& lambda) {
  mems_check(2, lambda);
  Dims dims{2, 2};
  BellBasis bell = bell_basis(2);
  Matrix m = lambda[0] * (bell.psi_minus.amplitudes() *
                          bell.psi_minus.amplitudes().adjoint()) +
             lambda[2] * (bell.psi_plus.amplitudes() *
                          bell.psi_plus.amplitudes().adjoint());
  m(0, 0) += lambda[1];
  m(3, 3) += lambda[3];
  return finish(std::move(m), dims);
}

DensityMatrix isotropic(Index d, Real alpha) {
  if (d < 2) throw StructuralError("isotropic: d must be >= 2");
  if (d * d > kMaxDim) throw StructuralError("isotropic: dimension cap exceeded");
  const Real lo = -1.0 / (static_cast<Real>(d) * d - 1);
  if (alpha < lo - 1e-12 || alpha > 1 + 1e-12)
    throw StructuralError("isotropic: alpha outside PSD range [" +
                          std::to_string(lo) + ", 1]");
  Dims dims{d, d};
  Vector phi = Vector::Zero(d * d);
  for (Index i = 0; i < d; ++i) phi[pack_index({i, i}, dims)] = 1.0 / std::sqrt(Real(d));
  Matrix m = alpha * (phi * phi.adjoint());
  m += (1 - alpha) / (static_cast<Real>(d) * d) * Matrix::Identity(d * d, d * d);
  return finish(std::move(m), dims);
}

DensityMatrix isotropic_closest_sep(Index d) {
  return isotropic(d, 1.0 / (static_cast<Real>(d) + 1));
}

Real gen_isotropic_alpha0(Index n, Index d) {
  return 1.0 / (1.0 + std::pow(static_cast<Real>(d), static_cast<Real>(n - 1)));
}

DensityMatrix gen_isotropic(Index n, Index d, Real alpha) {
  if (n < 2) throw StructuralError("gen_isotropic: n must be >= 2");
  if (d < 2) throw StructuralError("gen_isotropic: d must be >= 2");
  Real dn_real = std::pow(static_cast<Real>(d), static_cast<Real>(n));
  if (dn_real > kMaxDim) throw StructuralError("gen_isotropic: dimension cap exceeded");
  const Index dn = static_cast<Index>(std::llround(dn_real));
  const Real lo = -1.0 / (dn_real - 1);
  if (alpha < lo - 1e-12 || alpha > 1 + 1e-12)
    throw StructuralError("gen_isotropic: alpha outside PSD range");
  Dims dims(n, d);
  Vector psi = Vector::Zero(dn);
  std::vector<Index> digits(n);
  for (Index i = 0; i < d; ++i) {
    std::fill(digits.begin(), digits.end(), i);
    psi[pack_index(digits, dims)] = 1.0 / std::sqrt(Real(d));
  }
  Matrix m = alpha * (psi * psi.adjoint());
  m += (1 - alpha) / dn_real * Matrix::Identity(dn, dn);
  return finish(std::move(m), dims);
}

DensityMatrix gen_isotropic_closest_sep(Index n, Index d) {
  return gen_isotropic(n, d, gen_isotropic_alpha0(n, d));
}

DensityMatrix smolin() {
  Dims dims{2, 2, 2, 2};
  const std::array<std::array<Index, 4>, 4> pairs_a = {
      {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}}};
  const std::array<std::array<Index, 4>, 4> pairs_b = {
      {{1, 1, 1, 1}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}}};
  Matrix m = Matrix::Zero(16, 16);
  for (int i = 0; i < 4; ++i) {
    Vector x = (basis_vector(dims, {pairs_a[i][0], pairs_a[i][1], pairs_a[i][2],
                                    pairs_a[i][3]}) +
                basis_vector(dims, {pairs_b[i][0], pairs_b[i][1], pairs_b[i][2],
                                    pairs_b[i][3]})) /
               std::sqrt(2.0);
    m += 0.25 * (x * x.adjoint());
  }
  return finish(std::move(m), dims);
}

DensityMatrix smolin_conjectured_sep() {
  Dims dims{2, 2, 2, 2};
  const std::array<std::array<Index, 4>, 8> states = {{{0, 0, 0, 0},
                                                       {1, 1, 1, 1},
                                                       {0, 0, 1, 1},
                                                       {1, 1, 0, 0},
                                                       {0, 1, 0, 1},
                                                       {1, 0, 1, 0},
                                                       {0, 1, 1, 0},
                                                       {1, 0, 0, 1}}};
  Matrix m = Matrix::Zero(16, 16);
  for (const auto& s : states) {
    Index idx = pack_index({s[0], s[1], s[2], s[3]}, dims);
    m(idx, idx) += 1.0 / 8.0;
  }
  return finish(std::move(m), dims);
}

namespace {

void dur_check(Index N, Real x) {
  if (N < 4) throw StructuralError("dur: N must be >= 4");
  if ((Index(1) << N) > kMaxDim) throw StructuralError("dur: dimension cap exceeded");
  require_unit_interval(x, "x");
}

Vector dur_flip_state(const Dims& dims, Index N, Index k, bool bar) {
  std::vector<Index> digits(N, bar ? 1 : 0);
  digits[k] = bar ? 0 : 1;
  return basis_vector(dims, digits);
}

Vector dur_ghz(const Dims& dims, Index N) {
  std::vector<Index> zeros(N, 0), ones(N, 1);
  return (basis_vector(dims, zeros) + basis_vector(dims, ones)) / std::sqrt(2.0);
}

}  // namespace

DensityMatrix dur(Index N, Real x) {
  dur_check(N, x);
  Dims dims(N, 2);
  Vector ghz = dur_ghz(dims, N);
  Matrix m = x * (ghz * ghz.adjoint());
  const Real w = (1 - x) / (2.0 * static_cast<Real>(N));
  for (Index k = 0; k < N; ++k) {
    Vector u = dur_flip_state(dims, N, k, false);
    Vector v = dur_flip_state(dims, N, k, true);
    m += w * (u * u.adjoint());
    m += w * (v * v.adjoint());
  }
  return finish(std::move(m), dims);
}

DensityMatrix dur_conjectured_sep(Index N, Real x) {
  dur_check(N, x);
  Dims dims(N, 2);
  std::vector<Index> zeros(N, 0), ones(N, 1);
  Vector all0 = basis_vector(dims, zeros), all1 = basis_vector(dims, ones);
  // The printed mixture carries weight x on each extreme term, which does not
  // normalize; the purification amplitudes fix the weights at x/2.
  Matrix m = (x / 2) * (all0 * all0.adjoint() + all1 * all1.adjoint());
  const Real w = (1 - x) / (2.0 * static_cast<Real>(N));
  for (Index k = 0; k < N; ++k) {
    Vector u = dur_flip_state(dims, N, k, false);
    Vector v = dur_flip_state(dims, N, k, true);
    m += w * (u * u.adjoint());
    m += w * (v * v.adjoint());
  }
  return finish(std::move(m), dims);
}

PureState dur_qr_state(Index N, Real x, const std::vector<Real>& q,
                       const std::vector<Real>& r, const std::vector<int>& s,
                       const std::vector<int>& t) {
  dur_check(N, x);
  if (q.size() != static_cast<std::size_t>(N) || r.size() != q.size() ||
      s.size() != q.size() || t.size() != q.size())
    throw StructuralError("dur_qr_state: q, r, s, t must have length N");
  Real qr_sum = 0;
  for (Index k = 0; k < N; ++k) {
    if (q[k] < 0 || r[k] < 0)
      throw StructuralError("dur_qr_state: q, r must be nonnegative");
    qr_sum += q[k] + r[k];
  }
  if (std::abs(qr_sum - 1) > 1e-12)
    throw StructuralError("dur_qr_state: q + r weights must sum to 1");
  Dims dims(N, 2);
  Vector psi = std::sqrt(x) * dur_ghz(dims, N);
  for (Index k = 0; k < N; ++k) {
    psi += std::sqrt(1 - x) * (static_cast<Real>(s[k]) * std::sqrt(q[k]) *
                                   dur_flip_state(dims, N, k, false) +
                               static_cast<Real>(t[k]) * std::sqrt(r[k]) *
                                   dur_flip_state(dims, N, k, true));
  }
  psi /= psi.norm();
  return PureState(psi, dims);
}

DensityMatrix make_state(const StateFamily& f) {
  switch (f.tag) {
    case FamilyTag::Example1: return example1(f.param("lambda"));
    case FamilyTag::Example2: return example2(f.param("A"), f.param("G"));
    case FamilyTag::PureAlpha: return pure_alpha(f.param("alpha"));
    case FamilyTag::TwoParam2xN:
      return two_param_2xn(f.iparam("n"), f.param("alpha"), f.param("gamma"));
    case FamilyTag::MEMS:
      return mems(f.iparam("n"), {f.param("lambda1"), f.param("lambda2"),
                                  f.param("lambda3"), f.param("lambda4")});
    case FamilyTag::Isotropic: return isotropic(f.iparam("d"), f.param("alpha"));
    case FamilyTag::GenIsotropic:
      return gen_isotropic(f.iparam("n"), f.iparam("d"), f.param("alpha"));
    case FamilyTag::Smolin: return smolin();
    case FamilyTag::Dur: return dur(f.iparam("N"), f.param("x"));
  }
  throw StructuralError("make_state: unknown family tag");
}

std::optional<DensityMatrix> closest_sep(const StateFamily& f) {
  switch (f.tag) {
    case FamilyTag::Example1: return example1_closest_sep(f.param("lambda"));
    case FamilyTag::Example2: return example2_closest_sep(f.param("A"));
    case FamilyTag::PureAlpha: return std::nullopt;  // candidates only
    case FamilyTag::TwoParam2xN:
      return two_param_closest_sep(f.iparam("n"), f.param("alpha"),
                                   f.param("gamma"));
    case FamilyTag::MEMS:
      return mems_closest_sep(f.iparam("n"),
                              {f.param("lambda1"), f.param("lambda2"),
                               f.param("lambda3"), f.param("lambda4")});
    case FamilyTag::Isotropic: return isotropic_closest_sep(f.iparam("d"));
    case FamilyTag::GenIsotropic:
      return gen_isotropic_closest_sep(f.iparam("n"), f.iparam("d"));
    case FamilyTag::Smolin: return smolin_conjectured_sep();
    case FamilyTag::Dur:
      return dur_conjectured_sep(f.iparam("N"), f.param("x"));
  }
  throw StructuralError("closest_sep: unknown family tag");
}

}  // namespace families
}  // namespace rgme
