#include <doctest.h>

#include <random>

#include "rgme/closed_forms.hpp"
#include "rgme/linalg.hpp"
#include "rgme/measures.hpp"

using namespace rgme;

namespace {

DensityMatrix random_state(const Dims& dims, std::mt19937_64& rng) {
  std::normal_distribution<Real> gauss(0, 1);
  Index d = dims_product(dims);
  Matrix g(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  m = ((m + m.adjoint()) / 2.0).eval();
  return DensityMatrix(std::move(m), dims);
}

Matrix random_unitary(Index d, std::mt19937_64& rng) {
  std::normal_distribution<Real> gauss(0, 1);
  Matrix g(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  return q;
}

}  // namespace

TEST_CASE("fidelity basics") {
  DensityMatrix rho = families::isotropic(2, 0.7);
  CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-12));

  // Pure rho: F = sqrt(<psi|sigma|psi>).
  DensityMatrix bell = families::example1(1.0);
  DensityMatrix mixed = families::isotropic(2, 0.0);
  CHECK(fidelity(bell, mixed) == doctest::Approx(0.5).epsilon(1e-10));

  // Bell state against its closest separable state: F = 1/sqrt(2).
  CHECK(fidelity(families::example1(1.0), families::example1_closest_sep(1.0)) ==
        doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));

  CHECK_THROWS_AS(fidelity(bell, families::isotropic(3, 0.0)), StructuralError);
}

TEST_CASE("fidelity is symmetric on random pairs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    DensityMatrix a = random_state({2, 3}, rng);
    DensityMatrix b = random_state({2, 3}, rng);
    CHECK(std::abs(fidelity(a, b) - fidelity(b, a)) <= 1e-9);
  }
}

TEST_CASE("fidelity is invariant under local unitaries") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 12; ++trial) {
    DensityMatrix a = random_state({2, 3}, rng);
    DensityMatrix b = random_state({2, 3}, rng);
    Matrix u = kron(random_unitary(2, rng), random_unitary(3, rng));
    DensityMatrix ua(u * a.matrix() * u.adjoint(), Dims{2, 3});
    DensityMatrix ub(u * b.matrix() * u.adjoint(), Dims{2, 3});
    CHECK(std::abs(fidelity(ua, ub) - fidelity(a, b)) <= 1e-9);
  }
}

TEST_CASE("fidelity does not decrease under local channels") {
  std::mt19937_64 rng(41);
  std::normal_distribution<Real> gauss(0, 1);
  for (int trial = 0; trial < 10; ++trial) {
    DensityMatrix a = random_state({2, 2}, rng);
    DensityMatrix b = random_state({2, 2}, rng);
    // Random 2-outcome Kraus set on the first qubit from a Haar isometry.
    Matrix g(4, 2);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 2; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix v = Matrix(qr.householderQ()).leftCols(2);
    std::array<Matrix, 2> kraus = {v.topRows(2), v.bottomRows(2)};
    Matrix id = Matrix::Identity(2, 2);
    Matrix ma = Matrix::Zero(4, 4), mb = Matrix::Zero(4, 4);
    for (const Matrix& k : kraus) {
      Matrix lifted = kron(k, id);
      ma += lifted * a.matrix() * lifted.adjoint();
      mb += lifted * b.matrix() * lifted.adjoint();
    }
    DensityMatrix ca(((ma + ma.adjoint()) / 2).eval(), Dims{2, 2});
    DensityMatrix cb(((mb + mb.adjoint()) / 2).eval(), Dims{2, 2});
    CHECK(fidelity(ca, cb) >= fidelity(a, b) - 1e-8);
  }
}

TEST_CASE("bures_sq") {
  DensityMatrix rho = families::isotropic(2, 0.4);
  CHECK(bures_sq(rho, rho) == doctest::Approx(0.0).epsilon(1e-12));

  DensityMatrix p0 = families::example1(0.0);  // |01>
  Vector v10 = families::basis_vector({2, 2}, {1, 0});
  DensityMatrix p1 = PureState(v10, {2, 2}).projector();
  CHECK(bures_sq(p0, p1) == doctest::Approx(1.0).epsilon(1e-12));

  // Pure against maximally mixed in D=4: 1 - 1/4.
  CHECK(bures_sq(families::example1(1.0), families::isotropic(2, 0.0)) ==
        doctest::Approx(0.75).epsilon(1e-10));
}

TEST_CASE("von Neumann entropy and trace distance") {
  CHECK(von_neumann_entropy(families::example1(1.0)) ==
        doctest::Approx(0.0).epsilon(1e-10));
  CHECK(von_neumann_entropy(families::isotropic(2, 0.0)) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(families::smolin()) == doctest::Approx(2.0));

  DensityMatrix rho = families::isotropic(2, 0.4);
  CHECK(trace_distance(rho, rho) == doctest::Approx(0.0));
  // I/4 against a pure projector: trace distance 3/4.
  CHECK(trace_distance(families::isotropic(2, 0.0), families::example1(1.0)) ==
        doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("relative entropy examples") {
  DensityMatrix rho = families::isotropic(2, 0.5);
  CHECK(relative_entropy(rho, rho) == doctest::Approx(0.0).epsilon(1e-10));

  // Example 1: RE to the closest separable state has the expected closed form.
  for (Real lambda : {0.2, 0.5, 0.8, 1.0}) {
    Real re = relative_entropy(families::example1(lambda),
                               families::example1_closest_sep(lambda));
    CHECK(re == doctest::Approx(closed_forms::example1_re(lambda)).epsilon(1e-10));
  }

  // Pure alpha state against the diagonal candidate: binary entropy.
  for (Real alpha : {0.3, 0.6, 0.9}) {
    Real re = relative_entropy(families::pure_alpha(alpha),
                               families::pure_alpha_sigma_re(alpha));
    CHECK(re == doctest::Approx(closed_forms::pure_alpha_re(alpha)).epsilon(1e-10));
  }

  // Support violation: pure state against an orthogonal projector.
  DensityMatrix p0 = families::example1(0.0);
  Vector v10 = families::basis_vector({2, 2}, {1, 0});
  DensityMatrix p1 = PureState(v10, {2, 2}).projector();
  CHECK(std::isinf(relative_entropy(p0, p1)));
}

TEST_CASE("concurrence") {
  CHECK(concurrence(families::example1(1.0)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(concurrence(families::example1(0.0)) == doctest::Approx(0.0).epsilon(1e-10));
  for (Real lambda : {0.25, 0.5, 0.75})
    CHECK(concurrence(families::example1(lambda)) ==
          doctest::Approx(lambda).epsilon(1e-10));
  // Example 2 has concurrence G.
  for (Real g : {0.2, 0.6}) {
    CHECK(concurrence(families::example2(0.4, g)) ==
          doctest::Approx(g).epsilon(1e-10));
  }
  CHECK_THROWS_AS(concurrence(families::isotropic(3, 0.5)), StructuralError);
}

TEST_CASE("gme_two_qubit matches the closed-form curves") {
  // sqrt(1 - C^2) has infinite slope at C = 1, so the maximally entangled
  // endpoints only resolve to ~sqrt(eps); interior points are exact.
  for (Real lambda : {0.0, 0.3, 0.7})
    CHECK(gme_two_qubit(families::example1(lambda)) ==
          doctest::Approx(closed_forms::example1_gme(lambda)).epsilon(1e-10));
  CHECK(gme_two_qubit(families::example1(1.0)) ==
        doctest::Approx(0.5).epsilon(1e-7));
  for (Real g : {0.0, 0.5})
    CHECK(gme_two_qubit(families::example2(0.5, g)) ==
          doctest::Approx(closed_forms::example2_gme(g)).epsilon(1e-10));
  CHECK(gme_two_qubit(families::example2(0.5, 1.0)) ==
        doctest::Approx(0.5).epsilon(1e-7));
  CHECK(gme_two_qubit(families::example2_closest_sep(0.3)) ==
        doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("negativity") {
  CHECK(negativity(families::example1(1.0), 1) == doctest::Approx(1.0).epsilon(1e-10));
  // PPT states have zero negativity.
  CHECK(negativity(families::example1_closest_sep(0.7), 1) ==
        doctest::Approx(0.0).epsilon(1e-10));
  // Example 2: negativity equals G.
  CHECK(negativity(families::example2(0.3, 0.5), 1) ==
        doctest::Approx(0.5).epsilon(1e-10));
  // Two-parameter closed form, Eq-derived: max(0, gamma - 3 beta).
  for (Real gamma : {0.55, 0.7, 0.9}) {
    Real alpha = 0.05;
    Real numeric = negativity(families::two_param_2xn(3, alpha, gamma), 1);
    CHECK(numeric ==
          doctest::Approx(closed_forms::two_param_negativity(3, alpha, gamma))
              .epsilon(1e-10));
  }
}

TEST_CASE("gme_pure") {
  // Product state.
  Vector v = families::basis_vector({2, 2}, {0, 1});
  MeasureReport product = gme_pure(PureState(v, {2, 2}));
  CHECK(product.value == doctest::Approx(0.0).epsilon(1e-10));

  // Bell state: 1/2.
  families::BellBasis bell = families::bell_basis(2);
  MeasureReport bell_report = gme_pure(bell.phi_plus);
  CHECK(bell_report.value == doctest::Approx(0.5).epsilon(1e-9));

  // alpha family: piecewise max(alpha^2, 1-alpha^2) based value.
  for (Real alpha : {0.3, 0.6, 0.9}) {
    MeasureReport r = gme_pure(families::pure_alpha_state(alpha));
    CHECK(r.value ==
          doctest::Approx(closed_forms::pure_alpha_gme(alpha)).epsilon(1e-9));
  }

  // GHZ: 1/2; witness is a product state with the right overlap.
  DensityMatrix ghz = families::gen_isotropic(3, 2, 1.0);
  Vector top = eig_hermitian(ghz.matrix()).vectors.col(7);
  MeasureReport g = gme_pure(PureState(top / top.norm(), {2, 2, 2}));
  CHECK(g.value == doctest::Approx(0.5).epsilon(1e-9));
  REQUIRE(g.witness_pure.has_value());
  Complex overlap =
      g.witness_pure->amplitudes().adjoint() * (top / top.norm());
  CHECK(std::abs(overlap) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-8));
}

TEST_CASE("gme_pure is deterministic and monotone per sweep") {
  std::mt19937_64 rng(55);
  std::normal_distribution<Real> gauss(0, 1);
  Vector v(6);
  for (Index i = 0; i < 6; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  v /= v.norm();
  PureState psi(v, {2, 3});
  GmeOptions opts;
  opts.seed = 123;
  MeasureReport a = gme_pure(psi, opts);
  MeasureReport b = gme_pure(psi, opts);
  CHECK(a.value == b.value);

  // Monotone convergence of the alternating overlap updates.
  std::vector<Vector> factors = {Vector(2), Vector(3)};
  factors[0] << Complex(1, 0), Complex(0, 0);
  factors[1] << Complex(0.6, 0), Complex(0.8, 0), Complex(0, 0);
  Real prev = 0;
  for (int sweeps = 1; sweeps <= 6; ++sweeps) {
    std::vector<Vector> f = factors;
    Real lambda = best_product_approx(v, {2, 3}, f, sweeps, 0.0);
    CHECK(lambda >= prev - 1e-12);
    prev = lambda;
  }
}
