#include <random>

#include "doctest.h"
#include "llv/errors.hpp"
#include "llv/lefschetz.hpp"
#include "llv/models.hpp"
#include "llv/suites.hpp"

using namespace llv;

namespace {

/// Hand-solved dual on the k3-type model: for q(a,a) = c != 0,
/// f_a(1) = 0, f_a(b) = (2/c) q(a,b) 1, f_a(t) = (2/c) a.
GradedOperator closed_form_dual(const GradedFrobeniusAlgebra& A, const QuadraticSpace& q,
                                const Vec& a) {
  const Rational c = q.q(a);
  const GradedVectorSpace& V = A.space();
  GradedOperator f(V, -2);
  const std::size_t r = V.dim(2);

  SparseMatrix middle(1, r);
  for (std::size_t j = 0; j < r; ++j) {
    Vec b = zero_vec(r);
    b[j] = Rational(1);
    middle.set(0, j, Rational(2) / c * q.q(a, b));
  }
  f.set_block(2, middle);

  SparseMatrix top(r, 1);
  for (std::size_t i = 0; i < r; ++i) top.set(i, 0, Rational(2) / c * a[i]);
  f.set_block(4, top);
  return f;
}

Vec random_class(std::size_t dim, std::mt19937_64& rng) {
  Vec v = zero_vec(dim);
  for (auto& c : v) c = Rational(static_cast<long>(rng() % 9) - 4);
  return v;
}

}  // namespace

TEST_CASE("lefschetz check separates isotropic classes on the k3-type model") {
  const QuadraticSpace q = standard_form(4);
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(q);

  for (long x0 = -2; x0 <= 2; ++x0)
    for (long x1 = -2; x1 <= 2; ++x1)
      for (long x2 = -2; x2 <= 2; ++x2)
        for (long x3 = -2; x3 <= 2; ++x3) {
          const Vec a{Rational(x0), Rational(x1), Rational(x2), Rational(x3)};
          if (is_zero(a)) continue;
          const bool lefschetz = lefschetz_check(A.space(), cup_operator(A, a));
          CHECK(lefschetz == (q.q(a) != 0));
        }
}

TEST_CASE("zero operator is not lefschetz") {
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(standard_form(3));
  CHECK_FALSE(lefschetz_check(A.space(), cup_operator(A, zero_vec(3))));
}

TEST_CASE("jacobson--morozov dual matches the closed form") {
  const QuadraticSpace q = standard_form(5);
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(q);
  std::mt19937_64 rng(29);

  int solved = 0;
  while (solved < 25) {
    const Vec a = random_class(5, rng);
    if (q.q(a) == 0) continue;
    ++solved;
    const GradedOperator e = cup_operator(A, a);
    const GradedOperator f = jacobson_morozov_dual(A.space(), e);
    CHECK(f == closed_form_dual(A, q, a));
    CHECK(e.bracket(f) == h_operator(A));
  }
}

TEST_CASE("worked dual for q(a,a) = 2") {
  const QuadraticSpace q = standard_form(3);
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(q);
  const Vec a{Rational(1), Rational(1), Rational(0)};
  REQUIRE(q.q(a) == Rational(2));

  const GradedOperator f = jacobson_morozov_dual(A.space(), cup_operator(A, a));
  CHECK(f.apply_component(4, Vec{Rational(1)}) == a);
  for (std::size_t j = 0; j < 3; ++j) {
    Vec b = zero_vec(3);
    b[j] = Rational(1);
    CHECK(f.apply_component(2, b) == Vec{q.q(a, b)});
  }
  CHECK(f.block(0) == nullptr);
}

TEST_CASE("isotropic classes are rejected") {
  const QuadraticSpace q = standard_form(4);
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(q);

  for (long s = 1; s <= 6; ++s)
    for (std::size_t slot = 0; slot < 2; ++slot) {
      Vec a = zero_vec(4);
      a[slot] = Rational(s);  // either axis of the hyperbolic plane
      REQUIRE(q.q(a) == Rational(0));
      CHECK_THROWS_AS(jacobson_morozov_dual(A.space(), cup_operator(A, a)), NotLefschetz);
    }
}

TEST_CASE("sl2 triples satisfy all three relations") {
  const QuadraticSpace q = standard_form(4);
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(q);
  std::mt19937_64 rng(37);

  int produced = 0;
  while (produced < 15) {
    const Vec a = random_class(4, rng);
    if (q.q(a) == 0) continue;
    ++produced;
    const Sl2Triple t = sl2_triple(A, a);
    CHECK(t.relations_hold());
    CHECK(t.h == h_operator(A));
  }
}

TEST_CASE("dual scales inversely") {
  const QuadraticSpace q = standard_form(4);
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(q);
  const Vec a{Rational(1), Rational(2), Rational(1), Rational(-1)};
  REQUIRE(q.q(a) != 0);
  Vec scaled = a;
  for (auto& c : scaled) c *= Rational(3);

  const Sl2Triple t = sl2_triple(A, a);
  const Sl2Triple ts = sl2_triple(A, scaled);
  CHECK(ts.e == t.e * Rational(3));
  CHECK(ts.f == t.f * Rational(1, 3));
}

TEST_CASE("perturbing the dual breaks the bracket") {
  const QuadraticSpace q = standard_form(3);
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(q);
  const Vec a{Rational(1), Rational(1), Rational(1)};
  const GradedOperator e = cup_operator(A, a);
  const GradedOperator f = jacobson_morozov_dual(A.space(), e);
  const GradedOperator h = h_operator(A);

  const FlattenScheme scheme(A.space(), -2);
  for (std::size_t i = 0; i < scheme.flat_dim(); ++i) {
    const GradedOperator perturbed = f + scheme.unflatten(SparseVec::unit(i));
    CHECK_FALSE(e.bracket(perturbed) == h);
  }
}

TEST_CASE("metric triples agree with the algebraic duals") {
  const QuaternionicExteriorModel model = exterior_quaternion_model();
  for (const Imaginary lambda : {Imaginary::I, Imaginary::J, Imaginary::K}) {
    const Sl2Triple metric = metric_triple(model, lambda);
    CHECK(metric.relations_hold());
    const GradedOperator f =
        jacobson_morozov_dual(model.algebra.space(), metric.e);
    CHECK(f == metric.f);
  }
}
