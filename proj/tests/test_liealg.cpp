#include <map>

#include "doctest.h"
#include "llv/errors.hpp"
#include "llv/lefschetz.hpp"
#include "llv/liealg.hpp"
#include "llv/models.hpp"
#include "llv/suites.hpp"

using namespace llv;

namespace {

Sl2Triple model_triple(const GradedFrobeniusAlgebra& A, const Vec& a) {
  return sl2_triple(A, a);
}

}  // namespace

TEST_CASE("closure of a single sl2 triple has dimension three") {
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(standard_form(3));
  const Sl2Triple t = model_triple(A, Vec{Rational(1), Rational(1), Rational(0)});

  const LieOperatorAlgebra g = lie_closure({t.e, t.h, t.f});
  CHECK(g.dim() == 3);
  CHECK(g.degrees() == std::vector<int>{-2, 0, 2});
  CHECK(g.degree_dim(-2) == 1);
  CHECK(g.degree_dim(0) == 1);
  CHECK(g.degree_dim(2) == 1);
  CHECK(g.contains(t.e * Rational(5)));
  CHECK(g.contains(t.h * Rational(-7)));
  CHECK(g.contains(t.f + t.f));
  CHECK_FALSE(g.contains(identity_operator(A.space())));

  const auto coords = g.coordinates_in_degree(t.e * Rational(3));
  REQUIRE(coords.has_value());
  CHECK(coords->size() == 1);

  LieOperatorAlgebra copy = g;
  CHECK_FALSE(copy.insert(t.f));
  CHECK(copy.dim() == 3);
}

TEST_CASE("degree pieces recompose the closure") {
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(standard_form(4));
  const LlvClosure closure = llv_closure(A);
  const std::map<int, Subspace> pieces = degree_pieces(closure.algebra);

  std::size_t total = 0;
  for (const auto& [degree, piece] : pieces) {
    CHECK(piece.dim() == closure.algebra.degree_dim(degree));
    total += piece.dim();
  }
  CHECK(total == closure.algebra.dim());
}

TEST_CASE("closure dimensions follow the orthogonal-algebra count") {
  for (int r = 3; r <= 6; ++r) {
    const GradedFrobeniusAlgebra A = frobenius_from_quadratic(standard_form(r));
    const LlvClosure closure = llv_closure(A);
    const std::size_t n = static_cast<std::size_t>(r) + 2;
    CHECK(closure.algebra.dim() == n * (n - 1) / 2);
    CHECK(closure.algebra.degree_dim(-2) == static_cast<std::size_t>(r));
    CHECK(closure.algebra.degree_dim(2) == static_cast<std::size_t>(r));
  }
}

TEST_CASE("derived subalgebra of a semisimple closure is itself") {
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(standard_form(3));
  const LlvClosure closure = llv_closure(A);
  const LieOperatorAlgebra derived = derived_subalgebra(closure.algebra);
  CHECK(derived.dim() == closure.algebra.dim());
}

TEST_CASE("degree-0 piece splits as derived part plus the grading line") {
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(standard_form(4));
  const LlvClosure closure = llv_closure(A);
  const G0Decomposition g0 = decompose_g0(closure.algebra);

  CHECK(g0.h == h_operator(A));
  CHECK(g0.g0prime.dim() + 1 == closure.algebra.degree_dim(0));
  CHECK_FALSE(g0.g0prime.contains(g0.h));

  for (const GradedOperator& u : g0.g0prime.basis(0)) {
    CHECK(derivation_check(u, A));
  }
  CHECK_FALSE(derivation_check(g0.h, A));
  CHECK_FALSE(derivation_check(cup_operator(A, Vec{Rational(1), Rational(1), Rational(0),
                                                   Rational(0)}),
                               A));
}

TEST_CASE("killing form of an sl2 closure") {
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(standard_form(3));
  const Sl2Triple t = model_triple(A, Vec{Rational(1), Rational(1), Rational(0)});
  const KillingForm killing = killing_form(lie_closure({t.e, t.h, t.f}));
  CHECK(killing.nondegenerate);
  CHECK(killing.signature == Inertia{2, 1, 0});
}

TEST_CASE("skew algebra bases and their killing data") {
  RationalMatrix euclid = RationalMatrix::identity(3);
  const auto so3 = skew_algebra_basis(euclid);
  CHECK(so3.size() == 3);
  const KillingForm k3 = matrix_killing_form(so3);
  CHECK(k3.nondegenerate);
  CHECK(k3.signature == Inertia{0, 3, 0});

  RationalMatrix lorentz = RationalMatrix::identity(3);
  lorentz.at(2, 2) = Rational(-1);
  const auto so21 = skew_algebra_basis(lorentz);
  CHECK(so21.size() == 3);
  CHECK(matrix_killing_form(so21).signature == Inertia{2, 1, 0});

  std::vector<SparseMatrix> sparse_so3;
  for (const RationalMatrix& m : so3) {
    CHECK((m.transpose() * euclid + euclid * m).is_zero());
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    sparse_so3.push_back(SparseMatrix::from_dense(rows, m.cols()));
  }
  CHECK(infinitesimal_invariance_check(sparse_so3, euclid));
}

TEST_CASE("closure preserves the signed poincare pairing") {
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(standard_form(4));
  const LlvClosure closure = llv_closure(A);
  const PhiForm phi = phi_form(A);
  CHECK(infinitesimal_invariance_check(closure.algebra.full_basis(), phi.matrix));
}

TEST_CASE("restriction to degree 2 is injective for the derived part") {
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(standard_form(5));
  const LlvClosure closure = llv_closure(A);
  const G0Decomposition g0 = decompose_g0(closure.algebra);
  CHECK(restriction_injectivity(g0.g0prime, 2));
  // The grading operator acts as zero on the weight-zero middle degree, so the
  // full closure never restricts injectively to a single degree.
  CHECK_FALSE(restriction_injectivity(closure.algebra, 2));
}

TEST_CASE("mukai extension appends a hyperbolic block") {
  const QuadraticSpace q = standard_form(3);
  const QuadraticSpace extended = mukai_extend(q);
  CHECK(extended.dim() == 5);
  const Inertia base = q.signature();
  const Inertia big = extended.signature();
  CHECK(big.positives == base.positives + 1);
  CHECK(big.negatives == base.negatives + 1);
  CHECK(big.zeros == base.zeros);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(extended.gram().at(i, j) == q.gram().at(i, j));
  CHECK(extended.gram().at(3, 4) == Rational(1));
  CHECK(extended.gram().at(3, 3) == Rational(0));
}

TEST_CASE("wedge-square map lands in the skew algebra") {
  const QuadraticSpace q = standard_form(4);
  const Vec x{Rational(1), Rational(0), Rational(2), Rational(0)};
  const Vec y{Rational(0), Rational(1), Rational(0), Rational(-1)};
  const RationalMatrix m = wedge2_so_map(q, x, y);
  CHECK((m.transpose() * q.gram() + q.gram() * m).is_zero());

  for (std::size_t j = 0; j < 4; ++j) {
    Vec v = zero_vec(4);
    v[j] = Rational(1);
    Vec expected = zero_vec(4);
    const Rational cx = q.q(x, v) / 2;
    const Rational cy = q.q(y, v) / 2;
    for (std::size_t i = 0; i < 4; ++i) expected[i] = cx * y[i] - cy * x[i];
    CHECK(m.apply(v) == expected);
  }
}

TEST_CASE("the spanning family is lefschetz and spans") {
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(standard_form(6));
  const std::vector<Vec> family = lefschetz_spanning_family(A);

  EchelonBasis span(6);
  for (const Vec& a : family) {
    CHECK(lefschetz_check(A.space(), cup_operator(A, a)));
    span.insert(SparseVec::from_dense(a));
  }
  CHECK(span.dim() == 6);

  const LlvClosure closure = llv_closure(A);
  CHECK(closure.family.size() == closure.triples.size());
  for (const Sl2Triple& t : closure.triples) CHECK(t.relations_hold());
}

TEST_CASE("lowering operators of a family commute") {
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(standard_form(5));
  const LlvClosure closure = llv_closure(A);
  for (std::size_t i = 0; i < closure.triples.size(); ++i)
    for (std::size_t j = i + 1; j < closure.triples.size(); ++j)
      CHECK(closure.triples[i].f.bracket(closure.triples[j].f).is_zero());
}
