#include <random>

#include "doctest.h"
#include "llv/errors.hpp"
#include "llv/algebra_io.hpp"
#include "llv/frobenius.hpp"
#include "llv/graded.hpp"
#include "llv/models.hpp"
#include "llv/suites.hpp"

using namespace llv;

namespace {

GradedFrobeniusAlgebra fixture_algebra() {
  return load_algebra_file(std::string(LLV_DATA_DIR) + "/k3type-r3.json");
}

Vec random_class(std::size_t dim, std::mt19937_64& rng) {
  Vec v = zero_vec(dim);
  for (auto& c : v) c = Rational(static_cast<long>(rng() % 9) - 4);
  return v;
}

}  // namespace

TEST_CASE("graded space bookkeeping") {
  const GradedVectorSpace V(2, {{0, 1}, {2, 3}, {4, 1}});
  CHECK(V.total_dim() == 5);
  CHECK(V.dim(2) == 3);
  CHECK(V.dim(1) == 0);
  CHECK(V.internal_degree(0) == -2);
  CHECK(V.internal_degree(4) == 2);
  CHECK(V.offset(0) == 0);
  CHECK(V.offset(2) == 1);
  CHECK(V.offset(4) == 4);
  CHECK(V.top_degree() == 4);
  CHECK(V.has_degree(2));
  CHECK_FALSE(V.has_degree(6));
  CHECK_THROWS_AS(GradedVectorSpace(0, {{2, 1}, {0, 1}}), ValidationError);
}

TEST_CASE("graded operators compose with additive degree") {
  const GradedVectorSpace V(2, {{0, 1}, {2, 3}, {4, 1}});
  GradedOperator up(V, 2);
  SparseMatrix to2(3, 1);
  to2.set(0, 0, Rational(1));
  up.set_block(0, to2);
  SparseMatrix to4(1, 3);
  to4.set(0, 1, Rational(5));
  up.set_block(2, to4);

  const GradedOperator square = up.compose(up);
  CHECK(square.degree() == 4);
  const Vec image = square.apply_component(0, Vec{Rational(1)});
  CHECK(image == Vec{Rational(0)});

  const GradedOperator id = identity_operator(V);
  CHECK(id.compose(up) == up);
  CHECK(up.bracket(up).is_zero());
  CHECK((up + up) == up * Rational(2));
  CHECK(up.power(0) == id);
  CHECK_THROWS_AS(up.set_block(0, SparseMatrix(2, 2)), WrongDegree);
}

TEST_CASE("flatten scheme round-trips operators") {
  const GradedVectorSpace V(2, {{0, 1}, {2, 3}, {4, 1}});
  const FlattenScheme scheme(V, -2);
  GradedOperator down(V, -2);
  SparseMatrix drop(1, 3);
  drop.set(0, 2, Rational(7));
  down.set_block(2, drop);
  SparseMatrix collapse(3, 1);
  collapse.set(1, 0, Rational(-2));
  down.set_block(4, collapse);

  const SparseVec flat = scheme.flatten(down);
  CHECK(scheme.flat_dim() == 6);
  CHECK(scheme.unflatten(flat) == down);
  CHECK(scheme.has_block(2));
  CHECK_FALSE(scheme.has_block(0));
  CHECK_THROWS_AS(scheme.coordinate(0, 0, 0), WrongDegree);
}

TEST_CASE("h operator eigenvalues follow the grading") {
  const GradedFrobeniusAlgebra k3 = fixture_algebra();
  const GradedOperator h = h_operator(k3);
  CHECK(h.apply_component(0, Vec{Rational(1)}) == Vec{Rational(-2)});
  CHECK(h.apply_component(4, Vec{Rational(1)}) == Vec{Rational(2)});
  const Vec mid = h.apply_component(2, Vec{Rational(1), Rational(1), Rational(1)});
  CHECK(is_zero(mid));

  const QuaternionicExteriorModel quaternion = exterior_quaternion_model();
  const GradedOperator hq = h_operator(quaternion.algebra);
  for (int k = 0; k <= 4; ++k) {
    const std::size_t d = quaternion.algebra.space().dim(k);
    Vec ones(d, Rational(1));
    const Vec image = hq.apply_component(k, ones);
    for (const Rational& c : image) CHECK(c == Rational(k - 2));
  }
}

TEST_CASE("cup operators on the k3-type model") {
  const GradedFrobeniusAlgebra k3 = fixture_algebra();
  const auto q = derive_quadratic_form(k3);
  REQUIRE(q.has_value());

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Vec a = random_class(3, rng);
    const Vec b = random_class(3, rng);
    const GradedOperator ea = cup_operator(k3, a);
    const GradedOperator eb = cup_operator(k3, b);

    CHECK(ea.apply_component(0, Vec{Rational(1)}) == a);
    CHECK(ea.apply_component(2, b) == Vec{q->q(a, b)});
    CHECK(ea.apply_component(4, Vec{Rational(1)}) == Vec{});

    Vec sum = a;
    for (std::size_t i = 0; i < 3; ++i) sum[i] += b[i];
    CHECK(cup_operator(k3, sum) == ea + eb);
    CHECK(ea.compose(eb) == eb.compose(ea));

    const GradedOperator h = h_operator(k3);
    CHECK(h.bracket(ea) == ea * Rational(2));
  }
  CHECK(cup_operator(k3, zero_vec(3)).is_zero());
}

TEST_CASE("phi form signs on the k3-type model") {
  const GradedFrobeniusAlgebra k3 = fixture_algebra();
  const PhiForm phi = phi_form(k3);
  const GradedVectorSpace& V = k3.space();

  CHECK(phi.matrix.at(V.offset(0), V.offset(4)) == Rational(-1));

  const auto q = derive_quadratic_form(k3);
  REQUIRE(q.has_value());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(phi.matrix.at(V.offset(2) + i, V.offset(2) + j) == q->gram().at(i, j));

  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(phi.matrix.at(V.offset(0), V.offset(2) + i) == Rational(0));
    CHECK(phi.matrix.at(V.offset(2) + i, V.offset(4)) == Rational(0));
  }
}

TEST_CASE("algebra validation catches broken structures") {
  const GradedFrobeniusAlgebra k3 = fixture_algebra();
  CHECK(validate_algebra(k3).ok);

  GradedFrobeniusAlgebra no_top("broken", GradedVectorSpace(2, {{0, 1}, {2, 2}}),
                                Vec{Rational(1)}, Vec{Rational(0), Rational(0)});
  no_top.set_basis_product(0, 0, 0, 0, Vec{Rational(1)});
  const ValidationReport bad = validate_algebra(no_top);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.violations.empty());
}

TEST_CASE("fixture equals the constructed model and round-trips") {
  const GradedFrobeniusAlgebra loaded = fixture_algebra();
  const GradedFrobeniusAlgebra built = frobenius_from_quadratic(standard_form(3));
  CHECK(loaded == built);

  const std::string saved = save_algebra(loaded);
  const GradedFrobeniusAlgebra again = load_algebra(saved);
  CHECK(again == loaded);

  const QuaternionicExteriorModel quaternion = exterior_quaternion_model();
  const GradedFrobeniusAlgebra round =
      load_algebra(save_algebra(quaternion.algebra));
  CHECK(round == quaternion.algebra);
}

TEST_CASE("loader rejects malformed documents") {
  CHECK_THROWS_AS(load_algebra("not json"), SchemaError);
  CHECK_THROWS_AS(load_algebra("[1,2]"), SchemaError);
  CHECK_THROWS_AS(load_algebra(R"({"name":"x","shift":0})"), SchemaError);
  CHECK_THROWS_AS(load_algebra(R"({"name":"x","shift":0,
    "components":[{"degree":2,"dim":1},{"degree":0,"dim":1}],
    "unit":["1"],"integral":["1"]})"),
                  SchemaError);
  CHECK_THROWS_AS(load_algebra(R"({"name":"x","shift":0,
    "components":[{"degree":0,"dim":1}],
    "unit":["1","1"],"integral":["1"]})"),
                  SchemaError);
}
