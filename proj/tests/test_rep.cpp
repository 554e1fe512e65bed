#include "doctest.h"
#include "llv/errors.hpp"
#include "llv/lefschetz.hpp"
#include "llv/liealg.hpp"
#include "llv/models.hpp"
#include "llv/rep.hpp"
#include "llv/suites.hpp"
#include "llv/verbitsky.hpp"

using namespace llv;

TEST_CASE("primitive subspace of the k3-type model is the unit line") {
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(standard_form(4));
  const LlvClosure closure = llv_closure(A);
  const Subspace prim = prim_subspace(closure.algebra);
  CHECK(prim.dim() == 1);
  Vec unit_line = zero_vec(A.space().total_dim());
  unit_line[A.space().offset(0)] = Rational(1);
  CHECK(prim.contains(unit_line));
}

TEST_CASE("primitive subspace of a verbitsky component is the bottom line") {
  const VerbitskyComponent A = verbitsky_component(standard_form(5), 2);
  const LlvClosure closure = llv_closure(A.algebra());
  const Subspace prim = prim_subspace(closure.algebra);
  CHECK(prim.dim() == 1);
  Vec bottom = zero_vec(A.algebra().space().total_dim());
  bottom[0] = Rational(1);
  CHECK(prim.contains(bottom));
}

TEST_CASE("without lowering operators everything is primitive") {
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(standard_form(3));
  const LieOperatorAlgebra g = lie_closure({h_operator(A)});
  CHECK(g.degree_dim(-2) == 0);
  CHECK(prim_subspace(g).dim() == A.space().total_dim());
}

TEST_CASE("submodules grow from seeds") {
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(standard_form(4));
  const LlvClosure closure = llv_closure(A);
  const std::size_t total = A.space().total_dim();

  Vec unit_line = zero_vec(total);
  unit_line[A.space().offset(0)] = Rational(1);
  CHECK(submodule_generated(closure.algebra, {unit_line}).dim() == total);
  CHECK(submodule_generated(closure.algebra, {}).dim() == 0);
}

TEST_CASE("degree-2 subring of the k3-type model is everything") {
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(standard_form(5));
  const std::map<int, Subspace> ring = verbitsky_subring(A);
  REQUIRE(ring.size() == 3);
  CHECK(ring.at(0).dim() == 1);
  CHECK(ring.at(2).dim() == 5);
  CHECK(ring.at(4).dim() == 1);
}

TEST_CASE("degree-2 subring of the exterior model misses the odd part") {
  const QuaternionicExteriorModel model = exterior_quaternion_model();
  const std::map<int, Subspace> ring = verbitsky_subring(model.algebra);
  const std::size_t expected[5] = {1, 0, 6, 0, 1};
  for (int k = 0; k <= 4; ++k) CHECK(ring.at(k).dim() == expected[k]);
}

TEST_CASE("degree-2 subring of a verbitsky component is everything") {
  const VerbitskyComponent A = verbitsky_component(standard_form(4), 2);
  const std::map<int, Subspace> ring = verbitsky_subring(A.algebra());
  const std::vector<std::size_t> dims = A.dims();
  for (int k = 0; k <= 4; ++k)
    CHECK(ring.at(2 * k).dim() == dims[static_cast<std::size_t>(k)]);
}

TEST_CASE("weil parity holds for rotations and fails for the grading") {
  const QuaternionicExteriorModel model = exterior_quaternion_model();
  CHECK(weil_parity_check(weil_commutator(model, Imaginary::J, Imaginary::K)));
  CHECK(weil_parity_check(weil_commutator(model, Imaginary::I, Imaginary::K)));
  CHECK(weil_parity_check(weil_commutator(model, Imaginary::I, Imaginary::J)));
  CHECK_FALSE(weil_parity_check(h_operator(model.algebra)));
}

TEST_CASE("weil parity of the zero operator depends on odd components") {
  const GradedFrobeniusAlgebra even = frobenius_from_quadratic(standard_form(3));
  CHECK(weil_parity_check(GradedOperator(even.space(), 0)));

  const QuaternionicExteriorModel model = exterior_quaternion_model();
  CHECK_FALSE(weil_parity_check(GradedOperator(model.algebra.space(), 0)));

  CHECK_THROWS_AS(weil_parity_check(cup_operator(even, zero_vec(3))), WrongDegree);
}

TEST_CASE("searched weil pairs are rotations on k3-type models") {
  const QuadraticSpace q = standard_form(4);
  const auto pair = find_weil_pair(q);
  REQUIRE(pair.has_value());
  const auto& [a, b] = *pair;
  CHECK(q.q(a) != 0);
  CHECK(q.q(a) == q.q(b));
  CHECK(q.q(a, b) == 0);

  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(q);
  const GradedOperator K = cup_operator(A, a).bracket(sl2_triple(A, b).f);
  CHECK(weil_parity_check(K));
}

TEST_CASE("no weil pair in a lopsided definite plane") {
  const QuadraticSpace q = QuadraticSpace::diagonal(Vec{Rational(1), Rational(2)});
  CHECK_FALSE(find_weil_pair(q).has_value());
  const QuadraticSpace balanced = QuadraticSpace::diagonal(Vec{Rational(1), Rational(1)});
  CHECK(find_weil_pair(balanced).has_value());
}

TEST_CASE("irreducibility witness passes on generated-in-degree-2 models") {
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(standard_form(3));
  const LlvClosure closure = llv_closure(A);
  const WitnessReport w = irreducibility_witness(closure.algebra, 20, 7);
  CHECK(w.passed);
  CHECK(w.starts == A.space().total_dim() + 20);
  CHECK(w.seed == 7);

  const WitnessReport again = irreducibility_witness(closure.algebra, 20, 7);
  CHECK(again.passed == w.passed);
  CHECK(again.starts == w.starts);
}

TEST_CASE("irreducibility witness fails on the parity-split exterior module") {
  const QuaternionicExteriorModel model = exterior_quaternion_model();
  std::vector<GradedOperator> generators;
  for (const Imaginary lambda : {Imaginary::I, Imaginary::J, Imaginary::K}) {
    const Sl2Triple t = metric_triple(model, lambda);
    generators.push_back(t.e);
    generators.push_back(t.h);
    generators.push_back(t.f);
  }
  const LieOperatorAlgebra g = lie_closure(generators);
  const WitnessReport w = irreducibility_witness(g, 5, 7);
  CHECK_FALSE(w.passed);
  CHECK(w.starts < model.algebra.space().total_dim() + 5);
}
