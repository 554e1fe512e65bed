#include "doctest.h"
#include "llv/errors.hpp"
#include "llv/lefschetz.hpp"
#include "llv/models.hpp"

using namespace llv;

TEST_CASE("quaternionic exterior model shape") {
  const QuaternionicExteriorModel model = exterior_quaternion_model();
  const GradedVectorSpace& V = model.algebra.space();
  CHECK(V.shift() == 2);
  CHECK(V.total_dim() == 16);
  const std::size_t expected[5] = {1, 4, 6, 4, 1};
  for (int k = 0; k <= 4; ++k) CHECK(V.dim(k) == expected[k]);
  CHECK(validate_algebra(model.algebra).ok);
}

TEST_CASE("complex structures multiply like quaternions") {
  const QuaternionicExteriorModel model = exterior_quaternion_model();
  const RationalMatrix minus_id = RationalMatrix::identity(4) * Rational(-1);

  CHECK(model.I * model.I == minus_id);
  CHECK(model.J * model.J == minus_id);
  CHECK(model.K * model.K == minus_id);
  CHECK(model.I * model.J == model.K);
  CHECK(model.J * model.K == model.I);
  CHECK(model.K * model.I == model.J);
  CHECK(model.J * model.I == model.K * Rational(-1));

  for (const Imaginary lambda : {Imaginary::I, Imaginary::J, Imaginary::K}) {
    const RationalMatrix& L = model.complex_structure(lambda);
    CHECK((L.transpose() * model.inner + model.inner * L).is_zero());
  }
}

TEST_CASE("kaehler forms are orthogonal with equal norm") {
  const QuaternionicExteriorModel model = exterior_quaternion_model();
  const GradedFrobeniusAlgebra& A = model.algebra;
  const Imaginary all[3] = {Imaginary::I, Imaginary::J, Imaginary::K};

  for (const Imaginary a : all)
    for (const Imaginary b : all) {
      const Vec product = A.multiply(2, model.omega(a), 2, model.omega(b));
      const Rational pairing = A.integrate(4, product);
      CHECK(pairing == (a == b ? Rational(2) : Rational(0)));
    }
}

TEST_CASE("hodge star squares to the degree sign") {
  const QuaternionicExteriorModel model = exterior_quaternion_model();
  const GradedVectorSpace& V = model.algebra.space();
  for (int k = 0; k <= 4; ++k) {
    const int sign = (k * (4 - k)) % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < V.dim(k); ++i) {
      Vec x = zero_vec(V.dim(k));
      x[i] = Rational(1);
      const Vec starred = hodge_star(model, k, x);
      const Vec back = hodge_star(model, 4 - k, starred);
      Vec expected = x;
      for (auto& c : expected) c *= Rational(sign);
      CHECK(back == expected);
    }
  }
}

TEST_CASE("hodge star realizes the integration pairing") {
  const QuaternionicExteriorModel model = exterior_quaternion_model();
  const GradedFrobeniusAlgebra& A = model.algebra;
  const GradedVectorSpace& V = A.space();

  // int alpha ^ *alpha > 0 for alpha != 0: the star encodes a positive metric.
  for (int k = 0; k <= 4; ++k)
    for (std::size_t i = 0; i < V.dim(k); ++i) {
      Vec x = zero_vec(V.dim(k));
      x[i] = Rational(1);
      const Vec starred = hodge_star(model, k, x);
      const Rational norm = A.integrate(4, A.multiply(k, x, 4 - k, starred));
      CHECK(norm > 0);
    }
}

TEST_CASE("metric triples are sl2 triples with the grading operator") {
  const QuaternionicExteriorModel model = exterior_quaternion_model();
  for (const Imaginary lambda : {Imaginary::I, Imaginary::J, Imaginary::K}) {
    const Sl2Triple t = metric_triple(model, lambda);
    CHECK(t.relations_hold());
    CHECK(t.h == h_operator(model.algebra));
    CHECK(t.e == cup_operator(model.algebra, model.omega(lambda)));
  }
}

TEST_CASE("weil commutators reject equal indices") {
  const QuaternionicExteriorModel model = exterior_quaternion_model();
  CHECK_THROWS_AS(weil_commutator(model, Imaginary::I, Imaginary::I), EqualIndices);
  const GradedOperator k_ij = weil_commutator(model, Imaginary::I, Imaginary::J);
  CHECK(k_ij.degree() == 0);
  CHECK_FALSE(k_ij.is_zero());
}

TEST_CASE("k3-type algebras from quadratic spaces") {
  const QuadraticSpace q = hyperbolic_plane();
  const GradedFrobeniusAlgebra A = frobenius_from_quadratic(q);
  CHECK(A.space().total_dim() == 4);
  CHECK(validate_algebra(A).ok);

  Vec a{Rational(1), Rational(0)};
  Vec b{Rational(0), Rational(1)};
  CHECK(A.multiply(2, a, 2, b) == Vec{Rational(1)});
  CHECK(A.multiply(2, a, 2, a) == Vec{Rational(0)});

  RationalMatrix degenerate(2, 2);
  degenerate.at(0, 0) = Rational(1);
  CHECK_THROWS_AS(frobenius_from_quadratic(QuadraticSpace(degenerate)), Degenerate);
}

TEST_CASE("hyperbolic plane lattice") {
  const QuadraticSpace u = hyperbolic_plane();
  CHECK(u.dim() == 2);
  CHECK(u.gram().at(0, 1) == Rational(1));
  CHECK(u.gram().at(0, 0) == Rational(0));
  CHECK(u.signature() == Inertia{1, 1, 0});
  CHECK(u.gram().determinant() == Rational(-1));
}

TEST_CASE("negated e8 lattice") {
  const QuadraticSpace e8 = e8_minus();
  CHECK(e8.dim() == 8);
  CHECK(e8.nondegenerate());
  CHECK(e8.signature() == Inertia{0, 8, 0});
  CHECK(e8.gram().determinant() == Rational(1));
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(e8.gram().at(i, i) == Rational(-2));
    for (std::size_t j = 0; j < 8; ++j) {
      if (i == j) continue;
      const Rational off = e8.gram().at(i, j);
      CHECK((off == Rational(0) || off == Rational(1)));
      CHECK(off == e8.gram().at(j, i));
    }
  }
}

TEST_CASE("k3 and hilbert-square lattices") {
  const QuadraticSpace k3 = k3_lattice();
  CHECK(k3.dim() == 22);
  CHECK(k3.signature() == Inertia{3, 19, 0});
  CHECK(k3.gram().determinant() == Rational(-1));

  const QuadraticSpace hilb = k3_hilb2_lattice();
  CHECK(hilb.dim() == 23);
  CHECK(hilb.signature() == Inertia{3, 20, 0});
  CHECK(hilb.gram().at(22, 22) == Rational(-2));
  for (std::size_t j = 0; j < 22; ++j) CHECK(hilb.gram().at(22, j) == Rational(0));
}

TEST_CASE("quadratic space plumbing") {
  const QuadraticSpace d = QuadraticSpace::diagonal(Vec{Rational(2), Rational(-3)});
  CHECK(d.q(Vec{Rational(1), Rational(1)}) == Rational(-1));
  CHECK(d.q(Vec{Rational(1), Rational(0)}, Vec{Rational(0), Rational(1)}) == Rational(0));
  CHECK(d.signature() == Inertia{1, 1, 0});

  const QuadraticSpace sum = d.direct_sum(hyperbolic_plane());
  CHECK(sum.dim() == 4);
  CHECK(sum.gram().at(2, 3) == Rational(1));
  CHECK(sum.gram().at(0, 2) == Rational(0));

  RationalMatrix asym(2, 2);
  asym.at(0, 1) = Rational(1);
  CHECK_THROWS_AS(QuadraticSpace{asym}, NotSymmetric);
}
