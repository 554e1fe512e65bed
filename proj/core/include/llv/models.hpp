#pragma once

#include <map>

#include "llv/frobenius.hpp"
#include "llv/lefschetz.hpp"
#include "llv/quadspace.hpp"

namespace llv {

enum class Imaginary { I, J, K };

/// The exterior algebra of a rank-one quaternionic module: Lambda* of a
/// 4-dimensional rational space with the standard inner product, together
/// with the three complex structures given by left multiplication, their
/// Kaehler 2-forms, and the Hodge star for the orientation e0^e1^e2^e3.
struct QuaternionicExteriorModel {
  GradedFrobeniusAlgebra algebra;  // dims (1,4,6,4,1), shift 2
  RationalMatrix I, J, K;          // left multiplication by i, j, k on (1,i,j,k)
  RationalMatrix inner;            // Gram of the inner product (identity)
  Vec omega_I, omega_J, omega_K;   // degree-2 Kaehler forms
  std::map<int, RationalMatrix> star;  // star_k: degree k -> degree 4-k

  const RationalMatrix& complex_structure(Imaginary lambda) const;
  const Vec& omega(Imaginary lambda) const;
};

QuaternionicExteriorModel exterior_quaternion_model();

/// Hodge star of a homogeneous element of degree k.
Vec hodge_star(const QuaternionicExteriorModel& model, int k, const Vec& x);
/// Hodge star of a total-space vector; throws NotHomogeneous when the
/// support spans more than one degree.
Vec hodge_star_total(const QuaternionicExteriorModel& model, const Vec& total);

/// The sl2-triple (e_lambda, h, f_lambda) with f = star^{-1} e star.
Sl2Triple metric_triple(const QuaternionicExteriorModel& model, Imaginary lambda);

/// K_{lambda mu} = [e_lambda, f_mu]; throws EqualIndices when lambda == mu.
GradedOperator weil_commutator(const QuaternionicExteriorModel& model, Imaginary lambda,
                               Imaginary mu);

/// The algebra Q.1 (+) V (+) Q.t with a.b = q(a,b) t, shift 2, Int t = 1;
/// throws Degenerate for degenerate q.
GradedFrobeniusAlgebra frobenius_from_quadratic(const QuadraticSpace& q);

QuadraticSpace hyperbolic_plane();
QuadraticSpace e8_minus();
/// U^3 (+) E8(-1)^2, rank 22, signature (3,19).
QuadraticSpace k3_lattice();
/// k3_lattice (+) <-2>, rank 23: the degree-2 form of the Hilbert square.
QuadraticSpace k3_hilb2_lattice();

}  // namespace llv
