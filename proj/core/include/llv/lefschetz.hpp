#pragma once

#include "llv/frobenius.hpp"
#include "llv/graded.hpp"

namespace llv {

/// An sl2-triple of graded operators: e of degree +2, h of degree 0,
/// f of degree -2, satisfying [e,f] = h, [h,e] = 2e, [h,f] = -2f.
struct Sl2Triple {
  GradedOperator e;
  GradedOperator h;
  GradedOperator f;

  bool relations_hold() const;
};

/// True iff e^k maps the internal-degree -k component isomorphically onto
/// the internal-degree k component for every k > 0 with nonzero source.
bool lefschetz_check(const GradedVectorSpace& V, const GradedOperator& e);

/// The unique degree -2 operator f with [e,f] = h, obtained by flattening
/// the unknown blocks of f and solving the commutator equation as one
/// linear system.  Throws NotLefschetz when no solution exists and
/// NonUniqueDual when the solution space is positive-dimensional.
GradedOperator jacobson_morozov_dual(const GradedVectorSpace& V, const GradedOperator& e);

/// The sl2-triple (cup(a), h, f_a) for a degree-2 class a with Lefschetz cup
/// product; propagates NotLefschetz from the dual computation.
Sl2Triple sl2_triple(const GradedFrobeniusAlgebra& A, const Vec& a);

}  // namespace llv
