#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "llv/frobenius.hpp"
#include "llv/graded.hpp"
#include "llv/liealg.hpp"
#include "llv/quadspace.hpp"
#include "llv/subspace.hpp"

namespace llv {

/// Joint kernel on the flattened total space of the degree -2 piece of g;
/// the whole space when that piece is absent.
Subspace prim_subspace(const LieOperatorAlgebra& g);

/// Smallest g-stable subspace of the flattened total space containing the
/// seed vectors, grown by a worklist over the canonical basis operators.
Subspace submodule_generated(const LieOperatorAlgebra& g, const std::vector<Vec>& seeds);

/// Per-degree pieces of the subalgebra of A generated by the degree-2
/// component, keyed by cohomological degree.
std::map<int, Subspace> verbitsky_subring(const GradedFrobeniusAlgebra& A);

/// True iff on every component of cohomological degree k the minimal
/// polynomial of W divides the product of p_m over 0 <= m <= |k| with
/// m = k (mod 2), where p_0 = x and p_m = x^2 + m^2.  This is the
/// eigenvalue pattern of a Weil-type rotation; the grading operator fails
/// it.  Throws WrongDegree unless W has degree 0.
bool weil_parity_check(const GradedOperator& W);

struct WitnessReport {
  bool passed = false;
  std::size_t starts = 0;     // vectors tested
  std::uint64_t seed = 0;
};

/// Check that every standard basis vector, plus random_starts seeded
/// small-integer vectors, generates the whole flattened total space as a
/// g-module.  A passing run is a witness for irreducibility, not a proof.
WitnessReport irreducibility_witness(const LieOperatorAlgebra& g, std::size_t random_starts,
                                     std::uint64_t seed);

/// First orthogonal pair of equal-norm non-isotropic vectors from the
/// deterministic pool of basis vectors followed by e_i +- e_j.  On a
/// hyperkaehler-type algebra over q, the commutator of the cup operator of
/// the first with the dual of the second is then a Weil-type rotation.
std::optional<std::pair<Vec, Vec>> find_weil_pair(const QuadraticSpace& q);

}  // namespace llv
