#pragma once

#include <map>
#include <optional>
#include <vector>

#include "llv/frobenius.hpp"
#include "llv/graded.hpp"
#include "llv/lefschetz.hpp"
#include "llv/matrix.hpp"
#include "llv/quadspace.hpp"
#include "llv/subspace.hpp"

namespace llv {

/// Lie algebra of graded operators on a fixed graded space, presented by a
/// canonical echelon basis per operator degree.  Canonical: the stored basis
/// depends only on the spanned subspace, not on insertion order.
class LieOperatorAlgebra {
 public:
  LieOperatorAlgebra() = default;
  explicit LieOperatorAlgebra(GradedVectorSpace ambient) : ambient_(std::move(ambient)) {}

  const GradedVectorSpace& ambient() const { return ambient_; }

  std::size_t dim() const;
  /// Operator degrees with a nonzero piece, ascending.
  std::vector<int> degrees() const;
  std::size_t degree_dim(int d) const;

  /// The degree-d piece as a subspace of flattened degree-d operators.
  Subspace degree_subspace(int d) const;
  const FlattenScheme& scheme(int d) const;

  /// Canonical basis operators of the degree-d piece (empty when absent).
  const std::vector<GradedOperator>& basis(int d) const;
  /// Concatenated canonical basis over all degrees, ascending.
  std::vector<GradedOperator> full_basis() const;

  bool contains(const GradedOperator& op) const;
  /// Coordinates of op within the canonical basis of its degree piece.
  std::optional<Vec> coordinates_in_degree(const GradedOperator& op) const;

  /// Adjoin an operator; returns true when the span grew.
  bool insert(const GradedOperator& op);

  /// The whole basis as one canonical subspace of flattened endomorphisms
  /// (coordinates (target, source) on the total space, row-major).
  Subspace flattened_basis() const;

 private:
  struct Piece {
    FlattenScheme scheme;
    EchelonBasis basis;
    mutable std::vector<GradedOperator> ops;  // lazily rebuilt canonical basis
    mutable bool ops_fresh = false;
  };

  Piece& piece(int d);
  const Piece* find_piece(int d) const;

  GradedVectorSpace ambient_;
  std::map<int, Piece> pieces_;
};

/// Smallest bracket-closed span of the generators: repeatedly bracket all
/// pairs of the current canonical basis, adjoin, and re-canonicalize until
/// the dimension stabilizes.
LieOperatorAlgebra lie_closure(const std::vector<GradedOperator>& generators);

/// Split into pure operator degrees; verifies the pieces sum to g.
std::map<int, Subspace> degree_pieces(const LieOperatorAlgebra& g);

/// Span of all brackets of basis pairs, re-closed.
LieOperatorAlgebra derived_subalgebra(const LieOperatorAlgebra& g);

struct G0Decomposition {
  LieOperatorAlgebra g0prime;  // derived part of the degree-0 piece
  GradedOperator h;            // the grading operator
};

/// Verify g_0 = g_0' (+) Q h as an exact direct sum; throws NotDirectSum
/// when h lies in g_0' or the dimensions do not add up.
G0Decomposition decompose_g0(const LieOperatorAlgebra& g);

struct KillingForm {
  RationalMatrix matrix;
  Inertia signature;
  bool nondegenerate = false;
};

/// K(x, y) = trace(ad x . ad y) over the canonical closure basis.
KillingForm killing_form(const LieOperatorAlgebra& g);

/// True iff form(u x, y) + form(x, u y) = 0 for every u and all x, y,
/// checked as the exact matrix identity u^T F + F u = 0.
bool infinitesimal_invariance_check(const std::vector<SparseMatrix>& ops,
                                    const RationalMatrix& form);
/// Same, for graded operators against a form on the flattened total space.
bool infinitesimal_invariance_check(const std::vector<GradedOperator>& ops,
                                    const RationalMatrix& form);

/// True iff u(x y) = u(x) y + x u(y) for all basis pairs of A.
bool derivation_check(const GradedOperator& u, const GradedFrobeniusAlgebra& A);

/// True iff basis-of-g -> (block with source degree k) is injective.
bool restriction_injectivity(const LieOperatorAlgebra& g, int source_degree);
/// True iff basis-of-g -> End(S) is injective for a g-invariant subspace S
/// of the flattened total space; throws ValidationError when S is not
/// invariant.
bool restriction_injectivity(const LieOperatorAlgebra& g, const Subspace& S);

/// q extended by a hyperbolic plane: the Gram of q (+) [[0,1],[1,0]].
QuadraticSpace mukai_extend(const QuadraticSpace& q);

/// The endomorphism v -> (q(x,v) y - q(y,v) x) / 2 identifying wedge^2 V
/// with the q-skew matrices; throws Degenerate when q is degenerate.
RationalMatrix wedge2_so_map(const QuadraticSpace& q, const Vec& x, const Vec& y);

/// Deterministic family of Lefschetz degree-2 classes spanning the degree-2
/// component: standard basis vectors, then pairwise sums, keeping a
/// candidate iff its cup operator passes lefschetz_check and it enlarges
/// the span.  Throws NotLefschetz when the pool fails to span.
std::vector<Vec> lefschetz_spanning_family(const GradedFrobeniusAlgebra& A);

struct LlvClosure {
  LieOperatorAlgebra algebra;
  std::vector<Vec> family;        // the Lefschetz classes that generated it
  std::vector<Sl2Triple> triples; // their sl2-triples, aligned with family
};

/// The total Lie algebra of A: closure of the sl2-triples over
/// lefschetz_spanning_family(A).
LlvClosure llv_closure(const GradedFrobeniusAlgebra& A);

/// Basis of {M : M^T D + D M = 0}, the Lie algebra of matrices skew with
/// respect to a symmetric form D.
std::vector<RationalMatrix> skew_algebra_basis(const RationalMatrix& D);

/// Killing form data of a bracket-closed list of plain matrices.
KillingForm matrix_killing_form(const std::vector<RationalMatrix>& basis);

}  // namespace llv
