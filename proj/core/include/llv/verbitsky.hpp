#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "llv/frobenius.hpp"
#include "llv/matrix.hpp"
#include "llv/quadspace.hpp"
#include "llv/subspace.hpp"

namespace llv {

/// Monomial basis of the m-th symmetric power of a quadratic space.
class SymmetricPower {
 public:
  SymmetricPower() = default;
  SymmetricPower(QuadraticSpace base, int degree);

  const QuadraticSpace& base() const { return base_; }
  int degree() const { return degree_; }
  std::size_t dim() const { return exponents_.size(); }
  /// Exponent multi-indices in canonical (lexicographic) order.
  const std::vector<std::vector<int>>& exponents() const { return exponents_; }
  std::size_t index_of(const std::vector<int>& exponent) const;

 private:
  QuadraticSpace base_;
  int degree_ = 0;
  std::vector<std::vector<int>> exponents_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// Matrix of the second-order contraction by the Gram matrix of q,
///   D(x^a) = sum_{i,j} G_ij a_j (a_i - d_ij) x^{a - e_i - e_j},
/// mapping Sym^m to Sym^{m-2}; for m < 2 the zero map to the zero space.
/// On a power of a linear form it evaluates to m(m-1) q(alpha) alpha^{m-2},
/// so powers of isotropic vectors are annihilated.  Throws Degenerate.
RationalMatrix contraction_laplacian(const QuadraticSpace& q, int m);

/// Kernel of the contraction; for nondegenerate q the contraction is
/// surjective, so the dimension is dim Sym^m - dim Sym^{m-2}.
Subspace harmonic_subspace(const QuadraticSpace& q, int m);

/// The graded quotient A = Sym*(q) / (ideal generated by the degree-(n+1)
/// harmonic subspace), presented degreewise with canonical monomial
/// complements, together with the induced Frobenius algebra (cohomological
/// degree 2k, shift 2n, top-degree basis vector integrating to 1).
class VerbitskyComponent {
 public:
  VerbitskyComponent() = default;

  const QuadraticSpace& q() const { return q_; }
  int n() const { return n_; }
  const GradedFrobeniusAlgebra& algebra() const { return algebra_; }

  /// dim A_k for k = 0..2n.
  std::vector<std::size_t> dims() const;

  const SymmetricPower& sym(int k) const { return sym_[static_cast<std::size_t>(k)]; }
  /// Echelon basis of the ideal piece inside Sym^k (trivial for k <= n).
  const EchelonBasis& ideal(int k) const { return ideal_[static_cast<std::size_t>(k)]; }
  /// Indices of the monomials representing the quotient basis of A_k.
  const std::vector<std::size_t>& complement(int k) const {
    return complement_[static_cast<std::size_t>(k)];
  }

  /// Coordinates in the quotient basis of A_k of a Sym^k vector.
  Vec reduce(int k, const Vec& sym_vector) const;

 private:
  friend VerbitskyComponent verbitsky_component(const QuadraticSpace& q, int n);

  QuadraticSpace q_;
  int n_ = 0;
  std::vector<SymmetricPower> sym_;                  // degrees 0..2n
  std::vector<EchelonBasis> ideal_;                  // per degree
  std::vector<std::vector<std::size_t>> complement_; // free monomials per degree
  GradedFrobeniusAlgebra algebra_;
};

/// Build the component; throws Degenerate for degenerate q, ValidationError
/// when the requested size exceeds the desk-scale guard, and
/// TruncationFailure if the quotient fails to vanish in degree 2n+1.
VerbitskyComponent verbitsky_component(const QuadraticSpace& q, int n);

/// True iff every multiplication A_k x A_{2n-k} -> A_{2n} is a perfect
/// pairing (square matrix of full rank).
bool perfect_pairing_check(const VerbitskyComponent& A);

/// True iff alpha^{n+1} vanishes in A; throws NotIsotropic when
/// q(alpha, alpha) != 0.
bool isotropic_power_check(const VerbitskyComponent& A, const Vec& alpha);

/// Deterministic bounded search for nonzero rational isotropic vectors:
/// basis vectors, two-index combinations with small coefficients, and
/// three-index hyperbolic completions.  Returns at most max_count vectors.
std::vector<Vec> enumerate_isotropic(const QuadraticSpace& q, std::size_t max_count);

}  // namespace llv
