#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "llv/rational.hpp"
#include "llv/sparse.hpp"

namespace llv {

/// Finite-dimensional graded vector space over Q with a distinguished basis
/// per component.  Components are indexed by cohomological degree k; the
/// internal degree of component k is k - shift.
class GradedVectorSpace {
 public:
  using Component = std::pair<int, std::size_t>;  // (degree, dimension)

  GradedVectorSpace() = default;
  GradedVectorSpace(int shift, std::vector<Component> components);

  int shift() const { return shift_; }
  const std::vector<Component>& components() const { return components_; }

  bool has_degree(int k) const { return dim(k) > 0; }
  std::size_t dim(int k) const;
  int internal_degree(int k) const { return k - shift_; }
  std::size_t total_dim() const { return total_dim_; }
  /// Offset of component k inside the flattened total space.
  std::size_t offset(int k) const;
  int min_degree() const { return components_.empty() ? 0 : components_.front().first; }
  int max_degree() const { return components_.empty() ? 0 : components_.back().first; }
  /// Largest degree with nonzero dimension (the top of the grading).
  int top_degree() const;

  bool operator==(const GradedVectorSpace& other) const {
    return shift_ == other.shift_ && components_ == other.components_;
  }

 private:
  int shift_ = 0;
  std::vector<Component> components_;   // strictly increasing degrees
  std::vector<std::size_t> offsets_;
  std::size_t total_dim_ = 0;
};

/// Homogeneous linear operator of fixed degree d on a graded space,
/// stored blockwise: for each source degree k, a matrix component k -> k+d.
/// Blocks that are absent, or whose source or target component vanishes,
/// are zero.
class GradedOperator {
 public:
  GradedOperator() = default;
  GradedOperator(GradedVectorSpace space, int degree)
      : space_(std::move(space)), degree_(degree) {}

  const GradedVectorSpace& space() const { return space_; }
  int degree() const { return degree_; }
  const std::map<int, SparseMatrix>& blocks() const { return blocks_; }

  /// Block with source degree k, or nullptr when zero.
  const SparseMatrix* block(int k) const;
  /// Dense-shaped copy of the block with source degree k (zero when absent).
  SparseMatrix block_or_zero(int k) const;

  /// Install the block mapping component k to component k+degree.
  /// Throws WrongDegree when the dimensions do not match the space.
  void set_block(int k, SparseMatrix m);

  bool is_zero() const;

  GradedOperator operator+(const GradedOperator& other) const;
  GradedOperator operator-(const GradedOperator& other) const;
  GradedOperator operator*(const Rational& c) const;

  /// this after other; degree adds.
  GradedOperator compose(const GradedOperator& other) const;
  /// Commutator [this, other].
  GradedOperator bracket(const GradedOperator& other) const;
  /// n-fold self-composition (n >= 0; n = 0 is the identity, degree 0).
  GradedOperator power(std::size_t n) const;

  /// Action on a vector in component k; returns the image in component k+degree.
  Vec apply_component(int k, const Vec& x) const;
  /// Action on the flattened total space.
  Vec apply_total(const Vec& v) const;
  SparseVec apply_total(const SparseVec& v) const;

  /// The operator as one matrix on the flattened total space.
  SparseMatrix total_matrix() const;

  bool operator==(const GradedOperator& other) const;

 private:
  GradedVectorSpace space_;
  int degree_ = 0;
  std::map<int, SparseMatrix> blocks_;  // key: source degree; zero blocks omitted
};

/// Identity operator (degree 0).
GradedOperator identity_operator(const GradedVectorSpace& V);

/// Coordinate layout identifying degree-d operators on V with vectors in
/// Q^flat_dim.  Blocks are laid out smallest first (ties by source degree),
/// so that echelon pivots concentrate in the cheap coordinates.
class FlattenScheme {
 public:
  FlattenScheme(const GradedVectorSpace& V, int degree);

  const GradedVectorSpace& space() const { return space_; }
  int degree() const { return degree_; }
  std::size_t flat_dim() const { return flat_dim_; }

  SparseVec flatten(const GradedOperator& op) const;
  GradedOperator unflatten(const SparseVec& v) const;

  /// Flat coordinate of entry (row, col) of the block with the given source
  /// degree; throws WrongDegree when that block is not part of the layout.
  std::size_t coordinate(int source_degree, std::size_t row, std::size_t col) const;
  bool has_block(int source_degree) const;

 private:
  struct BlockSlot {
    int source_degree;
    std::size_t rows, cols;
    std::size_t offset;
  };
  GradedVectorSpace space_;
  int degree_;
  std::vector<BlockSlot> slots_;
  std::size_t flat_dim_;
};

}  // namespace llv
