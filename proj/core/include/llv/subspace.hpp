#pragma once

#include <optional>
#include <vector>

#include "llv/sparse.hpp"

namespace llv {

/// Incrementally built reduced row echelon basis for a subspace of Q^n.
///
/// Rows are kept fully back-eliminated with monic pivots, so the stored
/// basis is the unique RREF of the span and is independent of the order
/// in which vectors were inserted.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  explicit EchelonBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduce v against the current basis; returns the residual (zero iff contained).
  SparseVec reduce(SparseVec v) const;

  /// Insert v; returns true if it enlarged the span.
  bool insert(SparseVec v);

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Coordinates of v in the stored basis, if v lies in the span.
  std::optional<Vec> coordinates(const SparseVec& v) const;

  bool operator==(const EchelonBasis& other) const {
    return ambient_dim_ == other.ambient_dim_ && rows_ == other.rows_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<SparseVec> rows_;       // sorted by pivot index
  std::vector<std::size_t> pivots_;   // pivot column of each row
};

/// A subspace of Q^n presented by its canonical reduced echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : basis_(ambient_dim) {}
  explicit Subspace(EchelonBasis basis) : basis_(std::move(basis)) {}
  Subspace(std::size_t ambient_dim, const std::vector<Vec>& spanning);

  std::size_t ambient_dim() const { return basis_.ambient_dim(); }
  std::size_t dim() const { return basis_.dim(); }
  const EchelonBasis& basis() const { return basis_; }

  /// Canonical basis vectors, densely.
  std::vector<Vec> basis_dense() const;

  bool contains(const Vec& v) const { return basis_.contains(SparseVec::from_dense(v)); }
  bool contains(const SparseVec& v) const { return basis_.contains(v); }
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;

  bool operator==(const Subspace& other) const { return basis_ == other.basis_; }

 private:
  EchelonBasis basis_;
};

}  // namespace llv
