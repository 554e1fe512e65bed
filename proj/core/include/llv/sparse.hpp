#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "llv/rational.hpp"

namespace llv {

/// Sparse vector over the rationals: sorted (index, value) pairs, values nonzero.
class SparseVec {
 public:
  using Term = std::pair<std::size_t, Rational>;

  SparseVec() = default;
  explicit SparseVec(std::vector<Term> terms);

  static SparseVec unit(std::size_t index, Rational value = Rational(1));
  static SparseVec from_dense(const Vec& v);
  Vec to_dense(std::size_t dim) const;

  bool empty() const { return terms_.empty(); }
  std::size_t nnz() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Smallest index with a nonzero entry; vector must be nonempty.
  std::size_t leading_index() const { return terms_.front().first; }
  const Rational& leading_value() const { return terms_.front().second; }

  Rational get(std::size_t index) const;
  void set(std::size_t index, const Rational& value);

  SparseVec& operator*=(const Rational& c);
  SparseVec operator*(const Rational& c) const;

  /// this += c * other.
  void axpy(const Rational& c, const SparseVec& other);
  SparseVec operator+(const SparseVec& other) const;
  SparseVec operator-(const SparseVec& other) const;

  /// Shift every index by offset (block embedding).
  SparseVec shifted(std::size_t offset) const;

  Rational dot(const SparseVec& other) const;
  Rational dot_dense(const Vec& other) const;

  bool operator==(const SparseVec& other) const { return terms_ == other.terms_; }

 private:
  std::vector<Term> terms_;
};

/// Sparse row-major matrix over the rationals.
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const SparseVec& row(std::size_t i) const { return data_[i]; }
  void set_row(std::size_t i, SparseVec r) { data_[i] = std::move(r); }
  Rational get(std::size_t i, std::size_t j) const { return data_[i].get(j); }
  void set(std::size_t i, std::size_t j, const Rational& value) { data_[i].set(j, value); }

  std::size_t nnz() const;
  bool is_zero() const;

  SparseMatrix operator+(const SparseMatrix& other) const;
  SparseMatrix operator-(const SparseMatrix& other) const;
  SparseMatrix operator*(const SparseMatrix& other) const;
  SparseMatrix operator*(const Rational& c) const;
  SparseMatrix transpose() const;

  /// Matrix-vector product (columns act on coordinates of v).
  SparseVec apply(const SparseVec& v) const;
  Vec apply_dense(const Vec& v) const;

  bool operator==(const SparseMatrix& other) const;

 private:
  std::size_t rows_, cols_;
  std::vector<SparseVec> data_;
};

}  // namespace llv
