#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "llv/rational.hpp"
#include "llv/subspace.hpp"

namespace llv {

struct RrefResult;
struct SolveResult;
struct Inertia;

/// Dense matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  bool is_zero() const;
  bool is_symmetric() const;

  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator*(const Rational& c) const;
  RationalMatrix transpose() const;

  Vec apply(const Vec& v) const;

  bool operator==(const RationalMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  /// Reduced row echelon form with pivot columns.
  RrefResult rref() const;
  std::size_t rank() const;

  /// Right kernel {x : Ax = 0} as a canonical subspace of Q^cols.
  Subspace kernel() const;

  /// Solve Ax = b; nullopt when inconsistent.
  std::optional<SolveResult> solve(const Vec& b) const;

  Rational determinant() const;
  std::optional<RationalMatrix> inverse() const;

  /// Sylvester inertia of a symmetric matrix; throws NotSymmetric otherwise.
  Inertia signature() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

struct RrefResult {
  RationalMatrix rref;
  std::vector<std::size_t> pivots;
};

struct SolveResult {
  Vec x;                    // one particular solution
  std::size_t kernel_dim;   // dimension of the solution space's direction
};

struct Inertia {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t zeros = 0;

  bool operator==(const Inertia&) const = default;
};

}  // namespace llv
