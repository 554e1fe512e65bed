#include "llv/matrix.hpp"

#include <algorithm>
#include <cassert>

#include "llv/errors.hpp"

namespace llv {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<Vec>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    assert(rows[i].size() == c);
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec RationalMatrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec RationalMatrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

bool RationalMatrix::is_zero() const {
  for (const Rational& x : data_)
    if (x != 0) return false;
  return true;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  RationalMatrix m(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += other.data_[i];
  return m;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  RationalMatrix m(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= other.data_[i];
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  assert(cols_ == other.rows_);
  RationalMatrix m(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Rational& b = other.at(k, j);
        if (b != 0) m.at(i, j) += a * b;
      }
    }
  return m;
}

RationalMatrix RationalMatrix::operator*(const Rational& c) const {
  RationalMatrix m(*this);
  for (Rational& x : m.data_) x *= c;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Vec RationalMatrix::apply(const Vec& v) const {
  assert(v.size() == cols_);
  Vec out = zero_vec(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) s += at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

RrefResult RationalMatrix::rref() const {
  RationalMatrix m(*this);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && m.at(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = c; j < cols_; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = 1 / m.at(r, c);
    for (std::size_t j = c; j < cols_; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Rational f = m.at(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(m), std::move(pivots)};
}

std::size_t RationalMatrix::rank() const { return rref().pivots.size(); }

Subspace RationalMatrix::kernel() const {
  const RrefResult rr = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  EchelonBasis basis(cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    SparseVec v = SparseVec::unit(c);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      const Rational& entry = rr.rref.at(i, c);
      if (entry != 0) v.set(rr.pivots[i], -entry);
    }
    basis.insert(std::move(v));
  }
  return Subspace(std::move(basis));
}

std::optional<SolveResult> RationalMatrix::solve(const Vec& b) const {
  assert(b.size() == rows_);
  RationalMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  const RrefResult rr = aug.rref();
  for (std::size_t p : rr.pivots)
    if (p == cols_) return std::nullopt;
  Vec x = zero_vec(cols_);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.rref.at(i, cols_);
  return SolveResult{std::move(x), cols_ - rr.pivots.size()};
}

Rational RationalMatrix::determinant() const {
  assert(rows_ == cols_);
  RationalMatrix m(*this);
  Rational det(1);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && m.at(p, c) == 0) ++p;
    if (p == rows_) return Rational(0);
    if (p != c) {
      for (std::size_t j = c; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Rational inv = 1 / m.at(c, c);
    for (std::size_t i = c + 1; i < rows_; ++i) {
      const Rational f = m.at(i, c) * inv;
      if (f == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  assert(rows_ == cols_);
  RationalMatrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  const RrefResult rr = aug.rref();
  if (rr.pivots.size() != cols_ || rr.pivots.back() != cols_ - 1) return std::nullopt;
  RationalMatrix inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = rr.rref.at(i, cols_ + j);
  return inv;
}

Inertia RationalMatrix::signature() const {
  if (!is_symmetric()) throw NotSymmetric("signature of a non-symmetric matrix");
  RationalMatrix m(*this);
  const std::size_t n = rows_;
  Inertia inertia;
  // Symmetric congruence reduction to diagonal form, exactly.
  for (std::size_t k = 0; k < n; ++k) {
    if (m.at(k, k) == 0) {
      // Find a usable diagonal below, else create one from an off-diagonal entry.
      std::size_t p = k + 1;
      while (p < n && m.at(p, p) == 0) ++p;
      if (p < n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, k), m.at(i, p));
      } else {
        std::size_t q = k + 1;
        while (q < n && m.at(k, q) == 0) ++q;
        if (q == n) {
          ++inertia.zeros;
          continue;
        }
        // Row/column addition makes the diagonal entry 2*m(k,q) != 0.
        for (std::size_t j = 0; j < n; ++j) m.at(k, j) += m.at(q, j);
        for (std::size_t i = 0; i < n; ++i) m.at(i, k) += m.at(i, q);
      }
    }
    const Rational d = m.at(k, k);
    if (sign_of(d) > 0)
      ++inertia.positives;
    else
      ++inertia.negatives;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = m.at(i, k) / d;
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
      for (std::size_t j = 0; j < n; ++j) m.at(j, i) -= f * m.at(j, k);
    }
  }
  return inertia;
}

}  // namespace llv
