#include "llv/sparse.hpp"

#include <algorithm>
#include <cassert>

namespace llv {

SparseVec::SparseVec(std::vector<Term> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return t.second == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

SparseVec SparseVec::unit(std::size_t index, Rational value) {
  SparseVec v;
  if (value != 0) v.terms_.emplace_back(index, std::move(value));
  return v;
}

SparseVec SparseVec::from_dense(const Vec& v) {
  SparseVec r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) r.terms_.emplace_back(i, v[i]);
  return r;
}

Vec SparseVec::to_dense(std::size_t dim) const {
  Vec v = zero_vec(dim);
  for (const Term& t : terms_) v[t.first] = t.second;
  return v;
}

Rational SparseVec::get(std::size_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::size_t i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) return it->second;
  return Rational(0);
}

void SparseVec::set(std::size_t index, const Rational& value) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::size_t i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) {
    if (value == 0)
      terms_.erase(it);
    else
      it->second = value;
  } else if (value != 0) {
    terms_.insert(it, Term(index, value));
  }
}

SparseVec& SparseVec::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.second *= c;
  return *this;
}

SparseVec SparseVec::operator*(const Rational& c) const {
  SparseVec r(*this);
  r *= c;
  return r;
}

void SparseVec::axpy(const Rational& c, const SparseVec& other) {
  if (c == 0 || other.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    const std::size_t a = terms_[i].first, b = other.terms_[j].first;
    if (a < b) {
      out.push_back(std::move(terms_[i++]));
    } else if (b < a) {
      Rational v = c * other.terms_[j].second;
      out.emplace_back(b, std::move(v));
      ++j;
    } else {
      Rational v = terms_[i].second + c * other.terms_[j].second;
      if (v != 0) out.emplace_back(a, std::move(v));
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < other.terms_.size(); ++j) {
    Rational v = c * other.terms_[j].second;
    out.emplace_back(other.terms_[j].first, std::move(v));
  }
  terms_ = std::move(out);
}

SparseVec SparseVec::operator+(const SparseVec& other) const {
  SparseVec r(*this);
  r.axpy(Rational(1), other);
  return r;
}

SparseVec SparseVec::operator-(const SparseVec& other) const {
  SparseVec r(*this);
  r.axpy(Rational(-1), other);
  return r;
}

SparseVec SparseVec::shifted(std::size_t offset) const {
  SparseVec r(*this);
  for (Term& t : r.terms_) t.first += offset;
  return r;
}

Rational SparseVec::dot(const SparseVec& other) const {
  Rational s(0);
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    const std::size_t a = terms_[i].first, b = other.terms_[j].first;
    if (a < b)
      ++i;
    else if (b < a)
      ++j;
    else {
      s += terms_[i].second * other.terms_[j].second;
      ++i;
      ++j;
    }
  }
  return s;
}

Rational SparseVec::dot_dense(const Vec& other) const {
  Rational s(0);
  for (const Term& t : terms_) s += t.second * other[t.first];
  return s;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i] = SparseVec::unit(i);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vec>& rows, std::size_t cols) {
  SparseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.data_[i] = SparseVec::from_dense(rows[i]);
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const SparseVec& r : data_) n += r.nnz();
  return n;
}

bool SparseMatrix::is_zero() const {
  for (const SparseVec& r : data_)
    if (!r.empty()) return false;
  return true;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& other) const {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  SparseMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) m.data_[i] = data_[i] + other.data_[i];
  return m;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& other) const {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  SparseMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) m.data_[i] = data_[i] - other.data_[i];
  return m;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  assert(cols_ == other.rows_);
  SparseMatrix m(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    SparseVec acc;
    for (const SparseVec::Term& t : data_[i].terms()) acc.axpy(t.second, other.data_[t.first]);
    m.data_[i] = std::move(acc);
  }
  return m;
}

SparseMatrix SparseMatrix::operator*(const Rational& c) const {
  SparseMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) m.data_[i] = data_[i] * c;
  return m;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix m(cols_, rows_);
  std::vector<std::vector<SparseVec::Term>> cols(cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const SparseVec::Term& t : data_[i].terms()) cols[t.first].emplace_back(i, t.second);
  for (std::size_t j = 0; j < cols_; ++j) m.data_[j] = SparseVec(std::move(cols[j]));
  return m;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
  std::vector<SparseVec::Term> out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (data_[i].empty()) continue;
    Rational s = data_[i].dot(v);
    if (s != 0) out.emplace_back(i, std::move(s));
  }
  return SparseVec(std::move(out));
}

Vec SparseMatrix::apply_dense(const Vec& v) const {
  Vec out = zero_vec(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = data_[i].dot_dense(v);
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

}  // namespace llv
