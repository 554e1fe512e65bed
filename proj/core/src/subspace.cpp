#include "llv/subspace.hpp"

#include <algorithm>
#include <cassert>

namespace llv {

SparseVec EchelonBasis::reduce(SparseVec v) const {
  while (!v.empty()) {
    const std::size_t lead = v.leading_index();
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    if (it == pivots_.end() || *it != lead) break;
    const std::size_t row = static_cast<std::size_t>(it - pivots_.begin());
    Rational c = -v.leading_value();
    v.axpy(c, rows_[row]);
  }
  // Clear trailing coordinates in pivot columns.  Stored rows vanish on every
  // pivot column other than their own, so the eliminations are independent.
  std::vector<std::pair<std::size_t, Rational>> hits;
  for (const SparseVec::Term& t : v.terms()) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), t.first);
    if (it != pivots_.end() && *it == t.first)
      hits.emplace_back(static_cast<std::size_t>(it - pivots_.begin()), t.second);
  }
  for (const auto& [row, c] : hits) v.axpy(-c, rows_[row]);
  return v;
}

bool EchelonBasis::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::size_t lead = v.leading_index();
  assert(lead < ambient_dim_);
  Rational inv = 1 / v.leading_value();
  v *= inv;
  // Back-eliminate the new pivot column from existing rows.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational c = rows_[i].get(lead);
    if (c != 0) rows_[i].axpy(-c, v);
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  const std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
  pivots_.insert(it, lead);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  return true;
}

std::optional<Vec> EchelonBasis::coordinates(const SparseVec& v) const {
  Vec coords = zero_vec(rows_.size());
  SparseVec r = v;
  while (!r.empty()) {
    const std::size_t lead = r.leading_index();
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    if (it == pivots_.end() || *it != lead) return std::nullopt;
    const std::size_t row = static_cast<std::size_t>(it - pivots_.begin());
    Rational c = r.leading_value();
    coords[row] = c;
    r.axpy(-c, rows_[row]);
  }
  return coords;
}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vec>& spanning)
    : basis_(ambient_dim) {
  for (const Vec& v : spanning) basis_.insert(SparseVec::from_dense(v));
}

std::vector<Vec> Subspace::basis_dense() const {
  std::vector<Vec> out;
  out.reserve(basis_.dim());
  for (const SparseVec& r : basis_.rows()) out.push_back(r.to_dense(basis_.ambient_dim()));
  return out;
}

bool Subspace::contains(const Subspace& other) const {
  for (const SparseVec& r : other.basis().rows())
    if (!basis_.contains(r)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  EchelonBasis b = basis_;
  for (const SparseVec& r : other.basis().rows()) b.insert(r);
  return Subspace(std::move(b));
}

Subspace Subspace::intersection(const Subspace& other) const {
  // Zassenhaus: echelonize rows (u | u) for u in U and (w | 0) for w in W.
  // Rows whose pivot lands in the right half are supported there entirely,
  // and their right halves form a basis of U cap W.
  const std::size_t n = ambient_dim();
  EchelonBasis big(2 * n);
  for (const SparseVec& u : basis_.rows()) {
    SparseVec doubled = u;
    doubled.axpy(Rational(1), u.shifted(n));
    big.insert(std::move(doubled));
  }
  for (const SparseVec& w : other.basis().rows()) big.insert(w);
  EchelonBasis inter(n);
  for (std::size_t i = 0; i < big.dim(); ++i) {
    if (big.pivots()[i] < n) continue;
    SparseVec right;
    for (const SparseVec::Term& t : big.rows()[i].terms()) right.set(t.first - n, t.second);
    inter.insert(std::move(right));
  }
  return Subspace(std::move(inter));
}

}  // namespace llv
