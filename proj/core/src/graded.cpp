#include "llv/graded.hpp"

#include <algorithm>
#include <cassert>

#include "llv/errors.hpp"

namespace llv {

GradedVectorSpace::GradedVectorSpace(int shift, std::vector<Component> components)
    : shift_(shift), components_(std::move(components)) {
  for (std::size_t i = 1; i < components_.size(); ++i)
    if (components_[i - 1].first >= components_[i].first)
      throw ValidationError("component degrees must be strictly increasing");
  offsets_.reserve(components_.size());
  for (const Component& c : components_) {
    offsets_.push_back(total_dim_);
    total_dim_ += c.second;
  }
}

std::size_t GradedVectorSpace::dim(int k) const {
  for (const Component& c : components_)
    if (c.first == k) return c.second;
  return 0;
}

std::size_t GradedVectorSpace::offset(int k) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].first == k) return offsets_[i];
  throw WrongDegree("no component in degree " + std::to_string(k));
}

int GradedVectorSpace::top_degree() const {
  for (std::size_t i = components_.size(); i-- > 0;)
    if (components_[i].second > 0) return components_[i].first;
  return 0;
}

const SparseMatrix* GradedOperator::block(int k) const {
  auto it = blocks_.find(k);
  return it == blocks_.end() ? nullptr : &it->second;
}

SparseMatrix GradedOperator::block_or_zero(int k) const {
  if (const SparseMatrix* b = block(k)) return *b;
  return SparseMatrix(space_.dim(k + degree_), space_.dim(k));
}

void GradedOperator::set_block(int k, SparseMatrix m) {
  const std::size_t src = space_.dim(k);
  const std::size_t dst = space_.dim(k + degree_);
  if (m.cols() != src || m.rows() != dst)
    throw WrongDegree("block " + std::to_string(k) + " must be " + std::to_string(dst) + "x" +
                      std::to_string(src) + ", got " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()));
  if (src == 0 || dst == 0 || m.is_zero()) {
    blocks_.erase(k);
    return;
  }
  blocks_[k] = std::move(m);
}

bool GradedOperator::is_zero() const {
  for (const auto& [k, b] : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

GradedOperator GradedOperator::operator+(const GradedOperator& other) const {
  assert(space_ == other.space_ && degree_ == other.degree_);
  GradedOperator r(space_, degree_);
  for (const auto& [k, b] : blocks_) {
    if (const SparseMatrix* ob = other.block(k))
      r.set_block(k, b + *ob);
    else
      r.set_block(k, b);
  }
  for (const auto& [k, ob] : other.blocks_)
    if (!blocks_.count(k)) r.set_block(k, ob);
  return r;
}

GradedOperator GradedOperator::operator-(const GradedOperator& other) const {
  return *this + other * Rational(-1);
}

GradedOperator GradedOperator::operator*(const Rational& c) const {
  GradedOperator r(space_, degree_);
  if (c == 0) return r;
  for (const auto& [k, b] : blocks_) r.set_block(k, b * c);
  return r;
}

GradedOperator GradedOperator::compose(const GradedOperator& other) const {
  assert(space_ == other.space_);
  GradedOperator r(space_, degree_ + other.degree_);
  for (const auto& [k, ob] : other.blocks_) {
    if (const SparseMatrix* b = block(k + other.degree_)) {
      SparseMatrix prod = (*b) * ob;
      if (!prod.is_zero()) r.set_block(k, std::move(prod));
    }
  }
  return r;
}

GradedOperator GradedOperator::bracket(const GradedOperator& other) const {
  return compose(other) - other.compose(*this);
}

GradedOperator GradedOperator::power(std::size_t n) const {
  if (n == 0) return identity_operator(space_);
  GradedOperator r = *this;
  for (std::size_t i = 1; i < n; ++i) r = r.compose(*this);
  return r;
}

Vec GradedOperator::apply_component(int k, const Vec& x) const {
  assert(x.size() == space_.dim(k));
  if (const SparseMatrix* b = block(k)) return b->apply_dense(x);
  return zero_vec(space_.dim(k + degree_));
}

Vec GradedOperator::apply_total(const Vec& v) const {
  assert(v.size() == space_.total_dim());
  Vec out = zero_vec(space_.total_dim());
  for (const auto& [k, b] : blocks_) {
    const std::size_t src_off = space_.offset(k);
    const std::size_t dst_off = space_.offset(k + degree_);
    Vec x(v.begin() + static_cast<std::ptrdiff_t>(src_off),
          v.begin() + static_cast<std::ptrdiff_t>(src_off + space_.dim(k)));
    Vec y = b.apply_dense(x);
    for (std::size_t i = 0; i < y.size(); ++i) out[dst_off + i] += y[i];
  }
  return out;
}

SparseVec GradedOperator::apply_total(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [k, b] : blocks_) {
    const std::size_t src_off = space_.offset(k);
    const std::size_t dst_off = space_.offset(k + degree_);
    const std::size_t src_dim = space_.dim(k);
    SparseVec x;
    for (const SparseVec::Term& t : v.terms())
      if (t.first >= src_off && t.first < src_off + src_dim) x.set(t.first - src_off, t.second);
    if (x.empty()) continue;
    out.axpy(Rational(1), b.apply(x).shifted(dst_off));
  }
  return out;
}

SparseMatrix GradedOperator::total_matrix() const {
  const std::size_t n = space_.total_dim();
  SparseMatrix m(n, n);
  for (const auto& [k, b] : blocks_) {
    const std::size_t src_off = space_.offset(k);
    const std::size_t dst_off = space_.offset(k + degree_);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (const SparseVec::Term& t : b.row(i).terms())
        m.set(dst_off + i, src_off + t.first, t.second);
  }
  return m;
}

bool GradedOperator::operator==(const GradedOperator& other) const {
  if (!(space_ == other.space_) || degree_ != other.degree_) return false;
  return (*this - other).is_zero();
}

GradedOperator identity_operator(const GradedVectorSpace& V) {
  GradedOperator id(V, 0);
  for (const auto& [k, d] : V.components())
    if (d > 0) id.set_block(k, SparseMatrix::identity(d));
  return id;
}

FlattenScheme::FlattenScheme(const GradedVectorSpace& V, int degree)
    : space_(V), degree_(degree), flat_dim_(0) {
  for (const auto& [k, src_dim] : V.components()) {
    const std::size_t dst_dim = V.dim(k + degree);
    if (src_dim == 0 || dst_dim == 0) continue;
    slots_.push_back(BlockSlot{k, dst_dim, src_dim, 0});
  }
  std::stable_sort(slots_.begin(), slots_.end(), [](const BlockSlot& a, const BlockSlot& b) {
    const std::size_t sa = a.rows * a.cols, sb = b.rows * b.cols;
    if (sa != sb) return sa < sb;
    return a.source_degree < b.source_degree;
  });
  for (BlockSlot& s : slots_) {
    s.offset = flat_dim_;
    flat_dim_ += s.rows * s.cols;
  }
}

SparseVec FlattenScheme::flatten(const GradedOperator& op) const {
  assert(op.space() == space_ && op.degree() == degree_);
  std::vector<SparseVec::Term> terms;
  for (const BlockSlot& s : slots_) {
    const SparseMatrix* b = op.block(s.source_degree);
    if (!b) continue;
    for (std::size_t i = 0; i < b->rows(); ++i)
      for (const SparseVec::Term& t : b->row(i).terms())
        terms.emplace_back(s.offset + i * s.cols + t.first, t.second);
  }
  return SparseVec(std::move(terms));
}

std::size_t FlattenScheme::coordinate(int source_degree, std::size_t row, std::size_t col) const {
  for (const BlockSlot& s : slots_)
    if (s.source_degree == source_degree) {
      assert(row < s.rows && col < s.cols);
      return s.offset + row * s.cols + col;
    }
  throw WrongDegree("no block with source degree " + std::to_string(source_degree));
}

bool FlattenScheme::has_block(int source_degree) const {
  for (const BlockSlot& s : slots_)
    if (s.source_degree == source_degree) return true;
  return false;
}

GradedOperator FlattenScheme::unflatten(const SparseVec& v) const {
  GradedOperator op(space_, degree_);
  std::size_t slot_idx = 0;
  std::map<int, SparseMatrix> blocks;
  for (const SparseVec::Term& t : v.terms()) {
    while (slot_idx < slots_.size() &&
           t.first >= slots_[slot_idx].offset + slots_[slot_idx].rows * slots_[slot_idx].cols)
      ++slot_idx;
    assert(slot_idx < slots_.size() && t.first >= slots_[slot_idx].offset);
    const BlockSlot& s = slots_[slot_idx];
    auto [it, inserted] = blocks.try_emplace(s.source_degree, s.rows, s.cols);
    const std::size_t local = t.first - s.offset;
    it->second.set(local / s.cols, local % s.cols, t.second);
  }
  for (auto& [k, b] : blocks) op.set_block(k, std::move(b));
  return op;
}

}  // namespace llv
