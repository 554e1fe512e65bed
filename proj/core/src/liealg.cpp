#include "llv/liealg.hpp"

#include <algorithm>
#include <cassert>

#include "llv/errors.hpp"

namespace llv {

std::size_t LieOperatorAlgebra::dim() const {
  std::size_t n = 0;
  for (const auto& [d, p] : pieces_) n += p.basis.dim();
  return n;
}

std::vector<int> LieOperatorAlgebra::degrees() const {
  std::vector<int> ds;
  for (const auto& [d, p] : pieces_)
    if (p.basis.dim() > 0) ds.push_back(d);
  return ds;
}

std::size_t LieOperatorAlgebra::degree_dim(int d) const {
  const Piece* p = find_piece(d);
  return p ? p->basis.dim() : 0;
}

Subspace LieOperatorAlgebra::degree_subspace(int d) const {
  const Piece* p = find_piece(d);
  if (!p) return Subspace(FlattenScheme(ambient_, d).flat_dim());
  return Subspace(p->basis);
}

const FlattenScheme& LieOperatorAlgebra::scheme(int d) const {
  const Piece* p = find_piece(d);
  if (!p) throw WrongDegree("no piece of degree " + std::to_string(d));
  return p->scheme;
}

const std::vector<GradedOperator>& LieOperatorAlgebra::basis(int d) const {
  static const std::vector<GradedOperator> empty;
  const Piece* p = find_piece(d);
  if (!p) return empty;
  if (!p->ops_fresh) {
    p->ops.clear();
    p->ops.reserve(p->basis.dim());
    for (const SparseVec& row : p->basis.rows()) p->ops.push_back(p->scheme.unflatten(row));
    p->ops_fresh = true;
  }
  return p->ops;
}

std::vector<GradedOperator> LieOperatorAlgebra::full_basis() const {
  std::vector<GradedOperator> out;
  out.reserve(dim());
  for (const auto& [d, p] : pieces_) {
    const std::vector<GradedOperator>& ops = basis(d);
    out.insert(out.end(), ops.begin(), ops.end());
  }
  return out;
}

bool LieOperatorAlgebra::contains(const GradedOperator& op) const {
  if (op.is_zero()) return true;
  const Piece* p = find_piece(op.degree());
  if (!p) return false;
  return p->basis.contains(p->scheme.flatten(op));
}

std::optional<Vec> LieOperatorAlgebra::coordinates_in_degree(const GradedOperator& op) const {
  const Piece* p = find_piece(op.degree());
  if (!p) return op.is_zero() ? std::optional<Vec>(Vec{}) : std::nullopt;
  return p->basis.coordinates(p->scheme.flatten(op));
}

bool LieOperatorAlgebra::insert(const GradedOperator& op) {
  if (op.is_zero()) return false;
  assert(op.space() == ambient_);
  Piece& p = piece(op.degree());
  const bool grew = p.basis.insert(p.scheme.flatten(op));
  if (grew) p.ops_fresh = false;
  return grew;
}

Subspace LieOperatorAlgebra::flattened_basis() const {
  const std::size_t n = ambient_.total_dim();
  EchelonBasis all(n * n);
  for (const auto& [d, p] : pieces_) {
    for (const GradedOperator& op : basis(d)) {
      SparseVec flat;
      for (const auto& [k, block] : op.blocks()) {
        const std::size_t src_off = ambient_.offset(k);
        const std::size_t dst_off = ambient_.offset(k + d);
        for (std::size_t i = 0; i < block.rows(); ++i)
          for (const SparseVec::Term& t : block.row(i).terms())
            flat.set((dst_off + i) * n + src_off + t.first, t.second);
      }
      all.insert(std::move(flat));
    }
  }
  return Subspace(std::move(all));
}

LieOperatorAlgebra::Piece& LieOperatorAlgebra::piece(int d) {
  auto it = pieces_.find(d);
  if (it == pieces_.end()) {
    FlattenScheme scheme(ambient_, d);
    EchelonBasis basis(scheme.flat_dim());
    it = pieces_.emplace(d, Piece{std::move(scheme), std::move(basis), {}, false}).first;
  }
  return it->second;
}

const LieOperatorAlgebra::Piece* LieOperatorAlgebra::find_piece(int d) const {
  auto it = pieces_.find(d);
  return it == pieces_.end() ? nullptr : &it->second;
}

LieOperatorAlgebra lie_closure(const std::vector<GradedOperator>& generators) {
  if (generators.empty()) return LieOperatorAlgebra();
  const GradedVectorSpace& space = generators.front().space();
  for (const GradedOperator& g : generators) {
    assert(g.space() == space);
    (void)g;
  }
  LieOperatorAlgebra g(space);
  for (const GradedOperator& gen : generators) g.insert(gen);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<GradedOperator> snapshot = g.full_basis();
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j)
        if (g.insert(snapshot[i].bracket(snapshot[j]))) grew = true;
  }
  return g;
}

std::map<int, Subspace> degree_pieces(const LieOperatorAlgebra& g) {
  std::map<int, Subspace> out;
  std::size_t total = 0;
  for (int d : g.degrees()) {
    out.emplace(d, g.degree_subspace(d));
    total += g.degree_dim(d);
  }
  if (total != g.dim()) throw ValidationError("degree pieces do not sum to the algebra");
  return out;
}

LieOperatorAlgebra derived_subalgebra(const LieOperatorAlgebra& g) {
  const std::vector<GradedOperator> basis = g.full_basis();
  std::vector<GradedOperator> brackets;
  brackets.reserve(basis.size() * (basis.size() + 1) / 2);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      GradedOperator b = basis[i].bracket(basis[j]);
      if (!b.is_zero()) brackets.push_back(std::move(b));
    }
  if (brackets.empty()) return LieOperatorAlgebra(g.ambient());
  return lie_closure(brackets);
}

G0Decomposition decompose_g0(const LieOperatorAlgebra& g) {
  const GradedVectorSpace& V = g.ambient();
  GradedOperator h(V, 0);
  for (const auto& [k, d] : V.components()) {
    if (d == 0 || V.internal_degree(k) == 0) continue;
    h.set_block(k, SparseMatrix::identity(d) * Rational(V.internal_degree(k)));
  }

  // The degree-0 piece as its own algebra.
  LieOperatorAlgebra g0(V);
  for (const GradedOperator& op : g.basis(0)) g0.insert(op);
  if (!g0.contains(h)) throw NotDirectSum("h does not lie in the degree-0 piece");

  LieOperatorAlgebra g0prime = derived_subalgebra(g0);
  if (g0prime.contains(h)) throw NotDirectSum("h lies in the derived part of g_0");
  if (g0prime.dim() + 1 != g0.dim())
    throw NotDirectSum("g_0 is not the direct sum of its derived part and Q h");
  return G0Decomposition{std::move(g0prime), std::move(h)};
}

KillingForm killing_form(const LieOperatorAlgebra& g) {
  const std::vector<int> degs = g.degrees();
  std::map<int, std::size_t> offset;
  std::size_t m = 0;
  for (int d : degs) {
    offset[d] = m;
    m += g.degree_dim(d);
  }
  std::vector<const GradedOperator*> basis;
  std::vector<int> basis_degree;
  basis.reserve(m);
  for (int d : degs)
    for (const GradedOperator& op : g.basis(d)) {
      basis.push_back(&op);
      basis_degree.push_back(d);
    }

  // ad matrices in the closure basis coordinates.
  std::vector<SparseMatrix> ad(m, SparseMatrix(m, m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      GradedOperator b = basis[i]->bracket(*basis[j]);
      if (b.is_zero()) continue;
      const std::optional<Vec> coords = g.coordinates_in_degree(b);
      if (!coords) throw ValidationError("algebra is not bracket-closed");
      const std::size_t off = offset.at(b.degree());
      for (std::size_t k = 0; k < coords->size(); ++k)
        if ((*coords)[k] != 0) ad[i].set(off + k, j, (*coords)[k]);
    }

  RationalMatrix K(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Rational s(0);
      for (std::size_t a = 0; a < m; ++a)
        for (const SparseVec::Term& t : ad[i].row(a).terms()) s += t.second * ad[j].get(t.first, a);
      K.at(i, j) = s;
      K.at(j, i) = s;
    }

  KillingForm result;
  result.nondegenerate = K.rank() == m;
  result.signature = K.signature();
  result.matrix = std::move(K);
  return result;
}

bool infinitesimal_invariance_check(const std::vector<SparseMatrix>& ops,
                                    const RationalMatrix& form) {
  const std::size_t n = form.rows();
  assert(form.cols() == n);
  for (const SparseMatrix& M : ops) {
    assert(M.rows() == n && M.cols() == n);
    // Check M^T F + F M = 0 entrywise: for entry (x, y),
    //   sum_i M(i,x) F(i,y) + sum_j F(x,j) M(j,y) = 0.
    RationalMatrix acc(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (const SparseVec::Term& t : M.row(i).terms()) {
        // M(i, t.first) contributes to row t.first via M^T F and to
        // column t.first via F M.
        for (std::size_t y = 0; y < n; ++y)
          if (form.at(i, y) != 0) acc.at(t.first, y) += t.second * form.at(i, y);
        for (std::size_t x = 0; x < n; ++x)
          if (form.at(x, i) != 0) acc.at(x, t.first) += form.at(x, i) * t.second;
      }
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool infinitesimal_invariance_check(const std::vector<GradedOperator>& ops,
                                    const RationalMatrix& form) {
  std::vector<SparseMatrix> mats;
  mats.reserve(ops.size());
  for (const GradedOperator& op : ops) mats.push_back(op.total_matrix());
  return infinitesimal_invariance_check(mats, form);
}

bool derivation_check(const GradedOperator& u, const GradedFrobeniusAlgebra& A) {
  const GradedVectorSpace& V = A.space();
  const int d = u.degree();
  for (const auto& [k, dk] : V.components())
    for (const auto& [l, dl] : V.components()) {
      if (dk == 0 || dl == 0) continue;
      if (V.dim(k + l + d) == 0 && V.dim(k + l) == 0) continue;
      for (std::size_t i = 0; i < dk; ++i) {
        Vec x = zero_vec(dk);
        x[i] = 1;
        const Vec ux = u.apply_component(k, x);
        for (std::size_t j = 0; j < dl; ++j) {
          Vec y = zero_vec(dl);
          y[j] = 1;
          const Vec xy = A.basis_product(k, i, l, j);
          const Vec lhs = u.apply_component(k + l, xy);
          Vec rhs = A.multiply(k + d, ux, l, y);
          const Vec uy = u.apply_component(l, y);
          rhs = add(rhs, A.multiply(k, x, l + d, uy));
          if (lhs != rhs) return false;
        }
      }
    }
  return true;
}

bool restriction_injectivity(const LieOperatorAlgebra& g, int source_degree) {
  // Stack the source_degree blocks of all basis operators, one region per
  // operator degree, and test that the resulting rows are independent.
  const GradedVectorSpace& V = g.ambient();
  const std::size_t src = V.dim(source_degree);
  if (g.dim() == 0) return true;
  if (src == 0) return false;
  const std::vector<int> degs = g.degrees();
  std::map<int, std::size_t> region;
  std::size_t width = 0;
  for (int d : degs) {
    region[d] = width;
    width += V.dim(source_degree + d) * src;
  }
  EchelonBasis rows(width);
  std::size_t rank = 0;
  for (int d : degs) {
    const std::size_t off = region[d];
    for (const GradedOperator& op : g.basis(d)) {
      SparseVec flat;
      if (const SparseMatrix* b = op.block(source_degree))
        for (std::size_t i = 0; i < b->rows(); ++i)
          for (const SparseVec::Term& t : b->row(i).terms())
            flat.set(off + i * src + t.first, t.second);
      if (rows.insert(std::move(flat))) ++rank;
    }
  }
  return rank == g.dim();
}

bool restriction_injectivity(const LieOperatorAlgebra& g, const Subspace& S) {
  const std::size_t s = S.dim();
  if (g.dim() == 0) return true;
  EchelonBasis rows(s * s);
  std::size_t rank = 0;
  for (int d : g.degrees())
    for (const GradedOperator& op : g.basis(d)) {
      SparseVec flat;
      std::size_t col = 0;
      for (const SparseVec& v : S.basis().rows()) {
        const SparseVec image = op.apply_total(v);
        const std::optional<Vec> coords = S.basis().coordinates(image);
        if (!coords) throw ValidationError("subspace is not invariant under the algebra");
        for (std::size_t i = 0; i < s; ++i)
          if ((*coords)[i] != 0) flat.set(i * s + col, (*coords)[i]);
        ++col;
      }
      if (rows.insert(std::move(flat))) ++rank;
    }
  return rank == g.dim();
}

QuadraticSpace mukai_extend(const QuadraticSpace& q) {
  RationalMatrix u(2, 2);
  u.at(0, 1) = 1;
  u.at(1, 0) = 1;
  return q.direct_sum(QuadraticSpace(std::move(u)));
}

RationalMatrix wedge2_so_map(const QuadraticSpace& q, const Vec& x, const Vec& y) {
  if (!q.nondegenerate()) throw Degenerate("wedge2_so_map needs a nondegenerate form");
  const std::size_t n = q.dim();
  assert(x.size() == n && y.size() == n);
  RationalMatrix M(n, n);
  const Rational half(1, 2);
  for (std::size_t j = 0; j < n; ++j) {
    Vec ej = zero_vec(n);
    ej[j] = 1;
    const Rational qxe = q.q(x, ej);
    const Rational qye = q.q(y, ej);
    for (std::size_t i = 0; i < n; ++i) M.at(i, j) = half * (qxe * y[i] - qye * x[i]);
  }
  return M;
}

std::vector<Vec> lefschetz_spanning_family(const GradedFrobeniusAlgebra& A) {
  const std::size_t r = A.space().dim(2);
  if (r == 0) throw NotLefschetz("the algebra has no degree-2 component");
  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < r; ++i) {
    Vec a = zero_vec(r);
    a[i] = 1;
    candidates.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      Vec a = zero_vec(r);
      a[i] = 1;
      a[j] = 1;
      candidates.push_back(std::move(a));
    }
  std::vector<Vec> family;
  EchelonBasis span(r);
  for (Vec& a : candidates) {
    if (span.dim() == r) break;
    if (!span.contains(SparseVec::from_dense(a))) {
      if (lefschetz_check(A.space(), cup_operator(A, a))) {
        span.insert(SparseVec::from_dense(a));
        family.push_back(std::move(a));
      }
    }
  }
  if (span.dim() != r)
    throw NotLefschetz("Lefschetz candidates do not span the degree-2 component");
  return family;
}

LlvClosure llv_closure(const GradedFrobeniusAlgebra& A) {
  LlvClosure out;
  out.family = lefschetz_spanning_family(A);
  std::vector<GradedOperator> generators;
  for (const Vec& a : out.family) {
    Sl2Triple triple = sl2_triple(A, a);
    generators.push_back(triple.e);
    generators.push_back(triple.h);
    generators.push_back(triple.f);
    out.triples.push_back(std::move(triple));
  }
  out.algebra = lie_closure(generators);
  return out;
}

std::vector<RationalMatrix> skew_algebra_basis(const RationalMatrix& D) {
  const std::size_t n = D.rows();
  assert(D.cols() == n);
  // Solve M^T D + D M = 0 for the n^2 entries of M.
  RationalMatrix system(n * n, n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t eq = x * n + y;
      // sum_i M(i,x) D(i,y) + sum_j D(x,j) M(j,y) = 0
      for (std::size_t i = 0; i < n; ++i) {
        if (D.at(i, y) != 0) system.at(eq, i * n + x) += D.at(i, y);
        if (D.at(x, i) != 0) system.at(eq, i * n + y) += D.at(x, i);
      }
    }
  std::vector<RationalMatrix> basis;
  for (const Vec& v : system.kernel().basis_dense()) {
    RationalMatrix M(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M.at(i, j) = v[i * n + j];
    basis.push_back(std::move(M));
  }
  return basis;
}

KillingForm matrix_killing_form(const std::vector<RationalMatrix>& basis) {
  const std::size_t m = basis.size();
  const std::size_t n = m == 0 ? 0 : basis[0].rows();
  EchelonBasis flat(n * n);
  for (const RationalMatrix& M : basis) {
    SparseVec v;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (M.at(i, j) != 0) v.set(i * n + j, M.at(i, j));
    if (!flat.insert(std::move(v)))
      throw ValidationError("matrix basis is linearly dependent");
  }
  auto coords_of = [&flat, n](const RationalMatrix& M) {
    SparseVec v;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (M.at(i, j) != 0) v.set(i * n + j, M.at(i, j));
    std::optional<Vec> c = flat.coordinates(v);
    if (!c) throw ValidationError("matrix algebra is not bracket-closed");
    return *c;
  };
  // Note: flat.coordinates gives coefficients in the echelonized rows, not
  // the input basis; build ad in those canonical coordinates throughout.
  std::vector<RationalMatrix> canon;
  canon.reserve(m);
  for (const SparseVec& row : flat.rows()) {
    RationalMatrix M(n, n);
    for (const SparseVec::Term& t : row.terms()) M.at(t.first / n, t.first % n) = t.second;
    canon.push_back(std::move(M));
  }
  std::vector<RationalMatrix> ad(m, RationalMatrix(m, m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const RationalMatrix b = canon[i] * canon[j] - canon[j] * canon[i];
      const Vec c = coords_of(b);
      for (std::size_t k = 0; k < m; ++k) ad[i].at(k, j) = c[k];
    }
  RationalMatrix K(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Rational s(0);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          if (ad[i].at(a, b) != 0 && ad[j].at(b, a) != 0) s += ad[i].at(a, b) * ad[j].at(b, a);
      K.at(i, j) = s;
      K.at(j, i) = s;
    }
  KillingForm result;
  result.nondegenerate = K.rank() == m;
  result.signature = K.signature();
  result.matrix = std::move(K);
  return result;
}

}  // namespace llv
