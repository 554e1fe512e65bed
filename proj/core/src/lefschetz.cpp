#include "llv/lefschetz.hpp"

#include <cassert>

#include "llv/errors.hpp"
#include "llv/matrix.hpp"
#include "llv/subspace.hpp"

namespace llv {

bool Sl2Triple::relations_hold() const {
  if (e.degree() != 2 || h.degree() != 0 || f.degree() != -2) return false;
  if (!(e.bracket(f) == h)) return false;
  if (!(h.bracket(e) == e * Rational(2))) return false;
  if (!(h.bracket(f) == f * Rational(-2))) return false;
  return true;
}

bool lefschetz_check(const GradedVectorSpace& V, const GradedOperator& e) {
  assert(e.degree() == 2);
  for (const auto& [k, d] : V.components()) {
    const int j = -V.internal_degree(k);  // e^j should map component k to its mirror
    if (j <= 0 || d == 0) continue;
    if (V.dim(k + 2 * j) != d) return false;
    SparseMatrix m = e.block_or_zero(k);
    for (int step = 1; step < j; ++step) m = e.block_or_zero(k + 2 * step) * m;
    RationalMatrix dense(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (const SparseVec::Term& t : m.row(i).terms()) dense.at(i, t.first) = t.second;
    if (dense.rank() != d) return false;
  }
  return true;
}

GradedOperator jacobson_morozov_dual(const GradedVectorSpace& V, const GradedOperator& e) {
  assert(e.degree() == 2);
  const FlattenScheme unknowns(V, -2);
  const std::size_t n = unknowns.flat_dim();

  // Row-echelonize the equations [e,f] = h in the flattened unknowns,
  // augmented with the right-hand side in an extra trailing column.
  // The degree-0 equation block at component k reads
  //   e[k-2] f[k] - f[k+2] e[k] = (k - N) id_k,
  // one scalar equation per matrix entry (i, j).
  EchelonBasis rows(n + 1);
  for (const auto& [k, dk] : V.components()) {
    if (dk == 0) continue;
    const SparseMatrix* e_in = e.block(k - 2);   // component k-2 -> k
    const SparseMatrix* e_out = e.block(k);      // component k -> k+2
    const bool has_fk = unknowns.has_block(k);       // f[k]: dk columns, dim(k-2) rows
    const bool has_fn = unknowns.has_block(k + 2);   // f[k+2]: dim(k+2) columns, dk rows
    const std::size_t dnext = V.dim(k + 2);
    const Rational diag(V.internal_degree(k));

    for (std::size_t i = 0; i < dk; ++i) {
      for (std::size_t j = 0; j < dk; ++j) {
        SparseVec row;
        if (has_fk && e_in) {
          // + sum_s e[k-2](i, s) f[k](s, j)
          for (const SparseVec::Term& t : e_in->row(i).terms())
            row.set(unknowns.coordinate(k, t.first, j), t.second);
        }
        if (has_fn && e_out) {
          // - sum_t f[k+2](i, t) e[k](t, j)
          for (std::size_t t = 0; t < dnext; ++t) {
            const Rational c = e_out->get(t, j);
            if (c != 0) {
              const std::size_t coord = unknowns.coordinate(k + 2, i, t);
              row.set(coord, row.get(coord) - c);
            }
          }
        }
        const Rational b = i == j ? diag : Rational(0);
        if (row.empty() && b == 0) continue;
        row.set(n, b);
        rows.insert(std::move(row));
      }
    }
  }

  // Inconsistency shows up as a pivot in the augmented column.
  for (std::size_t p : rows.pivots())
    if (p == n) throw NotLefschetz("no degree -2 dual: [e,f] = h has no solution");
  if (rows.dim() < n)
    throw NonUniqueDual("solution space of [e,f] = h is positive-dimensional");

  // Full-rank consistent system: read the unique solution off the RREF.
  SparseVec solution;
  const std::vector<std::size_t>& pivots = rows.pivots();
  for (std::size_t r = 0; r < rows.dim(); ++r) {
    const Rational value = rows.rows()[r].get(n);
    if (value != 0) solution.set(pivots[r], value);
  }
  return unknowns.unflatten(solution);
}

Sl2Triple sl2_triple(const GradedFrobeniusAlgebra& A, const Vec& a) {
  GradedOperator e = cup_operator(A, a);
  GradedOperator h = h_operator(A);
  GradedOperator f = jacobson_morozov_dual(A.space(), e);
  return Sl2Triple{std::move(e), std::move(h), std::move(f)};
}

}  // namespace llv
