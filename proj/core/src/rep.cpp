#include "llv/rep.hpp"

#include <random>

#include "llv/errors.hpp"
#include "llv/poly.hpp"

namespace llv {

Subspace prim_subspace(const LieOperatorAlgebra& g) {
  const std::size_t n = g.ambient().total_dim();
  const std::vector<GradedOperator>& lowering = g.basis(-2);
  if (lowering.empty()) {
    EchelonBasis all(n);
    for (std::size_t i = 0; i < n; ++i) all.insert(SparseVec::unit(i));
    return Subspace(std::move(all));
  }
  RationalMatrix stacked(lowering.size() * n, n);
  for (std::size_t t = 0; t < lowering.size(); ++t) {
    const SparseMatrix m = lowering[t].total_matrix();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (const auto& [j, c] : m.row(i).terms()) stacked.at(t * n + i, j) = c;
  }
  return stacked.kernel();
}

Subspace submodule_generated(const LieOperatorAlgebra& g, const std::vector<Vec>& seeds) {
  const std::size_t n = g.ambient().total_dim();
  const std::vector<GradedOperator> ops = g.full_basis();
  EchelonBasis span(n);
  std::vector<SparseVec> worklist;
  for (const Vec& seed : seeds) {
    SparseVec v = SparseVec::from_dense(seed);
    if (span.insert(v)) worklist.push_back(std::move(v));
  }
  while (!worklist.empty() && span.dim() < n) {
    const SparseVec v = std::move(worklist.back());
    worklist.pop_back();
    for (const GradedOperator& op : ops) {
      SparseVec image = op.apply_total(v);
      if (span.insert(image)) worklist.push_back(std::move(image));
    }
  }
  return Subspace(std::move(span));
}

std::map<int, Subspace> verbitsky_subring(const GradedFrobeniusAlgebra& A) {
  std::map<int, Subspace> out;
  const std::size_t d2 = A.space().dim(2);
  for (const auto& [k, dim] : A.space().components()) {
    if (k == A.space().components().front().first) {
      EchelonBasis unit_span(dim);
      unit_span.insert(SparseVec::from_dense(A.unit()));
      out.emplace(k, Subspace(std::move(unit_span)));
      continue;
    }
    EchelonBasis span(dim);
    const auto below = out.find(k - 2);
    if (below != out.end() && d2 > 0) {
      for (std::size_t i = 0; i < d2; ++i) {
        Vec a = zero_vec(d2);
        a[i] = Rational(1);
        for (const Vec& b : below->second.basis_dense())
          span.insert(SparseVec::from_dense(A.multiply(2, a, k - 2, b)));
      }
    }
    out.emplace(k, Subspace(std::move(span)));
  }
  return out;
}

bool weil_parity_check(const GradedOperator& W) {
  if (W.degree() != 0) throw WrongDegree("parity check needs a degree-0 operator");
  for (const auto& [k, dim] : W.space().components()) {
    if (dim == 0) continue;
    const Poly minpoly = minimal_polynomial(W.block_or_zero(k));
    Poly allowed = Poly::constant(Rational(1));
    const int bound = k < 0 ? -k : k;
    for (int m = bound % 2; m <= bound; m += 2)
      allowed = allowed * (m == 0 ? Poly::linear(Rational(0))
                                  : Poly::quadratic_plus(Rational(m) * Rational(m)));
    if (!poly_divides(minpoly, allowed)) return false;
  }
  return true;
}

WitnessReport irreducibility_witness(const LieOperatorAlgebra& g, std::size_t random_starts,
                                     std::uint64_t seed) {
  const std::size_t n = g.ambient().total_dim();
  WitnessReport report;
  report.seed = seed;
  report.passed = true;

  std::vector<Vec> starts;
  starts.reserve(n + random_starts);
  for (std::size_t i = 0; i < n; ++i) {
    Vec v = zero_vec(n);
    v[i] = Rational(1);
    starts.push_back(std::move(v));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < random_starts; ++s) {
    Vec v = zero_vec(n);
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      const long entry = static_cast<long>(rng() % 7) - 3;
      v[i] = Rational(entry);
      nonzero = nonzero || entry != 0;
    }
    if (!nonzero) v[0] = Rational(1);
    starts.push_back(std::move(v));
  }

  for (const Vec& start : starts) {
    ++report.starts;
    if (submodule_generated(g, {start}).dim() != n) {
      report.passed = false;
      break;
    }
  }
  return report;
}

std::optional<std::pair<Vec, Vec>> find_weil_pair(const QuadraticSpace& q) {
  const std::size_t r = q.dim();
  std::vector<Vec> pool;
  for (std::size_t i = 0; i < r; ++i) {
    Vec v = zero_vec(r);
    v[i] = Rational(1);
    pool.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      for (const int s : {1, -1}) {
        Vec v = zero_vec(r);
        v[i] = Rational(1);
        v[j] = Rational(s);
        pool.push_back(std::move(v));
      }
    }
  }
  for (std::size_t a = 0; a < pool.size(); ++a) {
    const Rational na = q.q(pool[a], pool[a]);
    if (na == 0) continue;
    for (std::size_t b = a + 1; b < pool.size(); ++b) {
      if (q.q(pool[a], pool[b]) != 0) continue;
      if (q.q(pool[b], pool[b]) != na) continue;
      return std::make_pair(pool[a], pool[b]);
    }
  }
  return std::nullopt;
}

}  // namespace llv
