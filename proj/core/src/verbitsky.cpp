#include "llv/verbitsky.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "llv/errors.hpp"

namespace llv {

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Rational rational_pow(const Rational& a, int e) {
  Rational out(1);
  for (int i = 0; i < e; ++i) out *= a;
  return out;
}

/// Largest symmetric-power dimension the component builder will attempt.
constexpr unsigned long kDeskScaleLimit = 200000;

void enumerate_exponents(std::size_t pos, int remaining, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    current[pos] = a;
    enumerate_exponents(pos + 1, remaining - a, current, out);
  }
}

/// x_var * (vector in source coordinates), as a vector in target coordinates.
SparseVec shift_by_variable(const SymmetricPower& source, const SymmetricPower& target,
                            const SparseVec& v, std::size_t var) {
  std::vector<SparseVec::Term> terms;
  terms.reserve(v.terms().size());
  for (const auto& [idx, c] : v.terms()) {
    std::vector<int> exponent = source.exponents()[idx];
    ++exponent[var];
    terms.emplace_back(target.index_of(exponent), c);
  }
  return SparseVec(std::move(terms));
}

/// Quotient coordinates of an ideal residual: the residual of a full
/// reduction is supported on free columns, which are exactly the complement
/// monomials in increasing order.
Vec residual_coordinates(const SparseVec& residual, const std::vector<std::size_t>& complement) {
  Vec coords = zero_vec(complement.size());
  std::size_t pos = 0;
  for (const auto& [idx, c] : residual.terms()) {
    while (pos < complement.size() && complement[pos] < idx) ++pos;
    if (pos == complement.size() || complement[pos] != idx)
      throw ValidationError("ideal residual is not supported on complement monomials");
    coords[pos] = c;
  }
  return coords;
}

Rational q_on_support(const RationalMatrix& gram,
                      const std::vector<std::pair<std::size_t, Rational>>& support) {
  Rational total(0);
  for (const auto& [a, x] : support)
    for (const auto& [b, y] : support) total += x * y * gram.at(a, b);
  return total;
}

}  // namespace

SymmetricPower::SymmetricPower(QuadraticSpace base, int degree)
    : base_(std::move(base)), degree_(degree) {
  if (degree < 0) throw WrongDegree("symmetric power degree must be nonnegative");
  const std::size_t r = base_.dim();
  if (r == 0) {
    if (degree == 0) exponents_.push_back({});
  } else {
    std::vector<int> current(r, 0);
    enumerate_exponents(0, degree, current, exponents_);
  }
  for (std::size_t i = 0; i < exponents_.size(); ++i) index_.emplace(exponents_[i], i);
}

std::size_t SymmetricPower::index_of(const std::vector<int>& exponent) const {
  const auto it = index_.find(exponent);
  if (it == index_.end()) throw ValidationError("exponent is not a monomial of this power");
  return it->second;
}

RationalMatrix contraction_laplacian(const QuadraticSpace& q, int m) {
  if (!q.nondegenerate()) throw Degenerate("contraction requires a nondegenerate form");
  const SymmetricPower source(q, std::max(m, 0));
  if (m < 2) return RationalMatrix(0, source.dim());
  const SymmetricPower target(q, m - 2);
  const std::size_t r = q.dim();
  RationalMatrix out(target.dim(), source.dim());
  for (std::size_t col = 0; col < source.dim(); ++col) {
    const std::vector<int>& a = source.exponents()[col];
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        const Rational& g = q.gram().at(i, j);
        if (g == 0) continue;
        const long factor = static_cast<long>(a[j]) * (a[i] - (i == j ? 1 : 0));
        if (factor == 0) continue;
        std::vector<int> b = a;
        --b[i];
        --b[j];
        out.at(target.index_of(b), col) += g * Rational(factor);
      }
    }
  }
  return out;
}

Subspace harmonic_subspace(const QuadraticSpace& q, int m) {
  return contraction_laplacian(q, m).kernel();
}

std::vector<std::size_t> VerbitskyComponent::dims() const {
  std::vector<std::size_t> out;
  out.reserve(complement_.size());
  for (const auto& c : complement_) out.push_back(c.size());
  return out;
}

Vec VerbitskyComponent::reduce(int k, const Vec& sym_vector) const {
  if (k < 0 || k > 2 * n_) throw WrongDegree("degree outside the component range");
  const auto d = static_cast<std::size_t>(k);
  if (sym_vector.size() != sym_[d].dim())
    throw WrongDegree("vector size does not match the symmetric power");
  return residual_coordinates(ideal_[d].reduce(SparseVec::from_dense(sym_vector)),
                              complement_[d]);
}

VerbitskyComponent verbitsky_component(const QuadraticSpace& q, int n) {
  if (!q.nondegenerate()) throw Degenerate("component requires a nondegenerate form");
  if (n < 1) throw ValidationError("weight parameter must be at least 1");
  const std::size_t r = q.dim();
  if (r == 0) throw ValidationError("component requires a positive-dimensional space");
  const mpz_class largest =
      binomial(static_cast<unsigned long>(r) + 2 * static_cast<unsigned long>(n),
               2 * static_cast<unsigned long>(n) + 1);
  if (largest > kDeskScaleLimit)
    throw ValidationError("requested rank and weight need symmetric powers of dimension " +
                          largest.get_str() + ", above the built-in limit of " +
                          std::to_string(kDeskScaleLimit));

  VerbitskyComponent A;
  A.q_ = q;
  A.n_ = n;
  const std::size_t pieces = 2 * static_cast<std::size_t>(n) + 1;
  A.sym_.reserve(pieces);
  for (std::size_t k = 0; k < pieces; ++k) A.sym_.emplace_back(q, static_cast<int>(k));

  A.ideal_.reserve(pieces);
  for (std::size_t k = 0; k < pieces; ++k) A.ideal_.emplace_back(A.sym_[k].dim());
  A.ideal_[static_cast<std::size_t>(n) + 1] = harmonic_subspace(q, n + 1).basis();
  for (std::size_t d = static_cast<std::size_t>(n) + 2; d < pieces; ++d) {
    for (const SparseVec& row : A.ideal_[d - 1].rows()) {
      for (std::size_t i = 0; i < r; ++i)
        A.ideal_[d].insert(shift_by_variable(A.sym_[d - 1], A.sym_[d], row, i));
    }
  }

  {
    const SymmetricPower beyond(q, 2 * n + 1);
    EchelonBasis truncation(beyond.dim());
    const EchelonBasis& top_ideal = A.ideal_[pieces - 1];
    for (const SparseVec& row : top_ideal.rows()) {
      for (std::size_t i = 0; i < r && truncation.dim() < beyond.dim(); ++i)
        truncation.insert(shift_by_variable(A.sym_[pieces - 1], beyond, row, i));
      if (truncation.dim() == beyond.dim()) break;
    }
    if (truncation.dim() != beyond.dim())
      throw TruncationFailure("quotient does not vanish in degree " + std::to_string(2 * n + 1));
  }

  A.complement_.reserve(pieces);
  for (std::size_t k = 0; k < pieces; ++k) {
    const std::vector<std::size_t>& pivots = A.ideal_[k].pivots();
    std::vector<std::size_t> free;
    free.reserve(A.sym_[k].dim() - pivots.size());
    std::size_t next = 0;
    for (std::size_t idx = 0; idx < A.sym_[k].dim(); ++idx) {
      if (next < pivots.size() && pivots[next] == idx) {
        ++next;
        continue;
      }
      free.push_back(idx);
    }
    A.complement_.push_back(std::move(free));
  }

  std::vector<GradedVectorSpace::Component> components;
  for (std::size_t k = 0; k < pieces; ++k)
    if (!A.complement_[k].empty())
      components.emplace_back(2 * static_cast<int>(k), A.complement_[k].size());
  GradedVectorSpace space(2 * n, std::move(components));

  Vec integral = zero_vec(A.complement_[pieces - 1].size());
  if (!integral.empty()) integral[0] = Rational(1);
  A.algebra_ = GradedFrobeniusAlgebra("verbitsky-r" + std::to_string(r) + "-n" + std::to_string(n),
                                      std::move(space), Vec{Rational(1)}, std::move(integral));

  for (std::size_t k = 0; k < pieces; ++k) {
    for (std::size_t l = 0; k + l < pieces; ++l) {
      const auto& left = A.complement_[k];
      const auto& right = A.complement_[l];
      const std::size_t d = k + l;
      for (std::size_t i = 0; i < left.size(); ++i) {
        const std::vector<int>& ea = A.sym_[k].exponents()[left[i]];
        for (std::size_t j = 0; j < right.size(); ++j) {
          const std::vector<int>& eb = A.sym_[l].exponents()[right[j]];
          std::vector<int> sum(r);
          for (std::size_t t = 0; t < r; ++t) sum[t] = ea[t] + eb[t];
          const SparseVec mono = SparseVec::unit(A.sym_[d].index_of(sum));
          A.algebra_.set_basis_product(
              2 * static_cast<int>(k), i, 2 * static_cast<int>(l), j,
              residual_coordinates(A.ideal_[d].reduce(mono), A.complement_[d]));
        }
      }
    }
  }
  return A;
}

bool perfect_pairing_check(const VerbitskyComponent& A) {
  const GradedFrobeniusAlgebra& alg = A.algebra();
  const std::vector<std::size_t> dims = A.dims();
  const int top = 4 * A.n();
  for (int k = 0; 2 * k <= 2 * A.n(); ++k) {
    const std::size_t dk = dims[static_cast<std::size_t>(k)];
    const std::size_t dl = dims[static_cast<std::size_t>(2 * A.n() - k)];
    if (dk != dl) return false;
    RationalMatrix pairing(dk, dl);
    for (std::size_t i = 0; i < dk; ++i)
      for (std::size_t j = 0; j < dl; ++j)
        pairing.at(i, j) =
            alg.integrate(top, alg.basis_product(2 * k, i, 2 * (2 * A.n() - k), j));
    if (pairing.rank() != dk) return false;
  }
  return true;
}

bool isotropic_power_check(const VerbitskyComponent& A, const Vec& alpha) {
  const std::size_t r = A.q().dim();
  if (alpha.size() != r) throw ValidationError("vector size does not match the form");
  if (A.q().q(alpha, alpha) != 0) throw NotIsotropic("vector has nonzero self-pairing");

  const int m = A.n() + 1;
  const SymmetricPower& power = A.sym(m);
  std::vector<mpz_class> factorial(static_cast<std::size_t>(m) + 1, mpz_class(1));
  for (std::size_t i = 1; i < factorial.size(); ++i)
    factorial[i] = factorial[i - 1] * static_cast<unsigned long>(i);

  std::vector<SparseVec::Term> terms;
  for (std::size_t idx = 0; idx < power.dim(); ++idx) {
    const std::vector<int>& exponent = power.exponents()[idx];
    Rational coeff = Rational(factorial[static_cast<std::size_t>(m)]);
    bool zero = false;
    for (std::size_t i = 0; i < r && !zero; ++i) {
      if (exponent[i] == 0) continue;
      if (alpha[i] == 0) {
        zero = true;
        break;
      }
      coeff /= Rational(factorial[static_cast<std::size_t>(exponent[i])]);
      coeff *= rational_pow(alpha[i], exponent[i]);
    }
    if (!zero && coeff != 0) terms.emplace_back(idx, coeff);
  }
  return A.ideal(m).contains(SparseVec(std::move(terms)));
}

std::vector<Vec> enumerate_isotropic(const QuadraticSpace& q, std::size_t max_count) {
  const std::size_t r = q.dim();
  const RationalMatrix& gram = q.gram();
  std::vector<Vec> results;
  std::set<Vec> seen;

  const auto push = [&](const std::vector<std::pair<std::size_t, Rational>>& support) {
    if (results.size() >= max_count) return;
    Vec v = zero_vec(r);
    for (const auto& [idx, c] : support) v[idx] += c;
    Rational lead(0);
    for (const Rational& c : v)
      if (c != 0) {
        lead = c;
        break;
      }
    if (lead == 0) return;
    for (Rational& c : v) c /= lead;
    if (seen.insert(v).second) results.push_back(std::move(v));
  };

  for (std::size_t i = 0; i < r && results.size() < max_count; ++i)
    if (gram.at(i, i) == 0) push({{i, Rational(1)}});

  static const int kPairScalars[] = {-3, -2, -1, 1, 2, 3};
  for (std::size_t i = 0; i < r && results.size() < max_count; ++i) {
    for (std::size_t j = 0; j < r && results.size() < max_count; ++j) {
      if (i == j) continue;
      if (gram.at(j, j) == 0 && gram.at(i, j) != 0) {
        const Rational t = -gram.at(i, i) / (2 * gram.at(i, j));
        if (t != 0) push({{i, Rational(1)}, {j, t}});
      }
      if (i < j) {
        for (const int t : kPairScalars) {
          const std::vector<std::pair<std::size_t, Rational>> x = {{i, Rational(1)},
                                                                   {j, Rational(t)}};
          if (q_on_support(gram, x) == 0) push(x);
        }
      }
    }
  }

  static const int kTripleScalars[] = {-2, -1, 1, 2};
  for (std::size_t i = 0; i < r && results.size() < max_count; ++i) {
    for (std::size_t j = i + 1; j < r && results.size() < max_count; ++j) {
      for (std::size_t k = j + 1; k < r && results.size() < max_count; ++k) {
        for (const int b : kTripleScalars) {
          for (const int c : kTripleScalars) {
            const std::vector<std::pair<std::size_t, Rational>> x = {
                {i, Rational(1)}, {j, Rational(b)}, {k, Rational(c)}};
            if (q_on_support(gram, x) == 0) push(x);
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i < r && results.size() < max_count; ++i) {
    for (std::size_t j = 0; j < r && results.size() < max_count; ++j) {
      if (i == j || gram.at(i, i) != 0 || gram.at(j, j) != 0 || gram.at(i, j) == 0) continue;
      const auto orthogonal = [&](std::size_t k) {
        return gram.at(i, k) == 0 && gram.at(j, k) == 0;
      };
      const auto complete = [&](std::vector<std::pair<std::size_t, Rational>> w) {
        const Rational y = -q_on_support(gram, w) / (2 * gram.at(i, j));
        w.emplace_back(i, Rational(1));
        w.emplace_back(j, y);
        push(w);
      };
      for (std::size_t k = 0; k < r && results.size() < max_count; ++k) {
        if (k == i || k == j || !orthogonal(k)) continue;
        complete({{k, Rational(1)}});
        for (std::size_t l = k + 1; l < r && results.size() < max_count; ++l) {
          if (l == i || l == j || !orthogonal(l)) continue;
          complete({{k, Rational(1)}, {l, Rational(1)}});
        }
      }
    }
  }
  return results;
}

}  // namespace llv
