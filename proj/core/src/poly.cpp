#include "llv/poly.hpp"

#include <cassert>
#include <sstream>

namespace llv {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::linear(const Rational& root) { return Poly({-root, Rational(1)}); }

Poly Poly::quadratic_plus(const Rational& c) { return Poly({c, Rational(0), Rational(1)}); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / coeffs_.back();
  return *this * inv;
}

Poly Poly::operator+(const Poly& other) const {
  std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& other) const {
  std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] -= other.coeffs_[i];
  return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& other) const {
  if (is_zero() || other.is_zero()) return Poly();
  std::vector<Rational> c(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::operator*(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  for (Rational& x : out) x *= c;
  return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  assert(!divisor.is_zero());
  std::vector<Rational> rem(coeffs_);
  const int dd = divisor.degree();
  const int dn = degree();
  if (dn < dd) return {Poly(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(dn - dd) + 1, Rational(0));
  Rational lead_inv = 1 / divisor.leading();
  for (int k = dn - dd; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Rational Poly::eval(const Rational& x) const {
  Rational r(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    r *= x;
    r += coeffs_[i];
  }
  return r;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || coeffs_[i] != 1) os << rational_to_string(coeffs_[i]);
    if (i >= 1) {
      if (coeffs_[i] != 1) os << "*";
      os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly g = poly_gcd(a, b);
  return (a * b).divmod(g).first.monic();
}

bool poly_divides(const Poly& divisor, const Poly& p) {
  if (divisor.is_zero()) return false;
  return p.divmod(divisor).second.is_zero();
}

Poly minimal_polynomial(const SparseMatrix& op) {
  assert(op.rows() == op.cols());
  const std::size_t n = op.rows();
  if (n == 0) return Poly({Rational(1)});
  Poly result = Poly::constant(Rational(1));
  EchelonBasis seen(n);
  for (std::size_t s = 0; s < n; ++s) {
    SparseVec v = SparseVec::unit(s);
    if (seen.contains(v)) continue;
    // Krylov sequence of v: stop at the first linear dependence.
    EchelonBasis krylov(n);
    std::vector<SparseVec> iterates;
    SparseVec cur = v;
    while (krylov.insert(cur)) {
      iterates.push_back(cur);
      cur = op.apply(cur);
    }
    // cur = op^k v depends on the previous iterates; solve for the combination.
    RationalMatrix system(n, iterates.size());
    for (std::size_t j = 0; j < iterates.size(); ++j)
      for (const SparseVec::Term& t : iterates[j].terms()) system.at(t.first, j) = t.second;
    auto sol = system.solve(cur.to_dense(n));
    assert(sol.has_value());
    std::vector<Rational> coeffs(iterates.size() + 1, Rational(0));
    for (std::size_t j = 0; j < iterates.size(); ++j) coeffs[j] = -sol->x[j];
    coeffs[iterates.size()] = 1;
    result = poly_lcm(result, Poly(std::move(coeffs)));
    for (const SparseVec& it : iterates) seen.insert(it);
  }
  return result;
}

}  // namespace llv
