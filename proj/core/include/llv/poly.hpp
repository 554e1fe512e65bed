#pragma once

#include <string>
#include <vector>

#include "llv/matrix.hpp"
#include "llv/rational.hpp"
#include "llv/sparse.hpp"

namespace llv {

/// Polynomial over the rationals, coefficients low degree first, normalized
/// so the leading coefficient is nonzero (zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly zero() { return Poly(); }
  static Poly constant(const Rational& c);
  /// x - root.
  static Poly linear(const Rational& root);
  /// x^2 + c.
  static Poly quadratic_plus(const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }
  Rational leading() const { return coeffs_.back(); }

  Poly monic() const;
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator*(const Rational& c) const;

  /// Quotient and remainder of division by a nonzero polynomial.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  Rational eval(const Rational& x) const;

  bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor.
Poly poly_gcd(Poly a, Poly b);
/// Monic least common multiple.
Poly poly_lcm(const Poly& a, const Poly& b);
/// True when divisor is nonzero and divides p exactly.
bool poly_divides(const Poly& divisor, const Poly& p);

/// Minimal polynomial of a square sparse matrix, computed as the lcm of the
/// minimal annihilators of the Krylov sequences of the standard basis vectors.
Poly minimal_polynomial(const SparseMatrix& op);

}  // namespace llv
