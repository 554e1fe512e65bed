#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace llv {

/// Exact arbitrary-precision rational scalar. GMP keeps values canonical
/// (lowest terms, positive denominator) as long as they are built through
/// mpq_class arithmetic or the helpers below.
using Rational = mpq_class;

/// Dense coordinate vector over Q.
using Vec = std::vector<Rational>;

/// Canonicalized rational from machine integers.
Rational rat(long num, long den = 1);

/// Parses "p" or "p/q" (decimal, optional leading '-'). Throws SchemaError
/// on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& x);

int sign_of(const Rational& x);

Vec zero_vec(std::size_t n);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);
Rational dot(const Vec& a, const Vec& b);

}  // namespace llv
