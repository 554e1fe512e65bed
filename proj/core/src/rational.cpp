#include "llv/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "llv/errors.hpp"

namespace llv {

Rational rat(long num, long den) {
  if (den == 0) throw SchemaError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) throw SchemaError("bad rational: '" + text + "'");
    Rational r(text, 10);
    r.canonicalize();
    return r;
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    throw SchemaError("bad rational: '" + text + "'");
  Rational r(text, 10);
  if (r.get_den() == 0) throw SchemaError("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

int sign_of(const Rational& x) { return sgn(x); }

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

bool is_zero(const Vec& v) {
  for (const Rational& x : v)
    if (x != 0) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Rational& c, const Vec& v) {
  Vec r(v);
  for (Rational& x : r) x *= c;
  return r;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

}  // namespace llv
