#include "llv/quadspace.hpp"

#include <cassert>

#include "llv/errors.hpp"

namespace llv {

QuadraticSpace::QuadraticSpace(RationalMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw NotSymmetric("Gram matrix must be symmetric");
  nondegenerate_ = gram_.rank() == gram_.rows();
}

QuadraticSpace QuadraticSpace::diagonal(const Vec& entries) {
  RationalMatrix g(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) g.at(i, i) = entries[i];
  return QuadraticSpace(std::move(g));
}

Rational QuadraticSpace::q(const Vec& x, const Vec& y) const {
  assert(x.size() == dim() && y.size() == dim());
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0 && gram_.at(i, j) != 0) s += x[i] * gram_.at(i, j) * y[j];
  }
  return s;
}

QuadraticSpace QuadraticSpace::direct_sum(const QuadraticSpace& other) const {
  const std::size_t n = dim(), m = other.dim();
  RationalMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.at(i, j) = gram_.at(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g.at(n + i, n + j) = other.gram_.at(i, j);
  return QuadraticSpace(std::move(g));
}

}  // namespace llv
