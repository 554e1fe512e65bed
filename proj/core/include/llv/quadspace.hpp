#pragma once

#include "llv/matrix.hpp"
#include "llv/rational.hpp"

namespace llv {

/// Rational quadratic space: a dimension together with a symmetric Gram
/// matrix.  Nondegeneracy is computed from the rank on construction.
class QuadraticSpace {
 public:
  QuadraticSpace() = default;
  /// Throws NotSymmetric when gram is not symmetric.
  explicit QuadraticSpace(RationalMatrix gram);

  static QuadraticSpace diagonal(const Vec& entries);

  std::size_t dim() const { return gram_.rows(); }
  const RationalMatrix& gram() const { return gram_; }
  bool nondegenerate() const { return nondegenerate_; }

  Rational q(const Vec& x, const Vec& y) const;
  Rational q(const Vec& x) const { return q(x, x); }

  QuadraticSpace direct_sum(const QuadraticSpace& other) const;

  Inertia signature() const { return gram_.signature(); }

  bool operator==(const QuadraticSpace& other) const { return gram_ == other.gram_; }

 private:
  RationalMatrix gram_;
  bool nondegenerate_ = false;
};

}  // namespace llv
