#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "llv/graded.hpp"
#include "llv/matrix.hpp"
#include "llv/rational.hpp"

namespace llv {

/// Graded-commutative Frobenius algebra with a distinguished basis per
/// component.  Products are stored densely per degree pair: the product of
/// the i-th degree-k and j-th degree-l basis vectors is a vector in the
/// degree-(k+l) component (zero when that component is absent).
class GradedFrobeniusAlgebra {
 public:
  GradedFrobeniusAlgebra() = default;
  GradedFrobeniusAlgebra(std::string name, GradedVectorSpace space, Vec unit, Vec integral);

  const std::string& name() const { return name_; }
  const GradedVectorSpace& space() const { return space_; }
  /// Unit element, as a vector in the degree-0 component.
  const Vec& unit() const { return unit_; }
  /// Integration functional on the top-degree component.
  const Vec& integral() const { return integral_; }

  /// Install the product of basis elements (k, i) and (l, j).
  void set_basis_product(int k, std::size_t i, int l, std::size_t j, Vec value);
  /// Product of basis elements; zero vector of the target size when unset.
  Vec basis_product(int k, std::size_t i, int l, std::size_t j) const;
  bool has_product_table(int k, int l) const;

  /// Product of homogeneous elements x (degree k) and y (degree l),
  /// landing in degree k+l (the zero vector when that component is absent).
  Vec multiply(int k, const Vec& x, int l, const Vec& y) const;

  /// Integral of a top-degree element; zero for other degrees.
  Rational integrate(int k, const Vec& x) const;

  bool operator==(const GradedFrobeniusAlgebra& other) const;

 private:
  std::string name_;
  GradedVectorSpace space_;
  Vec unit_;
  Vec integral_;
  // (k, l) -> row-major table: entry i*dim_l + j is the product vector.
  std::map<std::pair<int, int>, std::vector<Vec>> products_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string message) {
    ok = false;
    violations.push_back(std::move(message));
  }
};

/// Exhaustive check of the algebra axioms: Koszul graded commutativity,
/// associativity on basis triples, the unit law, and nondegeneracy of the
/// Poincare pairing between complementary degrees.
ValidationReport validate_algebra(const GradedFrobeniusAlgebra& A);

/// Left multiplication by a degree-2 element; throws WrongDegree when the
/// algebra has no degree-2 component matching a's size.
GradedOperator cup_operator(const GradedFrobeniusAlgebra& A, const Vec& a);

/// The grading operator: (k - N) id on the degree-k component.
GradedOperator h_operator(const GradedFrobeniusAlgebra& A);

/// Left multiplication by a homogeneous element of cohomological degree k.
GradedOperator multiplication_operator(const GradedFrobeniusAlgebra& A, int k, const Vec& x);

/// Signed Poincare pairing phi(a, b) = (-1)^q Int a.b, where the
/// cohomological degree of a is N + 2q or N + 2q + 1.
struct PhiForm {
  RationalMatrix matrix;  // on the flattened total space
};

PhiForm phi_form(const GradedFrobeniusAlgebra& A);

}  // namespace llv
