#include "llv/frobenius.hpp"

#include <cassert>
#include <sstream>

#include "llv/errors.hpp"

namespace llv {

namespace {

/// Floored division, exact for negative numerators.
int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

GradedFrobeniusAlgebra::GradedFrobeniusAlgebra(std::string name, GradedVectorSpace space,
                                               Vec unit, Vec integral)
    : name_(std::move(name)), space_(std::move(space)), unit_(std::move(unit)),
      integral_(std::move(integral)) {
  if (unit_.size() != space_.dim(0))
    throw ValidationError("unit vector must live in the degree-0 component");
  if (integral_.size() != space_.dim(space_.top_degree()))
    throw ValidationError("integral must be a functional on the top-degree component");
}

void GradedFrobeniusAlgebra::set_basis_product(int k, std::size_t i, int l, std::size_t j,
                                               Vec value) {
  const std::size_t dim_k = space_.dim(k);
  const std::size_t dim_l = space_.dim(l);
  const std::size_t dim_kl = space_.dim(k + l);
  if (i >= dim_k || j >= dim_l) throw WrongDegree("basis index out of range");
  if (value.size() != dim_kl) throw WrongDegree("product vector has the wrong dimension");
  if (dim_kl == 0) return;
  auto [it, inserted] = products_.try_emplace({k, l});
  if (inserted) it->second.assign(dim_k * dim_l, zero_vec(dim_kl));
  it->second[i * dim_l + j] = std::move(value);
}

Vec GradedFrobeniusAlgebra::basis_product(int k, std::size_t i, int l, std::size_t j) const {
  const std::size_t dim_kl = space_.dim(k + l);
  auto it = products_.find({k, l});
  if (it == products_.end()) return zero_vec(dim_kl);
  return it->second[i * space_.dim(l) + j];
}

bool GradedFrobeniusAlgebra::has_product_table(int k, int l) const {
  return products_.count({k, l}) > 0;
}

Vec GradedFrobeniusAlgebra::multiply(int k, const Vec& x, int l, const Vec& y) const {
  assert(x.size() == space_.dim(k) && y.size() == space_.dim(l));
  Vec out = zero_vec(space_.dim(k + l));
  auto it = products_.find({k, l});
  if (it == products_.end()) return out;
  const std::size_t dim_l = y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_l; ++j) {
      if (y[j] == 0) continue;
      const Rational c = x[i] * y[j];
      const Vec& p = it->second[i * dim_l + j];
      for (std::size_t m = 0; m < out.size(); ++m)
        if (p[m] != 0) out[m] += c * p[m];
    }
  }
  return out;
}

Rational GradedFrobeniusAlgebra::integrate(int k, const Vec& x) const {
  if (k != space_.top_degree()) return Rational(0);
  return llv::dot(integral_, x);
}

bool GradedFrobeniusAlgebra::operator==(const GradedFrobeniusAlgebra& other) const {
  if (name_ != other.name_ || !(space_ == other.space_) || unit_ != other.unit_ ||
      integral_ != other.integral_)
    return false;
  for (const auto& [kl, table] : products_)
    for (std::size_t i = 0; i < space_.dim(kl.first); ++i)
      for (std::size_t j = 0; j < space_.dim(kl.second); ++j)
        if (basis_product(kl.first, i, kl.second, j) !=
            other.basis_product(kl.first, i, kl.second, j))
          return false;
  for (const auto& [kl, table] : other.products_)
    for (std::size_t i = 0; i < space_.dim(kl.first); ++i)
      for (std::size_t j = 0; j < space_.dim(kl.second); ++j)
        if (basis_product(kl.first, i, kl.second, j) !=
            other.basis_product(kl.first, i, kl.second, j))
          return false;
  return true;
}

namespace {

std::string basis_name(int k, std::size_t i) {
  std::ostringstream os;
  os << "(" << k << "," << i << ")";
  return os.str();
}

}  // namespace

ValidationReport validate_algebra(const GradedFrobeniusAlgebra& A) {
  ValidationReport report;
  const GradedVectorSpace& V = A.space();
  const int top = V.top_degree();

  // Unit law: 1 * x = x for every basis x.
  if (V.dim(0) == 0 || is_zero(A.unit())) {
    report.fail("unit element is missing or zero");
  } else {
    for (const auto& [k, d] : V.components())
      for (std::size_t i = 0; i < d; ++i) {
        Vec x = zero_vec(d);
        x[i] = 1;
        Vec p = A.multiply(0, A.unit(), k, x);
        if (p != x) report.fail("unit law fails at basis " + basis_name(k, i));
      }
  }

  // Graded commutativity with Koszul signs.
  for (const auto& [k, dk] : V.components())
    for (const auto& [l, dl] : V.components()) {
      if (l < k) continue;
      const int sign = (k % 2 != 0 && l % 2 != 0) ? -1 : 1;
      for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dl; ++j) {
          Vec xy = A.basis_product(k, i, l, j);
          Vec yx = A.basis_product(l, j, k, i);
          if (sign < 0) yx = scale(Rational(-1), yx);
          if (xy != yx)
            report.fail("graded commutativity fails at " + basis_name(k, i) + " * " +
                        basis_name(l, j));
        }
    }

  // Associativity on basis triples.
  for (const auto& [k, dk] : V.components())
    for (const auto& [l, dl] : V.components())
      for (const auto& [m, dm] : V.components()) {
        if (V.dim(k + l + m) == 0 && V.dim(k + l) == 0 && V.dim(l + m) == 0) continue;
        for (std::size_t i = 0; i < dk; ++i)
          for (std::size_t j = 0; j < dl; ++j) {
            Vec xy = A.basis_product(k, i, l, j);
            for (std::size_t s = 0; s < dm; ++s) {
              Vec z = zero_vec(dm);
              z[s] = 1;
              Vec left = A.multiply(k + l, xy, m, z);
              Vec y = zero_vec(dl);
              y[j] = 1;
              Vec x = zero_vec(dk);
              x[i] = 1;
              Vec right = A.multiply(k, x, l + m, A.basis_product(l, j, m, s));
              if (left != right)
                report.fail("associativity fails at " + basis_name(k, i) + " * " +
                            basis_name(l, j) + " * " + basis_name(m, s));
            }
          }
      }

  // Poincare pairing nondegeneracy between complementary degrees.
  if (V.dim(top) == 0 || is_zero(A.integral())) {
    report.fail("top-degree component or integral is zero");
  } else {
    for (const auto& [k, dk] : V.components()) {
      if (k > top - k) continue;
      const std::size_t dl = V.dim(top - k);
      if (dk != dl) {
        report.fail("complementary degrees " + std::to_string(k) + ", " + std::to_string(top - k) +
                    " have different dimensions");
        continue;
      }
      RationalMatrix pairing(dk, dl);
      for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dl; ++j)
          pairing.at(i, j) = A.integrate(top, A.basis_product(k, i, top - k, j));
      if (pairing.rank() != dk)
        report.fail("Poincare pairing degenerate between degrees " + std::to_string(k) + " and " +
                    std::to_string(top - k));
    }
  }

  return report;
}

GradedOperator multiplication_operator(const GradedFrobeniusAlgebra& A, int k, const Vec& x) {
  const GradedVectorSpace& V = A.space();
  if (x.size() != V.dim(k)) throw WrongDegree("element does not live in degree " + std::to_string(k));
  GradedOperator op(V, k);
  for (const auto& [l, dl] : V.components()) {
    const std::size_t dout = V.dim(l + k);
    if (dl == 0 || dout == 0) continue;
    std::vector<Vec> cols;
    cols.reserve(dl);
    bool nonzero = false;
    for (std::size_t j = 0; j < dl; ++j) {
      Vec y = zero_vec(dl);
      y[j] = 1;
      Vec p = A.multiply(k, x, l, y);
      if (!is_zero(p)) nonzero = true;
      cols.push_back(std::move(p));
    }
    if (!nonzero) continue;
    SparseMatrix block(dout, dl);
    for (std::size_t j = 0; j < dl; ++j)
      for (std::size_t i = 0; i < dout; ++i)
        if (cols[j][i] != 0) block.set(i, j, cols[j][i]);
    op.set_block(l, std::move(block));
  }
  return op;
}

GradedOperator cup_operator(const GradedFrobeniusAlgebra& A, const Vec& a) {
  if (a.size() != A.space().dim(2) || A.space().dim(2) == 0)
    throw WrongDegree("cup operator requires a degree-2 element");
  return multiplication_operator(A, 2, a);
}

GradedOperator h_operator(const GradedFrobeniusAlgebra& A) {
  const GradedVectorSpace& V = A.space();
  GradedOperator h(V, 0);
  for (const auto& [k, d] : V.components()) {
    if (d == 0) continue;
    const int eigen = V.internal_degree(k);
    if (eigen == 0) continue;
    h.set_block(k, SparseMatrix::identity(d) * Rational(eigen));
  }
  return h;
}

PhiForm phi_form(const GradedFrobeniusAlgebra& A) {
  const GradedVectorSpace& V = A.space();
  const int top = V.top_degree();
  const int N = V.shift();
  const std::size_t n = V.total_dim();
  RationalMatrix phi(n, n);
  for (const auto& [k, dk] : V.components()) {
    const int l = top - k;
    const std::size_t dl = V.dim(l);
    if (dk == 0 || dl == 0) continue;
    const int q = floor_div(k - N, 2);
    const Rational sign = (q % 2 == 0) ? Rational(1) : Rational(-1);
    const std::size_t off_k = V.offset(k);
    const std::size_t off_l = V.offset(l);
    for (std::size_t i = 0; i < dk; ++i)
      for (std::size_t j = 0; j < dl; ++j)
        phi.at(off_k + i, off_l + j) = sign * A.integrate(top, A.basis_product(k, i, l, j));
  }
  return PhiForm{std::move(phi)};
}

}  // namespace llv
