#include "llv/models.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "llv/errors.hpp"

namespace llv {

namespace {

/// Subsets of {0,1,2,3} of size k in lexicographic order: the basis e^A of
/// the k-th exterior power.
std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::size_t subset_index(const std::vector<std::vector<int>>& basis, const std::vector<int>& A) {
  auto it = std::find(basis.begin(), basis.end(), A);
  assert(it != basis.end());
  return static_cast<std::size_t>(it - basis.begin());
}

/// Sign of the merge of two disjoint sorted index sets, or 0 when they meet.
int wedge_sign(const std::vector<int>& A, const std::vector<int>& B, std::vector<int>* merged) {
  for (int a : A)
    if (std::find(B.begin(), B.end(), a) != B.end()) return 0;
  std::vector<int> concat = A;
  concat.insert(concat.end(), B.begin(), B.end());
  int sign = 1;
  // Bubble into sorted order, counting transpositions.
  for (std::size_t i = 0; i < concat.size(); ++i)
    for (std::size_t j = i + 1; j < concat.size(); ++j)
      if (concat[i] > concat[j]) {
        std::swap(concat[i], concat[j]);
        sign = -sign;
      }
  if (merged) *merged = std::move(concat);
  return sign;
}

RationalMatrix left_multiplication(int unit) {
  // Quaternion product table on the basis (1, i, j, k).
  // table[a][b] = (sign, index) for b_a * b_b.
  static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  RationalMatrix M(4, 4);
  for (int b = 0; b < 4; ++b) M.at(idx[unit][b], b) = sgn[unit][b];
  return M;
}

}  // namespace

const RationalMatrix& QuaternionicExteriorModel::complex_structure(Imaginary lambda) const {
  switch (lambda) {
    case Imaginary::I: return I;
    case Imaginary::J: return J;
    default: return K;
  }
}

const Vec& QuaternionicExteriorModel::omega(Imaginary lambda) const {
  switch (lambda) {
    case Imaginary::I: return omega_I;
    case Imaginary::J: return omega_J;
    default: return omega_K;
  }
}

QuaternionicExteriorModel exterior_quaternion_model() {
  QuaternionicExteriorModel model;
  model.I = left_multiplication(1);
  model.J = left_multiplication(2);
  model.K = left_multiplication(3);
  model.inner = RationalMatrix::identity(4);

  std::vector<std::vector<std::vector<int>>> bases;
  std::vector<GradedVectorSpace::Component> components;
  for (int k = 0; k <= 4; ++k) {
    bases.push_back(subsets_of_size(4, k));
    components.emplace_back(k, bases.back().size());
  }
  GradedVectorSpace space(2, components);

  Vec unit = {Rational(1)};
  Vec integral = {Rational(1)};  // orientation: integral of e0^e1^e2^e3 is 1
  GradedFrobeniusAlgebra A("quaternion-exterior", space, unit, integral);

  for (int k = 0; k <= 4; ++k)
    for (int l = 0; l + k <= 4; ++l)
      for (std::size_t i = 0; i < bases[k].size(); ++i)
        for (std::size_t j = 0; j < bases[l].size(); ++j) {
          std::vector<int> merged;
          const int sign = wedge_sign(bases[k][i], bases[l][j], &merged);
          Vec value = zero_vec(bases[k + l].size());
          if (sign != 0) value[subset_index(bases[k + l], merged)] = sign;
          A.set_basis_product(k, i, l, j, std::move(value));
        }
  model.algebra = std::move(A);

  // Kaehler forms omega_lambda = sum_{a<b} <lambda e_a, e_b> e^a ^ e^b.
  auto make_omega = [&bases](const RationalMatrix& lambda) {
    Vec w = zero_vec(bases[2].size());
    for (std::size_t idx = 0; idx < bases[2].size(); ++idx) {
      const int a = bases[2][idx][0], b = bases[2][idx][1];
      w[idx] = lambda.at(b, a);  // <lambda e_a, e_b> with the identity Gram
    }
    return w;
  };
  model.omega_I = make_omega(model.I);
  model.omega_J = make_omega(model.J);
  model.omega_K = make_omega(model.K);

  // Hodge star: *(e^A) = sign(A, A^c) e^{A^c} for the orthonormal coframe.
  for (int k = 0; k <= 4; ++k) {
    RationalMatrix star(bases[4 - k].size(), bases[k].size());
    for (std::size_t idx = 0; idx < bases[k].size(); ++idx) {
      std::vector<int> comp;
      for (int i = 0; i < 4; ++i)
        if (std::find(bases[k][idx].begin(), bases[k][idx].end(), i) == bases[k][idx].end())
          comp.push_back(i);
      const int sign = wedge_sign(bases[k][idx], comp, nullptr);
      star.at(subset_index(bases[4 - k], comp), idx) = sign;
    }
    model.star[k] = std::move(star);
  }
  return model;
}

Vec hodge_star(const QuaternionicExteriorModel& model, int k, const Vec& x) {
  auto it = model.star.find(k);
  if (it == model.star.end() || x.size() != model.algebra.space().dim(k))
    throw WrongDegree("hodge star expects a homogeneous element of degree 0..4");
  return it->second.apply(x);
}

Vec hodge_star_total(const QuaternionicExteriorModel& model, const Vec& total) {
  const GradedVectorSpace& V = model.algebra.space();
  assert(total.size() == V.total_dim());
  int degree = -1;
  for (const auto& [k, d] : V.components()) {
    const std::size_t off = V.offset(k);
    for (std::size_t i = 0; i < d; ++i)
      if (total[off + i] != 0) {
        if (degree != -1 && degree != k)
          throw NotHomogeneous("hodge star of a mixed-degree element");
        degree = k;
      }
  }
  if (degree == -1) degree = 0;  // zero vector: treat as degree 0
  const std::size_t off = V.offset(degree);
  Vec x(total.begin() + static_cast<std::ptrdiff_t>(off),
        total.begin() + static_cast<std::ptrdiff_t>(off + V.dim(degree)));
  Vec image = hodge_star(model, degree, x);
  Vec out = zero_vec(V.total_dim());
  const std::size_t out_off = V.offset(4 - degree);
  for (std::size_t i = 0; i < image.size(); ++i) out[out_off + i] = image[i];
  return out;
}

Sl2Triple metric_triple(const QuaternionicExteriorModel& model, Imaginary lambda) {
  const GradedFrobeniusAlgebra& A = model.algebra;
  const GradedVectorSpace& V = A.space();
  GradedOperator e = cup_operator(A, model.omega(lambda));
  GradedOperator h = h_operator(A);
  // f on degree k: star_{k-2}^{-1} . e_{4-k} . star_k.
  GradedOperator f(V, -2);
  for (int k = 2; k <= 4; ++k) {
    const RationalMatrix& star_k = model.star.at(k);
    const RationalMatrix& star_out = model.star.at(k - 2);
    const auto star_out_inv = star_out.inverse();
    assert(star_out_inv.has_value());
    const std::size_t dk = V.dim(k);
    const std::size_t dout = V.dim(k - 2);
    RationalMatrix block(dout, dk);
    for (std::size_t j = 0; j < dk; ++j) {
      Vec col = zero_vec(dk);
      col[j] = 1;
      Vec image = e.apply_component(4 - k, star_k.apply(col));
      image = star_out_inv->apply(image);
      for (std::size_t i = 0; i < dout; ++i) block.at(i, j) = image[i];
    }
    SparseMatrix sparse(dout, dk);
    for (std::size_t i = 0; i < dout; ++i)
      for (std::size_t j = 0; j < dk; ++j)
        if (block.at(i, j) != 0) sparse.set(i, j, block.at(i, j));
    f.set_block(k, std::move(sparse));
  }
  return Sl2Triple{std::move(e), std::move(h), std::move(f)};
}

GradedOperator weil_commutator(const QuaternionicExteriorModel& model, Imaginary lambda,
                               Imaginary mu) {
  if (lambda == mu) throw EqualIndices("weil commutator needs distinct complex structures");
  Sl2Triple el = metric_triple(model, lambda);
  Sl2Triple fm = metric_triple(model, mu);
  return el.e.bracket(fm.f);
}

GradedFrobeniusAlgebra frobenius_from_quadratic(const QuadraticSpace& q) {
  if (!q.nondegenerate()) throw Degenerate("quadratic space must be nondegenerate");
  const std::size_t r = q.dim();
  GradedVectorSpace space(2, {{0, 1}, {2, r}, {4, 1}});
  Vec unit = {Rational(1)};
  Vec integral = {Rational(1)};
  GradedFrobeniusAlgebra A("k3-type", space, unit, integral);
  // 1 acts as identity.
  A.set_basis_product(0, 0, 0, 0, unit);
  for (std::size_t i = 0; i < r; ++i) {
    Vec ei = zero_vec(r);
    ei[i] = 1;
    A.set_basis_product(0, 0, 2, i, ei);
    A.set_basis_product(2, i, 0, 0, ei);
  }
  A.set_basis_product(0, 0, 4, 0, {Rational(1)});
  A.set_basis_product(4, 0, 0, 0, {Rational(1)});
  // a . b = q(a, b) t.
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      A.set_basis_product(2, i, 2, j, {q.gram().at(i, j)});
  return A;
}

QuadraticSpace hyperbolic_plane() {
  RationalMatrix u(2, 2);
  u.at(0, 1) = 1;
  u.at(1, 0) = 1;
  return QuadraticSpace(std::move(u));
}

QuadraticSpace e8_minus() {
  // Negated Cartan matrix of E8; nodes 1..8 with the chain 1-3-4-5-6-7-8
  // and node 2 attached to node 4.
  static const std::array<std::pair<int, int>, 7> edges = {
      {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}}};
  RationalMatrix g(8, 8);
  for (int i = 0; i < 8; ++i) g.at(i, i) = -2;
  for (const auto& [a, b] : edges) {
    g.at(a - 1, b - 1) = 1;
    g.at(b - 1, a - 1) = 1;
  }
  return QuadraticSpace(std::move(g));
}

QuadraticSpace k3_lattice() {
  const QuadraticSpace u = hyperbolic_plane();
  const QuadraticSpace e8 = e8_minus();
  return u.direct_sum(u).direct_sum(u).direct_sum(e8).direct_sum(e8);
}

QuadraticSpace k3_hilb2_lattice() {
  return k3_lattice().direct_sum(QuadraticSpace::diagonal({Rational(-2)}));
}

}  // namespace llv
