#include "llv/suites.hpp"

#include <algorithm>
#include <sstream>

#include "llv/errors.hpp"
#include "llv/lefschetz.hpp"
#include "llv/liealg.hpp"
#include "llv/rep.hpp"
#include "llv/verbitsky.hpp"

namespace llv {

namespace {

std::size_t binomial_size(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return static_cast<std::size_t>(b.get_ui());
}

std::string dims_string(const std::vector<std::size_t>& dims) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? ", " : "") << dims[i];
  out << "]";
  return out.str();
}

std::string inertia_string(const Inertia& s) {
  return "(" + std::to_string(s.positives) + "+, " + std::to_string(s.negatives) + "-, " +
         std::to_string(s.zeros) + "0)";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::optional<int> parse_positive(const std::string& text) {
  if (text.empty() || text.size() > 6) return std::nullopt;
  for (const char c : text)
    if (c < '0' || c > '9') return std::nullopt;
  const int value = std::stoi(text);
  return value > 0 ? std::optional<int>(value) : std::nullopt;
}

Vec unit_vec(std::size_t dim, std::size_t i) {
  Vec v = zero_vec(dim);
  v[i] = Rational(1);
  return v;
}

}  // namespace

QuadraticSpace standard_form(int rank) {
  if (rank < 2) throw ValidationError("the standard form needs rank at least 2");
  const QuadraticSpace u = hyperbolic_plane();
  if (rank == 2) return u;
  return u.direct_sum(
      QuadraticSpace::diagonal(Vec(static_cast<std::size_t>(rank - 2), Rational(1))));
}

std::optional<BuiltinModel> make_builtin(const std::string& name) {
  if (name == "quaternion") {
    QuaternionicExteriorModel model = exterior_quaternion_model();
    GradedFrobeniusAlgebra algebra = model.algebra;
    return BuiltinModel{name, std::move(algebra), std::nullopt, std::move(model)};
  }
  if (name == "k3") {
    QuadraticSpace q = k3_lattice();
    GradedFrobeniusAlgebra algebra = frobenius_from_quadratic(q);
    return BuiltinModel{name, std::move(algebra), std::move(q), std::nullopt};
  }
  if (name.rfind("k3type-r", 0) == 0) {
    const std::optional<int> rank = parse_positive(name.substr(8));
    if (!rank || *rank < 2) return std::nullopt;
    QuadraticSpace q = standard_form(*rank);
    GradedFrobeniusAlgebra algebra = frobenius_from_quadratic(q);
    return BuiltinModel{name, std::move(algebra), std::move(q), std::nullopt};
  }
  if (name.rfind("verbitsky-r", 0) == 0) {
    const std::size_t dash = name.find("-n", 11);
    if (dash == std::string::npos) return std::nullopt;
    const std::optional<int> rank = parse_positive(name.substr(11, dash - 11));
    const std::optional<int> weight = parse_positive(name.substr(dash + 2));
    if (!rank || !weight || *rank < 2) return std::nullopt;
    QuadraticSpace q = standard_form(*rank);
    GradedFrobeniusAlgebra algebra = verbitsky_component(q, *weight).algebra();
    return BuiltinModel{name, std::move(algebra), std::move(q), std::nullopt};
  }
  return std::nullopt;
}

std::optional<QuadraticSpace> derive_quadratic_form(const GradedFrobeniusAlgebra& A) {
  const GradedVectorSpace& V = A.space();
  if (V.components().size() != 3 || V.shift() != 2) return std::nullopt;
  if (V.dim(0) != 1 || V.dim(2) == 0 || V.dim(4) != 1) return std::nullopt;
  const std::size_t r = V.dim(2);
  RationalMatrix gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      gram.at(i, j) = A.integrate(4, A.basis_product(2, i, 2, j));
  if (!gram.is_symmetric()) return std::nullopt;
  return QuadraticSpace(std::move(gram));
}

Report validate_suite(const GradedFrobeniusAlgebra& A) {
  Report report("validate");
  report.add_info("algebra", A.name());
  std::vector<std::size_t> dims;
  for (const auto& [degree, dim] : A.space().components()) dims.push_back(dim);
  report.add_info("dims", std::move(dims));
  report.add_info("shift", static_cast<long long>(A.space().shift()));
  const ValidationReport vr = validate_algebra(A);
  std::string actual = "valid";
  if (!vr.ok) {
    actual = std::to_string(vr.violations.size()) + " violation(s): " + vr.violations.front();
  }
  report.add_check("algebra axioms", vr.ok, "valid", actual,
                   "unit law, graded commutativity, associativity, Poincare pairing");
  return report;
}

Report quaternion_suite() {
  Report report("quaternion");
  const QuaternionicExteriorModel model = exterior_quaternion_model();
  const GradedFrobeniusAlgebra& A = model.algebra;
  report.add_info("algebra", A.name());

  const ValidationReport vr = validate_algebra(A);
  report.add_check("algebra axioms", vr.ok, "valid",
                   vr.ok ? "valid" : vr.violations.front(),
                   "exterior algebra of a 4-space is a graded Frobenius algebra");

  const Imaginary structures[3] = {Imaginary::I, Imaginary::J, Imaginary::K};
  const char* names[3] = {"I", "J", "K"};
  std::vector<Sl2Triple> triples;
  for (const Imaginary lambda : structures) triples.push_back(metric_triple(model, lambda));

  bool sl2_ok = true;
  for (const Sl2Triple& t : triples) sl2_ok = sl2_ok && t.relations_hold();
  report.add_check("metric triples satisfy the sl2 relations", sl2_ok, "three sl2 triples",
                   yes_no(sl2_ok), "Kaehler classes of a metric give sl2 triples");

  bool star_ok = true;
  for (const Sl2Triple& t : triples)
    star_ok = star_ok && jacobson_morozov_dual(A.space(), t.e) == t.f;
  report.add_check("solved duals match the star construction", star_ok, "equal operators",
                   yes_no(star_ok), "the dual lowering operator is unique");

  std::vector<GradedOperator> generators;
  for (const Sl2Triple& t : triples) {
    generators.push_back(t.e);
    generators.push_back(t.h);
    generators.push_back(t.f);
  }
  const LieOperatorAlgebra closure = lie_closure(generators);
  report.add_info("closure_dim", static_cast<long long>(closure.dim()));
  report.add_check("closure dimension", closure.dim() == 10, "10", std::to_string(closure.dim()),
                   "the three metric triples close into a ten-dimensional algebra");

  const std::vector<std::size_t> degree_dims = {closure.degree_dim(-2), closure.degree_dim(0),
                                                closure.degree_dim(2)};
  report.add_info("degree_dims", degree_dims);
  const bool dims_ok = degree_dims == std::vector<std::size_t>{3, 4, 3};
  report.add_check("degree dimensions", dims_ok, "[3, 4, 3]", dims_string(degree_dims),
                   "lowering, grading-plus-rotations, raising pieces");

  const GradedOperator h = h_operator(A);
  GradedOperator K[3][3];
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) K[a][b] = weil_commutator(model, structures[a], structures[b]);

  {
    LieOperatorAlgebra span(A.space());
    bool independent = span.insert(h);
    for (const Sl2Triple& t : triples) independent = span.insert(t.e) && independent;
    for (const Sl2Triple& t : triples) independent = span.insert(t.f) && independent;
    independent = span.insert(K[0][1]) && independent;
    independent = span.insert(K[0][2]) && independent;
    independent = span.insert(K[1][2]) && independent;
    const bool basis_ok = independent && span.dim() == 10 && closure.dim() == 10;
    report.add_check("ten named operators form a basis", basis_ok,
                     "h, e_I, e_J, e_K, f_I, f_J, f_K, K_IJ, K_IK, K_JK independent and spanning",
                     yes_no(basis_ok), "explicit basis of the closure");
  }

  const auto family_check = [&](const std::string& name, bool ok, const std::string& ref) {
    report.add_check(name, ok, "exact operator identity", yes_no(ok), ref);
  };

  {
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a)
      for (int b = 0; b < 3 && ok; ++b)
        for (int c = 0; c < 3 && ok; ++c) {
          if (a == b || b == c || a == c) continue;
          ok = K[a][b].bracket(K[b][c]) == K[a][c] * Rational(2);
        }
    family_check("relations [K_lm, K_mn] = 2 K_ln", ok, "rotations compose cyclically");
  }
  {
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a)
      for (int b = 0; b < 3 && ok; ++b)
        if (a != b) ok = K[a][b].bracket(h).is_zero();
    family_check("relations [K_lm, h] = 0", ok, "rotations commute with the grading");
  }
  {
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a)
      for (int b = 0; b < 3 && ok; ++b)
        if (a != b) ok = K[a][b].bracket(triples[b].e) == triples[a].e * Rational(2);
    family_check("relations [K_lm, e_m] = 2 e_l", ok, "rotations permute the raising operators");
  }
  {
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a)
      for (int b = 0; b < 3 && ok; ++b)
        if (a != b) ok = K[a][b].bracket(triples[b].f) == triples[a].f * Rational(2);
    family_check("relations [K_lm, f_m] = 2 f_l", ok, "rotations permute the lowering operators");
  }
  {
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a)
      for (int b = 0; b < 3 && ok; ++b)
        for (int c = 0; c < 3 && ok; ++c) {
          if (a == b || b == c || a == c) continue;
          ok = K[a][b].bracket(triples[c].e).is_zero();
        }
    family_check("relations [K_lm, e_n] = 0", ok, "rotations fix the transverse raising operator");
  }
  {
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a)
      for (int b = 0; b < 3 && ok; ++b)
        for (int c = 0; c < 3 && ok; ++c) {
          if (a == b || b == c || a == c) continue;
          ok = K[a][b].bracket(triples[c].f).is_zero();
        }
    family_check("relations [K_lm, f_n] = 0", ok, "rotations fix the transverse lowering operator");
  }
  {
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a) ok = triples[a].e.bracket(triples[a].f) == h;
    family_check("relations [e_l, f_l] = h", ok, "each triple closes on the grading operator");
  }
  {
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a) ok = h.bracket(triples[a].e) == triples[a].e * Rational(2);
    family_check("relations [h, e_l] = 2 e_l", ok, "raising operators have degree 2");
  }
  {
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a)
      ok = h.bracket(triples[a].f) == triples[a].f * Rational(-2);
    family_check("relations [h, f_l] = -2 f_l", ok, "lowering operators have degree -2");
  }

  const KillingForm kf = killing_form(closure);
  report.add_info("killing_signature", inertia_string(kf.signature));
  report.add_check("Killing form nondegenerate", kf.nondegenerate, "nondegenerate",
                   yes_no(kf.nondegenerate), "the closure is semisimple");

  RationalMatrix d5 = RationalMatrix::identity(5);
  d5.at(4, 4) = Rational(-1);
  const KillingForm oracle = matrix_killing_form(skew_algebra_basis(d5));
  const bool sig_ok = kf.signature == oracle.signature;
  report.add_check("Killing signature matches the so(4,1) oracle", sig_ok,
                   inertia_string(oracle.signature), inertia_string(kf.signature),
                   "the closure is isomorphic to the skew algebra of a (4,1) form");
  return report;
}

Report llv_suite(const GradedFrobeniusAlgebra& A, const std::optional<QuadraticSpace>& q,
                 GeneratorMode mode) {
  Report report("llv");
  report.add_info("algebra", A.name());
  report.add_info("total_dim", static_cast<long long>(A.space().total_dim()));
  report.add_info("generators", mode == GeneratorMode::Auto ? "auto" : "list");

  const ValidationReport vr = validate_algebra(A);
  report.add_check("algebra axioms", vr.ok, "valid", vr.ok ? "valid" : vr.violations.front(),
                   "closure input is a graded Frobenius algebra");

  LlvClosure closure;
  std::string family_error;
  try {
    if (mode == GeneratorMode::Auto) {
      closure = llv_closure(A);
    } else {
      const std::size_t d2 = A.space().dim(2);
      for (std::size_t i = 0; i < d2; ++i) {
        const Vec a = unit_vec(d2, i);
        if (!lefschetz_check(A.space(), cup_operator(A, a))) continue;
        closure.family.push_back(a);
        closure.triples.push_back(sl2_triple(A, a));
      }
      if (closure.family.empty())
        throw NotLefschetz("no degree-2 basis vector has the Lefschetz property");
      std::vector<GradedOperator> generators;
      for (const Sl2Triple& t : closure.triples) {
        generators.push_back(t.e);
        generators.push_back(t.h);
        generators.push_back(t.f);
      }
      closure.algebra = lie_closure(generators);
    }
  } catch (const NotLefschetz& e) {
    family_error = e.what();
  }
  report.add_check("Lefschetz generator family found", family_error.empty(),
                   "a family of sl2 triples", family_error.empty() ? "found" : family_error,
                   "degree-2 classes with invertible power maps generate the algebra");
  if (!family_error.empty()) return report;

  const LieOperatorAlgebra& g = closure.algebra;
  report.add_info("generator_count", static_cast<long long>(closure.family.size()));
  report.add_info("closure_dim", static_cast<long long>(g.dim()));
  {
    std::ostringstream degrees;
    std::vector<std::size_t> dims;
    degrees << "(";
    bool first = true;
    for (const int d : g.degrees()) {
      degrees << (first ? "" : ", ") << d;
      dims.push_back(g.degree_dim(d));
      first = false;
    }
    degrees << ")";
    report.add_info("degrees", degrees.str());
    report.add_info("degree_dims", dims);
  }

  {
    bool split = true;
    std::string actual = "exact";
    try {
      degree_pieces(g);
    } catch (const ValidationError& e) {
      split = false;
      actual = e.what();
    }
    report.add_check("operator degrees split the closure", split, "exact", actual,
                     "the closure decomposes by operator degree");
  }

  bool decomposed = true;
  G0Decomposition g0;
  {
    std::string actual = "exact direct sum";
    try {
      g0 = decompose_g0(g);
    } catch (const NotDirectSum& e) {
      decomposed = false;
      actual = e.what();
    }
    report.add_check("degree-0 piece = derived part + grading line", decomposed,
                     "exact direct sum", actual,
                     "the grading operator spans a complement of the derived piece");
  }

  if (decomposed) {
    report.add_info("g0prime_dim", static_cast<long long>(g0.g0prime.dim()));
    bool derivation_ok = true;
    for (const GradedOperator& u : g0.g0prime.basis(0))
      derivation_ok = derivation_ok && derivation_check(u, A);
    report.add_check("derived degree-0 operators are derivations", derivation_ok,
                     "Leibniz identity on all basis pairs", yes_no(derivation_ok),
                     "the derived degree-0 part acts by algebra derivations");

    if (q && A.space().dim(2) == q->dim()) {
      std::vector<SparseMatrix> blocks;
      for (const GradedOperator& u : g0.g0prime.basis(0)) blocks.push_back(u.block_or_zero(2));
      const bool q_ok = infinitesimal_invariance_check(blocks, q->gram());
      report.add_check("derived degree-0 operators preserve q", q_ok, "u^T G + G u = 0",
                       yes_no(q_ok), "the degree-2 form is infinitesimally invariant");
    } else {
      report.add_info("q_invariance", "skipped (no degree-2 form attached)");
    }
  }

  {
    const bool phi_ok = infinitesimal_invariance_check(g.full_basis(), phi_form(A).matrix);
    report.add_check("closure preserves the signed pairing", phi_ok, "u^T Phi + Phi u = 0",
                     yes_no(phi_ok), "the total algebra fixes the signed Poincare pairing");
  }

  {
    const std::size_t d2 = A.space().dim(2);
    EchelonBasis family_span(d2);
    for (const Vec& a : closure.family) family_span.insert(SparseVec::from_dense(a));
    if (family_span.dim() < d2) {
      report.add_info("degree2_bijection",
                      "skipped (the generator family spans a proper subspace of the degree-2 "
                      "part, so the raising piece need not match it)");
    } else {
      const std::size_t g2 = g.degree_dim(2);
      bool bijective = g2 == d2 && d2 > 0;
      if (bijective) {
        RationalMatrix coords(d2, g2);
        for (std::size_t i = 0; i < d2 && bijective; ++i) {
          const auto c = g.coordinates_in_degree(cup_operator(A, unit_vec(d2, i)));
          if (!c) {
            bijective = false;
            break;
          }
          for (std::size_t j = 0; j < g2; ++j) coords.at(i, j) = (*c)[j];
        }
        bijective = bijective && coords.rank() == d2;
      }
      report.add_check("degree-2 classes map bijectively onto the raising piece", bijective,
                       "dim match and full rank",
                       "g_2 dim " + std::to_string(g2) + ", H^2 dim " + std::to_string(d2),
                       "every raising operator is the cup product with a unique class");
    }
  }

  {
    bool commute = true;
    for (std::size_t i = 0; i < closure.triples.size() && commute; ++i)
      for (std::size_t j = i + 1; j < closure.triples.size() && commute; ++j)
        commute = closure.triples[i].f.bracket(closure.triples[j].f).is_zero();
    report.add_check("lowering operators of the family commute", commute, "[f_a, f_b] = 0",
                     yes_no(commute), "dual lowering operators commute pairwise");
  }

  if (g.dim() <= 32) {
    const KillingForm kf = killing_form(g);
    report.add_info("killing_signature", inertia_string(kf.signature));
    report.add_check("Killing form nondegenerate", kf.nondegenerate, "nondegenerate",
                     yes_no(kf.nondegenerate), "the closure is semisimple");
  } else {
    report.add_info("killing_form", "skipped (dimension " + std::to_string(g.dim()) + ")");
  }
  return report;
}

Report verbitsky_suite(const QuadraticSpace& q, int n, bool with_closure) {
  Report report("verbitsky");
  report.add_info("rank", static_cast<long long>(q.dim()));
  report.add_info("n", static_cast<long long>(n));

  VerbitskyComponent component;
  std::string build_error;
  try {
    component = verbitsky_component(q, n);
  } catch (const Error& e) {
    build_error = e.what();
  }
  report.add_check("component constructed, vanishing above the top verified",
                   build_error.empty(), "quotient vanishes in degree 2n+1",
                   build_error.empty() ? "verified" : build_error,
                   "powers of isotropic classes span everything beyond the top degree");
  if (!build_error.empty()) return report;

  const std::vector<std::size_t> dims = component.dims();
  report.add_info("dims", dims);

  {
    std::vector<std::size_t> expected;
    const unsigned long r = static_cast<unsigned long>(q.dim());
    for (int k = 0; k <= 2 * n; ++k) {
      const unsigned long m = static_cast<unsigned long>(std::min(k, 2 * n - k));
      expected.push_back(binomial_size(r - 1 + m, m));
    }
    const bool ok = dims == expected;
    report.add_check("graded dimensions match the binomial formula", ok, dims_string(expected),
                     dims_string(dims), "symmetric power dims truncated by the ideal");
  }

  report.add_check("top component is a line", dims.back() == 1, "1",
                   std::to_string(dims.back()), "the top degree is one-dimensional");

  {
    const ValidationReport vr = validate_algebra(component.algebra());
    report.add_check("algebra axioms", vr.ok, "valid", vr.ok ? "valid" : vr.violations.front(),
                     "the quotient is a graded Frobenius algebra");
  }

  {
    const bool pp = perfect_pairing_check(component);
    report.add_check("complementary pairings are perfect", pp, "full rank square pairings",
                     yes_no(pp), "multiplication into the top degree is nondegenerate");
  }

  {
    const std::vector<Vec> isotropic = enumerate_isotropic(q, 25);
    bool all_vanish = true;
    for (const Vec& alpha : isotropic)
      all_vanish = all_vanish && isotropic_power_check(component, alpha);
    report.add_info("isotropic_tested", static_cast<long long>(isotropic.size()));
    report.add_check("(n+1)-st powers of isotropic classes vanish", all_vanish,
                     "alpha^(n+1) = 0 for all sampled alpha", yes_no(all_vanish),
                     "defining ideal of the component");
  }

  if (with_closure) {
    std::string closure_error;
    try {
      const LlvClosure closure = llv_closure(component.algebra());
      const LieOperatorAlgebra& g = closure.algebra;
      report.add_info("closure_dim", static_cast<long long>(g.dim()));
      std::vector<std::size_t> degree_dims;
      for (const int d : g.degrees()) degree_dims.push_back(g.degree_dim(d));
      report.add_info("closure_degree_dims", degree_dims);
      if (g.dim() <= 32) {
        const KillingForm kf = killing_form(g);
        report.add_info("killing_signature", inertia_string(kf.signature));
        report.add_check("Killing form nondegenerate", kf.nondegenerate, "nondegenerate",
                         yes_no(kf.nondegenerate), "the closure is semisimple");
      }
      const bool phi_ok =
          infinitesimal_invariance_check(g.full_basis(), phi_form(component.algebra()).matrix);
      report.add_check("closure preserves the signed pairing", phi_ok, "u^T Phi + Phi u = 0",
                       yes_no(phi_ok), "the total algebra fixes the signed Poincare pairing");
    } catch (const NotLefschetz& e) {
      closure_error = e.what();
      report.add_check("closure of the component computed", false, "closure", closure_error,
                       "degree-2 classes of the component generate its total algebra");
    }
  }
  return report;
}

Report prim_suite(const BuiltinModel& model, std::uint64_t seed) {
  Report report("prim");
  const GradedFrobeniusAlgebra& A = model.algebra;
  report.add_info("algebra", A.name());
  report.add_info("seed", static_cast<long long>(seed));

  LlvClosure closure;
  std::string family_error;
  try {
    if (model.quaternion) {
      std::vector<GradedOperator> generators;
      for (const Imaginary lambda : {Imaginary::I, Imaginary::J, Imaginary::K}) {
        const Sl2Triple t = metric_triple(*model.quaternion, lambda);
        generators.push_back(t.e);
        generators.push_back(t.h);
        generators.push_back(t.f);
      }
      closure.algebra = lie_closure(generators);
    } else {
      closure = llv_closure(A);
    }
  } catch (const NotLefschetz& e) {
    family_error = e.what();
  }
  report.add_check("total algebra constructed", family_error.empty(), "bracket-closed algebra",
                   family_error.empty() ? "constructed" : family_error,
                   "closure of the sl2 triples of the model");
  if (!family_error.empty()) return report;

  const LieOperatorAlgebra& g = closure.algebra;
  report.add_info("closure_dim", static_cast<long long>(g.dim()));

  const Subspace prim = prim_subspace(g);
  report.add_info("prim_dim", static_cast<long long>(prim.dim()));

  {
    bool stable = true;
    for (const GradedOperator& u : g.basis(0)) {
      for (const SparseVec& row : prim.basis().rows()) {
        if (!prim.contains(u.apply_total(row))) {
          stable = false;
          break;
        }
      }
      if (!stable) break;
    }
    report.add_check("primitive subspace is stable under the degree-0 piece", stable,
                     "g_0 Prim inside Prim", yes_no(stable),
                     "the joint kernel of the lowering piece is a degree-0 subrepresentation");
  }

  {
    const std::size_t total = A.space().total_dim();
    const std::size_t generated = submodule_generated(g, prim.basis_dense()).dim();
    report.add_check("primitive subspace generates the whole module",
                     generated == total, std::to_string(total), std::to_string(generated),
                     "the module is generated by its primitive part");
  }

  const std::map<int, Subspace> ring = verbitsky_subring(A);
  std::vector<std::size_t> ring_dims;
  EchelonBasis flat(A.space().total_dim());
  for (const auto& [degree, piece] : ring) {
    ring_dims.push_back(piece.dim());
    for (const SparseVec& row : piece.basis().rows())
      flat.insert(row.shifted(A.space().offset(degree)));
  }
  report.add_info("subring_dims", ring_dims);
  const bool subring_is_everything = flat.dim() == A.space().total_dim();

  if (subring_is_everything) {
    const WitnessReport w = irreducibility_witness(g, 20, seed);
    report.add_info("witness_starts", static_cast<long long>(w.starts));
    report.add_check("module generation witness", w.passed, "witness passed",
                     w.passed ? "witness passed" : "witness failed",
                     "every sampled vector generates the whole module; not a proof");
  } else {
    report.add_info("irreducibility_witness",
                    "skipped (the degree-2 subring is a proper submodule)");
  }

  {
    bool injective = false;
    std::string actual;
    try {
      const G0Decomposition g0 = decompose_g0(g);
      injective = restriction_injectivity(g0.g0prime, 2);
      actual = yes_no(injective);
    } catch (const Error& e) {
      actual = e.what();
    }
    report.add_check("derived degree-0 part acts faithfully on degree 2", injective,
                     "injective restriction", actual,
                     "restriction of the rotation part to the degree-2 component");
  }

  {
    if (model.quaternion) {
      const std::vector<std::size_t> expected = {1, 0, 6, 0, 1};
      report.add_check("subring generated in degree 2 misses the odd part",
                       ring_dims == expected, dims_string(expected), dims_string(ring_dims),
                       "products of even-degree classes stay even");
    }
    bool injective = false;
    std::string actual;
    try {
      injective = restriction_injectivity(g, Subspace(std::move(flat)));
      actual = yes_no(injective);
    } catch (const ValidationError& e) {
      actual = e.what();
    }
    report.add_check("closure acts faithfully on the degree-2 subring", injective,
                     "injective restriction", actual,
                     "restriction to the subalgebra generated in degree 2");
  }

  if (model.quaternion) {
    const struct {
      Imaginary a, b;
      const char* name;
    } pairs[3] = {{Imaginary::J, Imaginary::K, "K_JK"},
                  {Imaginary::I, Imaginary::K, "K_IK"},
                  {Imaginary::I, Imaginary::J, "K_IJ"}};
    for (const auto& p : pairs) {
      const bool ok = weil_parity_check(weil_commutator(*model.quaternion, p.a, p.b));
      report.add_check(std::string("rotation ") + p.name + " has Weil parity", ok,
                       "eigenvalues i*m with m = degree (mod 2)", yes_no(ok),
                       "commutators of the metric triples act like Weil operators");
    }
    const bool h_fails = !weil_parity_check(h_operator(A));
    report.add_check("grading operator fails Weil parity", h_fails, "parity violated",
                     yes_no(h_fails), "real nonzero eigenvalues violate the i*m pattern");
  } else if (model.q) {
    const auto pair = find_weil_pair(*model.q);
    if (pair) {
      bool ok = false;
      std::string actual;
      try {
        const GradedOperator e_a = cup_operator(A, pair->first);
        const Sl2Triple dual = sl2_triple(A, pair->second);
        ok = weil_parity_check(e_a.bracket(dual.f));
        actual = yes_no(ok);
      } catch (const Error& e) {
        actual = e.what();
      }
      report.add_check("searched rotation has Weil parity", ok,
                       "eigenvalues i*m with m = degree (mod 2)", actual,
                       "commutator of a raising operator with an orthogonal dual");
      const bool h_fails = !weil_parity_check(h_operator(A));
      report.add_check("grading operator fails Weil parity", h_fails, "parity violated",
                       yes_no(h_fails), "real nonzero eigenvalues violate the i*m pattern");
    } else {
      report.add_info("weil_parity", "skipped (no orthogonal equal-norm pair found)");
    }
  } else {
    report.add_info("weil_parity", "skipped (no degree-2 form attached)");
  }
  return report;
}

}  // namespace llv
