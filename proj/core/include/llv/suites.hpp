#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "llv/frobenius.hpp"
#include "llv/models.hpp"
#include "llv/quadspace.hpp"
#include "llv/report.hpp"

namespace llv {

/// A named model algebra, together with its degree-2 quadratic form when
/// one is attached and the quaternionic structure for the exterior model.
struct BuiltinModel {
  std::string name;
  GradedFrobeniusAlgebra algebra;
  std::optional<QuadraticSpace> q;
  std::optional<QuaternionicExteriorModel> quaternion;
};

/// Registry of built-in models: "quaternion", "k3", "k3type-r<k>" (the
/// hyperbolic plane plus a rank k-2 identity block), and
/// "verbitsky-r<r>-n<n>" (the component over the same form).
std::optional<BuiltinModel> make_builtin(const std::string& name);

/// The hyperbolic plane plus an identity block of rank - 2 ones; throws
/// ValidationError for rank < 2.
QuadraticSpace standard_form(int rank);

/// Recover the degree-2 form of an algebra with components (1, r, 1) in
/// degrees 0, 2, 4 via q(a, b) = Int a.b; nullopt for other shapes.
std::optional<QuadraticSpace> derive_quadratic_form(const GradedFrobeniusAlgebra& A);

/// Axioms report for one algebra.
Report validate_suite(const GradedFrobeniusAlgebra& A);

/// The full quaternionic-model suite: sl2 triples from the metric, star
/// duals, the ten named operators, the nine relation families, closure
/// dimension 10, and the Killing signature against an so(4,1) oracle.
Report quaternion_suite();

enum class GeneratorMode {
  Auto,  // searched Lefschetz spanning family
  List,  // every degree-2 basis vector with the Lefschetz property
};

/// Closure of the sl2 triples of A: dimensions, degree decomposition,
/// derived degree-0 part, derivation / form-invariance checks, the cup
/// bijection onto the raising piece, and commuting lowering operators.
Report llv_suite(const GradedFrobeniusAlgebra& A, const std::optional<QuadraticSpace>& q,
                 GeneratorMode mode);

/// Component dims against the binomial formula, pairings, isotropic powers,
/// and optionally the closure of the component's own Lie algebra.
Report verbitsky_suite(const QuadraticSpace& q, int n, bool with_closure);

/// Primitive subspace, generation, irreducibility witness, degree-2
/// restriction injectivity, the subalgebra generated in degree 2, and Weil
/// parity for a model.
Report prim_suite(const BuiltinModel& model, std::uint64_t seed);

}  // namespace llv
