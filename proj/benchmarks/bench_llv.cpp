#include <benchmark/benchmark.h>

#include <random>

#include "llv/lefschetz.hpp"
#include "llv/liealg.hpp"
#include "llv/matrix.hpp"
#include "llv/models.hpp"
#include "llv/rep.hpp"
#include "llv/suites.hpp"
#include "llv/verbitsky.hpp"

namespace {

using namespace llv;

RationalMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rational(entry(rng));
  return m;
}

void bench_rref(benchmark::State& state) {
  const RationalMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 2026);
  for (auto _ : state) benchmark::DoNotOptimize(m.rref());
}
BENCHMARK(bench_rref)->Arg(16)->Arg(32)->Arg(64);

void bench_quaternion_closure(benchmark::State& state) {
  const QuaternionicExteriorModel model = exterior_quaternion_model();
  for (auto _ : state) {
    std::vector<GradedOperator> gens;
    for (Imaginary s : {Imaginary::I, Imaginary::J, Imaginary::K}) {
      const Sl2Triple t = metric_triple(model, s);
      gens.push_back(t.e);
      gens.push_back(t.h);
      gens.push_back(t.f);
    }
    benchmark::DoNotOptimize(lie_closure(gens).dim());
  }
}
BENCHMARK(bench_quaternion_closure);

void bench_k3type_closure(benchmark::State& state) {
  const GradedFrobeniusAlgebra A =
      frobenius_from_quadratic(standard_form(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(llv_closure(A).algebra.dim());
}
BENCHMARK(bench_k3type_closure)->Arg(3)->Arg(5)->Arg(8);

void bench_jacobson_morozov(benchmark::State& state) {
  const GradedFrobeniusAlgebra A =
      frobenius_from_quadratic(standard_form(static_cast<int>(state.range(0))));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::vector<Vec> classes;
  while (classes.size() < 8) {
    Vec a(A.space().dim(2));
    for (Rational& c : a) c = Rational(entry(rng));
    if (lefschetz_check(A.space(), cup_operator(A, a))) classes.push_back(a);
  }
  std::size_t next = 0;
  for (auto _ : state) {
    const Vec& a = classes[next++ % classes.size()];
    benchmark::DoNotOptimize(jacobson_morozov_dual(A.space(), cup_operator(A, a)));
  }
}
BENCHMARK(bench_jacobson_morozov)->Arg(4)->Arg(8);

void bench_verbitsky_component(benchmark::State& state) {
  const QuadraticSpace q = standard_form(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(verbitsky_component(q, static_cast<int>(state.range(1))).dims());
}
BENCHMARK(bench_verbitsky_component)->Args({4, 2})->Args({5, 2})->Args({4, 3});

void bench_prim_suite(benchmark::State& state) {
  const BuiltinModel model = *make_builtin("verbitsky-r4-n2");
  for (auto _ : state) benchmark::DoNotOptimize(prim_suite(model, 7).all_passed());
}
BENCHMARK(bench_prim_suite);

}  // namespace
