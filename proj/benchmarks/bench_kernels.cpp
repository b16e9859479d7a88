// Micro-benchmarks for the hot kernels: polynomial gcd, wedge products and
// the integrability check, pencil construction with its connection form, and
// the integer relation lattice.  Inputs are fixed so runs are comparable.

#include <benchmark/benchmark.h>

#include <vector>

#include "folkit/foliation.hpp"
#include "folkit/pencil.hpp"
#include "folkit/poly.hpp"
#include "folkit/resonance.hpp"

using namespace folkit;

namespace {

const FieldPtr& QQ() { return NumberField::rationals(); }

FieldPtr quartic_field() {
  // t^4 - 10 t^2 + 1
  return NumberField::create(
      {Rational(1), Rational(0), Rational(-10), Rational(0), Rational(1)});
}

FieldElement fe(long num, long den = 1) {
  return FieldElement::from_rational(QQ(), make_rational(num, den));
}

Poly var(int i) { return Poly::variable(QQ(), 3, i); }

// A pair of degree-6 products sharing a fixed degree-2 factor.
std::pair<Poly, Poly> gcd_inputs() {
  Poly x1 = var(0), x2 = var(1), x3 = var(2);
  Poly one = Poly::constant(QQ(), 3, fe(1));
  Poly g = (x1 + x2) * (x2 - x3);
  Poly p = (x1 - one) * (x1 + x2 * fe(2) + x3) * (x3 + one * fe(5));
  Poly q = (x2 + x3 * fe(3)) * (x1 + x2 + x3) * (x1 - x3);
  return {g * p, g * q};
}

void BM_PolyGcd(benchmark::State& state) {
  auto [a, b] = gcd_inputs();
  for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_PolyGcd);

void BM_WedgeIntegrability(benchmark::State& state) {
  Pencil p = tangent_log_pencil(Eigenvalues({fe(1), fe(2), fe(3)}));
  MeroForm w = p.member(fe(7), fe(-5));
  for (auto _ : state) benchmark::DoNotOptimize(is_integrable(w));
}
BENCHMARK(BM_WedgeIntegrability);

void BM_PencilTheta(benchmark::State& state) {
  Eigenvalues a({fe(1), fe(2), fe(3)});
  for (auto _ : state) {
    Pencil p = tangent_log_pencil(a);
    benchmark::DoNotOptimize(p.theta());
  }
}
BENCHMARK(BM_PencilTheta);

void BM_RelationLattice(benchmark::State& state) {
  FieldPtr f = quartic_field();
  FieldElement t = FieldElement::generator(f);
  FieldElement one = FieldElement::one(f);
  // A resonant triple so the lattice is nontrivial and saturation runs.
  Eigenvalues a({one + t, one - t, t + t});
  for (auto _ : state) benchmark::DoNotOptimize(strong_resonances(a));
}
BENCHMARK(BM_RelationLattice);

void BM_NormalFormRecognition(benchmark::State& state) {
  Eigenvalues a({fe(1), fe(2), fe(3)});
  Pencil p = tangent_log_pencil(a);
  MeroForm w = p.member(fe(1), fe(1));
  int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(recognize_normal_form(w, a, order));
}
BENCHMARK(BM_NormalFormRecognition)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
