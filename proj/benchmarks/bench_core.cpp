#include <benchmark/benchmark.h>

#include <random>

#include "gmi/graded_abelian.hpp"
#include "gmi/homology.hpp"
#include "gmi/plan.hpp"
#include "gmi/polarization.hpp"

namespace {

gmi::IntegerMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-20, 20);
  gmi::IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7u);
  for (auto _ : state) benchmark::DoNotOptimize(gmi::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_HilbertFunction(benchmark::State& state) {
  gmi::MonomialRing ring = gmi::parse_presentation(
      "ring { even: x:2, z:2, t:4; odd: y:1, s:3 } ideal { x^3*y; x*z^2; t^2*s }");
  for (auto _ : state)
    benchmark::DoNotOptimize(
        gmi::hilbert_function(ring, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HilbertFunction)->Arg(10)->Arg(20)->Arg(30);

void BM_KoszulTor(benchmark::State& state) {
  gmi::MonomialRing ring =
      gmi::parse_presentation("ring { even: x:4; odd: y:1 } ideal { x^2*y }");
  gmi::ModuleAction action = gmi::build_action(gmi::polarize(ring));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        gmi::koszul_tor(action, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_KoszulTor)->Arg(20)->Arg(40);

void BM_RegularSequence(benchmark::State& state) {
  gmi::MonomialRing ring = gmi::parse_presentation(
      "ring { even: x:2, z:2; odd: y:1 } ideal { x^3*z; x*z^2*y }");
  gmi::PolarizationData data = gmi::polarize(ring);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        gmi::check_regular_sequence(data, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RegularSequence)->Arg(12)->Arg(16);

void BM_Verify(benchmark::State& state) {
  gmi::MonomialRing ring =
      gmi::parse_presentation("ring { even: x:4; odd: y:1 } ideal { x^2*y }");
  for (auto _ : state)
    benchmark::DoNotOptimize(gmi::verify(ring, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Verify)->Arg(16)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
