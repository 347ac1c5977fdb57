#include <benchmark/benchmark.h>

#include "lcmlat/alpha_search.hpp"
#include "lcmlat/canonical.hpp"
#include "lcmlat/enumeration.hpp"
#include "lcmlat/matrix_analysis.hpp"

namespace {

using namespace lcmlat;

GcdClosedSet counterexample() {
  return GcdClosedSet::from_elements(
      {1, 3, 5, 7, 195, 291, 1407, 4025, BigInt("1020180525")});
}

void BM_CanonicalForm(benchmark::State& state) {
  const Poset& p = eight_element_class("8_J");
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(p));
}
BENCHMARK(BM_CanonicalForm);

void BM_Mobius(benchmark::State& state) {
  const Poset p = divisibility_poset(counterexample());
  for (auto _ : state) benchmark::DoNotOptimize(mobius(p));
}
BENCHMARK(BM_Mobius);

void BM_EnumerateMeetSemilattices(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_meet_semilattices(n, EnumerationOptions{1}));
  }
}
BENCHMARK(BM_EnumerateMeetSemilattices)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_DetDirect(benchmark::State& state) {
  const ExactMatrix m = meet_matrix(counterexample(), ArithFn::reciprocal_power(Rational(2)));
  for (auto _ : state) benchmark::DoNotOptimize(det_direct(m));
}
BENCHMARK(BM_DetDirect);

void BM_HEval(benchmark::State& state) {
  const PsiEvaluator h(counterexample(), 8);
  const BigFloat alpha(0.75, 256);
  const auto prec = static_cast<Precision>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h(alpha, prec));
}
BENCHMARK(BM_HEval)->Arg(128)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
