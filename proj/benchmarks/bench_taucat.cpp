#include <benchmark/benchmark.h>

#include <memory>

#include "taucat/modcat.hpp"
#include "taucat/structure.hpp"
#include "taucat/yoneda.hpp"

using namespace taucat;

namespace {

MtauSpec spec(int l, int p, std::uint64_t seed) {
  const GroupHom tau = c8_to_c2();
  const int gs[] = {l};
  const Subgroup L = Subgroup::generated(tau.source(), gs);
  const PrimeField f(p);
  return MtauSpec::make(tau, f, L, d1(random_cochain1(CosetSpace(L), f, seed)), 0);
}

// Argument: generator of L (0, 4 or 2).
void BM_BuildSkeleton(benchmark::State& state) {
  const MtauSpec s = spec(static_cast<int>(state.range(0)), 5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_skeleton(s));
}
BENCHMARK(BM_BuildSkeleton)->Arg(0)->Arg(4)->Arg(2);

void BM_VerifyAxioms(benchmark::State& state) {
  const GradedCategory c = build_skeleton(spec(static_cast<int>(state.range(0)), 5, 1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_axioms(c));
}
BENCHMARK(BM_VerifyAxioms)->Arg(0)->Arg(4)->Arg(2);

void BM_SolveD1(benchmark::State& state) {
  const MtauSpec s = spec(static_cast<int>(state.range(0)), 5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_d1(s.psi));
}
BENCHMARK(BM_SolveD1)->Arg(0)->Arg(4)->Arg(2);

void BM_ClassifyEquivalences(benchmark::State& state) {
  const MtauSpec a = spec(static_cast<int>(state.range(0)), 5, 1);
  const MtauSpec b = spec(static_cast<int>(state.range(0)), 5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(classify_equivalences(a, b));
}
BENCHMARK(BM_ClassifyEquivalences)->Arg(0)->Arg(4)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const GradedCategory c = build_skeleton(spec(static_cast<int>(state.range(0)), 5, 1));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(c));
}
BENCHMARK(BM_Decompose)->Arg(0)->Arg(4)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_YonedaNatSpace(benchmark::State& state) {
  const auto c = std::make_shared<const GradedCategory>(build_skeleton(spec(static_cast<int>(state.range(0)), 5, 1)));
  for (auto _ : state) benchmark::DoNotOptimize(YonedaProblem(c, 0, 1, {{0, 1}}).nat_space());
}
BENCHMARK(BM_YonedaNatSpace)->Arg(0)->Arg(4)->Arg(2);

void BM_RoundTripEta(benchmark::State& state) {
  const auto c = std::make_shared<const GradedCategory>(build_skeleton(spec(static_cast<int>(state.range(0)), 5, 1)));
  const ShiftSystem s = *find_shifts(*c);
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip_eta(c, s));
}
BENCHMARK(BM_RoundTripEta)->Arg(0)->Arg(4)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_RoundTripNu(benchmark::State& state) {
  const GradedCategory c = build_skeleton(spec(static_cast<int>(state.range(0)), 5, 1));
  const ModuleCat m = extract_action(c, *find_shifts(c));
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip_nu(m));
}
BENCHMARK(BM_RoundTripNu)->Arg(0)->Arg(4)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
