#include <benchmark/benchmark.h>

#include "arcond/conductor.hpp"
#include "arcond/cyclotomic.hpp"
#include "arcond/oracle.hpp"
#include "arcond/ramification.hpp"

using namespace arcond;

namespace {

RamificationData tame(long n, long p) {
  const Group g = FiniteGroup::cyclic(static_cast<int>(n));
  return RamificationData::build(g, {Subgroup::whole(g)}, p, TameCharacter{1, 1});
}

// Z_2[zeta_8] with x = zeta_8 - 1.
MonogenicOrder zeta8() {
  return MonogenicOrder(2, {2, 4, 6, 4, 1}, {{0, 1}, {0, 3, 3, 1}, {-2, -1}, {-2, -3, -3, -1}});
}

}  // namespace

static void BM_CyclotomicMultiply(benchmark::State& state) {
  const long n = state.range(0);
  Cyclotomic a = Cyclotomic(1) + make_root(n, 1);
  const Cyclotomic b = make_root(n, 3) - Cyclotomic(2) * make_root(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(12)->Arg(60)->Arg(210);

static void BM_RefinedArtinTame(benchmark::State& state) {
  const RamificationData r = tame(state.range(0), 0);
  for (auto _ : state) benchmark::DoNotOptimize(refined_artin(r));
}
BENCHMARK(BM_RefinedArtinTame)->Arg(6)->Arg(12)->Arg(24);

static void BM_ConductorTame(benchmark::State& state) {
  const long n = state.range(0);
  const RamificationData r = tame(n, 0);
  const auto chars = qp_irreducibles_cyclic(n, 0);
  for (auto _ : state)
    for (const auto& chi : chars) benchmark::DoNotOptimize(conductor(r, chi));
}
BENCHMARK(BM_ConductorTame)->Arg(6)->Arg(12)->Arg(24);

static void BM_VerifySuite(benchmark::State& state) {
  const RamificationData r = tame(state.range(0), 0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_suite(r, {true, 1}));
}
BENCHMARK(BM_VerifySuite)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_OracleTame(benchmark::State& state) {
  const long n = state.range(0);
  std::vector<long> exps;
  for (long i = 1; i < n; ++i) exps.push_back(i);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_tame_clin(n, exps));
}
BENCHMARK(BM_OracleTame)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_OracleMonogenicRegular(benchmark::State& state) {
  const MonogenicOrder o = zeta8();
  const auto reg = o.regular_module();
  for (auto _ : state) benchmark::DoNotOptimize(oracle_monogenic_clin(o, reg));
}
BENCHMARK(BM_OracleMonogenicRegular)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
