#include <benchmark/benchmark.h>

#include "perimod/claims.hpp"
#include "perimod/dynamics.hpp"
#include "perimod/irreducible.hpp"
#include "perimod/stats.hpp"

namespace {

using namespace perimod;

void BM_ModPowPrimeField(benchmark::State& state) {
  const Ring ring = Ring::prime_field(Prime(1'000'003));
  const RingElem base = RingElem::from_integer(ring, 12345);
  for (auto _ : state) benchmark::DoNotOptimize(mod_pow(base, static_cast<std::uint64_t>(state.range(0)), ring));
}
BENCHMARK(BM_ModPowPrimeField)->Arg(1 << 10)->Arg(1 << 20)->Arg(1 << 30);

void BM_ModPowQuotient(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  const Ring ring = Ring::quotient_field(PolyModulus(enumerate_monic_irreducibles(Prime(5), m).front()));
  const RingElem base = element_at(ring, ring.cardinality() - 2);
  for (auto _ : state) benchmark::DoNotOptimize(mod_pow(base, 1'000'003, ring));
}
BENCHMARK(BM_ModPowQuotient)->DenseRange(2, 6, 2);

void BM_IsIrreducible(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  std::vector<std::uint32_t> coeffs(m + 1, 1);
  const FpPoly f(Prime(13), coeffs);
  for (auto _ : state) benchmark::DoNotOptimize(is_irreducible(f));
}
BENCHMARK(BM_IsIrreducible)->Arg(4)->Arg(8)->Arg(16);

void BM_MapTableCounts(benchmark::State& state) {
  const Ring ring = Ring::prime_field(Prime(static_cast<std::uint64_t>(state.range(0))));
  const MapTable table(ring, {DegreeBase::P, 1});
  std::uint32_t c = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(table.counts(c));
    c = (c + 1) % static_cast<std::uint32_t>(state.range(0));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MapTableCounts)->Arg(101)->Arg(10'007)->Arg(99'991);

void BM_OrbitDecompositionQuotient(benchmark::State& state) {
  const Ring ring = Ring::quotient_field(PolyModulus(enumerate_monic_irreducibles(Prime(7), 4).front()));
  const PowerMapSpec map(ring, {DegreeBase::PMinus1, 2}, element_at(ring, 17));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_decomposition(map));
}
BENCHMARK(BM_OrbitDecompositionQuotient)->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
  const auto p_max = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(p_max, 2, 2, Interpretation::RootsOfPhi2MinusZ));
}
BENCHMARK(BM_VerifyAll)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_Density(benchmark::State& state) {
  const DensityQuery query{{DegreeBase::P, 1},
                           {DensityPredicateKind::CountEquals, Interpretation::RootsOfPhi2MinusZ, 0, 0, 0, false},
                           static_cast<std::uint64_t>(state.range(0)),
                           std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(density(query));
}
BENCHMARK(BM_Density)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
