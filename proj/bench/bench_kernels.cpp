#include <benchmark/benchmark.h>

#include "amds/brute.hpp"
#include "amds/residue.hpp"

using namespace amds;

namespace {

struct Fixture {
  CoeffTable table = compute_table(parse_type("A3~"), 12);
  BruteContext ctx{13, table, 4};
  Bipartition b = bipartitions(table.type)[0];
};

Fixture& fixture() {
  static Fixture f;
  return f;
}

void BM_BruteSerial(benchmark::State& st) {
  Fixture& f = fixture();
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_coeff_serial(f.ctx, {1, 1, 1, 1}));
}

void BM_BruteParallel(benchmark::State& st) {
  Fixture& f = fixture();
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_coeff(f.ctx, {1, 1, 1, 1}));
}

void BM_SquareSumSerial(benchmark::State& st) {
  Fixture& f = fixture();
  for (auto _ : st) benchmark::DoNotOptimize(residue_square_sum_raw_serial(f.ctx, f.b, {2, 2}));
}

void BM_SquareSumParallel(benchmark::State& st) {
  Fixture& f = fixture();
  for (auto _ : st) benchmark::DoNotOptimize(residue_square_sum_raw(f.ctx, f.b, {2, 2}));
}

void BM_TableConstruction(benchmark::State& st) {
  DynkinType t = parse_type("E6~");
  for (auto _ : st) benchmark::DoNotOptimize(compute_table(t, static_cast<int>(st.range(0))).entries.size());
}

}  // namespace

BENCHMARK(BM_BruteSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SquareSumSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SquareSumParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TableConstruction)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
