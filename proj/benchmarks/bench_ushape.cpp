#include <benchmark/benchmark.h>

#include "ushape/families.hpp"
#include "ushape/lattice.hpp"
#include "ushape/records.hpp"
#include "ushape/verify.hpp"

using namespace ushape;

namespace {

// range(0) is the target precision in bits throughout
void BM_ShapeFromGram(benchmark::State& state) {
  const PrecisionContext ctx = PrecisionContext::with_bits(state.range(0));
  const std::vector<Gram2> grams = random_grams(256, 7, ctx);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(shape_from_gram(grams[i++ % grams.size()], ctx));
  }
}
BENCHMARK(BM_ShapeFromGram)->Arg(128)->Arg(256)->Arg(512);

void BM_LpsMember(benchmark::State& state) {
  const PrecisionContext ctx = PrecisionContext::with_bits(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lps_member(-9, ctx));
}
BENCHMARK(BM_LpsMember)->Arg(256)->Arg(512);

void BM_NakamulaMember(benchmark::State& state) {
  const PrecisionContext ctx = PrecisionContext::with_bits(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nakamula_member(9999, ctx));
}
BENCHMARK(BM_NakamulaMember)->Arg(256)->Arg(512);

void BM_EvaluateRecord(benchmark::State& state) {
  const PrecisionContext ctx = PrecisionContext::with_bits(state.range(0));
  const FieldRecord r = record_from_member(lps_member(-9, ctx));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_record(r, ctx));
}
BENCHMARK(BM_EvaluateRecord)->Arg(256);

// full family sweep up to range(1), single thread
void BM_Sweep(benchmark::State& state) {
  const PrecisionContext ctx = PrecisionContext::with_bits(256);
  const auto f = static_cast<Family>(state.range(0));
  std::size_t members = 0;
  for (auto _ : state) {
    const auto out = sweep(f, 1, state.range(1), ctx, 1);
    members = out.size();
    benchmark::DoNotOptimize(out.data());
  }
  state.SetLabel(std::string(family_name(f)));
  state.counters["members"] = static_cast<double>(members);
}
BENCHMARK(BM_Sweep)
    ->Args({static_cast<int>(Family::StenderCube), 10000})
    ->Args({static_cast<int>(Family::Lps), 10000})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
