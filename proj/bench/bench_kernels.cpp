// Serial reference kernels against their OpenMP counterparts, plus
// construction and lookup scaling in the run-length size.

#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <vector>

#include "jumbled/batch.hpp"
#include "jumbled/corner.hpp"
#include "jumbled/generate.hpp"
#include "jumbled/oracle.hpp"

namespace {

using namespace jumbled;

constexpr std::size_t kTextLength = 200'000;

struct Fixture {
  CornerIndex index;
  std::vector<ParikhVector> queries;
};

const Fixture& fixture(std::size_t runs) {
  static std::map<std::size_t, Fixture> cache;
  auto it = cache.find(runs);
  if (it != cache.end()) return it->second;
  Rng rng(runs);
  Fixture f{build_index(text_with_runs(kTextLength, runs, rng)), {}};
  f.queries.resize(1 << 18);
  std::uniform_int_distribution<Count> xs(0, f.index.total_a());
  std::uniform_int_distribution<Count> ys(0, f.index.total_b());
  for (auto& q : f.queries) q = {xs(rng), ys(rng)};
  return cache.emplace(runs, std::move(f)).first->second;
}

void BM_QueryBatchSerial(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
  std::vector<std::uint8_t> out(f.queries.size());
  for (auto _ : state) {
    query_batch_serial(f.index, f.queries, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.queries.size()));
}

void BM_QueryBatchOpenMP(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
  std::vector<std::uint8_t> out(f.queries.size());
  for (auto _ : state) {
    query_batch(f.index, f.queries, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.queries.size()));
}

BENCHMARK(BM_QueryBatchSerial)->Arg(200)->Arg(2000)->Arg(20000);
BENCHMARK(BM_QueryBatchOpenMP)->Arg(200)->Arg(2000)->Arg(20000);

void BM_GridCheckSerial(benchmark::State& state) {
  Rng rng(5);
  const auto s = random_text(static_cast<std::size_t>(state.range(0)), rng);
  const auto index = build_index(s);
  const auto truth = oracle::parikh_set_bruteforce(s);
  for (auto _ : state) benchmark::DoNotOptimize(grid_mismatches_serial(index, truth));
}

void BM_GridCheckOpenMP(benchmark::State& state) {
  Rng rng(5);
  const auto s = random_text(static_cast<std::size_t>(state.range(0)), rng);
  const auto index = build_index(s);
  const auto truth = oracle::parikh_set_bruteforce(s);
  for (auto _ : state) benchmark::DoNotOptimize(grid_mismatches(index, truth));
}

BENCHMARK(BM_GridCheckSerial)->Arg(512)->Arg(2048);
BENCHMARK(BM_GridCheckOpenMP)->Arg(512)->Arg(2048);

void BM_Construction(benchmark::State& state) {
  Rng rng(9);
  const auto rle = encode(text_with_runs(kTextLength, static_cast<std::size_t>(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(build_index(rle));
  state.SetComplexityN(state.range(0));
}

BENCHMARK(BM_Construction)->Arg(200)->Arg(2000)->Arg(6000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
