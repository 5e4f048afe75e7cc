// Serial reference vs OpenMP kernel, same inputs.

#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "onefact/instances.hpp"
#include "onefact/splitter.hpp"
#include "onefact/verify.hpp"

namespace {

using namespace onefact;

const Multigraph& graph_for(std::size_t n2) {
  static std::map<std::size_t, Multigraph> cache;
  auto it = cache.find(n2);
  if (it == cache.end()) it = cache.emplace(n2, regular_from_factors(n2, n2 + n2 / 2, 2, 1)).first;
  return it->second;
}

std::vector<char> sides(std::size_t n2) {
  std::mt19937_64 rng(3);
  std::vector<char> side(n2);
  for (auto& s : side) s = rng() & 1;
  return side;
}

void BM_DeviationsSerial(benchmark::State& state) {
  const auto n2 = static_cast<std::size_t>(state.range(0));
  const Multigraph& g = graph_for(n2);
  const auto side = sides(n2);
  for (auto _ : state) benchmark::DoNotOptimize(compute_deviations_serial(g, side));
}

void BM_DeviationsParallel(benchmark::State& state) {
  const auto n2 = static_cast<std::size_t>(state.range(0));
  const Multigraph& g = graph_for(n2);
  const auto side = sides(n2);
  for (auto _ : state) benchmark::DoNotOptimize(compute_deviations(g, side));
}

// An unattainable bound forces every retry to run.
void BM_SplitSerial(benchmark::State& state) {
  const Multigraph& g = graph_for(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(balanced_split_serial(g, 0.5, 32, 9));
}

void BM_SplitParallel(benchmark::State& state) {
  const Multigraph& g = graph_for(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(balanced_split(g, 0.5, 32, 9));
}

// A factorization with every edge in some factor; the checks run in full
// whether or not it is valid.
Factorization spread(const Multigraph& g) {
  const std::size_t d = *g.is_regular();
  Factorization f;
  f.factors.resize(d);
  std::size_t i = 0;
  for (EdgeId e : g.edge_ids()) f.factors[i++ % d].push_back(e);
  return f;
}

void BM_VerifySerial(benchmark::State& state) {
  const Multigraph& g = graph_for(static_cast<std::size_t>(state.range(0)));
  const Factorization f = spread(g);
  for (auto _ : state) benchmark::DoNotOptimize(verify_factorization_serial(g, f));
}

void BM_VerifyParallel(benchmark::State& state) {
  const Multigraph& g = graph_for(static_cast<std::size_t>(state.range(0)));
  const Factorization f = spread(g);
  for (auto _ : state) benchmark::DoNotOptimize(verify_factorization(g, f));
}

BENCHMARK(BM_DeviationsSerial)->Arg(200)->Arg(800);
BENCHMARK(BM_DeviationsParallel)->Arg(200)->Arg(800);
BENCHMARK(BM_SplitSerial)->Arg(200)->Arg(800);
BENCHMARK(BM_SplitParallel)->Arg(200)->Arg(800);
BENCHMARK(BM_VerifySerial)->Arg(200)->Arg(800);
BENCHMARK(BM_VerifyParallel)->Arg(200)->Arg(800);

}  // namespace

BENCHMARK_MAIN();
