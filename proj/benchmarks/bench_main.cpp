#include <benchmark/benchmark.h>

#include "quivercount/catalog.hpp"
#include "quivercount/kac.hpp"
#include "quivercount/matrix.hpp"
#include "quivercount/tree_modules.hpp"

namespace qc = quivercount;

static void bm_enumerate_trees(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qc::enumerate_tree_quivers(d));
}
BENCHMARK(bm_enumerate_trees)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void bm_labeled_census(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qc::labeled_orbit_census(d));
}
BENCHMARK(bm_labeled_census)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void bm_hua_kac(benchmark::State& state) {
  const auto q = qc::Quiver::loop_quiver(static_cast<unsigned>(state.range(0)));
  const std::vector<std::size_t> d{static_cast<std::size_t>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(qc::kac_polynomial(q, d));
}
BENCHMARK(bm_hua_kac)->Args({2, 2})->Args({2, 3})->Args({3, 2})->Args({2, 4})->Unit(benchmark::kMillisecond);

static void bm_kac_at_one(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qc::kac_at_one_in_g(d));
}
BENCHMARK(bm_kac_at_one)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void bm_tm_sg(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qc::tm_sg(d));
}
BENCHMARK(bm_tm_sg)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void bm_tm_bruteforce(benchmark::State& state) {
  const auto g = static_cast<unsigned>(state.range(0));
  const auto d = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(qc::tm_sg_bruteforce(g, d));
}
BENCHMARK(bm_tm_bruteforce)->Args({2, 4})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void bm_rational_rank(benchmark::State& state) {
  const qc::RationalField k;
  const auto n = static_cast<std::size_t>(state.range(0));
  auto m = qc::zeros(k, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = qc::Rational(static_cast<long>((i * 7 + j * 13) % 11) - 5, 1 + (i + j) % 3);
  }
  for (auto _ : state) benchmark::DoNotOptimize(qc::rank(k, m));
}
BENCHMARK(bm_rational_rank)->RangeMultiplier(2)->Range(8, 64);

static void bm_end_space(benchmark::State& state) {
  const qc::RationalField k;
  const auto m = qc::all_ones_rep(k, qc::parse_quiver("A" + std::to_string(state.range(0))));
  const qc::QuiverMorphism f = qc::QuiverMorphism::to_loop_quiver(m.quiver, 2, std::vector<std::size_t>(m.quiver.arrow_count(), 0));
  const auto pushed = qc::pushforward(k, f, m);
  for (auto _ : state) benchmark::DoNotOptimize(qc::end_space(k, pushed));
}
BENCHMARK(bm_end_space)->DenseRange(3, 7, 2);
BENCHMARK_MAIN();
