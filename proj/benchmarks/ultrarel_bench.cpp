// Kernel timings: filter extensions, section closures, hyperspaces and the
// topology enumeration that feeds the sweeps.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ultrarel/extensions.hpp"
#include "ultrarel/filters.hpp"
#include "ultrarel/sections.hpp"

namespace {

using namespace ultrarel;

std::vector<Rel> random_relations(std::size_t n, std::size_t count) {
  std::mt19937_64 rng(42);
  std::vector<Rel> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(n, rng() & full_mask(n * n));
  return out;
}

void BM_StarFilter(benchmark::State& state) {
  const auto rels = random_relations(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(star_filter(rels[i++ % rels.size()]));
}
BENCHMARK(BM_StarFilter)->DenseRange(2, 6);

void BM_StarFilterLiteral(benchmark::State& state) {
  const auto rels = random_relations(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(star_filter_literal(rels[i++ % rels.size()]));
}
BENCHMARK(BM_StarFilterLiteral)->DenseRange(2, 4);

void BM_TildeFilter(benchmark::State& state) {
  const auto rels = random_relations(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tilde_filter(rels[i++ % rels.size()]));
}
BENCHMARK(BM_TildeFilter)->DenseRange(2, 6);

void BM_Compose(benchmark::State& state) {
  const auto rels = random_relations(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(rels[i % 64], rels[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_Compose)->DenseRange(2, 6, 2);

void BM_Lcl(benchmark::State& state) {
  const std::vector<Topology> tops = enumerate_topologies(static_cast<std::size_t>(state.range(0)));
  const ProductSpace space(tops[tops.size() / 2], tops[tops.size() / 3]);
  std::mt19937_64 rng(7);
  std::vector<Mask> cells(64);
  for (Mask& c : cells) c = rng() & space.all();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lcl(space, cells[i++ % cells.size()]));
}
BENCHMARK(BM_Lcl)->DenseRange(2, 4);

void BM_ProductSpace(benchmark::State& state) {
  const std::vector<Topology> tops = enumerate_topologies(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ProductSpace(tops[i % tops.size()], tops[(i * 7) % tops.size()]));
    ++i;
  }
}
BENCHMARK(BM_ProductSpace)->DenseRange(2, 4);

void BM_HyperSpace(benchmark::State& state) {
  const Topology t = Topology::discrete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(HyperSpace(t));
}
BENCHMARK(BM_HyperSpace)->DenseRange(2, 4);

void BM_VietorisClosure(benchmark::State& state) {
  const HyperSpace h(Topology::discrete(3));
  const auto flavor = static_cast<Flavor>(state.range(0));
  Mask s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vietoris_closure_generic(h, s, flavor));
    s = (s + 1) & h.all();
  }
}
BENCHMARK(BM_VietorisClosure)->DenseRange(0, 2);

void BM_FilterVietorisClosure(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const FilterSet all = full_mask(filter_count(n));
  FilterSet s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(filter_vietoris_closure(n, s, Flavor::lower));
    s = (s + 37) & all;
  }
}
BENCHMARK(BM_FilterVietorisClosure)->DenseRange(2, 3);

void BM_EnumerateTopologies(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_topologies(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateTopologies)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
