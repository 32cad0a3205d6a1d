#include <benchmark/benchmark.h>

#include "hyperpoly/corpus.hpp"
#include "hyperpoly/enumerate.hpp"
#include "hyperpoly/operadic.hpp"
#include "hyperpoly/order.hpp"
#include "hyperpoly/pba.hpp"
#include "hyperpoly/realization.hpp"

using namespace hyperpoly;

namespace {

Hypergraph path(std::size_t atoms) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 0; i < atoms; ++i) {
    labels.push_back("x" + std::to_string(i + 1));
    if (i > 0) edges.push_back({labels[i - 1], labels[i]});
  }
  return Hypergraph::from_labels(labels, edges, true);
}

Hypergraph complete(std::size_t atoms) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 0; i < atoms; ++i) {
    labels.push_back("x" + std::to_string(i + 1));
    for (std::size_t j = 0; j < i; ++j) edges.push_back({labels[j], labels[i]});
  }
  return Hypergraph::from_labels(labels, edges, true);
}

void BM_EnumerateAssociahedron(benchmark::State& state) {
  const Hypergraph h = path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_constructs(h));
}
BENCHMARK(BM_EnumerateAssociahedron)->DenseRange(3, 7);

void BM_EnumeratePermutohedron(benchmark::State& state) {
  const Hypergraph h = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_constructs(h));
}
BENCHMARK(BM_EnumeratePermutohedron)->DenseRange(3, 6);

void BM_OrderVariants(benchmark::State& state) {
  const Hypergraph h = path(5);
  const auto cs = enumerate_constructs(h);
  const auto variant = static_cast<OrderVariant>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for (const auto& a : cs) {
      for (const auto& b : cs) count += leq(h, a, b, variant);
    }
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_OrderVariants)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyIsomorphism(benchmark::State& state) {
  const Hypergraph h = path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_isomorphism(h));
}
BENCHMARK(BM_VerifyIsomorphism)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Skeleton(benchmark::State& state) {
  const EdgeGraph g(OperadicTree::parse("a(b(c,d),e(f))"));
  for (auto _ : state) benchmark::DoNotOptimize(skeleton(g));
}
BENCHMARK(BM_Skeleton)->Unit(benchmark::kMillisecond);

void BM_PbaCensus(benchmark::State& state) {
  const PbaSetup s = pba_setup(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pba_census(s));
}
BENCHMARK(BM_PbaCensus)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
