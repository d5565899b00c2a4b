// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot paths: generators, metric evaluation,
// matching, and the exhaustive searches.

#include <benchmark/benchmark.h>

#include "qembed/bounds.hpp"
#include "qembed/constructions.hpp"
#include "qembed/families.hpp"
#include "qembed/graph.hpp"
#include "qembed/matching.hpp"
#include "qembed/metrics.hpp"
#include "qembed/oracle.hpp"

namespace {

void BM_HypercubeGen(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qembed::hypercube(n));
  }
}
BENCHMARK(BM_HypercubeGen)->Arg(6)->Arg(10)->Arg(14);

void BM_MultipartiteEmbedding(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qembed::multipartite_embedding(n, n / 2));
  }
}
BENCHMARK(BM_MultipartiteEmbedding)->Arg(6)->Arg(8)->Arg(10);

void BM_EvaluateMetrics(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto e = qembed::multipartite_embedding(n, n / 2).embedding;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qembed::evaluate(e));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(e.guest().edge_count()));
}
BENCHMARK(BM_EvaluateMetrics)->Arg(6)->Arg(8)->Arg(10);

void BM_MaximumMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // Complement of a balanced bipartition: disjoint cliques, the matching
  // workload behind the anti-matching test.
  const qembed::Graph g = qembed::complement(qembed::complete_multipartite(
      {std::uint32_t{1} << (n - 1), std::uint32_t{1} << (n - 1)}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qembed::maximum_matching(g));
  }
}
BENCHMARK(BM_MaximumMatching)->Arg(6)->Arg(8)->Arg(10);

void BM_OracleWirelength(benchmark::State& state) {
  const qembed::Graph g = qembed::wheel(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qembed::oracle_wirelength(g, 3));
  }
}
BENCHMARK(BM_OracleWirelength);

void BM_OracleDilation(benchmark::State& state) {
  const qembed::Graph g = qembed::folded_hypercube(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qembed::oracle_dilation(g, 3));
  }
}
BENCHMARK(BM_OracleDilation);

void BM_OracleBisection(benchmark::State& state) {
  const qembed::Graph g = qembed::folded_hypercube(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qembed::oracle_bisection_width(g));
  }
}
BENCHMARK(BM_OracleBisection);

void BM_LindseyLex(benchmark::State& state) {
  const std::vector<std::uint64_t> radices = {2, 2, 3};
  for (auto _ : state) {
    for (std::uint64_t m = 1; m <= 12; ++m) {
      benchmark::DoNotOptimize(qembed::lindsey_lex_edge_count(radices, m));
    }
  }
}
BENCHMARK(BM_LindseyLex);

}  // namespace

BENCHMARK_MAIN();
