// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <vector>

#include "brute.hpp"
#include "qembed/families.hpp"
#include "qembed/graph.hpp"
#include "qembed/matching.hpp"
#include "qembed/random.hpp"

using qembed::Graph;
using qembed::Vertex;

namespace {

// Checks the mate array is symmetric and uses only real edges, and
// returns the number of matched pairs.
std::uint64_t checked_size(const Graph& g, const std::vector<Vertex>& mate) {
  REQUIRE(mate.size() == g.order());
  std::uint64_t matched = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (mate[v] == qembed::kUnmatched) continue;
    CHECK(mate[mate[v]] == v);
    CHECK(g.has_edge(v, mate[v]));
    ++matched;
  }
  CHECK(matched % 2 == 0);
  return matched / 2;
}

Graph petersen() {
  std::vector<qembed::Edge> edges;
  for (Vertex v = 0; v < 5; ++v) {
    edges.push_back({v, (v + 1) % 5});        // outer cycle
    edges.push_back({v, v + 5});              // spokes
    edges.push_back({v + 5, (v + 2) % 5 + 5});  // inner 5-star
  }
  return Graph(10, edges, "petersen");
}

}  // namespace

TEST_CASE("matching on structured graphs hits the known optimum") {
  struct Case {
    Graph graph;
    std::uint64_t want;
  };
  const Case cases[] = {
      {qembed::complete_graph(8), 4},
      {qembed::complete_graph(9), 4},
      {qembed::cycle(7), 3},
      {qembed::cycle(8), 4},
      {qembed::complete_multipartite({3, 3}), 3},
      {petersen(), 5},
      {Graph(5, {}), 0},
  };
  for (const auto& c : cases) {
    const auto mate = qembed::maximum_matching(c.graph);
    CHECK(checked_size(c.graph, mate) == c.want);
    CHECK(qembed::matching_size(mate) == c.want);
  }
}

TEST_CASE("triangle with a pendant forces an odd-cycle augmentation") {
  // 0-1-2 triangle, 3 hangs off 2: maximum matching pairs all four.
  const Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  const auto mate = qembed::maximum_matching(g);
  CHECK(checked_size(g, mate) == 2);
}

TEST_CASE("matching matches the exhaustive optimum on random graphs") {
  qembed::SplitMix64 seeds(915);
  for (std::uint32_t order = 4; order <= 10; ++order) {
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = qembed::random_graph(order, seeds.next());
      const auto mate = qembed::maximum_matching(g);
      CHECK(checked_size(g, mate) == brute::max_matching_size(g));
    }
  }
}

TEST_CASE("blossom handling on odd components") {
  // Two disjoint triangles: one vertex per triangle stays single.
  const Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  const auto mate = qembed::maximum_matching(g);
  CHECK(checked_size(g, mate) == 2);
  CHECK(brute::max_matching_size(g) == 2);
}
