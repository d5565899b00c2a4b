// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <vector>

#include "qembed/cube.hpp"
#include "qembed/errors.hpp"
#include "qembed/families.hpp"
#include "qembed/graph.hpp"
#include "qembed/random.hpp"

using qembed::Edge;
using qembed::Graph;
using qembed::Vertex;

TEST_CASE("graph normalizes edge order and direction") {
  const Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
  const std::vector<Edge> want = {{0, 1}, {0, 2}, {1, 3}};
  CHECK(g.edges() == want);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(2, 3));
  CHECK_FALSE(g.has_edge(0, 0));
}

TEST_CASE("graph rejects malformed edge lists") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("neighbors are sorted and degrees are consistent") {
  const Graph g = qembed::wheel(8);
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    CHECK(g.degree(v) == nb.size());
    for (Vertex w : nb) CHECK(g.has_edge(v, w));
  }
  CHECK(g.degree(0) == 7);  // hub
  CHECK(g.degree(1) == 3);  // rim
  CHECK(g.max_degree() == 7);
}

TEST_CASE("adjacency masks agree with has_edge at small orders") {
  const Graph g = qembed::folded_hypercube(3);
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::uint64_t mask = g.adjacency_mask(v);
    for (Vertex w = 0; w < g.order(); ++w) {
      CHECK(((mask >> w) & 1u) == (g.has_edge(v, w) ? 1u : 0u));
    }
  }
}

TEST_CASE("hypercube generator matches XOR adjacency") {
  for (int n = 1; n <= 6; ++n) {
    const Graph q = qembed::hypercube(n);
    CHECK(q.order() == (1u << n));
    CHECK(q.edge_count() == static_cast<std::uint64_t>(n) << (n - 1));
    for (const auto& [u, v] : q.edges()) CHECK(std::popcount(u ^ v) == 1);
  }
}

TEST_CASE("folded hypercube adds exactly the antipodal pairs") {
  for (int n = 2; n <= 6; ++n) {
    const Graph q = qembed::hypercube(n);
    const Graph f = qembed::folded_hypercube(n);
    CHECK(f.order() == q.order());
    CHECK(f.edge_count() ==
          q.edge_count() + (std::uint64_t{1} << (n - 1)));
    const std::uint32_t all = (1u << n) - 1;
    for (const auto& [u, v] : f.edges()) {
      const bool cube_edge = std::popcount(u ^ v) == 1;
      const bool antipodal = (u ^ v) == all;
      CHECK((cube_edge || antipodal));
    }
    CHECK(f.max_degree() == static_cast<std::uint32_t>(n) + 1);
  }
}

TEST_CASE("complete multipartite joins all vertices in distinct parts") {
  const Graph g = qembed::complete_multipartite({2, 3, 4});
  CHECK(g.order() == 9);
  // 2*3 + 2*4 + 3*4 = 26 cross pairs.
  CHECK(g.edge_count() == 26);
  CHECK_FALSE(g.has_edge(0, 1));   // same part
  CHECK(g.has_edge(0, 2));         // parts 0 and 1
  CHECK_FALSE(g.has_edge(5, 8));   // both in the 4-part
  CHECK(g.has_edge(2, 5));
}

TEST_CASE("wheel is a rim cycle plus a universal hub") {
  const Graph g = qembed::wheel(8);
  CHECK(g.order() == 8);
  CHECK(g.edge_count() == 14);
  for (Vertex v = 1; v < 8; ++v) CHECK(g.has_edge(0, v));
  for (Vertex v = 1; v < 7; ++v) CHECK(g.has_edge(v, v + 1));
  CHECK(g.has_edge(1, 7));
  CHECK_FALSE(g.has_edge(2, 7));
}

TEST_CASE("cartesian product has the product order and layered edges") {
  const Graph a = qembed::complete_graph(3);
  const Graph b = qembed::cycle(4);
  const Graph p = qembed::cartesian_product(a, b);
  CHECK(p.order() == 12);
  // |V_a| * |E_b| + |V_b| * |E_a|
  CHECK(p.edge_count() == 3 * 4 + 4 * 3);
  // (a1, b1) ~ (a2, b2) iff equal in one coordinate, adjacent in the other.
  for (const auto& [u, v] : p.edges()) {
    const Vertex au = u / 4, bu = u % 4;
    const Vertex av = v / 4, bv = v % 4;
    const bool same_a = au == av && b.has_edge(bu, bv);
    const bool same_b = bu == bv && a.has_edge(au, av);
    CHECK((same_a || same_b));
  }
}

TEST_CASE("K_2 square K_2 is the 4-cycle") {
  const Graph p =
      qembed::cartesian_product(qembed::complete_graph(2), qembed::complete_graph(2));
  CHECK(p.order() == 4);
  CHECK(p.edge_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(p.degree(v) == 2);
}

TEST_CASE("complement is an involution and partitions pairs") {
  const Graph g = qembed::random_graph(10, 7);
  const Graph c = qembed::complement(g);
  CHECK(qembed::complement(c) == g);
  CHECK(g.edge_count() + c.edge_count() == 45);
  for (Vertex u = 0; u < 10; ++u) {
    for (Vertex v = u + 1; v < 10; ++v) {
      CHECK(g.has_edge(u, v) != c.has_edge(u, v));
    }
  }
}

TEST_CASE("gray code is a bijection with unit Hamming steps") {
  for (int n = 1; n <= 8; ++n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    std::set<std::uint32_t> seen;
    for (std::uint64_t i = 0; i < size; ++i) {
      seen.insert(qembed::gray_code(i, n).bits);
    }
    CHECK(seen.size() == size);
    CHECK(qembed::gray_code(0, n).bits == 0);
    for (std::uint64_t i = 0; i + 1 < size; ++i) {
      CHECK(std::popcount(qembed::gray_code(i, n).bits ^
                          qembed::gray_code(i + 1, n).bits) == 1);
    }
    // The cyclic closure step is also a cube edge.
    CHECK(std::popcount(qembed::gray_code(size - 1, n).bits ^
                        qembed::gray_code(0, n).bits) == 1);
  }
}

TEST_CASE("cube helpers: antipode and Hamming distance") {
  CHECK(qembed::antipode(qembed::CubeVertex(0, 3)).bits == 7);
  CHECK(qembed::antipode(qembed::CubeVertex(5, 3)).bits == 2);
  CHECK(qembed::hamming_distance(0b1010u, 0b0110u) == 2);
  CHECK(qembed::hamming_distance(9u, 9u) == 0);
  CHECK_THROWS_AS(qembed::CubeVertex(8, 3), std::invalid_argument);
  CHECK_THROWS_AS(qembed::CubeVertex(0, 21), std::invalid_argument);
}

TEST_CASE("random graphs are reproducible and seed-sensitive") {
  const Graph a = qembed::random_graph(12, 42);
  const Graph b = qembed::random_graph(12, 42);
  CHECK(a == b);
  bool any_different = false;
  for (std::uint64_t seed = 0; seed < 4 && !any_different; ++seed) {
    any_different = !(qembed::random_graph(12, seed) == a);
  }
  CHECK(any_different);
}

TEST_CASE("order guard rejects oversized graphs") {
  CHECK_THROWS_AS(Graph((1u << 20) + 1, {}), qembed::guard_error);
}
