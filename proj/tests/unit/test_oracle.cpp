// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <vector>

#include "brute.hpp"
#include "qembed/embedding.hpp"
#include "qembed/errors.hpp"
#include "qembed/families.hpp"
#include "qembed/graph.hpp"
#include "qembed/metrics.hpp"
#include "qembed/oracle.hpp"
#include "qembed/random.hpp"

using qembed::Graph;
using qembed::OracleCertificate;
using qembed::Vertex;

namespace {

void check_dilation_certificate(const Graph& g, int n,
                                const OracleCertificate& cert) {
  const qembed::Embedding e(g, n, cert.witness_map);
  CHECK(static_cast<std::uint64_t>(qembed::dilation(e)) == cert.value);
}

void check_wirelength_certificate(const Graph& g, int n,
                                  const OracleCertificate& cert) {
  const qembed::Embedding e(g, n, cert.witness_map);
  CHECK(qembed::wirelength(e) == cert.value);
}

}  // namespace

TEST_CASE("dilation search agrees with unreduced enumeration") {
  qembed::SplitMix64 seeds(301);
  // (order, host_dim) pairs kept small enough for the naive search.
  const std::pair<std::uint32_t, int> shapes[] = {
      {4, 2}, {5, 3}, {6, 3}, {8, 3}, {4, 4}};
  for (const auto& [order, dim] : shapes) {
    for (int trial = 0; trial < 8; ++trial) {
      const Graph g = qembed::random_graph(order, seeds.next());
      const auto cert = qembed::oracle_dilation(g, dim);
      CHECK(cert.value ==
            static_cast<std::uint64_t>(brute::min_dilation(g, dim)));
      check_dilation_certificate(g, dim, cert);
      // The symmetry reduction must shrink the walk, never the answer.
      CHECK(cert.search_space < brute::injection_count(order, dim));
    }
  }
}

TEST_CASE("wirelength search agrees with unreduced enumeration") {
  qembed::SplitMix64 seeds(302);
  const std::pair<std::uint32_t, int> shapes[] = {
      {4, 2}, {5, 3}, {6, 3}, {8, 3}};
  for (const auto& [order, dim] : shapes) {
    for (int trial = 0; trial < 8; ++trial) {
      const Graph g = qembed::random_graph(order, seeds.next());
      const auto cert = qembed::oracle_wirelength(g, dim);
      CHECK(cert.value == brute::min_wirelength(g, dim));
      check_wirelength_certificate(g, dim, cert);
    }
  }
}

TEST_CASE("structured guests have known optima") {
  // A hypercube embeds into itself with stretch 1; its wirelength optimum
  // is its edge count.
  for (int n = 1; n <= 3; ++n) {
    const Graph q = qembed::hypercube(n);
    CHECK(qembed::oracle_dilation(q, n).value == 1);
    CHECK(qembed::oracle_wirelength(q, n).value == q.edge_count());
  }
  // K_8 into Q_3 must stretch some edge across the full diameter.
  CHECK(qembed::oracle_dilation(qembed::complete_graph(8), 3).value == 3);
  // The folded hypercube needs stretch exactly 2 at small dimensions.
  CHECK(qembed::oracle_dilation(qembed::folded_hypercube(2), 2).value == 2);
  CHECK(qembed::oracle_dilation(qembed::folded_hypercube(3), 3).value == 2);
  CHECK(qembed::oracle_wirelength(qembed::folded_hypercube(3), 3).value ==
        3u << 3);
  // Wheels: minimum wirelength (n + 2) * 2^(n-1).
  CHECK(qembed::oracle_wirelength(qembed::wheel(4), 2).value == 8);
  CHECK(qembed::oracle_wirelength(qembed::wheel(8), 3).value == 20);
}

TEST_CASE("wirelength witness is the lexicographically first optimum") {
  // For the 4-cycle in Q_2 the identity-like layout 0,1,3,2 is optimal and
  // no smaller map achieves wirelength 4.
  const auto cert = qembed::oracle_wirelength(qembed::cycle(4), 2);
  CHECK(cert.value == 4);
  const std::vector<std::uint32_t> want = {0, 1, 3, 2};
  CHECK(cert.witness_map == want);
}

TEST_CASE("bisection width agrees with unreduced enumeration") {
  qembed::SplitMix64 seeds(303);
  for (std::uint32_t order = 4; order <= 11; ++order) {
    for (int trial = 0; trial < 10; ++trial) {
      const Graph g = qembed::random_graph(order, seeds.next());
      const auto cert = qembed::oracle_bisection_width(g);
      CHECK(cert.value == brute::min_bisection_cut(g));
      // The witness partition must re-evaluate to the reported cut.
      const auto& a = cert.witness_partition[0];
      const auto& b = cert.witness_partition[1];
      REQUIRE(a.size() + b.size() == order);
      CHECK((a.size() == (order + 1) / 2 || b.size() == (order + 1) / 2));
      std::vector<char> side(order, 0);
      for (Vertex v : b) side[v] = 1;
      std::uint64_t cut = 0;
      for (const auto& [u, v] : g.edges()) cut += (side[u] != side[v]) ? 1 : 0;
      CHECK(cut == cert.value);
    }
  }
}

TEST_CASE("bisection width of structured graphs") {
  CHECK(qembed::oracle_bisection_width(qembed::hypercube(3)).value == 4);
  CHECK(qembed::oracle_bisection_width(qembed::folded_hypercube(3)).value ==
        8);
  CHECK(qembed::oracle_bisection_width(qembed::complete_graph(6)).value == 9);
  CHECK(qembed::oracle_bisection_width(qembed::cycle(8)).value == 2);
  CHECK(qembed::oracle_bisection_width(
            qembed::complete_multipartite({2, 2, 2}))
            .value == 6);
}

TEST_CASE("lex-first subset search maximizes induced edges") {
  const std::vector<std::vector<std::uint64_t>> shapes = {
      {2, 2}, {2, 4}, {3, 3}, {2, 2, 3}};
  for (const auto& radices : shapes) {
    std::uint64_t total = 1;
    for (std::uint64_t r : radices) total *= r;
    for (std::uint64_t m = 0; m <= total; ++m) {
      CHECK(qembed::oracle_lindsey_max(radices, m) ==
            brute::max_induced_edges(radices, m));
    }
  }
}

TEST_CASE("search guards reject oversized problems") {
  // Full-order guests are capped at host order 8.
  CHECK_THROWS_AS(
      qembed::oracle_dilation(qembed::random_graph(16, 1), 4),
      qembed::guard_error);
  // Guests larger than the host are a domain error, not a guard.
  CHECK_THROWS_AS(qembed::oracle_dilation(qembed::complete_graph(9), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(qembed::oracle_bisection_width(qembed::random_graph(25, 1)),
                  qembed::guard_error);
  CHECK_THROWS_AS(qembed::oracle_dilation(qembed::complete_graph(4), 0),
                  std::invalid_argument);
}
