// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "brute.hpp"
#include "qembed/bounds.hpp"
#include "qembed/descriptor.hpp"
#include "qembed/families.hpp"
#include "qembed/graph.hpp"
#include "qembed/metrics.hpp"
#include "qembed/oracle.hpp"
#include "qembed/random.hpp"

using qembed::Graph;
using qembed::Vertex;

TEST_CASE("degree-based dilation lower bound on known profiles") {
  // A ball of radius k-1 around any image must hold the neighborhood, so
  // the bound is the largest k whose smaller ball cannot.
  CHECK(qembed::dilation_lower_bound(4, 15) == 4);   // K_16
  CHECK(qembed::dilation_lower_bound(4, 11) == 3);
  CHECK(qembed::dilation_lower_bound(4, 4) == 1);    // Q_4 itself
  CHECK(qembed::dilation_lower_bound(4, 5) == 2);
  CHECK(qembed::dilation_lower_bound(2, 3) == 2);    // K_4
  CHECK(qembed::dilation_lower_bound(3, 7) == 3);    // K_8, W_8
  CHECK(qembed::dilation_lower_bound(6, 7) == 2);    // FQ_6 degree profile
  CHECK(qembed::dilation_lower_bound(1, 1) == 1);
  CHECK_THROWS_AS(qembed::dilation_lower_bound(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(qembed::dilation_lower_bound(3, 8), std::invalid_argument);
}

TEST_CASE("dilation lower bound never exceeds the exhaustive optimum") {
  qembed::SplitMix64 seeds(411);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = qembed::random_graph(8, seeds.next());
    const int lb = qembed::dilation_lower_bound(3, g.max_degree());
    const auto cert = qembed::oracle_dilation(g, 3);
    CHECK(static_cast<std::uint64_t>(lb) <= cert.value);
  }
}

TEST_CASE("anti-matching gives the exact dilation split for K_2^n") {
  // Complete graphs have no non-adjacent pair, wheels pin the hub, while
  // balanced multipartite graphs pair within parts.
  CHECK(qembed::dilation_upper_from_antimatching(qembed::complete_graph(16)) ==
        4);
  CHECK(qembed::dilation_upper_from_antimatching(qembed::wheel(16)) == 4);
  CHECK(qembed::dilation_upper_from_antimatching(
            qembed::complete_multipartite({4, 4, 4, 4})) == 3);
  CHECK(qembed::dilation_upper_from_antimatching(qembed::hypercube(3)) == 2);
  CHECK_THROWS_AS(
      qembed::dilation_upper_from_antimatching(qembed::complete_graph(6)),
      std::invalid_argument);
}

TEST_CASE("bisection closed forms match the exhaustive search") {
  CHECK(qembed::bw_balanced_multipartite(2, 1) ==
        qembed::oracle_bisection_width(qembed::complete_multipartite({2, 2}))
            .value);
  CHECK(qembed::bw_balanced_multipartite(3, 1) ==
        qembed::oracle_bisection_width(
            qembed::complete_multipartite({2, 2, 2}))
            .value);
  CHECK(qembed::bw_balanced_multipartite(2, 2) ==
        qembed::oracle_bisection_width(qembed::complete_multipartite({4, 4}))
            .value);
  CHECK(qembed::bw_balanced_multipartite(4, 1) ==
        qembed::oracle_bisection_width(
            qembed::complete_multipartite({2, 2, 2, 2}))
            .value);
  CHECK(qembed::bw_balanced_multipartite(2, 3) ==
        qembed::oracle_bisection_width(qembed::complete_multipartite({6, 6}))
            .value);
  for (int n = 1; n <= 4; ++n) {
    CHECK(qembed::bw_hypercube(n) ==
          qembed::oracle_bisection_width(qembed::hypercube(n)).value);
  }
  for (int n = 2; n <= 4; ++n) {
    CHECK(qembed::bw_folded_hypercube(n) ==
          qembed::oracle_bisection_width(qembed::folded_hypercube(n)).value);
  }
  // The closed form takes {p1, ..., pt} for K_{2*p1} x K_{p2} x ...
  using V = std::vector<std::uint64_t>;
  CHECK(qembed::bw_clique_product(V{1, 2}) ==
        qembed::oracle_bisection_width(
            qembed::cartesian_product(qembed::complete_graph(2),
                                      qembed::complete_graph(2)))
            .value);
  CHECK(qembed::bw_clique_product(V{2, 4}) ==
        qembed::oracle_bisection_width(
            qembed::cartesian_product(qembed::complete_graph(4),
                                      qembed::complete_graph(4)))
            .value);
}

TEST_CASE("clique product closed form validates its ordering constraint") {
  using V = std::vector<std::uint64_t>;
  CHECK(qembed::bw_clique_product(V{2, 4, 4}) == 64);
  CHECK_THROWS_AS(qembed::bw_clique_product(V{2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(qembed::bw_clique_product(V{3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(qembed::bw_clique_product(V{}), std::invalid_argument);
}

TEST_CASE("balanced half-splits of a multipartite graph obey the cut bound") {
  // Any split into halves cuts at least r^2*t*(t-1) edges; the uniform
  // split meets it exactly.
  const std::uint64_t t = 4, r = 2;
  const Graph g = qembed::complete_multipartite({4, 4, 4, 4});
  const std::uint64_t bound = qembed::bw_balanced_multipartite(t, r);
  const std::uint32_t half = g.order() / 2;

  // Uniform split: r vertices of each part per side. Parts are contiguous
  // label ranges.
  std::vector<char> side(g.order(), 0);
  for (std::uint64_t part = 0; part < t; ++part) {
    for (std::uint64_t i = 0; i < r; ++i) side[part * 2 * r + i] = 1;
  }
  auto cut_of = [&](const std::vector<char>& s) {
    std::uint64_t cut = 0;
    for (const auto& [u, v] : g.edges()) cut += (s[u] != s[v]) ? 1 : 0;
    return cut;
  };
  CHECK(cut_of(side) == bound);

  qembed::SplitMix64 seeds(555);
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0u);
  for (int trial = 0; trial < 200; ++trial) {
    // Fisher-Yates with the deterministic generator.
    for (std::uint32_t i = g.order() - 1; i > 0; --i) {
      const std::uint32_t j =
          static_cast<std::uint32_t>(seeds.next() % (i + 1));
      std::swap(order[i], order[j]);
    }
    std::vector<char> s(g.order(), 0);
    for (std::uint32_t i = 0; i < half; ++i) s[order[i]] = 1;
    CHECK(cut_of(s) >= bound);
  }
}

TEST_CASE("congestion and wirelength bounds derive from the cut ratio") {
  // Crossing edges must share the 2^(n-1) host edges of the matching cut;
  // the ratio is kept in lowest terms.
  const auto ratio = qembed::ec_lower_bound(48, 8);
  CHECK(ratio.num == 6);
  CHECK(ratio.den == 1);
  CHECK(ratio.ceil() == 6);
  CHECK(qembed::ec_lower_bound(7, 4).ceil() == 2);
  CHECK(qembed::wl_lower_bound(4, 48) == 192);
  CHECK(qembed::wl_lower_bound(3, 8) == 24);
}

TEST_CASE("lexicographic prefixes maximize induced edges in clique products") {
  using V = std::vector<std::uint64_t>;
  for (const auto& radices : {V{2, 2}, V{2, 4}, V{3, 3}, V{2, 2, 3}}) {
    std::uint64_t total = 1;
    for (auto r : radices) total *= r;
    for (std::uint64_t m = 1; m <= total; ++m) {
      CHECK(qembed::lindsey_lex_edge_count(radices, m) ==
            brute::max_induced_edges(radices, m));
    }
  }
}

TEST_CASE("bound report combines the three lower bounds") {
  const Graph g = qembed::complete_multipartite({4, 4, 4, 4});
  const auto rep = qembed::make_bound_report(
      g, 4, 48, qembed::BwProvenance::kClosedForm);
  CHECK(rep.dilation_lb == 3);
  CHECK(rep.wirelength_lb == 192);
  CHECK(rep.congestion_lb_exact.num == 6);
  CHECK(rep.congestion_lb_exact.den == 1);
  CHECK(rep.congestion_lb_int == 6);
  CHECK(rep.bw_used == 48);
  CHECK(rep.bw_provenance == qembed::BwProvenance::kClosedForm);
  CHECK(qembed::to_string(rep.bw_provenance) == "closed-form");
  // The guest must fill the host exactly.
  CHECK_THROWS_AS(qembed::make_bound_report(g, 5, 48,
                                            qembed::BwProvenance::kOracle),
                  std::invalid_argument);
}

TEST_CASE("closed-form recognition identifies canonical generators") {
  auto rec = qembed::recognize_bisection_width(qembed::hypercube(5));
  REQUIRE(rec.has_value());
  CHECK(rec->value == 16);

  rec = qembed::recognize_bisection_width(qembed::folded_hypercube(4));
  REQUIRE(rec.has_value());
  CHECK(rec->value == 16);

  rec = qembed::recognize_bisection_width(
      qembed::complete_multipartite({4, 4, 4, 4}));
  REQUIRE(rec.has_value());
  CHECK(rec->value == 48);

  rec = qembed::recognize_bisection_width(qembed::cartesian_product(
      qembed::complete_graph(4), qembed::complete_graph(4)));
  REQUIRE(rec.has_value());
  CHECK(rec->value == 16);

  // A random graph matches nothing.
  CHECK_FALSE(
      qembed::recognize_bisection_width(qembed::random_graph(12, 9))
          .has_value());
}

TEST_CASE("recognized widths agree with the exhaustive search") {
  const Graph graphs[] = {
      qembed::hypercube(3),
      qembed::folded_hypercube(3),
      qembed::complete_multipartite({2, 2, 2, 2}),
      qembed::cartesian_product(qembed::complete_graph(2),
                                qembed::complete_graph(4)),
  };
  for (const auto& g : graphs) {
    const auto rec = qembed::recognize_bisection_width(g);
    REQUIRE(rec.has_value());
    CHECK(rec->value == qembed::oracle_bisection_width(g).value);
  }
}
