// SPDX-License-Identifier: Apache-2.0

#ifndef QEMBED_BOUNDS_HPP
#define QEMBED_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qembed/constructions.hpp"
#include "qembed/graph.hpp"

namespace qembed {

/// Exact nonnegative rational, kept reduced.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Ratio make(std::uint64_t num, std::uint64_t den);
  std::uint64_t ceil() const { return (num + den - 1) / den; }

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Where a bisection width used in a bound came from.
enum class BwProvenance { kClosedForm, kOracle, kUserSupplied };

std::string to_string(BwProvenance p);

/// Lower bounds for embedding a guest of order 2^n into Q_n, all driven
/// by the guest's bisection width and maximum degree.
struct BoundReport {
  int dilation_lb = 0;
  std::uint64_t wirelength_lb = 0;        // host_dim * bw_used
  Ratio congestion_lb_exact;              // bw_used / 2^{host_dim-1}
  std::uint64_t congestion_lb_int = 0;    // its ceiling
  std::uint64_t bw_used = 0;
  BwProvenance bw_provenance = BwProvenance::kUserSupplied;
};

/// A perfect matching of the complement, as an AntiMatching, if one
/// exists. Odd order answers empty immediately. Pairs are returned
/// (min, max), sorted by first member.
std::optional<AntiMatching> has_perfect_antimatching(const Graph& g);

/// Exact dilation threshold for a guest of order 2^n: n-1 when the guest
/// has a perfect anti-matching, n otherwise.
int dilation_upper_from_antimatching(const Graph& g);

/// max{ k >= 1 : sum_{i=1}^{k-1} C(n, i) < max_degree }, or 0 when no k
/// qualifies (max_degree == 0). Requires max_degree < 2^n.
int dilation_lower_bound(int n, std::uint64_t max_degree);

/// EC(G, H) >= BW(G)/BW(H) for same-order G, H; exact rational.
Ratio ec_lower_bound(std::uint64_t bw_guest, std::uint64_t bw_host);

/// WL(G, Q_n) >= n * BW(G) for guests of order 2^n.
std::uint64_t wl_lower_bound(int n, std::uint64_t bw_guest);

/// BW(K_{2r,...,2r}) with t parts: r^2 * t * (t-1). t >= 2, r >= 1.
std::uint64_t bw_balanced_multipartite(std::uint64_t t, std::uint64_t r);

/// BW(K_{2p1} x K_{p2} x ... x K_{pt}) = p1^2 * p2 * ... * pt.
/// The argument list is (p1, ..., pt); the hypothesis 2*p1 <= p2 <= ...
/// <= pt is enforced.
std::uint64_t bw_clique_product(const std::vector<std::uint64_t>& p);

std::uint64_t bw_hypercube(int n);         // 2^{n-1}, n >= 1 (cited)
std::uint64_t bw_folded_hypercube(int n);  // 2^n, n >= 2 (cited)

/// Number of edges of K_{p1} x ... x K_{pt} induced by the first m
/// vertices in lexicographic order (first coordinate most significant).
/// Requires p ascending, 1 <= m <= prod(p) <= 2^20. By Lindsey's theorem
/// this is the maximum over all m-subsets.
std::uint64_t lindsey_lex_edge_count(const std::vector<std::uint64_t>& p,
                                     std::uint64_t m);

/// Assembles the three §§3-4 bounds for a guest of order 2^{host_dim}.
BoundReport make_bound_report(const Graph& g, int host_dim,
                              std::uint64_t bw_guest, BwProvenance prov);

}  // namespace qembed

#endif
