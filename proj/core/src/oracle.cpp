// SPDX-License-Identifier: Apache-2.0

#include "qembed/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qembed/cube.hpp"
#include "qembed/errors.hpp"

namespace qembed {

namespace {

constexpr std::uint64_t kInjectionTreeLimit = 1'000'000'000;
constexpr std::uint32_t kFullOrderHostLimit = 8;
constexpr std::uint32_t kBisectionOrderLimit = 24;
constexpr std::uint64_t kLindseyProductLimit = 12;

// Upper estimate of the unreduced injection tree: product of the number
// of free host vertices at each depth, saturating once past the limit.
std::uint64_t injection_tree_estimate(std::uint32_t order, std::uint64_t host) {
  std::uint64_t est = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    est *= host - i;
    if (est > kInjectionTreeLimit) return est;
  }
  return est;
}

void check_embedding_oracle_guards(const Graph& g, int n) {
  if (n < 1 || n > kMaxCubeDim)
    throw std::invalid_argument("oracle: host dimension out of range");
  const std::uint64_t host = std::uint64_t{1} << n;
  if (g.order() > host)
    throw std::invalid_argument("oracle: guest order exceeds host order");
  if (g.order() == host) {
    if (host > kFullOrderHostLimit)
      throw guard_error(
          "oracle: full-order guests are limited to hosts of order 8");
  } else if (injection_tree_estimate(g.order(), host) > kInjectionTreeLimit) {
    throw guard_error("oracle: assignment tree estimate exceeds 10^9 nodes");
  }
}

// Depth-first search over injections into Q_n with two symmetry cuts:
// the image of guest vertex 0 is pinned to 0 (translation by XOR), and
// coordinates must enter in ascending order of first use (coordinate
// permutation).  A candidate image w is admissible when the bits above
// the dimensions already in use form a contiguous run from the bottom,
// i.e. (hi & (hi + 1)) == 0 for hi = w >> used.  Every injection is
// equivalent under these automorphisms to one in the reduced space, so
// optima are unaffected.  Candidates are tried in ascending order, which
// makes the first complete assignment the lexicographically smallest.
class InjectionSearch {
 public:
  InjectionSearch(const Graph& g, int n)
      : g_(g),
        host_(std::uint64_t{1} << n),
        f_(g.order(), 0),
        taken_(static_cast<std::size_t>(host_), 0) {}

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::uint32_t>& map() const { return f_; }

  // True when some completion keeps every edge dilation within d; on
  // success f() holds the lex-min such assignment.
  bool feasible_with_dilation(int d) {
    reset();
    return dilation_dfs(1, 0, d);
  }

  // Phase one of the wirelength search: exact minimum total dilation.
  std::uint64_t min_wirelength() {
    prepare_pending();
    reset();
    best_ = std::numeric_limits<std::uint64_t>::max();
    wirelength_dfs(1, 0, 0, /*lex_phase=*/false);
    return best_;
  }

  // Phase two: lex-min assignment attaining a known optimal value.
  void witness_wirelength(std::uint64_t optimum) {
    prepare_pending();
    reset();
    best_ = optimum;
    wirelength_dfs(1, 0, 0, /*lex_phase=*/true);
  }

 private:
  void reset() {
    std::fill(taken_.begin(), taken_.end(), 0);
    std::fill(f_.begin(), f_.end(), 0);
    taken_[0] = 1;
    ++nodes_;  // the pinned placement of vertex 0
  }

  // pending_[k]: edges with at least one endpoint >= k, each of which
  // will contribute dilation >= 1 once mapped (images are distinct).
  void prepare_pending() {
    if (!pending_.empty()) return;
    pending_.assign(g_.order() + 1, 0);
    for (const Edge& e : g_.edges()) ++pending_[e.second + 1];
    for (std::size_t k = 1; k < pending_.size(); ++k)
      pending_[k] += pending_[k - 1];
    const std::uint64_t total = g_.edges().size();
    for (std::uint64_t& finished : pending_) finished = total - finished;
  }

  bool dilation_dfs(std::uint32_t pos, int used, int d) {
    if (pos == g_.order()) return true;
    for (std::uint32_t w = 0; w < host_; ++w) {
      if (taken_[w]) continue;
      const std::uint32_t hi = w >> used;
      if ((hi & (hi + 1)) != 0) continue;
      bool ok = true;
      for (Vertex j : g_.neighbors(pos)) {
        if (j >= pos) break;
        if (std::popcount(f_[j] ^ w) > d) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      taken_[w] = 1;
      f_[pos] = w;
      ++nodes_;
      if (dilation_dfs(pos + 1, used + std::bit_width(hi), d)) return true;
      taken_[w] = 0;
    }
    return false;
  }

  // Bounded search for total dilation.  In the value phase equal-cost
  // branches are cut and best_ shrinks on every completion; in the lex
  // phase branches matching best_ survive and the first completion wins.
  bool wirelength_dfs(std::uint32_t pos, int used, std::uint64_t partial,
                      bool lex_phase) {
    if (pos == g_.order()) {
      best_ = partial;
      return true;
    }
    for (std::uint32_t w = 0; w < host_; ++w) {
      if (taken_[w]) continue;
      const std::uint32_t hi = w >> used;
      if ((hi & (hi + 1)) != 0) continue;
      std::uint64_t cost = partial;
      for (Vertex j : g_.neighbors(pos)) {
        if (j >= pos) break;
        cost += static_cast<std::uint64_t>(std::popcount(f_[j] ^ w));
      }
      const std::uint64_t bound = cost + pending_[pos + 1];
      if (lex_phase ? bound > best_ : bound >= best_) continue;
      taken_[w] = 1;
      f_[pos] = w;
      ++nodes_;
      const bool done =
          wirelength_dfs(pos + 1, used + std::bit_width(hi), cost, lex_phase);
      taken_[w] = 0;
      // In the lex phase the first completion is the witness; f_ below
      // this frame is already final, so unwind without touching it.
      if (done && lex_phase) return true;
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t host_;
  std::vector<std::uint32_t> f_;
  std::vector<char> taken_;
  std::vector<std::uint64_t> pending_;
  std::uint64_t best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleCertificate oracle_dilation(const Graph& g, int n) {
  check_embedding_oracle_guards(g, n);
  InjectionSearch search(g, n);
  OracleCertificate cert;
  cert.quantity = OracleCertificate::Quantity::kDilation;
  for (int d = 0; d <= n; ++d) {
    if (search.feasible_with_dilation(d)) {
      cert.value = static_cast<std::uint64_t>(d);
      cert.witness_map = search.map();
      break;
    }
  }
  cert.search_space = search.nodes();
  return cert;
}

OracleCertificate oracle_wirelength(const Graph& g, int n) {
  check_embedding_oracle_guards(g, n);
  InjectionSearch search(g, n);
  OracleCertificate cert;
  cert.quantity = OracleCertificate::Quantity::kWirelength;
  cert.value = search.min_wirelength();
  search.witness_wirelength(cert.value);
  cert.witness_map = search.map();
  cert.search_space = search.nodes();
  return cert;
}

OracleCertificate oracle_bisection_width(const Graph& g) {
  const std::uint32_t order = g.order();
  if (order < 2)
    throw std::invalid_argument("bisection width requires order >= 2");
  if (order > kBisectionOrderLimit)
    throw guard_error("oracle: bisection width is limited to order 24");

  std::vector<std::uint64_t> adj(order);
  for (Vertex v = 0; v < order; ++v) adj[v] = g.adjacency_mask(v);
  const std::uint64_t full = (std::uint64_t{1} << order) - 1;

  // Enumerate the larger side as a lexicographic combination.  For even
  // orders the two sides are interchangeable, so vertex 0 is pinned to
  // the enumerated side; for odd orders the sides differ in size and
  // every combination is already a distinct partition.
  const std::uint32_t big = (order + 1) / 2;
  const bool pin_zero = (order % 2 == 0);
  const std::uint32_t lo = pin_zero ? 1 : 0;
  const std::uint32_t k = pin_zero ? big - 1 : big;
  std::vector<std::uint32_t> idx(k);
  for (std::uint32_t i = 0; i < k; ++i) idx[i] = lo + i;

  std::uint64_t best_cut = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t best_mask = 0;
  std::uint64_t evaluated = 0;
  while (true) {
    std::uint64_t mask = pin_zero ? 1 : 0;
    for (std::uint32_t i : idx) mask |= std::uint64_t{1} << i;
    std::uint64_t cut = 0;
    for (std::uint32_t v = 0; v < order; ++v)
      if (mask & (std::uint64_t{1} << v))
        cut += static_cast<std::uint64_t>(std::popcount(adj[v] & ~mask & full));
    ++evaluated;
    if (cut < best_cut) {
      best_cut = cut;
      best_mask = mask;
    }
    // Advance to the next combination over [lo, order).
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && idx[i] == order - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }

  OracleCertificate cert;
  cert.quantity = OracleCertificate::Quantity::kBisectionWidth;
  cert.value = best_cut;
  cert.search_space = evaluated;
  const bool zero_in_big = (best_mask & 1) != 0;
  for (Vertex v = 0; v < order; ++v) {
    const bool in_big = (best_mask & (std::uint64_t{1} << v)) != 0;
    cert.witness_partition[in_big == zero_in_big ? 0 : 1].push_back(v);
  }
  return cert;
}

std::uint64_t oracle_lindsey_max(const std::vector<std::uint64_t>& p,
                                 std::uint64_t m) {
  std::uint64_t product = 1;
  for (std::uint64_t pi : p) {
    if (pi < 1) throw std::invalid_argument("clique sizes must be positive");
    product *= pi;
    if (product > kLindseyProductLimit)
      throw guard_error("oracle: clique product is limited to order 12");
  }
  if (m > product)
    throw std::invalid_argument("subset size exceeds the product order");

  // Adjacency of the clique product: vertices in mixed radix over p,
  // edges between vertices differing in exactly one coordinate.
  const auto count = static_cast<std::uint32_t>(product);
  std::vector<std::uint16_t> adj(count, 0);
  std::uint64_t stride = 1;
  for (std::uint64_t pi : p) {
    for (std::uint32_t v = 0; v < count; ++v) {
      const std::uint64_t digit = (v / stride) % pi;
      for (std::uint64_t d = 0; d < pi; ++d) {
        if (d == digit) continue;
        const std::uint64_t u = v - digit * stride + d * stride;
        adj[v] |= static_cast<std::uint16_t>(std::uint16_t{1} << u);
      }
    }
    stride *= pi;
  }

  std::uint64_t best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << count); ++mask) {
    if (static_cast<std::uint64_t>(std::popcount(mask)) != m) continue;
    std::uint64_t twice = 0;
    for (std::uint32_t v = 0; v < count; ++v)
      if (mask & (std::uint32_t{1} << v))
        twice += static_cast<std::uint64_t>(std::popcount(adj[v] & mask));
    best = std::max(best, twice / 2);
  }
  return best;
}

}  // namespace qembed
