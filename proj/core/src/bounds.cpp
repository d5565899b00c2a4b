// SPDX-License-Identifier: Apache-2.0

#include "qembed/bounds.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "qembed/cube.hpp"
#include "qembed/errors.hpp"
#include "qembed/families.hpp"
#include "qembed/matching.hpp"

namespace qembed {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("bound value overflows 64 bits");
  }
  return out;
}

}  // namespace

Ratio Ratio::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("Ratio: zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return Ratio{num / g, den / g};
}

std::string to_string(BwProvenance p) {
  switch (p) {
    case BwProvenance::kClosedForm: return "closed-form";
    case BwProvenance::kOracle: return "oracle";
    case BwProvenance::kUserSupplied: return "user-supplied";
  }
  return "unknown";
}

std::optional<AntiMatching> has_perfect_antimatching(const Graph& g) {
  if (g.order() % 2 != 0) return std::nullopt;
  if (g.order() == 0) return AntiMatching{};
  const Graph co = complement(g);
  const std::vector<Vertex> mate = maximum_matching(co);
  if (2 * matching_size(mate) != g.order()) return std::nullopt;
  AntiMatching am;
  am.pairs.reserve(g.order() / 2);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (mate[v] > v && mate[v] != kUnmatched) am.pairs.emplace_back(v, mate[v]);
  }
  return am;
}

int dilation_upper_from_antimatching(const Graph& g) {
  if (g.order() == 0 || !std::has_single_bit(g.order())) {
    throw std::invalid_argument(
        "dilation_upper_from_antimatching: order is not a power of two");
  }
  const int n = std::countr_zero(g.order());
  return has_perfect_antimatching(g) ? n - 1 : n;
}

int dilation_lower_bound(int n, std::uint64_t max_degree) {
  if (n < 1 || n > kMaxCubeDim) {
    throw std::invalid_argument("dilation_lower_bound: dimension outside [1, 20]");
  }
  if (max_degree >= (std::uint64_t{1} << n)) {
    throw std::invalid_argument(
        "dilation_lower_bound: degree impossible in a graph of order 2^n");
  }
  int best = 0;
  std::uint64_t sum = 0;       // sum_{i=1}^{k-1} C(n, i)
  std::uint64_t binom = 1;     // C(n, k-1)
  for (int k = 1; k <= n; ++k) {
    // entering iteration k, sum covers i = 1..k-1
    if (sum < max_degree) best = k;
    binom = binom * static_cast<std::uint64_t>(n - (k - 1)) /
            static_cast<std::uint64_t>(k);
    sum += binom;
  }
  return best;
}

Ratio ec_lower_bound(std::uint64_t bw_guest, std::uint64_t bw_host) {
  if (bw_host == 0) {
    throw std::invalid_argument("ec_lower_bound: host bisection width is zero");
  }
  return Ratio::make(bw_guest, bw_host);
}

std::uint64_t wl_lower_bound(int n, std::uint64_t bw_guest) {
  if (n < 1 || n > kMaxCubeDim) {
    throw std::invalid_argument("wl_lower_bound: dimension outside [1, 20]");
  }
  return checked_mul(static_cast<std::uint64_t>(n), bw_guest);
}

std::uint64_t bw_balanced_multipartite(std::uint64_t t, std::uint64_t r) {
  if (t < 2) throw std::invalid_argument("bw_balanced_multipartite: t >= 2");
  if (r < 1) throw std::invalid_argument("bw_balanced_multipartite: r >= 1");
  return checked_mul(checked_mul(r, r), checked_mul(t, t - 1));
}

std::uint64_t bw_clique_product(const std::vector<std::uint64_t>& p) {
  if (p.empty() || p[0] < 1) {
    throw std::invalid_argument("bw_clique_product: need p1 >= 1");
  }
  for (std::size_t i = 1; i < p.size(); ++i) {
    const std::uint64_t lo = (i == 1) ? 2 * p[0] : p[i - 1];
    if (p[i] < lo) {
      throw std::invalid_argument(
          "bw_clique_product: requires 2*p1 <= p2 <= ... <= pt");
    }
  }
  std::uint64_t out = checked_mul(p[0], p[0]);
  for (std::size_t i = 1; i < p.size(); ++i) out = checked_mul(out, p[i]);
  return out;
}

std::uint64_t bw_hypercube(int n) {
  if (n < 1 || n > kMaxCubeDim) {
    throw std::invalid_argument("bw_hypercube: dimension outside [1, 20]");
  }
  return std::uint64_t{1} << (n - 1);
}

std::uint64_t bw_folded_hypercube(int n) {
  if (n < 2 || n > kMaxCubeDim) {
    throw std::invalid_argument("bw_folded_hypercube: dimension outside [2, 20]");
  }
  return std::uint64_t{1} << n;
}

std::uint64_t lindsey_lex_edge_count(const std::vector<std::uint64_t>& p,
                                     std::uint64_t m) {
  if (p.empty()) throw std::invalid_argument("lindsey_lex_edge_count: empty p");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) throw std::invalid_argument("lindsey_lex_edge_count: p_i >= 1");
    if (i + 1 < p.size() && p[i] > p[i + 1]) {
      throw std::invalid_argument("lindsey_lex_edge_count: p must be ascending");
    }
    total = checked_mul(total, p[i]);
    if (total > kMaxOrder) {
      throw guard_error("lindsey_lex_edge_count: product exceeds 2^20");
    }
  }
  if (m < 1 || m > total) {
    throw std::invalid_argument("lindsey_lex_edge_count: m out of [1, prod(p)]");
  }

  // Lex order with the first coordinate most significant is plain numeric
  // order in mixed radix, so vertex indices below m are exactly the first
  // m vertices. Two vertices are adjacent iff they differ in one digit;
  // count each in-range neighbor below the current index once.
  const std::size_t t = p.size();
  std::vector<std::uint64_t> stride(t);
  stride[t - 1] = 1;
  for (std::size_t i = t - 1; i > 0; --i) stride[i - 1] = stride[i] * p[i];

  std::uint64_t count = 0;
  for (std::uint64_t v = 1; v < m; ++v) {
    std::uint64_t rest = v;
    for (std::size_t i = 0; i < t; ++i) {
      const std::uint64_t digit = rest / stride[i];
      rest %= stride[i];
      // neighbors with a smaller digit in coordinate i are all below v
      count += digit;
    }
  }
  return count;
}

BoundReport make_bound_report(const Graph& g, int host_dim,
                              std::uint64_t bw_guest, BwProvenance prov) {
  if (host_dim < 1 || host_dim > kMaxCubeDim) {
    throw std::invalid_argument("make_bound_report: dimension outside [1, 20]");
  }
  if (g.order() != (std::uint64_t{1} << host_dim)) {
    throw std::invalid_argument(
        "make_bound_report: bounds require guest order 2^host_dim");
  }
  BoundReport r;
  r.bw_used = bw_guest;
  r.bw_provenance = prov;
  r.dilation_lb = dilation_lower_bound(host_dim, g.max_degree());
  r.wirelength_lb = wl_lower_bound(host_dim, bw_guest);
  r.congestion_lb_exact = ec_lower_bound(bw_guest, bw_hypercube(host_dim));
  r.congestion_lb_int = r.congestion_lb_exact.ceil();
  return r;
}

}  // namespace qembed
