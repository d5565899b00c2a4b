// SPDX-License-Identifier: Apache-2.0

#include "brute.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace brute {

namespace {

constexpr std::uint64_t kSearchCap = 20'000'000;

template <typename Fn>
void for_each_injection(std::uint32_t order, std::uint32_t host, Fn&& fn) {
  std::vector<std::uint32_t> map(order, 0);
  std::vector<char> used(host, 0);
  auto rec = [&](auto&& self, std::uint32_t v) -> void {
    if (v == order) {
      fn(map);
      return;
    }
    for (std::uint32_t w = 0; w < host; ++w) {
      if (used[w]) continue;
      used[w] = 1;
      map[v] = w;
      self(self, v + 1);
      used[w] = 0;
    }
  };
  rec(rec, 0);
}

std::uint32_t host_order(const qembed::Graph& g, int host_dim) {
  if (host_dim < 1 || host_dim > 20) {
    throw std::invalid_argument("brute: host_dim outside [1, 20]");
  }
  const std::uint32_t host = std::uint32_t{1} << host_dim;
  if (g.order() > host) throw std::invalid_argument("brute: guest too large");
  if (injection_count(g.order(), host_dim) > kSearchCap) {
    throw std::invalid_argument("brute: search space too large");
  }
  return host;
}

}  // namespace

std::uint64_t injection_count(std::uint32_t order, int host_dim) {
  const std::uint64_t host = std::uint64_t{1} << host_dim;
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    if (count > kSearchCap) return count;  // saturating is fine for guards
    count *= host - i;
  }
  return count;
}

int min_dilation(const qembed::Graph& g, int host_dim) {
  const std::uint32_t host = host_order(g, host_dim);
  int best = std::numeric_limits<int>::max();
  for_each_injection(g.order(), host,
                     [&](const std::vector<std::uint32_t>& m) {
                       int worst = 0;
                       for (const auto& [u, v] : g.edges()) {
                         worst = std::max(worst, std::popcount(m[u] ^ m[v]));
                       }
                       best = std::min(best, worst);
                     });
  return best;
}

std::uint64_t min_wirelength(const qembed::Graph& g, int host_dim) {
  const std::uint32_t host = host_order(g, host_dim);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for_each_injection(
      g.order(), host, [&](const std::vector<std::uint32_t>& m) {
        std::uint64_t sum = 0;
        for (const auto& [u, v] : g.edges()) {
          sum += static_cast<std::uint64_t>(std::popcount(m[u] ^ m[v]));
        }
        best = std::min(best, sum);
      });
  return best;
}

std::uint64_t min_bisection_cut(const qembed::Graph& g) {
  const std::uint32_t n = g.order();
  if (n < 2 || n > 20) {
    throw std::invalid_argument("brute: bisection order outside [2, 20]");
  }
  const std::uint32_t big = (n + 1) / 2;
  std::vector<char> sel(n, 0);
  std::fill(sel.begin() + (n - big), sel.end(), 1);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  do {
    std::uint64_t cut = 0;
    for (const auto& [u, v] : g.edges()) cut += (sel[u] != sel[v]) ? 1 : 0;
    best = std::min(best, cut);
  } while (std::next_permutation(sel.begin(), sel.end()));
  return best;
}

std::uint64_t max_matching_size(const qembed::Graph& g) {
  std::vector<char> used(g.order(), 0);
  auto rec = [&](auto&& self, qembed::Vertex v) -> std::uint64_t {
    while (v < g.order() && used[v]) ++v;
    if (v >= g.order()) return 0;
    used[v] = 1;
    std::uint64_t best = self(self, v + 1);  // leave v unmatched
    for (qembed::Vertex w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = 1;
      best = std::max(best, 1 + self(self, v + 1));
      used[w] = 0;
    }
    used[v] = 0;
    return best;
  };
  return rec(rec, 0);
}

std::uint64_t max_induced_edges(const std::vector<std::uint64_t>& radices,
                                std::uint64_t m) {
  std::uint64_t total = 1;
  for (std::uint64_t r : radices) {
    if (r < 1) throw std::invalid_argument("brute: radix must be >= 1");
    total *= r;
    if (total > 16) throw std::invalid_argument("brute: product too large");
  }
  if (m > total) throw std::invalid_argument("brute: m exceeds point count");

  std::vector<std::vector<std::uint64_t>> digits(
      total, std::vector<std::uint64_t>(radices.size(), 0));
  for (std::uint64_t v = 0; v < total; ++v) {
    std::uint64_t rest = v;
    for (std::size_t i = 0; i < radices.size(); ++i) {
      digits[v][i] = rest % radices[i];
      rest /= radices[i];
    }
  }
  auto adjacent = [&](std::uint64_t a, std::uint64_t b) {
    std::size_t diff = 0;
    for (std::size_t i = 0; i < radices.size(); ++i) {
      if (digits[a][i] != digits[b][i]) ++diff;
    }
    return diff == 1;
  };

  std::vector<char> sel(total, 0);
  std::fill(sel.begin() + static_cast<std::ptrdiff_t>(total - m), sel.end(),
            1);
  std::uint64_t best = 0;
  do {
    std::uint64_t edges = 0;
    for (std::uint64_t a = 0; a < total; ++a) {
      if (!sel[a]) continue;
      for (std::uint64_t b = a + 1; b < total; ++b) {
        if (sel[b] && adjacent(a, b)) ++edges;
      }
    }
    best = std::max(best, edges);
  } while (std::next_permutation(sel.begin(), sel.end()));
  return best;
}

}  // namespace brute
