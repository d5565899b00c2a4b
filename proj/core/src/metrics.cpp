// SPDX-License-Identifier: Apache-2.0

#include "qembed/metrics.hpp"

#include <algorithm>
#include <unordered_map>

namespace qembed {

std::vector<int> per_edge_dilation(const Embedding& e) {
  std::vector<int> dil;
  dil.reserve(e.guest().edge_count());
  for (const auto& [u, v] : e.guest().edges()) {
    dil.push_back(hamming_distance(e.image(u), e.image(v)));
  }
  return dil;
}

int dilation(const Embedding& e) {
  int best = 0;
  for (const auto& [u, v] : e.guest().edges()) {
    best = std::max(best, hamming_distance(e.image(u), e.image(v)));
  }
  return best;
}

std::uint64_t wirelength(const Embedding& e) {
  std::uint64_t total = 0;
  for (const auto& [u, v] : e.guest().edges()) {
    total += static_cast<std::uint64_t>(hamming_distance(e.image(u), e.image(v)));
  }
  return total;
}

std::vector<HostEdgeLoad> edge_congestion(const Embedding& e) {
  // Walk each route once; host edges keyed by (lower endpoint, flipped bit).
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  for (const auto& [u, v] : e.guest().edges()) {
    std::uint32_t cur = e.image(u);
    std::uint32_t diff = cur ^ e.image(v);
    while (diff) {
      const std::uint32_t low = diff & (~diff + 1);
      const std::uint32_t a = cur & ~low;  // endpoint with the bit clear
      ++counts[(std::uint64_t{a} << 5) | static_cast<std::uint32_t>(std::countr_zero(low))];
      cur ^= low;
      diff ^= low;
    }
  }
  std::vector<HostEdgeLoad> loads;
  loads.reserve(counts.size());
  for (const auto& [key, count] : counts) {
    const auto a = static_cast<std::uint32_t>(key >> 5);
    const auto bit = static_cast<int>(key & 31);
    loads.push_back({a, a | (std::uint32_t{1} << bit), count});
  }
  std::sort(loads.begin(), loads.end(), [](const auto& x, const auto& y) {
    return std::pair{x.u, x.v} < std::pair{y.u, y.v};
  });
  return loads;
}

MetricsReport evaluate(const Embedding& e) {
  MetricsReport r;
  r.per_edge_dilation = per_edge_dilation(e);
  for (int d : r.per_edge_dilation) {
    r.dilation = std::max(r.dilation, d);
    r.wirelength += static_cast<std::uint64_t>(d);
  }
  r.per_host_edge_congestion = edge_congestion(e);
  for (const auto& load : r.per_host_edge_congestion) {
    r.congestion = std::max(r.congestion, load.count);
  }
  return r;
}

}  // namespace qembed
