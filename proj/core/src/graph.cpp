// SPDX-License-Identifier: Apache-2.0

#include "qembed/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "qembed/errors.hpp"

namespace qembed {

Graph::Graph(std::uint32_t order, std::vector<Edge> edges, std::string name)
    : order_(order), edges_(std::move(edges)), name_(std::move(name)) {
  if (std::uint64_t{order_} > kMaxOrder) {
    throw guard_error("graph order " + std::to_string(order_) +
                      " exceeds the 2^20 vertex guard");
  }
  if (edges_.size() > kMaxEdges) {
    throw guard_error("graph edge count " + std::to_string(edges_.size()) +
                      " exceeds the 2^27 edge guard");
  }
  for (auto& [u, v] : edges_) {
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (u >= order_ || v >= order_) {
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge in edge list");
  }

  std::vector<std::uint32_t> deg(order_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  adj_offsets_.assign(order_ + std::size_t{1}, 0);
  for (std::uint32_t v = 0; v < order_; ++v) {
    adj_offsets_[v + 1] = adj_offsets_[v] + deg[v];
  }
  adj_.resize(2 * edges_.size());
  std::vector<std::uint64_t> fill(adj_offsets_.begin(), adj_offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adj_[fill[u]++] = v;
    adj_[fill[v]++] = u;
  }
  for (std::uint32_t v = 0; v < order_; ++v) {
    std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(adj_offsets_[v]),
              adj_.begin() + static_cast<std::ptrdiff_t>(adj_offsets_[v + 1]));
  }

  if (order_ > 0 && order_ <= kBitsetOrderLimit) {
    words_per_row_ = (order_ + 63) / 64;
    bits_.assign(std::size_t{order_} * words_per_row_, 0);
    for (const auto& [u, v] : edges_) {
      bits_[std::size_t{u} * words_per_row_ + v / 64] |= std::uint64_t{1} << (v % 64);
      bits_[std::size_t{v} * words_per_row_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order_ || v >= order_ || u == v) return false;
  if (!bits_.empty()) {
    return (bits_[std::size_t{u} * words_per_row_ + v / 64] >> (v % 64)) & 1u;
  }
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint32_t Graph::degree(Vertex v) const {
  return static_cast<std::uint32_t>(adj_offsets_[v + 1] - adj_offsets_[v]);
}

std::uint32_t Graph::max_degree() const {
  std::uint32_t d = 0;
  for (Vertex v = 0; v < order_; ++v) d = std::max(d, degree(v));
  return d;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return {adj_.data() + adj_offsets_[v], adj_offsets_[v + 1] - adj_offsets_[v]};
}

std::uint64_t Graph::adjacency_mask(Vertex v) const {
  if (order_ > 64) {
    throw std::invalid_argument("adjacency_mask requires order <= 64");
  }
  std::uint64_t m = 0;
  for (Vertex u : neighbors(v)) m |= std::uint64_t{1} << u;
  return m;
}

}  // namespace qembed
