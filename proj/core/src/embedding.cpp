// SPDX-License-Identifier: Apache-2.0

#include "qembed/embedding.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qembed {

Embedding::Embedding(Graph guest, int host_dim, std::vector<std::uint32_t> map)
    : guest_(std::move(guest)), host_dim_(host_dim), map_(std::move(map)) {
  if (host_dim_ < 1 || host_dim_ > kMaxCubeDim) {
    throw std::invalid_argument("embedding: host dimension outside [1, 20]");
  }
  const std::uint64_t host_order = std::uint64_t{1} << host_dim_;
  if (guest_.order() > host_order) {
    throw std::invalid_argument("embedding: guest order " +
                                std::to_string(guest_.order()) +
                                " exceeds 2^" + std::to_string(host_dim_));
  }
  if (map_.size() != guest_.order()) {
    throw std::invalid_argument("embedding: map length != guest order");
  }
  for (std::uint32_t img : map_) {
    if (img >= host_order) {
      throw std::invalid_argument("embedding: image " + std::to_string(img) +
                                  " is not a vertex of Q_" +
                                  std::to_string(host_dim_));
    }
  }
  std::vector<std::uint32_t> sorted = map_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("embedding: map is not injective");
  }
}

std::vector<std::uint32_t> ecube_route(CubeVertex x, CubeVertex y) {
  if (x.dim != y.dim) {
    throw std::invalid_argument("ecube_route: dimension mismatch");
  }
  std::vector<std::uint32_t> path;
  path.reserve(static_cast<std::size_t>(hamming_distance(x, y)) + 1);
  std::uint32_t cur = x.bits;
  path.push_back(cur);
  std::uint32_t diff = x.bits ^ y.bits;
  while (diff) {
    const std::uint32_t low = diff & (~diff + 1);
    cur ^= low;
    diff ^= low;
    path.push_back(cur);
  }
  return path;
}

}  // namespace qembed
