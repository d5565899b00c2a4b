// SPDX-License-Identifier: Apache-2.0

#ifndef QEMBED_EMBEDDING_HPP
#define QEMBED_EMBEDDING_HPP

#include <cstdint>
#include <vector>

#include "qembed/cube.hpp"
#include "qembed/graph.hpp"

namespace qembed {

/// One-to-one placement of a guest graph into Q_{host_dim}. Guest edges
/// are routed along the canonical dimension-ordered shortest path (see
/// ecube_route), so every derived metric is deterministic.
class Embedding {
 public:
  /// Validates: map has one entry per guest vertex, every image is a
  /// vertex of Q_{host_dim}, the map is injective, and the guest fits.
  Embedding(Graph guest, int host_dim, std::vector<std::uint32_t> map);

  const Graph& guest() const { return guest_; }
  int host_dim() const { return host_dim_; }
  const std::vector<std::uint32_t>& map() const { return map_; }
  std::uint32_t image(Vertex v) const { return map_[v]; }

 private:
  Graph guest_;
  int host_dim_;
  std::vector<std::uint32_t> map_;
};

/// Dimension-ordered (e-cube) path from x to y: differing bits are
/// flipped in ascending position order. Returns the full vertex list
/// including both endpoints; a single vertex when x == y.
std::vector<std::uint32_t> ecube_route(CubeVertex x, CubeVertex y);

}  // namespace qembed

#endif
