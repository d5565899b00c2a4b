// SPDX-License-Identifier: Apache-2.0

#ifndef QEMBED_GRAPH_HPP
#define QEMBED_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qembed {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // always stored (min, max)

/// Hard cap on the number of vertices of any Graph.
inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

/// Cap on the number of edges a generator or constructor will materialize.
inline constexpr std::uint64_t kMaxEdges = std::uint64_t{1} << 27;

// Orders up to this size additionally keep a dense adjacency bitset,
// giving O(1) has_edge for the exhaustive searches.
inline constexpr std::uint32_t kBitsetOrderLimit = 4096;

/// Undirected simple graph on vertices 0..order-1.
///
/// Immutable after construction. Edges are stored canonically with the
/// smaller endpoint first and the edge list sorted ascending, so iteration
/// order (and every serialization) is deterministic.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an arbitrary edge list. Edges are normalized to
  /// (min, max), sorted, and validated: no self-loops, no duplicates,
  /// endpoints < order, order <= 2^20.
  Graph(std::uint32_t order, std::vector<Edge> edges, std::string name = {});

  std::uint32_t order() const { return order_; }
  std::uint64_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name() const { return name_; }

  bool has_edge(Vertex u, Vertex v) const;
  std::uint32_t degree(Vertex v) const;
  std::uint32_t max_degree() const;

  /// Neighbors of v in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const;

  /// Adjacency row as a 64-bit mask; only valid for order() <= 64.
  std::uint64_t adjacency_mask(Vertex v) const;

  /// Same order and identical canonical edge list. The name is ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  std::uint32_t order_ = 0;
  std::vector<Edge> edges_;
  std::string name_;

  // CSR adjacency, neighbors sorted ascending per vertex.
  std::vector<std::uint64_t> adj_offsets_;
  std::vector<Vertex> adj_;

  // Dense rows of ceil(order/64) words each; empty above kBitsetOrderLimit.
  std::vector<std::uint64_t> bits_;
  std::uint32_t words_per_row_ = 0;
};

}  // namespace qembed

#endif
