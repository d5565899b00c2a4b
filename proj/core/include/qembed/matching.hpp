// SPDX-License-Identifier: Apache-2.0

#ifndef QEMBED_MATCHING_HPP
#define QEMBED_MATCHING_HPP

#include <vector>

#include "qembed/graph.hpp"

namespace qembed {

/// Exact maximum-cardinality matching on a general graph (Edmonds'
/// blossom contraction, O(V^3)). Returns the matched partner of each
/// vertex, or kUnmatched. Deterministic: vertices and neighbors are
/// scanned in ascending order.
std::vector<Vertex> maximum_matching(const Graph& g);

inline constexpr Vertex kUnmatched = ~Vertex{0};

/// Number of edges in a mate array produced by maximum_matching.
std::size_t matching_size(const std::vector<Vertex>& mate);

}  // namespace qembed

#endif
