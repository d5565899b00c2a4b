// SPDX-License-Identifier: Apache-2.0

#ifndef QEMBED_METRICS_HPP
#define QEMBED_METRICS_HPP

#include <cstdint>
#include <vector>

#include "qembed/embedding.hpp"
#include "qembed/graph.hpp"

namespace qembed {

/// Host edge of Q_n with its canonical-routing load. The edge is stored
/// (min, max); only edges with a nonzero count are kept.
struct HostEdgeLoad {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::uint64_t count = 0;

  friend bool operator==(const HostEdgeLoad&, const HostEdgeLoad&) = default;
};

/// The three cost measures of one embedding under e-cube routing.
///
/// Invariant (checked by tests, used as a cross-check everywhere):
///   wirelength == sum(per_edge_dilation) == sum over host edges of count.
struct MetricsReport {
  std::vector<int> per_edge_dilation;  // aligned with guest().edges()
  int dilation = 0;                    // max per-edge dilation, 0 if edgeless
  std::uint64_t wirelength = 0;
  std::vector<HostEdgeLoad> per_host_edge_congestion;  // sorted by (u, v)
  std::uint64_t congestion = 0;  // max count over host edges, 0 if edgeless
};

/// Per-edge dilations and their maximum. dilation of a guest edge uv is
/// hamming_distance(image(u), image(v)).
std::vector<int> per_edge_dilation(const Embedding& e);
int dilation(const Embedding& e);

/// Sum of guest-edge dilations; routing-independent because every route
/// is a shortest path.
std::uint64_t wirelength(const Embedding& e);

/// Per-host-edge route counts under the canonical e-cube routing
/// (each guest edge uv, u < v, is routed from image(u) to image(v)).
std::vector<HostEdgeLoad> edge_congestion(const Embedding& e);

/// All of the above in one pass.
MetricsReport evaluate(const Embedding& e);

}  // namespace qembed

#endif
