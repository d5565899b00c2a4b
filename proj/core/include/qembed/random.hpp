// SPDX-License-Identifier: Apache-2.0

#ifndef QEMBED_RANDOM_HPP
#define QEMBED_RANDOM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qembed/graph.hpp"

namespace qembed {

/// SplitMix64: a tiny, well-mixed 64-bit generator (Steele, Lea &
/// Flood's fixed-increment construction).  Chosen over std::mt19937_64
/// so the byte-exact sample stream is pinned by this header rather than
/// by a library implementation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// One fair bit: the top bit of the next output.
  bool next_bit() { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

/// Erdos-Renyi G(order, 1/2), reproducible across platforms: pairs are
/// visited in ascending order (0,1), (0,2), ..., (0,order-1), (1,2), ...
/// and pair (u,v) becomes an edge when the top bit of the next SplitMix64
/// output is set.  Equal seeds yield byte-identical graphs.
inline Graph random_graph(std::uint32_t order, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < order; ++u)
    for (Vertex v = u + 1; v < order; ++v)
      if (rng.next_bit()) edges.emplace_back(u, v);
  return Graph(order, edges,
               "G" + std::to_string(order) + "s" + std::to_string(seed));
}

}  // namespace qembed

#endif
