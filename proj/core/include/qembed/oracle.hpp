// SPDX-License-Identifier: Apache-2.0

#ifndef QEMBED_ORACLE_HPP
#define QEMBED_ORACLE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "qembed/graph.hpp"

namespace qembed {

/// Exhaustively computed optimum with a witness and an attestation of
/// how much of the search space was examined. search_space counts the
/// partial assignments placed by the search (balanced partitions
/// evaluated, for bisection width); symmetry reduction changes it but
/// never the value.
struct OracleCertificate {
  enum class Quantity { kDilation, kWirelength, kBisectionWidth };

  Quantity quantity = Quantity::kDilation;
  std::uint64_t value = 0;
  /// Optimal embedding map (dilation / wirelength certificates). The
  /// canonically smallest optimum under the symmetry reduction: image of
  /// vertex 0 fixed to 0, coordinates first used in ascending order,
  /// lexicographically smallest map within that space.
  std::vector<std::uint32_t> witness_map;
  /// Optimal balanced partition (bisection-width certificates); side [0]
  /// holds vertex 0, both sides sorted ascending.
  std::array<std::vector<Vertex>, 2> witness_partition;
  std::uint64_t search_space = 0;
};

/// Exact dil(G, Q_n) = min over injections of the max edge dilation.
/// Guards: order <= 2^n; full-order guests require 2^n <= 8; smaller
/// guests are admitted while the assignment-tree estimate stays under
/// 10^9 nodes.
OracleCertificate oracle_dilation(const Graph& g, int n);

/// Exact WL(G, Q_n), branch-and-bound over injections (pruning by
/// partial sums, exactness preserved). Same guards as oracle_dilation.
OracleCertificate oracle_wirelength(const Graph& g, int n);

/// Exact bisection width by enumerating balanced bipartitions
/// (lexicographic order; for even orders vertex 0's side is fixed).
/// Guard: order <= 24.
OracleCertificate oracle_bisection_width(const Graph& g);

/// Max induced-edge count over all m-subsets of K_{p1} x ... x K_{pt}.
/// Guard: prod(p) <= 12. Accepts m in [0, prod(p)].
std::uint64_t oracle_lindsey_max(const std::vector<std::uint64_t>& p,
                                 std::uint64_t m);

}  // namespace qembed

#endif
