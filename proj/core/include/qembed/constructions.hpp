// SPDX-License-Identifier: Apache-2.0

#ifndef QEMBED_CONSTRUCTIONS_HPP
#define QEMBED_CONSTRUCTIONS_HPP

#include <cstdint>
#include <vector>

#include "qembed/embedding.hpp"
#include "qembed/graph.hpp"

namespace qembed {

/// A set of disjoint vertex pairs that are all NON-edges of some guest
/// graph (a matching in its complement). Perfect when it covers every
/// vertex.
struct AntiMatching {
  std::vector<Edge> pairs;  // each stored (min, max)
};

/// True iff `am` consists of disjoint non-edges of g covering all of g.
bool is_perfect_antimatching(const Graph& g, const AntiMatching& am);

/// Maps the k-th input pair onto the antipodal image pair {k, antipode(k)},
/// lower-indexed pair member to the smaller image. Requires g of order 2^n
/// and a perfect anti-matching; the result has dilation <= n-1.
Embedding antimatching_embedding(const Graph& g, const AntiMatching& am);

/// Wirelength-optimal labeling of the balanced complete 2^p-partite graph
/// K_{2^{n-p},...,2^{n-p}} in Q_n, plus the label partition it is built
/// from so the parts can be inspected directly.
struct MultipartiteEmbedding {
  Embedding embedding;
  /// parts[i] = sorted hypercube labels of part i; part i of the guest
  /// occupies guest vertices [i*2^{n-p}, (i+1)*2^{n-p}) in label order.
  std::vector<std::vector<std::uint32_t>> parts;
};

/// Interleaved part labeling: part i (1-based) gets labels
/// {j*2^{p+1} + i - 1} for j = 0..2^{n-p-1}-1 together with
/// {j*2^{p+1} - i} for j = 1..2^{n-p-1}; each guest vertex then maps to
/// its label read as a binary string. 1 <= p < n <= 12.
/// Achieves wirelength n * 2^{2n-p-2} * (2^p - 1).
MultipartiteEmbedding multipartite_embedding(int n, int p);

/// id : FQ_n -> Q_n. Wirelength n * 2^n; the antipodal edges have
/// dilation n. 2 <= n <= 12.
Embedding folded_identity_embedding(int n);

/// W_{2^n} -> Q_n along the reflected Gray code: hub (guest vertex 0) to
/// code 0, rim vertex k to code k. Wirelength (n+2) * 2^{n-1}; exactly
/// one rim edge (the closing one) has dilation 2. 2 <= n <= 12.
Embedding wheel_gray_embedding(int n);

/// K_{2^{n/2}} x K_{2^{n/2}} -> Q_n by concatenating the two factor
/// coordinates: (a, b) -> a·2^{n/2} + b. Wirelength n * 2^{3n/2-2},
/// dilation n/2. n even, 2 <= n <= 12.
Embedding clique_product_embedding(int n);

}  // namespace qembed

#endif
