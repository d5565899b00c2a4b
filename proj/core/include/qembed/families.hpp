// SPDX-License-Identifier: Apache-2.0

#ifndef QEMBED_FAMILIES_HPP
#define QEMBED_FAMILIES_HPP

#include <cstdint>
#include <vector>

#include "qembed/graph.hpp"

namespace qembed {

/// Q_n: vertex i adjacent to i XOR 2^k for every k < n. 1 <= n <= 20.
Graph hypercube(int n);

/// FQ_n: Q_n plus the 2^{n-1} antipodal edges. 2 <= n <= 20.
Graph folded_hypercube(int n);

/// Complete multipartite graph; parts occupy consecutive vertex ranges in
/// the given order. At least 2 parts, every part nonempty, total <= 2^20.
Graph complete_multipartite(const std::vector<std::uint32_t>& part_sizes);

/// W_n: vertex 0 is the hub, vertices 1..n-1 form the cycle in index
/// order. n >= 4.
Graph wheel(std::uint32_t n_vertices);

Graph complete_graph(std::uint32_t n_vertices);  // n >= 1

Graph cycle(std::uint32_t n_vertices);  // n >= 3

/// Cartesian product; vertex (a, b) is numbered a * order(h) + b.
Graph cartesian_product(const Graph& g, const Graph& h);

Graph complement(const Graph& g);

}  // namespace qembed

#endif
