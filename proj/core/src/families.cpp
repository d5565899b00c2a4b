// SPDX-License-Identifier: Apache-2.0

#include "qembed/families.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "qembed/cube.hpp"
#include "qembed/errors.hpp"

namespace qembed {

namespace {

void check_dim(int n, int lo, const char* what) {
  if (n < lo || n > kMaxCubeDim) {
    throw guard_error(std::string(what) + ": dimension " + std::to_string(n) +
                      " outside [" + std::to_string(lo) + ", 20]");
  }
}

}  // namespace

Graph hypercube(int n) {
  check_dim(n, 1, "hypercube");
  const std::uint32_t order = std::uint32_t{1} << n;
  std::vector<Edge> edges;
  edges.reserve(std::size_t{order / 2} * n);
  for (std::uint32_t v = 0; v < order; ++v) {
    for (int k = 0; k < n; ++k) {
      const std::uint32_t w = v ^ (std::uint32_t{1} << k);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph(order, std::move(edges), "Q_" + std::to_string(n));
}

Graph folded_hypercube(int n) {
  check_dim(n, 2, "folded_hypercube");
  const std::uint32_t order = std::uint32_t{1} << n;
  const std::uint32_t mask = cube_mask(n);
  Graph cube = hypercube(n);
  std::vector<Edge> edges = cube.edges();
  edges.reserve(edges.size() + order / 2);
  for (std::uint32_t v = 0; v < order / 2; ++v) {
    edges.emplace_back(v, v ^ mask);  // v < v^mask since bit n-1 of v is 0
  }
  return Graph(order, std::move(edges), "FQ_" + std::to_string(n));
}

Graph complete_multipartite(const std::vector<std::uint32_t>& part_sizes) {
  if (part_sizes.size() < 2) {
    throw std::invalid_argument("complete_multipartite: need at least 2 parts");
  }
  std::uint64_t order = 0;
  for (std::uint32_t s : part_sizes) {
    if (s == 0) {
      throw std::invalid_argument("complete_multipartite: empty part");
    }
    order += s;
  }
  if (order > kMaxOrder) {
    throw guard_error("complete_multipartite: order exceeds 2^20");
  }

  std::string name = "K_{";
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    if (i) name += ",";
    name += std::to_string(part_sizes[i]);
  }
  name += "}";

  std::vector<Edge> edges;
  std::uint64_t cross = order * order;
  for (std::uint32_t s : part_sizes) cross -= std::uint64_t{s} * s;
  edges.reserve(cross / 2);

  std::uint32_t part_begin = 0;
  for (std::uint32_t s : part_sizes) {
    const std::uint32_t part_end = part_begin + s;
    for (std::uint32_t u = part_begin; u < part_end; ++u) {
      for (std::uint32_t v = part_end; v < order; ++v) {
        edges.emplace_back(u, v);
      }
    }
    part_begin = part_end;
  }
  return Graph(static_cast<std::uint32_t>(order), std::move(edges),
               std::move(name));
}

Graph wheel(std::uint32_t n_vertices) {
  if (n_vertices < 4) {
    throw std::invalid_argument("wheel: order must be at least 4");
  }
  if (n_vertices > kMaxOrder) {
    throw guard_error("wheel: order exceeds 2^20");
  }
  std::vector<Edge> edges;
  edges.reserve(2 * (n_vertices - 1));
  for (std::uint32_t v = 1; v < n_vertices; ++v) {
    edges.emplace_back(0, v);  // spoke
  }
  for (std::uint32_t v = 1; v + 1 < n_vertices; ++v) {
    edges.emplace_back(v, v + 1);
  }
  edges.emplace_back(1, n_vertices - 1);  // close the rim
  return Graph(n_vertices, std::move(edges), "W_" + std::to_string(n_vertices));
}

Graph complete_graph(std::uint32_t n_vertices) {
  if (n_vertices < 1) {
    throw std::invalid_argument("complete_graph: order must be at least 1");
  }
  if (n_vertices > kMaxOrder) {
    throw guard_error("complete_graph: order exceeds 2^20");
  }
  std::vector<Edge> edges;
  edges.reserve(std::uint64_t{n_vertices} * (n_vertices - 1) / 2);
  for (std::uint32_t u = 0; u < n_vertices; ++u) {
    for (std::uint32_t v = u + 1; v < n_vertices; ++v) {
      edges.emplace_back(u, v);
    }
  }
  return Graph(n_vertices, std::move(edges), "K_" + std::to_string(n_vertices));
}

Graph cycle(std::uint32_t n_vertices) {
  if (n_vertices < 3) {
    throw std::invalid_argument("cycle: order must be at least 3");
  }
  if (n_vertices > kMaxOrder) {
    throw guard_error("cycle: order exceeds 2^20");
  }
  std::vector<Edge> edges;
  edges.reserve(n_vertices);
  for (std::uint32_t v = 0; v + 1 < n_vertices; ++v) {
    edges.emplace_back(v, v + 1);
  }
  edges.emplace_back(0, n_vertices - 1);
  return Graph(n_vertices, std::move(edges), "C_" + std::to_string(n_vertices));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::uint64_t order = std::uint64_t{g.order()} * h.order();
  if (order > kMaxOrder) {
    throw guard_error("cartesian_product: order exceeds 2^20");
  }
  const std::uint64_t n_edges = std::uint64_t{g.order()} * h.edge_count() +
                                std::uint64_t{h.order()} * g.edge_count();
  if (n_edges > kMaxEdges) {
    throw guard_error("cartesian_product: edge count exceeds 2^27");
  }
  std::vector<Edge> edges;
  edges.reserve(n_edges);
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    for (const auto& [b1, b2] : h.edges()) {
      edges.emplace_back(a * h.order() + b1, a * h.order() + b2);
    }
  }
  for (const auto& [a1, a2] : g.edges()) {
    for (std::uint32_t b = 0; b < h.order(); ++b) {
      edges.emplace_back(a1 * h.order() + b, a2 * h.order() + b);
    }
  }
  std::string name;
  if (!g.name().empty() && !h.name().empty()) {
    name = g.name() + " x " + h.name();
  }
  return Graph(static_cast<std::uint32_t>(order), std::move(edges),
               std::move(name));
}

Graph complement(const Graph& g) {
  const std::uint64_t order = g.order();
  const std::uint64_t total = order * (order - (order ? 1 : 0)) / 2;
  if (total < g.edge_count()) {
    throw std::logic_error("complement: inconsistent edge count");
  }
  if (total - g.edge_count() > kMaxEdges) {
    throw guard_error("complement: edge count exceeds 2^27");
  }
  std::vector<Edge> edges;
  edges.reserve(total - g.edge_count());
  auto it = g.edges().begin();
  const auto end = g.edges().end();
  for (std::uint32_t u = 0; u < g.order(); ++u) {
    for (std::uint32_t v = u + 1; v < g.order(); ++v) {
      if (it != end && it->first == u && it->second == v) {
        ++it;
      } else {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(g.order(), std::move(edges),
               g.name().empty() ? std::string{} : "co-" + g.name());
}

}  // namespace qembed
