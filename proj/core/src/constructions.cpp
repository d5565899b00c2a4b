// SPDX-License-Identifier: Apache-2.0

#include "qembed/constructions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "qembed/cube.hpp"
#include "qembed/errors.hpp"
#include "qembed/families.hpp"

namespace qembed {

namespace {

void check_construction_dim(int n, int lo, const char* what) {
  if (n < lo || n > 12) {
    throw guard_error(std::string(what) + ": dimension " + std::to_string(n) +
                      " outside [" + std::to_string(lo) + ", 12]");
  }
}

}  // namespace

bool is_perfect_antimatching(const Graph& g, const AntiMatching& am) {
  if (g.order() % 2 != 0 || am.pairs.size() * 2 != g.order()) return false;
  std::vector<bool> covered(g.order(), false);
  for (const auto& [x, y] : am.pairs) {
    if (x == y || x >= g.order() || y >= g.order()) return false;
    if (covered[x] || covered[y]) return false;
    covered[x] = covered[y] = true;
    if (g.has_edge(x, y)) return false;
  }
  return true;
}

Embedding antimatching_embedding(const Graph& g, const AntiMatching& am) {
  if (!std::has_single_bit(g.order())) {
    throw std::invalid_argument(
        "antimatching_embedding: guest order is not a power of two");
  }
  const int n = std::countr_zero(g.order());
  if (n < 1 || n > kMaxCubeDim) {
    throw guard_error("antimatching_embedding: dimension outside [1, 20]");
  }
  if (!is_perfect_antimatching(g, am)) {
    throw std::invalid_argument(
        "antimatching_embedding: not a perfect anti-matching of the guest");
  }
  const std::uint32_t mask = cube_mask(n);
  std::vector<std::uint32_t> map(g.order());
  for (std::uint32_t k = 0; k < am.pairs.size(); ++k) {
    // k < 2^{n-1}, so k < antipode(k): the smaller pair member gets k.
    const auto& [x, y] = am.pairs[k];
    map[x] = k;
    map[y] = k ^ mask;
  }
  return Embedding(g, n, std::move(map));
}

MultipartiteEmbedding multipartite_embedding(int n, int p) {
  check_construction_dim(n, 2, "multipartite_embedding");
  if (p < 1 || p >= n) {
    throw guard_error("multipartite_embedding: need 1 <= p < n");
  }
  const std::uint32_t part_count = std::uint32_t{1} << p;
  const std::uint32_t part_size = std::uint32_t{1} << (n - p);
  const std::uint32_t half = std::uint32_t{1} << (n - p - 1);
  const std::uint32_t stride = std::uint32_t{1} << (p + 1);

  std::vector<std::vector<std::uint32_t>> parts(part_count);
  for (std::uint32_t i = 1; i <= part_count; ++i) {
    auto& labels = parts[i - 1];
    labels.reserve(part_size);
    for (std::uint32_t j = 0; j < half; ++j) labels.push_back(j * stride + i - 1);
    for (std::uint32_t j = 1; j <= half; ++j) labels.push_back(j * stride - i);
    std::sort(labels.begin(), labels.end());
  }

  Graph guest = complete_multipartite(
      std::vector<std::uint32_t>(part_count, part_size));
  std::vector<std::uint32_t> map(guest.order());
  for (std::uint32_t i = 0; i < part_count; ++i) {
    for (std::uint32_t q = 0; q < part_size; ++q) {
      map[i * part_size + q] = parts[i][q];
    }
  }
  return {Embedding(std::move(guest), n, std::move(map)), std::move(parts)};
}

Embedding folded_identity_embedding(int n) {
  check_construction_dim(n, 2, "folded_identity_embedding");
  Graph guest = folded_hypercube(n);
  std::vector<std::uint32_t> map(guest.order());
  for (std::uint32_t v = 0; v < map.size(); ++v) map[v] = v;
  return Embedding(std::move(guest), n, std::move(map));
}

Embedding wheel_gray_embedding(int n) {
  check_construction_dim(n, 2, "wheel_gray_embedding");
  Graph guest = wheel(std::uint32_t{1} << n);
  std::vector<std::uint32_t> map(guest.order());
  for (std::uint32_t v = 0; v < map.size(); ++v) {
    map[v] = gray_code(v, n).bits;
  }
  return Embedding(std::move(guest), n, std::move(map));
}

Embedding clique_product_embedding(int n) {
  check_construction_dim(n, 2, "clique_product_embedding");
  if (n % 2 != 0) {
    throw std::invalid_argument("clique_product_embedding: n must be even");
  }
  const std::uint32_t side = std::uint32_t{1} << (n / 2);
  Graph guest = cartesian_product(complete_graph(side), complete_graph(side));
  std::vector<std::uint32_t> map(guest.order());
  for (std::uint32_t a = 0; a < side; ++a) {
    for (std::uint32_t b = 0; b < side; ++b) {
      map[a * side + b] = (a << (n / 2)) | b;
    }
  }
  return Embedding(std::move(guest), n, std::move(map));
}

}  // namespace qembed
