// SPDX-License-Identifier: Apache-2.0

#include "qembed/descriptor.hpp"

#include <bit>
#include <stdexcept>

#include "qembed/bounds.hpp"
#include "qembed/families.hpp"

namespace qembed {

namespace {

void require_arity(const FamilyDescriptor& d, std::size_t arity,
                   const char* what) {
  if (d.params.size() != arity)
    throw std::invalid_argument(std::string("family ") +
                                to_string(d.family) + " expects " + what);
}

int as_dim(std::uint64_t value) {
  if (value > kMaxCubeDim) throw std::invalid_argument("dimension too large");
  return static_cast<int>(value);
}

std::uint32_t as_order(std::uint64_t value) {
  if (value > kMaxOrder) throw std::invalid_argument("order too large");
  return static_cast<std::uint32_t>(value);
}

}  // namespace

std::string to_string(FamilyDescriptor::Family family) {
  switch (family) {
    case FamilyDescriptor::Family::kHypercube: return "hypercube";
    case FamilyDescriptor::Family::kFolded: return "folded";
    case FamilyDescriptor::Family::kMultipartite: return "multipartite";
    case FamilyDescriptor::Family::kWheel: return "wheel";
    case FamilyDescriptor::Family::kCliqueProduct: return "clique_product";
    case FamilyDescriptor::Family::kComplete: return "complete";
    case FamilyDescriptor::Family::kCycle: return "cycle";
    case FamilyDescriptor::Family::kCustom: return "custom";
  }
  throw std::logic_error("unreachable family");
}

std::optional<FamilyDescriptor::Family> parse_family(const std::string& name) {
  using F = FamilyDescriptor::Family;
  if (name == "hypercube") return F::kHypercube;
  if (name == "folded") return F::kFolded;
  if (name == "multipartite") return F::kMultipartite;
  if (name == "wheel") return F::kWheel;
  if (name == "clique_product") return F::kCliqueProduct;
  if (name == "complete") return F::kComplete;
  if (name == "cycle") return F::kCycle;
  if (name == "custom") return F::kCustom;
  return std::nullopt;
}

Graph make_graph(const FamilyDescriptor& d) {
  using F = FamilyDescriptor::Family;
  switch (d.family) {
    case F::kHypercube:
      require_arity(d, 1, "one dimension parameter");
      return hypercube(as_dim(d.params[0]));
    case F::kFolded:
      require_arity(d, 1, "one dimension parameter");
      return folded_hypercube(as_dim(d.params[0]));
    case F::kMultipartite: {
      if (d.params.empty())
        throw std::invalid_argument("family multipartite expects part sizes");
      std::vector<std::uint32_t> parts;
      parts.reserve(d.params.size());
      for (std::uint64_t p : d.params) parts.push_back(as_order(p));
      return complete_multipartite(parts);
    }
    case F::kWheel:
      require_arity(d, 1, "one order parameter");
      return wheel(as_order(d.params[0]));
    case F::kCliqueProduct: {
      require_arity(d, 1, "one even dimension parameter");
      const int n = as_dim(d.params[0]);
      if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("clique_product needs an even dimension");
      const std::uint32_t side = std::uint32_t{1} << (n / 2);
      return cartesian_product(complete_graph(side), complete_graph(side));
    }
    case F::kComplete:
      require_arity(d, 1, "one order parameter");
      return complete_graph(as_order(d.params[0]));
    case F::kCycle:
      require_arity(d, 1, "one order parameter");
      return cycle(as_order(d.params[0]));
    case F::kCustom:
      throw std::invalid_argument(
          "custom descriptors must be resolved from their source file");
  }
  throw std::logic_error("unreachable family");
}

std::optional<RecognizedBw> recognize_bisection_width(const Graph& g) {
  const std::uint64_t order = g.order();
  const std::uint64_t size = g.edges().size();
  if (order < 2) return std::nullopt;

  // Each candidate form is tried only when its edge-count formula already
  // agrees, so no oversized comparison graph is ever materialized.

  // Power-of-two orders: hypercube and folded hypercube by exact edge
  // comparison against the canonical generators.
  if (std::has_single_bit(order)) {
    const int n = std::bit_width(order) - 1;
    const std::uint64_t half = order / 2;
    if (n >= 1 && size == static_cast<std::uint64_t>(n) * half &&
        g == hypercube(n))
      return RecognizedBw{bw_hypercube(n), "hypercube Q_" + std::to_string(n)};
    if (n >= 2 && size == static_cast<std::uint64_t>(n + 1) * half &&
        g == folded_hypercube(n))
      return RecognizedBw{bw_folded_hypercube(n),
                          "folded hypercube FQ_" + std::to_string(n)};
  }

  // Balanced complete multipartite with even part size 2r, t >= 2 parts.
  for (std::uint32_t t = 2; t <= order; ++t) {
    if (order % t != 0) continue;
    const std::uint32_t s = static_cast<std::uint32_t>(order / t);
    if (s % 2 != 0) continue;
    if (size != order * (order - s) / 2) continue;
    const std::vector<std::uint32_t> parts(t, s);
    if (g == complete_multipartite(parts)) {
      return RecognizedBw{
          bw_balanced_multipartite(t, s / 2),
          std::to_string(t) + " parts of size " + std::to_string(s)};
    }
  }

  // Two-factor clique product K_{2a} x K_b with 2a <= b, vertex (x,y)
  // numbered x*b + y as the product generator does.
  for (std::uint32_t a = 2; static_cast<std::uint64_t>(a) * a <= order;
       a += 2) {
    if (order % a != 0) continue;
    const std::uint32_t b = static_cast<std::uint32_t>(order / a);
    const std::uint64_t product_size =
        order * (a - 1) / 2 + order * (b - 1) / 2;
    if (size != product_size) continue;
    if (g == cartesian_product(complete_graph(a), complete_graph(b))) {
      return RecognizedBw{
          bw_clique_product({a / 2, b}),
          "K_" + std::to_string(a) + " x K_" + std::to_string(b)};
    }
  }
  return std::nullopt;
}

}  // namespace qembed
