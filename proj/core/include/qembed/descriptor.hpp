// SPDX-License-Identifier: Apache-2.0

#ifndef QEMBED_DESCRIPTOR_HPP
#define QEMBED_DESCRIPTOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qembed/graph.hpp"

namespace qembed {

/// Names a generator plus its parameters, so files and command lines can
/// reference graphs compactly instead of carrying full edge lists.
struct FamilyDescriptor {
  enum class Family {
    kHypercube,      // params: {n}
    kFolded,         // params: {n}
    kMultipartite,   // params: part sizes
    kWheel,          // params: {order}
    kCliqueProduct,  // params: {n}, n even: K_{2^{n/2}} x K_{2^{n/2}}
    kComplete,       // params: {order}
    kCycle,          // params: {order}
    kCustom,         // graph loaded from `source`
  };

  Family family = Family::kHypercube;
  std::vector<std::uint64_t> params;
  std::string source;  // file path, kCustom only
};

/// Round-trips with parse_family: "hypercube", "folded", "multipartite",
/// "wheel", "clique_product", "complete", "cycle", "custom".
std::string to_string(FamilyDescriptor::Family family);
std::optional<FamilyDescriptor::Family> parse_family(const std::string& name);

/// Instantiates the described graph via the family generators (kCustom is
/// rejected here; resolving `source` is the caller's I/O concern).
/// Throws std::invalid_argument on wrong parameter arity.
Graph make_graph(const FamilyDescriptor& d);

/// Exact bisection width recognized from graph structure: compares g
/// against canonically labeled generator output for hypercubes, folded
/// hypercubes, balanced multipartite graphs with even part sizes, and
/// two-factor clique products K_{2a} x K_b with 2a <= b.  Returns the
/// width plus a short description of the matched form, or nullopt when
/// no closed form applies.
struct RecognizedBw {
  std::uint64_t value = 0;
  std::string form;
};
std::optional<RecognizedBw> recognize_bisection_width(const Graph& g);

}  // namespace qembed

#endif
