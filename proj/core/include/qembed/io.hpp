// SPDX-License-Identifier: Apache-2.0

#ifndef QEMBED_IO_HPP
#define QEMBED_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "qembed/bounds.hpp"
#include "qembed/descriptor.hpp"
#include "qembed/embedding.hpp"
#include "qembed/graph.hpp"
#include "qembed/metrics.hpp"
#include "qembed/oracle.hpp"

namespace qembed::io {

// All JSON produced here is byte-deterministic: nlohmann::json keeps
// object keys sorted, and dump_json fixes the indentation and trailing
// newline. Schemas:
//   Graph       {"name": str, "order": int, "edges": [[u, v], ...]}
//               with u < v and the list ascending.
//   Descriptor  {"family": str, "params": [int, ...], "source"?: str}
//   Embedding   {"guest": <graph or descriptor>, "host_dim": n,
//                "map": [int, ...]}
//   Metrics     {"dilation", "wirelength", "congestion"} plus, when
//               full=true, "per_edge_dilation": [[u, v, d], ...] and
//               "per_host_edge_congestion": [[u, v, count], ...].
//   Bounds      {"host_dim", "dilation_lb", "wirelength_lb",
//                "congestion_lb_exact": {"num", "den"},
//                "congestion_lb_int", "bw_used", "bw_provenance"}
//   Certificate {"quantity", "value", "search_space", and either
//                "witness_map" or "witness_partition"}

std::string dump_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json descriptor_to_json(const FamilyDescriptor& d);
FamilyDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json embedding_to_json(const Embedding& e);
/// The "guest" member may be inline graph JSON or a family descriptor;
/// custom descriptors are resolved by reading their source file.
Embedding embedding_from_json(const nlohmann::json& j);

nlohmann::json metrics_to_json(const MetricsReport& m, const Graph& guest,
                               bool full);
nlohmann::json bound_report_to_json(const BoundReport& b, int host_dim);
nlohmann::json certificate_to_json(const OracleCertificate& c);

/// Undirected DOT, one edge per line, ascending; suitable for graphviz.
std::string graph_to_dot(const Graph& g);

/// Guest graph in DOT with every node labeled by the binary string of
/// its image (most significant coordinate first).
std::string embedding_to_dot(const Embedding& e);

/// Reads and parses a JSON file. Unreadable file -> io_error; malformed
/// JSON -> std::invalid_argument.
nlohmann::json load_json_file(const std::string& path);

/// Loads a graph file holding either graph JSON or a family descriptor.
Graph load_graph_file(const std::string& path);

}  // namespace qembed::io

#endif
