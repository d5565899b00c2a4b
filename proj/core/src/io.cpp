// SPDX-License-Identifier: Apache-2.0

#include "qembed/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qembed/errors.hpp"

namespace qembed::io {

namespace {

using nlohmann::json;

// nlohmann's unsigned getters can silently wrap negative inputs, so all
// integer extraction is range-checked by hand.
std::uint64_t get_unsigned(const json& j, const char* what,
                           std::uint64_t max_value) {
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > max_value)
      throw std::invalid_argument(std::string(what) + " out of range");
    return v;
  }
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0 || static_cast<std::uint64_t>(v) > max_value)
      throw std::invalid_argument(std::string(what) + " out of range");
    return static_cast<std::uint64_t>(v);
  }
  throw std::invalid_argument(std::string(what) + " must be an integer");
}

const json& require(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument(std::string("missing member \"") + key + "\"");
  return *it;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string bit_string(std::uint32_t bits, int dim) {
  std::string s(static_cast<std::size_t>(dim), '0');
  for (int k = 0; k < dim; ++k)
    if (bits & (std::uint32_t{1} << k)) s[static_cast<std::size_t>(dim - 1 - k)] = '1';
  return s;
}

Graph load_graph_json(const json& j, int depth);

FamilyDescriptor descriptor_from_json_impl(const json& j) {
  if (!j.is_object())
    throw std::invalid_argument("descriptor must be a JSON object");
  FamilyDescriptor d;
  const json& fam = require(j, "family");
  if (!fam.is_string())
    throw std::invalid_argument("\"family\" must be a string");
  const auto parsed = parse_family(fam.get<std::string>());
  if (!parsed)
    throw std::invalid_argument("unknown family \"" + fam.get<std::string>() +
                                "\"");
  d.family = *parsed;
  if (const auto it = j.find("params"); it != j.end()) {
    if (!it->is_array())
      throw std::invalid_argument("\"params\" must be an array");
    for (const json& p : *it)
      d.params.push_back(get_unsigned(p, "family parameter", kMaxOrder));
  }
  if (const auto it = j.find("source"); it != j.end()) {
    if (!it->is_string())
      throw std::invalid_argument("\"source\" must be a string");
    d.source = it->get<std::string>();
  }
  if (d.family == FamilyDescriptor::Family::kCustom && d.source.empty())
    throw std::invalid_argument("custom descriptors require \"source\"");
  return d;
}

// Graph JSON or a descriptor; descriptors may chain through custom
// source files, bounded so reference cycles terminate.
Graph load_graph_json(const json& j, int depth) {
  if (depth > 8) throw std::invalid_argument("descriptor nesting too deep");
  if (j.is_object() && j.contains("family")) {
    const FamilyDescriptor d = descriptor_from_json_impl(j);
    if (d.family != FamilyDescriptor::Family::kCustom) return make_graph(d);
    std::ifstream in(d.source);
    if (!in) throw io_error("cannot open graph file: " + d.source);
    json inner;
    try {
      inner = json::parse(in);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument("malformed JSON in " + d.source + ": " +
                                  e.what());
    }
    return load_graph_json(inner, depth + 1);
  }
  return graph_from_json(j);
}

}  // namespace

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(json::array({e.first, e.second}));
  return json{{"name", g.name()}, {"order", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph must be a JSON object");
  const auto order =
      static_cast<std::uint32_t>(get_unsigned(require(j, "order"), "order", kMaxOrder));
  const json& edges_j = require(j, "edges");
  if (!edges_j.is_array())
    throw std::invalid_argument("\"edges\" must be an array");
  std::vector<Edge> edges;
  edges.reserve(edges_j.size());
  for (const json& e : edges_j) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("each edge must be a [u, v] pair");
    const auto u = static_cast<Vertex>(get_unsigned(e[0], "edge endpoint", kMaxOrder));
    const auto v = static_cast<Vertex>(get_unsigned(e[1], "edge endpoint", kMaxOrder));
    edges.emplace_back(u, v);
  }
  std::string name;
  if (const auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) throw std::invalid_argument("\"name\" must be a string");
    name = it->get<std::string>();
  }
  return Graph(order, std::move(edges), std::move(name));
}

json descriptor_to_json(const FamilyDescriptor& d) {
  json j{{"family", to_string(d.family)}, {"params", d.params}};
  if (!d.source.empty()) j["source"] = d.source;
  return j;
}

FamilyDescriptor descriptor_from_json(const json& j) {
  return descriptor_from_json_impl(j);
}

json embedding_to_json(const Embedding& e) {
  return json{{"guest", graph_to_json(e.guest())},
              {"host_dim", e.host_dim()},
              {"map", e.map()}};
}

Embedding embedding_from_json(const json& j) {
  if (!j.is_object())
    throw std::invalid_argument("embedding must be a JSON object");
  Graph guest = load_graph_json(require(j, "guest"), 0);
  const int host_dim = static_cast<int>(
      get_unsigned(require(j, "host_dim"), "host_dim", kMaxCubeDim));
  const json& map_j = require(j, "map");
  if (!map_j.is_array()) throw std::invalid_argument("\"map\" must be an array");
  std::vector<std::uint32_t> map;
  map.reserve(map_j.size());
  for (const json& v : map_j)
    map.push_back(
        static_cast<std::uint32_t>(get_unsigned(v, "map entry", kMaxOrder)));
  return Embedding(std::move(guest), host_dim, std::move(map));
}

json metrics_to_json(const MetricsReport& m, const Graph& guest, bool full) {
  json j{{"dilation", m.dilation},
         {"wirelength", m.wirelength},
         {"congestion", m.congestion}};
  if (full) {
    json dil = json::array();
    for (std::size_t i = 0; i < guest.edges().size(); ++i) {
      const Edge& e = guest.edges()[i];
      dil.push_back(json::array({e.first, e.second, m.per_edge_dilation[i]}));
    }
    j["per_edge_dilation"] = std::move(dil);
    json cong = json::array();
    for (const HostEdgeLoad& l : m.per_host_edge_congestion)
      cong.push_back(json::array({l.u, l.v, l.count}));
    j["per_host_edge_congestion"] = std::move(cong);
  }
  return j;
}

json bound_report_to_json(const BoundReport& b, int host_dim) {
  return json{{"host_dim", host_dim},
              {"dilation_lb", b.dilation_lb},
              {"wirelength_lb", b.wirelength_lb},
              {"congestion_lb_exact",
               json{{"num", b.congestion_lb_exact.num},
                    {"den", b.congestion_lb_exact.den}}},
              {"congestion_lb_int", b.congestion_lb_int},
              {"bw_used", b.bw_used},
              {"bw_provenance", to_string(b.bw_provenance)}};
}

json certificate_to_json(const OracleCertificate& c) {
  json j{{"value", c.value}, {"search_space", c.search_space}};
  switch (c.quantity) {
    case OracleCertificate::Quantity::kDilation:
      j["quantity"] = "dilation";
      j["witness_map"] = c.witness_map;
      break;
    case OracleCertificate::Quantity::kWirelength:
      j["quantity"] = "wirelength";
      j["witness_map"] = c.witness_map;
      break;
    case OracleCertificate::Quantity::kBisectionWidth:
      j["quantity"] = "bisection_width";
      j["witness_partition"] =
          json::array({c.witness_partition[0], c.witness_partition[1]});
      break;
  }
  return j;
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph \"" << dot_escape(g.name()) << "\" {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges())
    out << "  " << e.first << " -- " << e.second << ";\n";
  out << "}\n";
  return out.str();
}

std::string embedding_to_dot(const Embedding& e) {
  const Graph& g = e.guest();
  std::ostringstream out;
  out << "graph \"" << dot_escape(g.name()) << "\" {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v)
    out << "  " << v << " [label=\"" << bit_string(e.image(v), e.host_dim())
        << "\"];\n";
  for (const Edge& ed : g.edges())
    out << "  " << ed.first << " -- " << ed.second << ";\n";
  out << "}\n";
  return out.str();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

Graph load_graph_file(const std::string& path) {
  return load_graph_json(load_json_file(path), 0);
}

}  // namespace qembed::io
