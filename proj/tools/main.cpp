// SPDX-License-Identifier: Apache-2.0
//
// qembed -- command-line front end for the hypercube-embedding library.
//
// Subcommands:
//   gen      emit a guest graph from a named family
//   embed    build one of the closed-form embeddings
//   eval     measure dilation / wirelength / congestion of an embedding
//   bounds   lower bounds for embedding a guest into Q_n
//   oracle   exhaustive-search certificates at small orders
//   table1   recompute the closed-form summary table for one (n, p)
//   verify   run the self-check suite
//
// Exit codes: 0 success, 1 a verification or table check failed,
// 2 usage / domain / guard error, 3 file I/O error.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <exception>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qembed/bounds.hpp"
#include "qembed/constructions.hpp"
#include "qembed/descriptor.hpp"
#include "qembed/embedding.hpp"
#include "qembed/errors.hpp"
#include "qembed/families.hpp"
#include "qembed/graph.hpp"
#include "qembed/io.hpp"
#include "qembed/metrics.hpp"
#include "qembed/oracle.hpp"
#include "qembed/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

template <typename T>
std::string num(T v) {
  return std::to_string(v);
}

std::uint64_t pow2(int k) { return std::uint64_t{1} << k; }

void require_format(const std::string& format,
                    std::initializer_list<const char*> allowed,
                    const char* command) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  std::ostringstream os;
  os << command << " does not support --format " << format << " (use";
  const char* sep = " ";
  for (const char* a : allowed) {
    os << sep << a;
    sep = "|";
  }
  os << ")";
  throw std::invalid_argument(os.str());
}

std::string bit_string(std::uint32_t bits, int dim) {
  std::string s(static_cast<std::size_t>(dim), '0');
  for (int i = 0; i < dim; ++i) {
    if ((bits >> (dim - 1 - i)) & 1u) s[i] = '1';
  }
  return s;
}

std::string graph_text(const qembed::Graph& g) {
  std::ostringstream os;
  os << "name   " << (g.name().empty() ? "(unnamed)" : g.name()) << '\n';
  os << "order  " << g.order() << '\n';
  os << "edges  " << g.edge_count() << '\n';
  return os.str();
}

std::string embedding_text(const qembed::Embedding& e) {
  std::ostringstream os;
  const qembed::Graph& g = e.guest();
  os << "guest  " << (g.name().empty() ? "(unnamed)" : g.name()) << '\n';
  os << "order  " << g.order() << '\n';
  os << "edges  " << g.edge_count() << '\n';
  os << "host   Q_" << e.host_dim() << '\n';
  os << "map:\n";
  for (qembed::Vertex v = 0; v < g.order(); ++v) {
    os << "  " << std::setw(5) << v << " -> "
       << bit_string(e.image(v), e.host_dim()) << '\n';
  }
  return os.str();
}

std::string metrics_text(const qembed::MetricsReport& m,
                         const qembed::Graph& guest, bool full) {
  std::ostringstream os;
  os << "dilation    " << m.dilation << '\n';
  os << "wirelength  " << m.wirelength << '\n';
  os << "congestion  " << m.congestion << '\n';
  if (full) {
    os << "edge dilation:\n";
    const auto& edges = guest.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      os << "  (" << edges[i].first << ", " << edges[i].second << ") -> "
         << m.per_edge_dilation[i] << '\n';
    }
    os << "host edge congestion:\n";
    for (const auto& load : m.per_host_edge_congestion) {
      os << "  (" << load.u << ", " << load.v << ") -> " << load.count << '\n';
    }
  }
  return os.str();
}

std::string bounds_text(const qembed::BoundReport& b, int host_dim,
                        const std::string& bw_note) {
  std::ostringstream os;
  os << "host             Q_" << host_dim << '\n';
  os << "dilation lb      " << b.dilation_lb << '\n';
  os << "wirelength lb    " << b.wirelength_lb << '\n';
  os << "congestion lb    " << b.congestion_lb_int << " (exact "
     << b.congestion_lb_exact.num << '/' << b.congestion_lb_exact.den
     << ")\n";
  os << "bisection width  " << b.bw_used << " ("
     << qembed::to_string(b.bw_provenance);
  if (!bw_note.empty()) os << ": " << bw_note;
  os << ")\n";
  return os.str();
}

const char* quantity_name(qembed::OracleCertificate::Quantity q) {
  switch (q) {
    case qembed::OracleCertificate::Quantity::kDilation:
      return "dilation";
    case qembed::OracleCertificate::Quantity::kWirelength:
      return "wirelength";
    default:
      return "bisection_width";
  }
}

std::string certificate_text(const qembed::OracleCertificate& c) {
  std::ostringstream os;
  os << "quantity      " << quantity_name(c.quantity) << '\n';
  os << "value         " << c.value << '\n';
  os << "search space  " << c.search_space << " nodes\n";
  if (c.quantity == qembed::OracleCertificate::Quantity::kBisectionWidth) {
    for (int side = 0; side < 2; ++side) {
      os << "side " << (side == 0 ? 'A' : 'B') << "       ";
      for (qembed::Vertex v : c.witness_partition[side]) os << ' ' << v;
      os << '\n';
    }
  } else {
    os << "witness map  ";
    for (std::uint32_t w : c.witness_map) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

json verify_report_json(const qembed::VerifyOptions& o,
                        const qembed::VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc{{"id", c.id}, {"status", qembed::to_string(c.status)}};
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  return json{{"scope", o.scope},     {"max_n", o.max_n},
              {"seed", o.seed},       {"checks", std::move(checks)},
              {"passed", r.passed},   {"failed", r.failed},
              {"skipped", r.skipped}, {"ok", r.ok()}};
}

std::string verify_report_text(const qembed::VerifyReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << std::left << std::setw(5) << qembed::to_string(c.status) << ' '
       << c.id;
    if (!c.detail.empty()) os << "  (" << c.detail << ')';
    os << '\n';
  }
  os << "passed " << r.passed << ", failed " << r.failed << ", skipped "
     << r.skipped << '\n';
  return os.str();
}

qembed::AntiMatching pairs_from_json(const json& j) {
  const char* kWant = "pairs file must be a JSON array of [u, v] pairs";
  if (!j.is_array()) throw std::invalid_argument(kWant);
  qembed::AntiMatching am;
  for (const auto& el : j) {
    if (!el.is_array() || el.size() != 2 || !el[0].is_number_integer() ||
        !el[1].is_number_integer()) {
      throw std::invalid_argument(kWant);
    }
    const std::int64_t a = el[0].get<std::int64_t>();
    const std::int64_t b = el[1].get<std::int64_t>();
    const std::int64_t cap = std::numeric_limits<std::uint32_t>::max();
    if (a < 0 || b < 0 || a > cap || b > cap || a == b) {
      throw std::invalid_argument(kWant);
    }
    am.pairs.emplace_back(static_cast<qembed::Vertex>(std::min(a, b)),
                          static_cast<qembed::Vertex>(std::max(a, b)));
  }
  return am;
}

// ---- table1 -----------------------------------------------------------

struct TableCell {
  bool applicable = true;
  bool ok = true;  // meaningful only when applicable
  std::string claimed;
  std::string computed;
  std::string note;
};

struct TableRow {
  std::string graph;
  TableCell dilation;
  TableCell wirelength;
};

std::string multipartite_label(int n, int p) {
  const std::uint64_t s = pow2(n - p);
  const std::uint64_t t = pow2(p);
  std::ostringstream os;
  if (p == n) {
    os << "K_" << t;
  } else if (t <= 8) {
    os << "K_{";
    for (std::uint64_t i = 0; i < t; ++i) os << (i ? "," : "") << s;
    os << '}';
  } else {
    os << "K_{" << s << " x " << t << " parts}";
  }
  return os.str();
}

std::string interval_or_point(int lower, int upper) {
  if (lower == upper) return num(lower);
  return "[" + num(lower) + ", " + num(upper) + "]";
}

TableRow multipartite_row(int n, int p) {
  TableRow row;
  row.graph = multipartite_label(n, p);
  const std::uint64_t s = pow2(n - p);
  const std::uint64_t t = pow2(p);

  const qembed::Graph g = qembed::complete_multipartite(
      std::vector<std::uint32_t>(t, static_cast<std::uint32_t>(s)));
  const int upper = qembed::dilation_upper_from_antimatching(g);
  const int lower = qembed::dilation_lower_bound(n, g.max_degree());
  row.dilation.computed = interval_or_point(lower, upper);
  if (p == n) {
    row.dilation.claimed = num(n);
    row.dilation.ok = (lower == n && upper == n);
  } else if (s <= static_cast<std::uint64_t>(n)) {
    row.dilation.claimed = num(n - 1);
    row.dilation.ok = (lower == n - 1 && upper == n - 1);
  } else {
    row.dilation.applicable = false;
    row.dilation.note =
        "closed form covers p = n and 2^(n-p) <= n; interval shown";
  }

  if (p == n) {
    row.wirelength.applicable = false;
    row.wirelength.note = "labeling is defined for p < n";
  } else {
    const std::uint64_t claim =
        static_cast<std::uint64_t>(n) * pow2(2 * n - p - 2) * (t - 1);
    const auto m = qembed::evaluate(qembed::multipartite_embedding(n, p).embedding);
    row.wirelength.claimed = num(claim);
    row.wirelength.computed = num(m.wirelength);
    row.wirelength.ok = (m.wirelength == claim);
  }
  return row;
}

TableRow folded_row(int n) {
  TableRow row;
  row.graph = "FQ_" + num(n);
  const int lower =
      qembed::dilation_lower_bound(n, static_cast<std::uint64_t>(n) + 1);
  row.dilation.claimed = "2";
  if (n <= 3) {
    const auto cert = qembed::oracle_dilation(qembed::folded_hypercube(n), n);
    row.dilation.computed = num(cert.value);
    row.dilation.ok = (lower == 2 && cert.value == 2);
  } else {
    row.dilation.computed = num(lower) + " (lower bound)";
    row.dilation.ok = (lower == 2);
    row.dilation.note =
        "exact value taken from the literature; the recomputed lower bound "
        "must equal 2 and exhaustive search confirms it for n <= 3";
  }
  const std::uint64_t claim = static_cast<std::uint64_t>(n) * pow2(n);
  const auto m = qembed::evaluate(qembed::folded_identity_embedding(n));
  row.wirelength.claimed = num(claim);
  row.wirelength.computed = num(m.wirelength);
  row.wirelength.ok = (m.wirelength == claim);
  return row;
}

TableRow wheel_row(int n) {
  TableRow row;
  const std::uint64_t order = pow2(n);
  row.graph = "W_" + num(order);
  const qembed::Graph g = qembed::wheel(static_cast<std::uint32_t>(order));
  const int upper = qembed::dilation_upper_from_antimatching(g);
  const int lower = qembed::dilation_lower_bound(n, g.max_degree());
  row.dilation.claimed = num(n);
  row.dilation.computed = interval_or_point(lower, upper);
  row.dilation.ok = (lower == n && upper == n);

  const std::uint64_t claim = (static_cast<std::uint64_t>(n) + 2) * pow2(n - 1);
  const auto m = qembed::evaluate(qembed::wheel_gray_embedding(n));
  row.wirelength.claimed = num(claim);
  row.wirelength.computed = num(m.wirelength);
  row.wirelength.ok = (m.wirelength == claim);
  return row;
}

TableRow clique_product_row(int n) {
  TableRow row;
  if (n % 2 != 0) {
    row.graph = "K_r x K_r";
    row.dilation.applicable = false;
    row.dilation.note = "defined for even n";
    row.wirelength.applicable = false;
    row.wirelength.note = "defined for even n";
    return row;
  }
  const std::uint64_t side = pow2(n / 2);
  row.graph = "K_" + num(side) + " x K_" + num(side);
  const auto e = qembed::clique_product_embedding(n);
  const auto m = qembed::evaluate(e);
  row.dilation.claimed = "<= " + num(n / 2);
  row.dilation.computed = num(m.dilation);
  row.dilation.ok = (m.dilation <= n / 2);

  const std::uint64_t claim =
      static_cast<std::uint64_t>(n) * pow2(3 * n / 2 - 2);
  row.wirelength.claimed = num(claim);
  row.wirelength.computed = num(m.wirelength);
  row.wirelength.ok = (m.wirelength == claim);
  return row;
}

json cell_json(const TableCell& c) {
  json j{{"status", c.applicable ? (c.ok ? "ok" : "mismatch") : "n/a"}};
  if (!c.claimed.empty()) j["claimed"] = c.claimed;
  if (!c.computed.empty()) j["computed"] = c.computed;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

void cell_text(std::ostringstream& os, const char* label,
               const TableCell& c) {
  os << "  " << std::left << std::setw(11) << label << " claimed "
     << std::setw(16) << (c.claimed.empty() ? "-" : c.claimed)
     << " computed " << std::setw(16)
     << (c.computed.empty() ? "-" : c.computed) << ' '
     << (c.applicable ? (c.ok ? "ok" : "MISMATCH") : "n/a");
  if (!c.note.empty()) os << "  (" << c.note << ')';
  os << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hypercube embeddings: constructions, metrics, bounds, and "
      "exhaustive-search certificates"};
  app.set_version_flag("--version", "qembed 0.1.0");
  app.require_subcommand(1);

  std::string format = "json";
  std::uint64_t seed = 0;
  bool full = false;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text", "dot"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for the randomized verification corpus")
      ->capture_default_str();
  app.add_flag("--full", full, "include per-edge tables in eval output");

  // gen ------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Emit a guest graph from a family");
  gen->fallthrough();
  std::string gen_family;
  int gen_n = 0;
  std::uint64_t gen_order = 0;
  std::vector<std::uint64_t> gen_parts;
  std::string gen_source;
  gen->add_option("--family", gen_family,
                  "hypercube|folded|multipartite|wheel|clique_product|"
                  "complete|cycle|custom")
      ->required();
  auto* gen_n_opt =
      gen->add_option("--n", gen_n, "dimension parameter")
          ->check(CLI::NonNegativeNumber);
  auto* gen_order_opt = gen->add_option("--order", gen_order, "vertex count");
  auto* gen_parts_opt =
      gen->add_option("--parts", gen_parts, "comma-separated part sizes")
          ->delimiter(',');
  auto* gen_source_opt =
      gen->add_option("--source", gen_source, "graph JSON file (custom)");

  // embed ----------------------------------------------------------------
  auto* embed = app.add_subcommand("embed", "Build a closed-form embedding");
  embed->fallthrough();
  embed->require_subcommand(1);
  int mp_n = 0, mp_p = 0, fo_n = 0, wh_n = 0, cp_n = 0;
  auto* em_multi = embed->add_subcommand(
      "multipartite", "2^p equal parts of 2^(n-p) vertices into Q_n");
  em_multi->fallthrough();
  em_multi->add_option("--n", mp_n, "host dimension")->required();
  em_multi->add_option("--p", mp_p, "number of parts is 2^p")->required();
  auto* em_folded =
      embed->add_subcommand("folded", "folded hypercube FQ_n into Q_n");
  em_folded->fallthrough();
  em_folded->add_option("--n", fo_n, "host dimension")->required();
  auto* em_wheel =
      embed->add_subcommand("wheel", "wheel on 2^n vertices into Q_n");
  em_wheel->fallthrough();
  em_wheel->add_option("--n", wh_n, "host dimension")->required();
  auto* em_cp = embed->add_subcommand(
      "clique-product", "K_{2^(n/2)} x K_{2^(n/2)} into Q_n (n even)");
  em_cp->fallthrough();
  em_cp->add_option("--n", cp_n, "host dimension")->required();
  auto* em_anti = embed->add_subcommand(
      "antimatching",
      "dilation-(n-1) embedding from a perfect anti-matching");
  em_anti->fallthrough();
  std::string am_graph, am_pairs;
  em_anti->add_option("--graph", am_graph, "guest graph JSON file")
      ->required();
  auto* am_pairs_opt = em_anti->add_option(
      "--pairs", am_pairs,
      "JSON array of [u, v] non-adjacent pairs; computed when omitted");

  // eval -----------------------------------------------------------------
  auto* eval = app.add_subcommand(
      "eval", "Evaluate dilation, wirelength, and congestion");
  eval->fallthrough();
  std::string eval_embedding;
  eval->add_option("--embedding", eval_embedding, "embedding JSON file")
      ->required();

  // bounds ---------------------------------------------------------------
  auto* bounds = app.add_subcommand(
      "bounds", "Lower bounds for embedding a guest into Q_n");
  bounds->fallthrough();
  std::string bounds_graph;
  int bounds_dim = 0;
  std::string bounds_bw = "auto";
  bounds->add_option("--graph", bounds_graph, "guest graph JSON file")
      ->required();
  bounds->add_option("--host-dim", bounds_dim, "host dimension n")
      ->required()
      ->check(CLI::PositiveNumber);
  bounds->add_option("--bw", bounds_bw,
                     "guest bisection width: 'auto' or an integer")
      ->capture_default_str();

  // oracle ---------------------------------------------------------------
  auto* oracle = app.add_subcommand(
      "oracle", "Exhaustive-search certificates (small orders)");
  oracle->fallthrough();
  oracle->require_subcommand(1);
  std::string od_graph, ow_graph, ob_graph;
  int od_dim = 0, ow_dim = 0;
  auto* or_dil =
      oracle->add_subcommand("dilation", "minimum dilation over all maps");
  or_dil->fallthrough();
  or_dil->add_option("--graph", od_graph, "guest graph JSON file")
      ->required();
  or_dil->add_option("--host-dim", od_dim, "host dimension n")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* or_wl = oracle->add_subcommand("wirelength",
                                       "minimum wirelength over all maps");
  or_wl->fallthrough();
  or_wl->add_option("--graph", ow_graph, "guest graph JSON file")->required();
  or_wl->add_option("--host-dim", ow_dim, "host dimension n")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* or_bw = oracle->add_subcommand(
      "bw", "exact bisection width over all balanced partitions");
  or_bw->fallthrough();
  or_bw->add_option("--graph", ob_graph, "guest graph JSON file")->required();

  // table1 ---------------------------------------------------------------
  auto* table1 = app.add_subcommand(
      "table1", "Recompute the closed-form summary table for one (n, p)");
  table1->fallthrough();
  int t1_n = 0;
  int t1_p = 1;
  table1->add_option("--n", t1_n, "host dimension (2..12)")
      ->required()
      ->check(CLI::Range(2, 12));
  table1->add_option("--p", t1_p, "multipartite parameter (1..n)")
      ->capture_default_str();

  // verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Run the self-check suite");
  verify->fallthrough();
  std::string v_scope = "all";
  int v_max_n = 12;
  verify->add_option("--scope", v_scope, "all or one check group")
      ->capture_default_str();
  verify->add_option("--max-n", v_max_n, "largest host dimension exercised")
      ->check(CLI::Range(1, 20))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  auto emit_graph = [&](const qembed::Graph& g) {
    if (format == "json") {
      std::cout << qembed::io::dump_json(qembed::io::graph_to_json(g));
    } else if (format == "dot") {
      std::cout << qembed::io::graph_to_dot(g);
    } else {
      std::cout << graph_text(g);
    }
    return kExitOk;
  };

  auto emit_embedding = [&](const qembed::Embedding& e) {
    if (format == "json") {
      std::cout << qembed::io::dump_json(qembed::io::embedding_to_json(e));
    } else if (format == "dot") {
      std::cout << qembed::io::embedding_to_dot(e);
    } else {
      std::cout << embedding_text(e);
    }
    return kExitOk;
  };

  auto run_gen = [&]() {
    require_format(format, {"json", "text", "dot"}, "gen");
    const auto family = qembed::parse_family(gen_family);
    if (!family) {
      throw std::invalid_argument("unknown family: " + gen_family);
    }
    using F = qembed::FamilyDescriptor::Family;
    auto need = [&](const CLI::Option* o, const char* flag) {
      if (o->count() == 0) {
        throw std::invalid_argument("family " + gen_family + " requires " +
                                    flag);
      }
    };
    auto reject = [&](const CLI::Option* o, const char* flag) {
      if (o->count() > 0) {
        throw std::invalid_argument("family " + gen_family +
                                    " does not take " + flag);
      }
    };
    qembed::FamilyDescriptor d;
    d.family = *family;
    switch (*family) {
      case F::kHypercube:
      case F::kFolded:
      case F::kCliqueProduct:
        need(gen_n_opt, "--n");
        reject(gen_order_opt, "--order");
        reject(gen_parts_opt, "--parts");
        reject(gen_source_opt, "--source");
        d.params = {static_cast<std::uint64_t>(gen_n)};
        break;
      case F::kWheel:
      case F::kComplete:
      case F::kCycle:
        need(gen_order_opt, "--order");
        reject(gen_n_opt, "--n");
        reject(gen_parts_opt, "--parts");
        reject(gen_source_opt, "--source");
        d.params = {gen_order};
        break;
      case F::kMultipartite:
        need(gen_parts_opt, "--parts");
        reject(gen_n_opt, "--n");
        reject(gen_order_opt, "--order");
        reject(gen_source_opt, "--source");
        d.params = gen_parts;
        break;
      case F::kCustom:
        need(gen_source_opt, "--source");
        reject(gen_n_opt, "--n");
        reject(gen_order_opt, "--order");
        reject(gen_parts_opt, "--parts");
        d.source = gen_source;
        break;
    }
    const qembed::Graph g = (*family == F::kCustom)
                                ? qembed::io::load_graph_file(gen_source)
                                : qembed::make_graph(d);
    return emit_graph(g);
  };

  auto run_embed = [&]() {
    if (*em_multi) {
      return emit_embedding(qembed::multipartite_embedding(mp_n, mp_p).embedding);
    }
    if (*em_folded) {
      return emit_embedding(qembed::folded_identity_embedding(fo_n));
    }
    if (*em_wheel) {
      return emit_embedding(qembed::wheel_gray_embedding(wh_n));
    }
    if (*em_cp) {
      return emit_embedding(qembed::clique_product_embedding(cp_n));
    }
    // antimatching
    const qembed::Graph g = qembed::io::load_graph_file(am_graph);
    qembed::AntiMatching am;
    if (am_pairs_opt->count() > 0) {
      am = pairs_from_json(qembed::io::load_json_file(am_pairs));
    } else {
      auto found = qembed::has_perfect_antimatching(g);
      if (!found) {
        throw std::invalid_argument(
            "graph has no perfect anti-matching; this construction does "
            "not apply");
      }
      am = *found;
    }
    return emit_embedding(qembed::antimatching_embedding(g, am));
  };

  auto run_eval = [&]() {
    require_format(format, {"json", "text"}, "eval");
    const qembed::Embedding e = qembed::io::embedding_from_json(
        qembed::io::load_json_file(eval_embedding));
    const auto m = qembed::evaluate(e);
    if (format == "json") {
      std::cout << qembed::io::dump_json(
          qembed::io::metrics_to_json(m, e.guest(), full));
    } else {
      std::cout << metrics_text(m, e.guest(), full);
    }
    return kExitOk;
  };

  auto run_bounds = [&]() {
    require_format(format, {"json", "text"}, "bounds");
    const qembed::Graph g = qembed::io::load_graph_file(bounds_graph);
    std::uint64_t bw = 0;
    qembed::BwProvenance prov = qembed::BwProvenance::kUserSupplied;
    std::string note;
    if (bounds_bw == "auto") {
      if (const auto rec = qembed::recognize_bisection_width(g)) {
        bw = rec->value;
        prov = qembed::BwProvenance::kClosedForm;
        note = rec->form;
      } else {
        try {
          bw = qembed::oracle_bisection_width(g).value;
          prov = qembed::BwProvenance::kOracle;
        } catch (const qembed::guard_error&) {
          throw std::invalid_argument(
              "bisection width is not recognized in closed form and order " +
              num(g.order()) +
              " exceeds the exhaustive-search guard; pass --bw <value>");
        }
      }
    } else {
      const char* first = bounds_bw.data();
      const char* last = first + bounds_bw.size();
      const auto [ptr, ec] = std::from_chars(first, last, bw);
      if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument(
            "--bw expects 'auto' or a nonnegative integer");
      }
    }
    const auto report = qembed::make_bound_report(g, bounds_dim, bw, prov);
    if (format == "json") {
      std::cout << qembed::io::dump_json(
          qembed::io::bound_report_to_json(report, bounds_dim));
    } else {
      std::cout << bounds_text(report, bounds_dim, note);
    }
    return kExitOk;
  };

  auto run_oracle = [&]() {
    require_format(format, {"json", "text"}, "oracle");
    qembed::OracleCertificate cert;
    if (*or_dil) {
      cert = qembed::oracle_dilation(qembed::io::load_graph_file(od_graph),
                                     od_dim);
    } else if (*or_wl) {
      cert = qembed::oracle_wirelength(qembed::io::load_graph_file(ow_graph),
                                       ow_dim);
    } else {
      cert =
          qembed::oracle_bisection_width(qembed::io::load_graph_file(ob_graph));
    }
    if (format == "json") {
      std::cout << qembed::io::dump_json(qembed::io::certificate_to_json(cert));
    } else {
      std::cout << certificate_text(cert);
    }
    return kExitOk;
  };

  auto run_table1 = [&]() {
    require_format(format, {"json", "text"}, "table1");
    if (t1_p < 1 || t1_p > t1_n) {
      throw std::invalid_argument("--p must be in [1, n]");
    }
    const std::vector<TableRow> rows = {
        multipartite_row(t1_n, t1_p), folded_row(t1_n), wheel_row(t1_n),
        clique_product_row(t1_n)};
    bool ok = true;
    for (const auto& row : rows) {
      if (row.dilation.applicable && !row.dilation.ok) ok = false;
      if (row.wirelength.applicable && !row.wirelength.ok) ok = false;
    }
    if (format == "json") {
      json jrows = json::array();
      for (const auto& row : rows) {
        jrows.push_back(json{{"graph", row.graph},
                             {"dilation", cell_json(row.dilation)},
                             {"wirelength", cell_json(row.wirelength)}});
      }
      std::cout << qembed::io::dump_json(json{{"n", t1_n},
                                              {"p", t1_p},
                                              {"rows", std::move(jrows)},
                                              {"ok", ok}});
    } else {
      std::ostringstream os;
      os << "closed-form summary for host Q_" << t1_n << " (n = " << t1_n
         << ", p = " << t1_p << ")\n";
      for (const auto& row : rows) {
        os << row.graph << '\n';
        cell_text(os, "dilation", row.dilation);
        cell_text(os, "wirelength", row.wirelength);
      }
      os << (ok ? "all checks passed" : "MISMATCH detected") << '\n';
      std::cout << os.str();
    }
    return ok ? kExitOk : kExitCheckFailed;
  };

  auto run_verify = [&]() {
    require_format(format, {"json", "text"}, "verify");
    if (!qembed::is_verify_scope(v_scope)) {
      std::ostringstream os;
      os << "unknown scope '" << v_scope << "'; valid scopes:";
      for (const auto& s : qembed::verify_scopes()) os << ' ' << s;
      throw std::invalid_argument(os.str());
    }
    qembed::VerifyOptions opts;
    opts.scope = v_scope;
    opts.max_n = v_max_n;
    opts.seed = seed;
    const auto report = qembed::run_verification(opts);
    if (format == "json") {
      std::cout << qembed::io::dump_json(verify_report_json(opts, report));
    } else {
      std::cout << verify_report_text(report);
    }
    return report.ok() ? kExitOk : kExitCheckFailed;
  };

  try {
    if (*gen) return run_gen();
    if (*embed) return run_embed();
    if (*eval) return run_eval();
    if (*bounds) return run_bounds();
    if (*oracle) return run_oracle();
    if (*table1) return run_table1();
    if (*verify) return run_verify();
    std::cerr << "error: no subcommand given\n";
    return kExitUsage;
  } catch (const qembed::io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
