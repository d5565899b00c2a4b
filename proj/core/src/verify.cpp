// SPDX-License-Identifier: Apache-2.0

#include "qembed/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qembed/bounds.hpp"
#include "qembed/constructions.hpp"
#include "qembed/cube.hpp"
#include "qembed/errors.hpp"
#include "qembed/families.hpp"
#include "qembed/metrics.hpp"
#include "qembed/oracle.hpp"
#include "qembed/random.hpp"

namespace qembed {

namespace {

constexpr std::uint32_t kRandomSamples = 200;

template <typename T>
std::string num(T v) {
  return std::to_string(v);
}

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

/// Every embedding measured during a run, reduced to the three sums the
/// wirelength identity relates.
struct ProducedRecord {
  std::string id;
  std::uint64_t dilation_sum = 0;
  std::uint64_t congestion_sum = 0;
  std::uint64_t wirelength = 0;
};

class Runner {
 public:
  explicit Runner(const VerifyOptions& opts) : opts_(opts) {}

  VerifyReport run() {
    if (scoped("multipartite")) run_multipartite();
    if (scoped("folded")) run_folded();
    if (scoped("wheel")) run_wheel();
    if (scoped("clique-product")) run_clique_product();
    if (scoped("bisection")) run_bisection();
    if (scoped("theorem3")) run_theorem3();
    if (scoped("soundness")) run_soundness();
    if (scoped("congestion")) run_congestion();
    if (scoped("lindsey")) run_lindsey();
    if (scoped("dilation")) run_dilation();
    if (scoped("identity")) run_identity();
    return std::move(report_);
  }

 private:
  bool scoped(const char* s) const {
    return opts_.scope == "all" || opts_.scope == s;
  }

  void add(std::string id, CheckResult::Status status, std::string detail) {
    switch (status) {
      case CheckResult::Status::kPass: ++report_.passed; break;
      case CheckResult::Status::kFail: ++report_.failed; break;
      case CheckResult::Status::kSkip: ++report_.skipped; break;
    }
    report_.checks.push_back({std::move(id), status, std::move(detail)});
  }

  void check(const std::string& id, bool ok, std::string detail) {
    add(id, ok ? CheckResult::Status::kPass : CheckResult::Status::kFail,
        std::move(detail));
  }

  void skip(const std::string& id, std::string reason) {
    add(id, CheckResult::Status::kSkip, std::move(reason));
  }

  /// Runs one check body; a guard violation becomes a skip entry for
  /// `id`, any other exception a failure entry.
  template <typename F>
  void guarded(const std::string& id, F&& body) {
    try {
      body();
    } catch (const guard_error& e) {
      skip(id, std::string("guard: ") + e.what());
    } catch (const std::exception& e) {
      check(id, false, std::string("error: ") + e.what());
    }
  }

  /// Evaluates an embedding and records it for the identity scope.
  MetricsReport measure(const std::string& id, const Embedding& e) {
    MetricsReport m = evaluate(e);
    std::uint64_t dil_sum = 0;
    for (int d : m.per_edge_dilation)
      dil_sum += static_cast<std::uint64_t>(d);
    std::uint64_t cong_sum = 0;
    for (const HostEdgeLoad& l : m.per_host_edge_congestion)
      cong_sum += l.count;
    produced_.push_back({id, dil_sum, cong_sum, m.wirelength});
    return m;
  }

  // ---- check groups ------------------------------------------------

  void run_multipartite() {
    const int hi = std::min(8, opts_.max_n);
    for (int n = 2; n <= hi; ++n) {
      for (int p = 1; p < n; ++p) {
        const std::string key = " n=" + num(n) + " p=" + num(p);
        const std::string wl_id = "multipartite/wirelength" + key;
        guarded(wl_id, [&] {
          const MultipartiteEmbedding me = multipartite_embedding(n, p);
          const MetricsReport m = measure(wl_id, me.embedding);
          const std::uint64_t expect =
              static_cast<std::uint64_t>(n) * pow2(2 * n - p - 2) *
              (pow2(p) - 1);
          check(wl_id, m.wirelength == expect,
                "wirelength " + num(m.wirelength) + ", closed form " +
                    num(expect));
        });
        const std::string part_id = "multipartite/part-distance" + key;
        guarded(part_id, [&] {
          const MultipartiteEmbedding me = multipartite_embedding(n, p);
          const std::uint64_t expect =
              static_cast<std::uint64_t>(n) * pow2(2 * (n - 1 - p));
          bool ok = true;
          std::uint64_t first_bad = 0;
          for (std::size_t i = 0; ok && i < me.parts.size(); ++i) {
            std::uint64_t sum = 0;
            const auto& part = me.parts[i];
            for (std::size_t a = 0; a < part.size(); ++a)
              for (std::size_t b = a + 1; b < part.size(); ++b)
                sum += static_cast<std::uint64_t>(
                    hamming_distance(part[a], part[b]));
            if (sum != expect) {
              ok = false;
              first_bad = sum;
            }
          }
          check(part_id, ok,
                ok ? num(me.parts.size()) + " parts, each internal distance "
                         "sum " + num(expect)
                   : "a part has internal distance sum " + num(first_bad) +
                         ", closed form " + num(expect));
        });
      }
    }
  }

  void run_folded() {
    const int hi = std::min(12, opts_.max_n);
    for (int n = 2; n <= hi; ++n) {
      const std::string id = "folded/wirelength n=" + num(n);
      guarded(id, [&] {
        const MetricsReport m = measure(id, folded_identity_embedding(n));
        const std::uint64_t expect = static_cast<std::uint64_t>(n) * pow2(n);
        check(id, m.wirelength == expect,
              "wirelength " + num(m.wirelength) + ", closed form " +
                  num(expect));
      });
    }
  }

  void run_wheel() {
    const int hi = std::min(12, opts_.max_n);
    for (int n = 2; n <= hi; ++n) {
      const std::string wl_id = "wheel/wirelength n=" + num(n);
      guarded(wl_id, [&] {
        const Embedding e = wheel_gray_embedding(n);
        const MetricsReport m = measure(wl_id, e);
        const std::uint64_t expect =
            static_cast<std::uint64_t>(n + 2) * pow2(n - 1);
        check(wl_id, m.wirelength == expect,
              "wirelength " + num(m.wirelength) + ", closed form " +
                  num(expect));
      });
      const std::string rim_id = "wheel/rim-dilation n=" + num(n);
      guarded(rim_id, [&] {
        const Embedding e = wheel_gray_embedding(n);
        const std::vector<int> dil = per_edge_dilation(e);
        const auto& edges = e.guest().edges();
        std::uint64_t rim_edges = 0, at_two = 0, at_one = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          if (edges[i].first == 0) continue;  // spoke
          ++rim_edges;
          if (dil[i] == 2) ++at_two;
          if (dil[i] == 1) ++at_one;
        }
        check(rim_id, at_two == 1 && at_one == rim_edges - 1,
              num(rim_edges) + " rim edges, " + num(at_two) +
                  " of dilation 2, " + num(at_one) + " of dilation 1");
      });
    }
    for (int n = 2; n <= std::min(3, opts_.max_n); ++n) {
      const std::string id = "wheel/oracle-wirelength n=" + num(n);
      guarded(id, [&] {
        const std::uint64_t expect =
            static_cast<std::uint64_t>(n + 2) * pow2(n - 1);
        const Graph w = wheel(static_cast<std::uint32_t>(pow2(n)));
        const OracleCertificate cert = oracle_wirelength(w, n);
        const MetricsReport m =
            measure(id, Embedding(w, n, cert.witness_map));
        check(id, cert.value == expect && m.wirelength == cert.value,
              "oracle minimum " + num(cert.value) + ", closed form " +
                  num(expect) + ", witness re-evaluates to " +
                  num(m.wirelength));
      });
    }
  }

  void run_clique_product() {
    for (int n = 2; n <= std::min(8, opts_.max_n); n += 2) {
      const std::string id = "clique-product/wirelength n=" + num(n);
      guarded(id, [&] {
        const MetricsReport m = measure(id, clique_product_embedding(n));
        const std::uint64_t expect =
            static_cast<std::uint64_t>(n) * pow2(3 * n / 2 - 2);
        check(id, m.wirelength == expect,
              "wirelength " + num(m.wirelength) + ", closed form " +
                  num(expect));
      });
    }
    if (opts_.max_n >= 2) {
      const std::string id = "clique-product/oracle-wirelength n=2";
      guarded(id, [&] {
        const Embedding constructed = clique_product_embedding(2);
        const std::uint64_t built = wirelength(constructed);
        const OracleCertificate cert =
            oracle_wirelength(constructed.guest(), 2);
        const MetricsReport m =
            measure(id, Embedding(constructed.guest(), 2, cert.witness_map));
        check(id, cert.value == built && m.wirelength == cert.value,
              "oracle minimum " + num(cert.value) + ", construction " +
                  num(built));
      });
    }
  }

  void run_bisection() {
    struct MultiCase {
      std::uint32_t t, r;
    };
    for (const MultiCase c : {MultiCase{2, 1}, MultiCase{2, 2}, MultiCase{3, 1},
                              MultiCase{4, 1}, MultiCase{4, 2}}) {
      const std::string id =
          "bisection/multipartite t=" + num(c.t) + " r=" + num(c.r);
      const std::uint64_t order = std::uint64_t{2} * c.r * c.t;
      if (order > pow2(opts_.max_n)) {
        skip(id, "order " + num(order) + " exceeds 2^max_n");
        continue;
      }
      guarded(id, [&] {
        const Graph g = complete_multipartite(
            std::vector<std::uint32_t>(c.t, 2 * c.r));
        const OracleCertificate cert = oracle_bisection_width(g);
        const std::uint64_t expect = bw_balanced_multipartite(c.t, c.r);
        check(id, cert.value == expect,
              "oracle " + num(cert.value) + ", closed form " + num(expect));
      });
    }

    struct ProductCase {
      std::uint64_t p1, p2;
    };
    for (const ProductCase c : {ProductCase{1, 2}, ProductCase{2, 4}}) {
      const std::string id =
          "bisection/clique-product p=(" + num(c.p1) + "," + num(c.p2) + ")";
      const std::uint64_t order = 2 * c.p1 * c.p2;
      if (order > pow2(opts_.max_n)) {
        skip(id, "order " + num(order) + " exceeds 2^max_n");
        continue;
      }
      guarded(id, [&] {
        const Graph g = cartesian_product(
            complete_graph(static_cast<std::uint32_t>(2 * c.p1)),
            complete_graph(static_cast<std::uint32_t>(c.p2)));
        const OracleCertificate cert = oracle_bisection_width(g);
        const std::uint64_t expect = bw_clique_product({c.p1, c.p2});
        check(id, cert.value == expect,
              "oracle " + num(cert.value) + ", closed form " + num(expect));
      });
    }

    for (int n = 1; n <= std::min(4, opts_.max_n); ++n) {
      const std::string id = "bisection/hypercube n=" + num(n);
      guarded(id, [&] {
        const OracleCertificate cert = oracle_bisection_width(hypercube(n));
        check(id, cert.value == bw_hypercube(n),
              "oracle " + num(cert.value) + ", cited closed form " +
                  num(bw_hypercube(n)));
      });
    }
    for (int n = 2; n <= std::min(4, opts_.max_n); ++n) {
      const std::string id = "bisection/folded-hypercube n=" + num(n);
      guarded(id, [&] {
        const OracleCertificate cert =
            oracle_bisection_width(folded_hypercube(n));
        check(id, cert.value == bw_folded_hypercube(n),
              "oracle " + num(cert.value) + ", cited closed form " +
                  num(bw_folded_hypercube(n)));
      });
    }
  }

  /// The order-2^nn corpus shared by the theorem3 and soundness sweeps:
  /// kRandomSamples seeded G(2^nn, 1/2) graphs, then the structured set.
  std::vector<Graph> corpus(int nn) const {
    const auto order = static_cast<std::uint32_t>(pow2(nn));
    std::vector<Graph> graphs;
    SplitMix64 seeder(opts_.seed);
    for (std::uint32_t i = 0; i < kRandomSamples; ++i)
      graphs.push_back(random_graph(order, seeder.next()));
    if (nn >= 3) {
      graphs.push_back(complete_graph(8));
      graphs.push_back(cycle(8));
      graphs.push_back(hypercube(3));
      graphs.push_back(wheel(8));
      graphs.push_back(complete_multipartite({4, 4}));
      graphs.push_back(complete_multipartite({2, 2, 2, 2}));
    } else if (nn == 2) {
      graphs.push_back(complete_graph(4));
      graphs.push_back(cycle(4));
      graphs.push_back(hypercube(2));
      graphs.push_back(wheel(4));
      graphs.push_back(complete_multipartite({2, 2}));
    } else {
      graphs.push_back(complete_graph(2));
      graphs.push_back(hypercube(1));
    }
    return graphs;
  }

  void run_theorem3() {
    const int nn = std::min(3, opts_.max_n);
    const std::string id =
        "theorem3/equivalence order=" + num(pow2(nn));
    guarded(id, [&] {
      std::uint64_t agreements = 0;
      std::vector<std::string> offenders;
      const std::vector<Graph> graphs = corpus(nn);
      for (const Graph& g : graphs) {
        const OracleCertificate cert = oracle_dilation(g, nn);
        const auto am = has_perfect_antimatching(g);
        const bool am_valid = !am || is_perfect_antimatching(g, *am);
        const bool agree =
            ((cert.value <= static_cast<std::uint64_t>(nn - 1)) ==
             am.has_value()) &&
            am_valid;
        measure(id + " " + g.name(), Embedding(g, nn, cert.witness_map));
        if (agree)
          ++agreements;
        else if (offenders.size() < 3)
          offenders.push_back(g.name());
      }
      std::string detail = num(agreements) + "/" + num(graphs.size()) +
                           " graphs: oracle dilation <= " + num(nn - 1) +
                           " iff a perfect anti-matching exists";
      for (const std::string& o : offenders) detail += "; disagrees: " + o;
      check(id, agreements == graphs.size(), detail);
    });
  }

  void run_soundness() {
    const int nn = std::min(3, opts_.max_n);
    const std::string key = " order=" + num(pow2(nn));
    const std::string dil_id = "soundness/dilation-lb" + key;
    const std::string wl_id = "soundness/wirelength-lb" + key;
    guarded(dil_id, [&] {
      std::uint64_t holds_dil = 0, holds_wl = 0;
      std::vector<std::string> bad_dil, bad_wl;
      const std::vector<Graph> graphs = corpus(nn);
      for (const Graph& g : graphs) {
        const OracleCertificate dil = oracle_dilation(g, nn);
        const OracleCertificate wl = oracle_wirelength(g, nn);
        const OracleCertificate bw = oracle_bisection_width(g);
        measure(wl_id + " " + g.name(), Embedding(g, nn, wl.witness_map));
        const int lb = dilation_lower_bound(nn, g.max_degree());
        if (static_cast<std::uint64_t>(lb) <= dil.value)
          ++holds_dil;
        else if (bad_dil.size() < 3)
          bad_dil.push_back(g.name());
        if (wl_lower_bound(nn, bw.value) <= wl.value)
          ++holds_wl;
        else if (bad_wl.size() < 3)
          bad_wl.push_back(g.name());
      }
      std::string dil_detail =
          num(holds_dil) + "/" + num(graphs.size()) +
          " graphs: binomial degree bound <= oracle dilation";
      for (const std::string& o : bad_dil) dil_detail += "; violated: " + o;
      check(dil_id, holds_dil == graphs.size(), dil_detail);
      std::string wl_detail =
          num(holds_wl) + "/" + num(graphs.size()) +
          " graphs: host_dim * oracle BW <= oracle wirelength";
      for (const std::string& o : bad_wl) wl_detail += "; violated: " + o;
      check(wl_id, holds_wl == graphs.size(), wl_detail);
    });
  }

  void run_congestion() {
    for (int n = 2; n <= std::min(6, opts_.max_n); ++n) {
      const std::string id = "congestion/folded n=" + num(n);
      guarded(id, [&] {
        const MetricsReport m = measure(id, folded_identity_embedding(n));
        const Ratio bound =
            ec_lower_bound(bw_folded_hypercube(n), bw_hypercube(n));
        check(id, bound.ceil() == 2 && m.congestion >= bound.ceil(),
              "congestion " + num(m.congestion) + " >= bound " +
                  num(bound.ceil()) + " (" + num(bound.num) + "/" +
                  num(bound.den) + "), bound exactly 2");
      });
    }
    if (opts_.max_n >= 4) {
      const std::string id = "congestion/multipartite t=4 r=2";
      guarded(id, [&] {
        const MultipartiteEmbedding me = multipartite_embedding(4, 2);
        const MetricsReport m = measure(id, me.embedding);
        const Ratio bound =
            ec_lower_bound(bw_balanced_multipartite(4, 2), bw_hypercube(4));
        check(id, m.congestion >= bound.ceil(),
              "congestion " + num(m.congestion) + " >= bound " +
                  num(bound.ceil()));
      });
    } else {
      skip("congestion/multipartite t=4 r=2", "requires max_n >= 4");
    }
  }

  void run_lindsey() {
    const std::vector<std::vector<std::uint64_t>> cases = {
        {2, 2}, {2, 4}, {3, 3}, {2, 2, 3}};
    for (const auto& p : cases) {
      std::string ps = "(";
      for (std::size_t i = 0; i < p.size(); ++i)
        ps += (i ? "," : "") + num(p[i]);
      ps += ")";
      const std::string id = "lindsey/p=" + ps;
      std::uint64_t product = 1;
      for (std::uint64_t pi : p) product *= pi;
      if (product > pow2(opts_.max_n)) {
        skip(id, "product order " + num(product) + " exceeds 2^max_n");
        continue;
      }
      guarded(id, [&] {
        bool ok = true;
        std::uint64_t bad_m = 0, got = 0, want = 0;
        for (std::uint64_t m = 0; ok && m <= product; ++m) {
          const std::uint64_t oracle = oracle_lindsey_max(p, m);
          const std::uint64_t lex =
              (m >= 1) ? lindsey_lex_edge_count(p, m) : 0;
          if (oracle != lex) {
            ok = false;
            bad_m = m;
            got = lex;
            want = oracle;
          }
        }
        check(id, ok,
              ok ? "lexicographic count matches exhaustive maximum for all "
                   "m in [0, " + num(product) + "]"
                 : "m=" + num(bad_m) + ": lexicographic " + num(got) +
                       ", exhaustive maximum " + num(want));
      });
    }
  }

  void run_dilation() {
    if (opts_.max_n < 4) {
      skip("dilation/antimatching t=4 r=2", "requires max_n >= 4");
      skip("dilation/threshold complete-16", "requires max_n >= 4");
      skip("dilation/threshold wheel-16", "requires max_n >= 4");
      skip("dilation/threshold multipartite-4x4", "requires max_n >= 4");
      return;
    }
    const std::string am_id = "dilation/antimatching t=4 r=2";
    guarded(am_id, [&] {
      const Graph g = complete_multipartite({4, 4, 4, 4});
      const auto am = has_perfect_antimatching(g);
      if (!am) {
        check(am_id, false, "no perfect anti-matching found");
        return;
      }
      const Embedding e = antimatching_embedding(g, *am);
      const MetricsReport m = measure(am_id, e);
      check(am_id, m.dilation == 3,
            "measured dilation " + num(m.dilation) + ", expected exactly 3");
    });
    const std::string k16_id = "dilation/threshold complete-16";
    guarded(k16_id, [&] {
      const int v = dilation_upper_from_antimatching(complete_graph(16));
      check(k16_id, v == 4, "threshold " + num(v) + ", expected 4");
    });
    const std::string w16_id = "dilation/threshold wheel-16";
    guarded(w16_id, [&] {
      const int v = dilation_upper_from_antimatching(wheel(16));
      check(w16_id, v == 4, "threshold " + num(v) + ", expected 4");
    });
    const std::string m16_id = "dilation/threshold multipartite-4x4";
    guarded(m16_id, [&] {
      const int v =
          dilation_upper_from_antimatching(complete_multipartite({4, 4, 4, 4}));
      check(m16_id, v == 3, "threshold " + num(v) + ", expected 3");
    });
  }

  void run_identity() {
    // A scope-restricted run that produced nothing measures the standard
    // constructions itself, so `verify --scope identity` stands alone.
    if (produced_.empty()) {
      guarded("identity/(corpus)", [&] {
        for (int n = 2; n <= std::min(8, opts_.max_n); ++n)
          for (int p = 1; p < n; ++p)
            measure("identity/multipartite n=" + num(n) + " p=" + num(p),
                    multipartite_embedding(n, p).embedding);
        for (int n = 2; n <= std::min(12, opts_.max_n); ++n) {
          measure("identity/folded n=" + num(n), folded_identity_embedding(n));
          measure("identity/wheel n=" + num(n), wheel_gray_embedding(n));
        }
        for (int n = 2; n <= std::min(8, opts_.max_n); n += 2)
          measure("identity/clique-product n=" + num(n),
                  clique_product_embedding(n));
        if (opts_.max_n >= 4) {
          const Graph g = complete_multipartite({4, 4, 4, 4});
          if (const auto am = has_perfect_antimatching(g))
            measure("identity/antimatching t=4 r=2",
                    antimatching_embedding(g, *am));
        }
      });
    }
    const std::string id = "identity/wirelength-sum";
    bool ok = true;
    std::vector<std::string> offenders;
    for (const ProducedRecord& r : produced_) {
      if (r.dilation_sum != r.wirelength ||
          r.congestion_sum != r.wirelength) {
        ok = false;
        if (offenders.size() < 3) offenders.push_back(r.id);
      }
    }
    std::string detail =
        num(produced_.size()) +
        " embeddings: sum of edge dilations == sum of host-edge loads == "
        "wirelength";
    for (const std::string& o : offenders) detail += "; violated by: " + o;
    check(id, ok, detail);
  }

  VerifyOptions opts_;
  VerifyReport report_;
  std::vector<ProducedRecord> produced_;
};

}  // namespace

std::string to_string(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::kPass: return "pass";
    case CheckResult::Status::kFail: return "fail";
    case CheckResult::Status::kSkip: return "skip";
  }
  return "unknown";
}

const std::vector<std::string>& verify_scopes() {
  static const std::vector<std::string> kScopes = {
      "all",      "multipartite", "folded",     "wheel",
      "clique-product", "bisection",    "theorem3",   "soundness",
      "congestion",     "lindsey",      "dilation",   "identity"};
  return kScopes;
}

bool is_verify_scope(const std::string& scope) {
  const auto& scopes = verify_scopes();
  return std::find(scopes.begin(), scopes.end(), scope) != scopes.end();
}

VerifyReport run_verification(const VerifyOptions& opts) {
  if (!is_verify_scope(opts.scope))
    throw std::invalid_argument("unknown verify scope: " + opts.scope);
  if (opts.max_n < 1 || opts.max_n > kMaxCubeDim)
    throw std::invalid_argument("max_n outside [1, 20]");
  return Runner(opts).run();
}

}  // namespace qembed
