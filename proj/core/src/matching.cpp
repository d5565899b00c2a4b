// SPDX-License-Identifier: Apache-2.0

#include "qembed/matching.hpp"

#include <algorithm>
#include <queue>

namespace qembed {

namespace {

// Alternating-tree search with blossom contraction, following the usual
// array-based formulation: base[] tracks the contracted blossom of each
// vertex, parent[] the tree edges on even vertices' ancestors.
class BlossomSearch {
 public:
  explicit BlossomSearch(const Graph& g)
      : g_(g),
        n_(g.order()),
        mate_(n_, kUnmatched),
        parent_(n_),
        base_(n_) {}

  std::vector<Vertex> run() {
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] == kUnmatched) augment_from(root);
    }
    return mate_;
  }

 private:
  const Graph& g_;
  Vertex n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;

  Vertex lowest_common_base(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == kUnmatched) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(std::vector<bool>& in_blossom, Vertex v, Vertex stem,
                 Vertex child) {
    while (base_[v] != stem) {
      in_blossom[base_[v]] = true;
      in_blossom[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  void contract(std::vector<bool>& used, std::queue<Vertex>& bfs, Vertex v,
                Vertex u) {
    const Vertex stem = lowest_common_base(v, u);
    std::vector<bool> in_blossom(n_, false);
    mark_path(in_blossom, v, stem, u);
    mark_path(in_blossom, u, stem, v);
    for (Vertex i = 0; i < n_; ++i) {
      if (in_blossom[base_[i]]) {
        base_[i] = stem;
        if (!used[i]) {
          used[i] = true;
          bfs.push(i);
        }
      }
    }
  }

  void augment_from(Vertex root) {
    std::vector<bool> used(n_, false);
    std::fill(parent_.begin(), parent_.end(), kUnmatched);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;

    std::queue<Vertex> bfs;
    bfs.push(root);
    used[root] = true;

    while (!bfs.empty()) {
      const Vertex v = bfs.front();
      bfs.pop();
      for (Vertex u : g_.neighbors(v)) {
        if (base_[v] == base_[u] || mate_[v] == u) continue;
        if (u == root || (mate_[u] != kUnmatched &&
                          parent_[mate_[u]] != kUnmatched)) {
          contract(used, bfs, v, u);
        } else if (parent_[u] == kUnmatched) {
          parent_[u] = v;
          if (mate_[u] == kUnmatched) {
            flip_path(u);
            return;
          }
          used[mate_[u]] = true;
          bfs.push(mate_[u]);
        }
      }
    }
  }

  void flip_path(Vertex v) {
    while (v != kUnmatched) {
      const Vertex pv = parent_[v];
      const Vertex next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }
};

}  // namespace

std::vector<Vertex> maximum_matching(const Graph& g) {
  if (g.order() == 0) return {};
  return BlossomSearch(g).run();
}

std::size_t matching_size(const std::vector<Vertex>& mate) {
  std::size_t count = 0;
  for (Vertex v = 0; v < mate.size(); ++v) {
    if (mate[v] != kUnmatched && mate[v] > v) ++count;
  }
  return count;
}

}  // namespace qembed
