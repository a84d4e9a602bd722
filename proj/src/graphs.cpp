#include "rackbench/graphs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace rackbench {

namespace {

std::vector<char> build_adj(int order, const std::vector<std::pair<int, int>>& edges,
                            bool symmetric) {
  std::vector<char> adj(
      static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0);
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u) * static_cast<std::size_t>(order) +
        static_cast<std::size_t>(v)] = 1;
    if (symmetric) {
      adj[static_cast<std::size_t>(v) * static_cast<std::size_t>(order) +
          static_cast<std::size_t>(u)] = 1;
    }
  }
  return adj;
}

void check_range(int order, int u, int v) {
  if (u < 0 || u >= order || v < 0 || v >= order) {
    throw std::invalid_argument("edge endpoint out of range");
  }
}

}  // namespace

Graph::Graph(int order, std::vector<std::pair<int, int>> edges) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative order");
  for (auto& [u, v] : edges) {
    check_range(order, u, v);
    if (u == v) throw std::invalid_argument("loop in undirected graph");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  edges_ = std::move(edges);
  adj_ = build_adj(order_, edges_, /*symmetric=*/true);
}

int Graph::degree(int v) const {
  int d = 0;
  for (int w = 0; w < order_; ++w) d += has_edge(v, w) ? 1 : 0;
  return d;
}

Digraph::Digraph(int order, std::vector<std::pair<int, int>> edges) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative order");
  for (auto [u, v] : edges) check_range(order, u, v);
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  edges_ = std::move(edges);
  adj_ = build_adj(order_, edges_, /*symmetric=*/false);
}

int Digraph::out_degree(int v) const {
  int d = 0;
  for (int w = 0; w < order_; ++w) d += has_edge(v, w) ? 1 : 0;
  return d;
}

int Digraph::in_degree(int v) const {
  int d = 0;
  for (int w = 0; w < order_; ++w) d += has_edge(w, v) ? 1 : 0;
  return d;
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph edgeless_graph(int n) { return Graph(n, {}); }

Graph star_graph(int n_leaves) {
  if (n_leaves < 1) throw std::invalid_argument("star_graph: need n_leaves >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= n_leaves; ++v) edges.emplace_back(0, v);
  return Graph(n_leaves + 1, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 2) throw std::invalid_argument("path_graph: need n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(g.order(), std::move(edges));
}

Digraph complete_digraph(int n, bool with_loops) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v || with_loops) edges.emplace_back(u, v);
  return Digraph(n, std::move(edges));
}

Graph underlying_graph(const Digraph& d) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : d.edges()) {
    if (u == v) continue;
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(d.order(), std::move(edges));
}

bool is_automorphism(const Graph& g, const Perm& p) {
  if (p.degree() != g.order()) return false;
  for (auto [u, v] : g.edges()) {
    if (!g.has_edge(p(u), p(v))) return false;
  }
  return true;
}

bool is_automorphism(const Digraph& g, const Perm& p) {
  if (p.degree() != g.order()) return false;
  for (auto [u, v] : g.edges()) {
    if (!g.has_edge(p(u), p(v))) return false;
  }
  return true;
}

namespace {

// Backtracking search over vertex images. Candidates are narrowed by iterated
// degree refinement (each round recolors a vertex by the multiset of colors it
// sees along out-, in-, and non-edges), then images are assigned in vertex
// order with pairwise adjacency consistency enforced against everything
// already assigned.
class AutSearch {
 public:
  AutSearch(int n, std::vector<char> adj, std::size_t cap)
      : n_(n), adj_(std::move(adj)), cap_(cap) {}

  std::vector<Perm> run() {
    if (n_ == 0) return {Perm::identity(0)};
    refine();
    image_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
    extend(0);
    return std::move(found_);
  }

 private:
  bool adj(int u, int v) const {
    return adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(v)] != 0;
  }

  void refine() {
    color_.assign(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) {
      int out = 0, in = 0;
      for (int w = 0; w < n_; ++w) {
        out += adj(v, w) ? 1 : 0;
        in += adj(w, v) ? 1 : 0;
      }
      color_[static_cast<std::size_t>(v)] = (out * (n_ + 1) + in) * 2 + (adj(v, v) ? 1 : 0);
    }
    for (;;) {
      std::map<std::vector<int>, int> ids;
      std::vector<int> next(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        std::vector<int> sig;
        sig.push_back(color_[static_cast<std::size_t>(v)]);
        std::vector<int> seen;
        for (int w = 0; w < n_; ++w) {
          if (w == v) continue;
          seen.push_back(color_[static_cast<std::size_t>(w)] * 4 +
                         (adj(v, w) ? 2 : 0) + (adj(w, v) ? 1 : 0));
        }
        std::sort(seen.begin(), seen.end());
        sig.insert(sig.end(), seen.begin(), seen.end());
        auto [it, _] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
        next[static_cast<std::size_t>(v)] = it->second;
      }
      bool changed = false;
      for (int v = 0; v < n_; ++v) {
        if (next[static_cast<std::size_t>(v)] != color_[static_cast<std::size_t>(v)]) {
          changed = true;
          break;
        }
      }
      color_ = std::move(next);
      if (!changed) break;
    }
  }

  void extend(int v) {
    if (v == n_) {
      found_.push_back(Perm(std::vector<int>(image_.begin(), image_.end())));
      if (found_.size() > cap_) {
        throw CapExceeded("automorphism group larger than cap of " +
                              std::to_string(cap_),
                          cap_);
      }
      return;
    }
    for (int w = 0; w < n_; ++w) {
      if (used_[static_cast<std::size_t>(w)]) continue;
      if (color_[static_cast<std::size_t>(w)] != color_[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u) {
        int pu = image_[static_cast<std::size_t>(u)];
        if (adj(u, v) != adj(pu, w) || adj(v, u) != adj(w, pu)) {
          ok = false;
          break;
        }
      }
      if (ok && adj(v, v) == adj(w, w)) {
        image_[static_cast<std::size_t>(v)] = w;
        used_[static_cast<std::size_t>(w)] = true;
        extend(v + 1);
        used_[static_cast<std::size_t>(w)] = false;
        image_[static_cast<std::size_t>(v)] = -1;
      }
    }
  }

  int n_;
  std::vector<char> adj_;
  std::size_t cap_;
  std::vector<int> color_;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<Perm> found_;
};

std::vector<char> adj_matrix(const Graph& g) {
  std::vector<char> adj(static_cast<std::size_t>(g.order()) *
                            static_cast<std::size_t>(g.order()),
                        0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u) * static_cast<std::size_t>(g.order()) +
        static_cast<std::size_t>(v)] = 1;
    adj[static_cast<std::size_t>(v) * static_cast<std::size_t>(g.order()) +
        static_cast<std::size_t>(u)] = 1;
  }
  return adj;
}

std::vector<char> adj_matrix(const Digraph& g) {
  std::vector<char> adj(static_cast<std::size_t>(g.order()) *
                            static_cast<std::size_t>(g.order()),
                        0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u) * static_cast<std::size_t>(g.order()) +
        static_cast<std::size_t>(v)] = 1;
  }
  return adj;
}

}  // namespace

PermGroup automorphism_group(const Graph& g, std::size_t cap) {
  AutSearch search(g.order(), adj_matrix(g), cap);
  return PermGroup::from_elements(g.order(), search.run());
}

PermGroup automorphism_group(const Digraph& g, std::size_t cap) {
  AutSearch search(g.order(), adj_matrix(g), cap);
  return PermGroup::from_elements(g.order(), search.run());
}

}  // namespace rackbench
