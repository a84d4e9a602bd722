#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rackbench/perm.hpp"

namespace rackbench {

/// Finite simple undirected graph on vertices {0..order-1}. No loops, no
/// multi-edges. Edges are kept canonically as sorted (u, v) pairs with u < v.
class Graph {
 public:
  Graph(int order, std::vector<std::pair<int, int>> edges);

  int order() const { return order_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(int u, int v) const {
    return adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(order_) +
                static_cast<std::size_t>(v)] != 0;
  }
  int degree(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<char> adj_;
};

/// Finite digraph on {0..order-1}: ordered edge pairs, loops allowed, no
/// multi-edges. Edges kept sorted.
class Digraph {
 public:
  Digraph(int order, std::vector<std::pair<int, int>> edges);

  int order() const { return order_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(int u, int v) const {
    return adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(order_) +
                static_cast<std::size_t>(v)] != 0;
  }
  int out_degree(int v) const;
  int in_degree(int v) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<char> adj_;
};

Graph complete_graph(int n);
Graph edgeless_graph(int n);
/// K_{1, n_leaves}: vertex 0 is the center, vertices 1..n_leaves the leaves.
Graph star_graph(int n_leaves);
/// P_n on n >= 2 vertices: edges {i, i+1}.
Graph path_graph(int n);
/// C_n on n >= 3 vertices: edges {i, i+1 mod n}.
Graph cycle_graph(int n);
Graph complement(const Graph& g);

/// Complete digraph: every ordered pair (u, v) with u != v, plus all loops
/// when with_loops is set.
Digraph complete_digraph(int n, bool with_loops);

/// Forgets orientation and drops loops.
Graph underlying_graph(const Digraph& d);

/// Whether p maps the edge set onto itself.
bool is_automorphism(const Graph& g, const Perm& p);
bool is_automorphism(const Digraph& g, const Perm& p);

/// The full automorphism group, found by backtracking over vertex images with
/// candidates narrowed by iterated degree refinement. The returned group
/// carries its explicit element list.
PermGroup automorphism_group(const Graph& g, std::size_t cap = kDefaultGroupCap);
PermGroup automorphism_group(const Digraph& g, std::size_t cap = kDefaultGroupCap);

}  // namespace rackbench
