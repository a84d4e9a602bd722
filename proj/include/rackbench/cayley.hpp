#pragma once

#include <variant>
#include <vector>

#include "rackbench/algebra.hpp"
#include "rackbench/graphs.hpp"

namespace rackbench {

/// The Cayley digraph of a magma with respect to a subset s of its elements:
/// vertex set {0..order-1}, one edge (v, R_x(v)) for every v and every x in s.
/// Duplicate edges collapse. s must be a sorted list of distinct elements;
/// s = all of V gives the full Cayley digraph.
Digraph cayley_digraph(const FiniteMagma& q, const std::vector<int>& s);

/// Underlying undirected graph of cayley_digraph (orientation and loops
/// dropped).
Graph cayley_graph(const FiniteMagma& q, const std::vector<int>& s);

/// The Schreier digraph of a set of permutations acting on {0..deg-1} with
/// respect to a subset t of them: edges (v, x(v)) for x in t. group_elements
/// fixes the acting degree and t must be drawn from it.
Digraph schreier_digraph(const std::vector<Perm>& group_elements,
                         const std::vector<Perm>& t);
Graph schreier_graph(const std::vector<Perm>& group_elements,
                     const std::vector<Perm>& t);

/// An assignment of one permutation per vertex of a graph or digraph.
struct Marking {
  std::variant<Graph, Digraph> graph;
  std::vector<Perm> assignment;

  friend bool operator==(const Marking&, const Marking&) = default;
};

/// Whether every assigned permutation is an automorphism of the underlying
/// (di)graph.
bool is_marking(const Marking& m, std::size_t cap = kDefaultGroupCap);
/// Marking whose vertex-v permutation additionally fixes v.
bool is_q_marking(const Marking& m, std::size_t cap = kDefaultGroupCap);

/// Whether for every h, v in V and x in s there is some t in s with
/// R_t(R_h(v)) = R_h(R_x(v)). Characterizes "every row is an automorphism of
/// the Cayley digraph on s".
bool marking_condition_digraph(const RightQuasigroup& q, const std::vector<int>& s);

/// The undirected counterpart: additionally accepts
/// R_h(v) = R_t(R_h(R_x(v))), i.e. travelling the edge backwards.
bool marking_condition_graph(const RightQuasigroup& q, const std::vector<int>& s);

/// Whether conjugating {R_x : x in s} by any row R_v lands back in
/// {R_x : x in s} (with undirected, also accepts landing on an inverse).
bool conj_closure_condition(const RightQuasigroup& q, const std::vector<int>& s,
                            bool undirected);

}  // namespace rackbench
