#pragma once

#include <array>
#include <string>
#include <vector>

#include "rackbench/algebra.hpp"

namespace rackbench {

/// A labeled digraph on vertices {0..order-1} whose labels are themselves
/// vertices: edge triples (v, l, w) with l drawn from a label set L subset of
/// V. An edge (v, l, w) reads "v --l--> w". Triples are kept sorted and must
/// be distinct.
class LabeledDigraph {
 public:
  LabeledDigraph(int order, std::vector<int> labels,
                 std::vector<std::array<int, 3>> edges);

  int order() const { return order_; }
  const std::vector<int>& labels() const { return labels_; }
  bool is_label(int v) const;
  const std::vector<std::array<int, 3>>& edges() const { return edges_; }
  bool has_edge(int v, int l, int w) const;

  friend bool operator==(const LabeledDigraph&, const LabeledDigraph&) = default;

 private:
  int order_;
  std::vector<int> labels_;
  std::vector<std::array<int, 3>> edges_;
};

/// No two edges share source and label.
bool is_deterministic(const LabeledDigraph& g);
/// No two edges share label and target.
bool is_codeterministic(const LabeledDigraph& g);
/// Every (vertex, label) pair has an outgoing edge.
bool is_source_complete(const LabeledDigraph& g);
/// Every (label, vertex) pair has an incoming edge.
bool is_target_complete(const LabeledDigraph& g);

/// Deterministic and source-complete: exactly one l-edge out of every vertex.
bool in_class_d(const LabeledDigraph& g);
/// Class D plus codeterministic and target-complete.
bool in_class_q(const LabeledDigraph& g);

/// The labeled Cayley digraph: edges (v, x, R_x(v)) for x in s, labels = s.
LabeledDigraph labeled_cayley(const FiniteMagma& q, const std::vector<int>& s);

/// Reads the magma off a class-D labeled digraph: row l sends v to the unique
/// l-successor of v; rows of non-label vertices are the identity. Throws with
/// the first failing (vertex, label) pair if g is not in D.
FiniteMagma induced_magma(const LabeledDigraph& g);

/// For every pair of edges (v,l1,w1), (v,l2,w2) out of a common vertex:
/// R_{l1}(w2) = R_{R_{l1}(l2)}(w1), with R the induced magma. Requires class Q.
bool first_rack_condition(const LabeledDigraph& g);

/// For every edge (v,l,w) and every non-label x with R_l(x) a label: the loop
/// (w, R_l(x), w) is present. Requires class Q.
bool second_rack_condition(const LabeledDigraph& g);

/// Every label l carries the loop (l, l, l).
bool is_label_idempotent(const LabeledDigraph& g);
/// Edges come in loops and opposite pairs: (v,l,w) present implies (w,l,v).
bool is_label_involutory(const LabeledDigraph& g);

/// Everything classify() determines about a labeled digraph: the structural
/// flags plus which kinds of algebra the digraph is a labeled Cayley digraph
/// of.
struct ClassReport {
  bool deterministic = false;
  bool codeterministic = false;
  bool source_complete = false;
  bool target_complete = false;
  bool in_d = false;
  bool in_q = false;
  bool first_rack_cond = false;
  bool second_rack_cond = false;
  bool label_idempotent = false;
  bool label_involutory = false;
  /// Set when the rack conditions were not evaluated (g outside class Q).
  std::string rack_cond_note;

  bool right_cancellative_magma = false;
  bool right_divisible_magma = false;
  bool right_quasigroup = false;
  bool rack = false;
  bool quandle = false;
  bool involutory_right_quasigroup = false;
  bool involutory_rack = false;
  bool kei = false;

  /// The verdict names, strongest implications included, for display.
  std::vector<std::string> realizes() const;
};

ClassReport classify(const LabeledDigraph& g);

}  // namespace rackbench
