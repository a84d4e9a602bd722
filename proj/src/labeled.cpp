#include "rackbench/labeled.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace rackbench {

LabeledDigraph::LabeledDigraph(int order, std::vector<int> labels,
                               std::vector<std::array<int, 3>> edges)
    : order_(order), labels_(std::move(labels)), edges_(std::move(edges)) {
  if (order < 0) throw std::invalid_argument("negative order");
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw std::invalid_argument("duplicate label");
  }
  for (int l : labels_) {
    if (l < 0 || l >= order) throw std::invalid_argument("label out of range");
  }
  for (const auto& [v, l, w] : edges_) {
    if (v < 0 || v >= order || w < 0 || w >= order) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (!std::binary_search(labels_.begin(), labels_.end(), l)) {
      throw std::invalid_argument("edge label " + std::to_string(l) +
                                  " is not in the label set");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge triple");
  }
}

bool LabeledDigraph::is_label(int v) const {
  return std::binary_search(labels_.begin(), labels_.end(), v);
}

bool LabeledDigraph::has_edge(int v, int l, int w) const {
  return std::binary_search(edges_.begin(), edges_.end(),
                            std::array<int, 3>{v, l, w});
}

bool is_deterministic(const LabeledDigraph& g) {
  // edges are sorted by (v, l, w), so clashes are adjacent
  const auto& e = g.edges();
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i][0] == e[i - 1][0] && e[i][1] == e[i - 1][1]) return false;
  }
  return true;
}

bool is_codeterministic(const LabeledDigraph& g) {
  std::set<std::pair<int, int>> seen;
  for (const auto& [v, l, w] : g.edges()) {
    if (!seen.emplace(l, w).second) return false;
  }
  return true;
}

bool is_source_complete(const LabeledDigraph& g) {
  std::set<std::pair<int, int>> covered;
  for (const auto& [v, l, w] : g.edges()) covered.emplace(v, l);
  return covered.size() == static_cast<std::size_t>(g.order()) * g.labels().size();
}

bool is_target_complete(const LabeledDigraph& g) {
  std::set<std::pair<int, int>> covered;
  for (const auto& [v, l, w] : g.edges()) covered.emplace(l, w);
  return covered.size() == static_cast<std::size_t>(g.order()) * g.labels().size();
}

bool in_class_d(const LabeledDigraph& g) {
  return is_deterministic(g) && is_source_complete(g);
}

bool in_class_q(const LabeledDigraph& g) {
  return in_class_d(g) && is_codeterministic(g) && is_target_complete(g);
}

LabeledDigraph labeled_cayley(const FiniteMagma& q, const std::vector<int>& s) {
  std::vector<std::array<int, 3>> edges;
  for (int x : s) {
    if (x < 0 || x >= q.order()) {
      throw std::invalid_argument("subset element out of range");
    }
    for (int v = 0; v < q.order(); ++v) {
      edges.push_back({v, x, q.right_mult(x, v)});
    }
  }
  return LabeledDigraph(q.order(), s, std::move(edges));
}

FiniteMagma induced_magma(const LabeledDigraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto& row = rows[static_cast<std::size_t>(v)];
    row.resize(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) row[static_cast<std::size_t>(w)] = w;
  }
  // Sorted triples: all (v, l, *) edges are contiguous, keyed by source
  // first, so collect successors per (source, label) pair.
  std::vector<std::vector<int>> succ(
      static_cast<std::size_t>(n) * static_cast<std::size_t>(g.labels().size()));
  std::vector<int> label_pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < g.labels().size(); ++i) {
    label_pos[static_cast<std::size_t>(g.labels()[i])] = static_cast<int>(i);
  }
  for (const auto& [v, l, w] : g.edges()) {
    succ[static_cast<std::size_t>(v) * g.labels().size() +
         static_cast<std::size_t>(label_pos[static_cast<std::size_t>(l)])]
        .push_back(w);
  }
  for (int v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < g.labels().size(); ++i) {
      const int l = g.labels()[i];
      const auto& targets = succ[static_cast<std::size_t>(v) * g.labels().size() + i];
      if (targets.empty()) {
        throw std::invalid_argument(
            "not in class D: no edge out of vertex " + std::to_string(v) +
            " with label " + std::to_string(l));
      }
      if (targets.size() > 1) {
        throw std::invalid_argument(
            "not in class D: multiple edges out of vertex " + std::to_string(v) +
            " with label " + std::to_string(l));
      }
      rows[static_cast<std::size_t>(l)][static_cast<std::size_t>(v)] = targets[0];
    }
  }
  return FiniteMagma(std::move(rows));
}

namespace {

void require_class_q(const LabeledDigraph& g, const char* who) {
  if (!in_class_q(g)) {
    throw std::invalid_argument(std::string(who) + ": digraph is not in class Q");
  }
}

}  // namespace

bool first_rack_condition(const LabeledDigraph& g) {
  require_class_q(g, "first_rack_condition");
  const FiniteMagma m = induced_magma(g);
  const auto& e = g.edges();
  // group edges by source; sorted order makes runs contiguous
  std::size_t i = 0;
  while (i < e.size()) {
    std::size_t j = i;
    while (j < e.size() && e[j][0] == e[i][0]) ++j;
    for (std::size_t a = i; a < j; ++a) {
      for (std::size_t b = i; b < j; ++b) {
        const int l1 = e[a][1], w1 = e[a][2];
        const int l2 = e[b][1], w2 = e[b][2];
        if (m.right_mult(l1, w2) != m.right_mult(m.right_mult(l1, l2), w1)) {
          return false;
        }
      }
    }
    i = j;
  }
  return true;
}

bool second_rack_condition(const LabeledDigraph& g) {
  require_class_q(g, "second_rack_condition");
  const FiniteMagma m = induced_magma(g);
  for (const auto& [v, l, w] : g.edges()) {
    for (int x = 0; x < g.order(); ++x) {
      if (g.is_label(x)) continue;
      const int lx = m.right_mult(l, x);
      if (g.is_label(lx) && !g.has_edge(w, lx, w)) return false;
    }
  }
  return true;
}

bool is_label_idempotent(const LabeledDigraph& g) {
  for (int l : g.labels()) {
    if (!g.has_edge(l, l, l)) return false;
  }
  return true;
}

bool is_label_involutory(const LabeledDigraph& g) {
  for (const auto& [v, l, w] : g.edges()) {
    if (!g.has_edge(w, l, v)) return false;
  }
  return true;
}

std::vector<std::string> ClassReport::realizes() const {
  std::vector<std::string> out;
  if (right_cancellative_magma) out.push_back("right-cancellative magma");
  if (right_divisible_magma) out.push_back("right-divisible magma");
  if (right_quasigroup) out.push_back("right quasigroup");
  if (rack) out.push_back("rack");
  if (quandle) out.push_back("quandle");
  if (involutory_right_quasigroup) out.push_back("involutory right quasigroup");
  if (involutory_rack) out.push_back("involutory rack");
  if (kei) out.push_back("kei");
  return out;
}

ClassReport classify(const LabeledDigraph& g) {
  ClassReport r;
  r.deterministic = is_deterministic(g);
  r.codeterministic = is_codeterministic(g);
  r.source_complete = is_source_complete(g);
  r.target_complete = is_target_complete(g);
  r.in_d = r.deterministic && r.source_complete;
  r.in_q = r.in_d && r.codeterministic && r.target_complete;
  r.label_idempotent = is_label_idempotent(g);
  r.label_involutory = is_label_involutory(g);
  if (r.in_q) {
    r.first_rack_cond = first_rack_condition(g);
    r.second_rack_cond = second_rack_condition(g);
  } else {
    r.rack_cond_note = "rack conditions not evaluated: digraph is not in class Q";
  }

  r.right_cancellative_magma = r.in_d && r.codeterministic;
  r.right_divisible_magma = r.in_d && r.target_complete;
  r.right_quasigroup = r.in_q;
  r.rack = r.in_q && r.first_rack_cond && r.second_rack_cond;
  r.quandle = r.rack && r.label_idempotent;
  r.involutory_right_quasigroup = r.in_q && r.label_involutory;
  r.involutory_rack = r.rack && r.label_involutory;
  r.kei = r.involutory_rack && r.label_idempotent;
  return r;
}

}  // namespace rackbench
