#include "rackbench/cayley.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rackbench {

namespace {

void check_subset(int order, const std::vector<int>& s) {
  int prev = -1;
  for (int x : s) {
    if (x < 0 || x >= order) throw std::invalid_argument("subset element out of range");
    if (x <= prev) throw std::invalid_argument("subset must be sorted and distinct");
    prev = x;
  }
}

}  // namespace

Digraph cayley_digraph(const FiniteMagma& q, const std::vector<int>& s) {
  check_subset(q.order(), s);
  std::set<std::pair<int, int>> edges;
  for (int v = 0; v < q.order(); ++v) {
    for (int x : s) {
      edges.emplace(v, q.right_mult(x, v));
    }
  }
  return Digraph(q.order(), {edges.begin(), edges.end()});
}

Graph cayley_graph(const FiniteMagma& q, const std::vector<int>& s) {
  return underlying_graph(cayley_digraph(q, s));
}

Digraph schreier_digraph(const std::vector<Perm>& group_elements,
                         const std::vector<Perm>& t) {
  if (group_elements.empty()) {
    throw std::invalid_argument("schreier_digraph: empty element list");
  }
  const int deg = group_elements[0].degree();
  for (const Perm& g : group_elements) {
    if (g.degree() != deg) throw std::invalid_argument("degree mismatch");
  }
  std::vector<Perm> sorted = group_elements;
  std::sort(sorted.begin(), sorted.end());
  for (const Perm& x : t) {
    if (!std::binary_search(sorted.begin(), sorted.end(), x)) {
      throw std::invalid_argument("schreier_digraph: t is not a subset of the elements");
    }
  }
  std::set<std::pair<int, int>> edges;
  for (int v = 0; v < deg; ++v) {
    for (const Perm& x : t) edges.emplace(v, x(v));
  }
  return Digraph(deg, {edges.begin(), edges.end()});
}

Graph schreier_graph(const std::vector<Perm>& group_elements,
                     const std::vector<Perm>& t) {
  return underlying_graph(schreier_digraph(group_elements, t));
}

namespace {

bool marking_against(const PermGroup& aut, const std::vector<Perm>& assignment,
                     int order) {
  if (static_cast<int>(assignment.size()) != order) return false;
  for (const Perm& p : assignment) {
    if (p.degree() != order || !aut.contains(p)) return false;
  }
  return true;
}

}  // namespace

bool is_marking(const Marking& m, std::size_t cap) {
  return std::visit(
      [&](const auto& g) {
        return marking_against(automorphism_group(g, cap), m.assignment, g.order());
      },
      m.graph);
}

bool is_q_marking(const Marking& m, std::size_t cap) {
  if (!is_marking(m, cap)) return false;
  for (std::size_t v = 0; v < m.assignment.size(); ++v) {
    if (m.assignment[v](static_cast<int>(v)) != static_cast<int>(v)) return false;
  }
  return true;
}

bool marking_condition_digraph(const RightQuasigroup& q, const std::vector<int>& s) {
  check_subset(q.order(), s);
  const int n = q.order();
  for (int h = 0; h < n; ++h) {
    for (int v = 0; v < n; ++v) {
      for (int x : s) {
        const int want = q.right_mult(h, q.right_mult(x, v));  // R_h(R_x(v))
        const int from = q.right_mult(h, v);                   // R_h(v)
        bool hit = false;
        for (int t : s) {
          if (q.right_mult(t, from) == want) {
            hit = true;
            break;
          }
        }
        if (!hit) return false;
      }
    }
  }
  return true;
}

bool marking_condition_graph(const RightQuasigroup& q, const std::vector<int>& s) {
  check_subset(q.order(), s);
  const int n = q.order();
  for (int h = 0; h < n; ++h) {
    for (int v = 0; v < n; ++v) {
      for (int x : s) {
        const int want = q.right_mult(h, q.right_mult(x, v));
        const int from = q.right_mult(h, v);
        // R_x(v) = v produces no undirected edge, so there is nothing to hit
        if (want == from) continue;
        bool hit = false;
        for (int t : s) {
          // forward edge image, or the same edge walked backwards
          if (q.right_mult(t, from) == want || q.right_mult(t, want) == from) {
            hit = true;
            break;
          }
        }
        if (!hit) return false;
      }
    }
  }
  return true;
}

bool conj_closure_condition(const RightQuasigroup& q, const std::vector<int>& s,
                            bool undirected) {
  check_subset(q.order(), s);
  const auto rows = q.row_perms();
  std::vector<Perm> targets;
  for (int x : s) {
    targets.push_back(rows[static_cast<std::size_t>(x)]);
    if (undirected) targets.push_back(inverse(rows[static_cast<std::size_t>(x)]));
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  for (const Perm& r : rows) {
    for (int x : s) {
      const Perm c = conjugate(r, rows[static_cast<std::size_t>(x)]);
      if (!std::binary_search(targets.begin(), targets.end(), c)) return false;
    }
  }
  return true;
}

}  // namespace rackbench
