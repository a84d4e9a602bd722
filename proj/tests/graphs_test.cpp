#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rackbench/graphs.hpp"
#include "samples.hpp"

using namespace rackbench;

namespace {

long fact(int n) {
  long r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// all permutations of degree n as a plain sorted list
std::vector<Perm> all_perms(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
  std::vector<Perm> out;
  do {
    out.push_back(Perm(img));
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// reference automorphism group: filter the full symmetric group
template <typename G>
std::vector<Perm> brute_aut(const G& g) {
  std::vector<Perm> out;
  for (const Perm& p : all_perms(g.order())) {
    if (is_automorphism(g, p)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("graph construction and validation") {
  const Graph p3 = path_graph(3);
  CHECK(p3.order() == 3);
  CHECK(p3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(p3.has_edge(1, 0));
  CHECK_FALSE(p3.has_edge(0, 2));
  CHECK(p3.degree(1) == 2);
  CHECK(p3.degree(0) == 1);

  // edges are stored canonically regardless of input order
  const Graph g(3, {{2, 0}, {1, 0}});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});

  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
}

TEST_CASE("digraph construction and validation") {
  const Digraph d(3, {{0, 1}, {1, 0}, {2, 2}});
  CHECK(d.has_edge(0, 1));
  CHECK(d.has_edge(1, 0));
  CHECK(d.has_edge(2, 2));  // loops are allowed here
  CHECK_FALSE(d.has_edge(0, 2));
  CHECK(d.edge_count() == 3);
  CHECK(d.out_degree(2) == 1);
  CHECK(d.in_degree(0) == 1);

  CHECK_THROWS_AS(Digraph(2, {{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("families") {
  CHECK(complete_graph(0).order() == 0);
  CHECK(complete_graph(1).edges().empty());
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(edgeless_graph(5).edges().empty());
  CHECK(star_graph(4).edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(path_graph(2).edge_count() == 1);
  CHECK_THROWS_AS(path_graph(1), std::invalid_argument);
  CHECK(cycle_graph(3).edge_count() == 3);
  CHECK(cycle_graph(6).has_edge(5, 0));
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(star_graph(0), std::invalid_argument);

  CHECK(complete_digraph(3, false).edge_count() == 6);
  CHECK(complete_digraph(3, true).edge_count() == 9);

  const Graph co = complement(path_graph(4));
  CHECK(co.edges() == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}});
  CHECK(complement(complete_graph(5)).edges().empty());
  CHECK(complement(co) == path_graph(4));
}

TEST_CASE("underlying graph of a digraph") {
  const Digraph d(3, {{0, 1}, {1, 0}, {1, 2}, {2, 2}});
  const Graph u = underlying_graph(d);
  CHECK(u.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("is_automorphism") {
  const Graph c4 = cycle_graph(4);
  CHECK(is_automorphism(c4, Perm::from_cycles(4, {{0, 1, 2, 3}})));
  CHECK_FALSE(is_automorphism(c4, Perm::from_cycles(4, {{0, 1}})));
  CHECK_FALSE(is_automorphism(c4, Perm::identity(5)));  // degree mismatch

  // loops must map to loops
  const Digraph d(2, {{0, 1}, {1, 0}, {0, 0}});
  CHECK_FALSE(is_automorphism(d, Perm::from_cycles(2, {{0, 1}})));
}

TEST_CASE("automorphism groups of the standard families") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(automorphism_group(complete_graph(n)).order() == fact(n));
    CHECK(automorphism_group(edgeless_graph(n)).order() == fact(n));
  }
  for (int n = 3; n <= 7; ++n) {
    CHECK(automorphism_group(cycle_graph(n)).order() == 2 * n);
  }
  for (int n = 3; n <= 7; ++n) {
    CHECK(automorphism_group(path_graph(n)).order() == 2);
  }
  // K_{1,m} with m >= 2 fixes the center, so only the leaves move
  for (int leaves = 2; leaves <= 5; ++leaves) {
    CHECK(automorphism_group(star_graph(leaves)).order() == fact(leaves));
  }
  // directed cycle loses the reflections
  for (int n = 3; n <= 6; ++n) {
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
    CHECK(automorphism_group(Digraph(n, arcs)).order() == n);
  }
}

TEST_CASE("automorphism search against the symmetric-group filter") {
  SUBCASE("every graph on 5 vertices") {
    const std::vector<std::pair<int, int>> slots = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                                    {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    for (int mask = 0; mask < (1 << 10); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (int b = 0; b < 10; ++b) {
        if (mask & (1 << b)) edges.push_back(slots[static_cast<std::size_t>(b)]);
      }
      const Graph g(5, edges);
      CHECK(automorphism_group(g).elements() == brute_aut(g));
    }
  }
  SUBCASE("random digraphs with loops") {
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 1 + static_cast<int>(samples::rng()() % 5);
      std::vector<std::pair<int, int>> arcs;
      for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) {
          if (samples::rng()() % 3 == 0) arcs.push_back({v, w});
        }
      }
      const Digraph d(n, arcs);
      CHECK(automorphism_group(d).elements() == brute_aut(d));
    }
  }
}

TEST_CASE("complement preserves the automorphism group") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(samples::rng()() % 6);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
      for (int w = v + 1; w < n; ++w) {
        if (samples::rng()() % 2 == 0) edges.push_back({v, w});
      }
    }
    const Graph g(n, edges);
    CHECK(automorphism_group(g).elements() == automorphism_group(complement(g)).elements());
  }
}

TEST_CASE("automorphism cap") {
  CHECK_THROWS_AS(automorphism_group(edgeless_graph(6), 100), CapExceeded);
  try {
    automorphism_group(edgeless_graph(6), 100);
  } catch (const CapExceeded& e) {
    CHECK(e.cap() == 100);
  }
}

TEST_CASE("degenerate orders") {
  CHECK(automorphism_group(edgeless_graph(0)).order() == 1);
  CHECK(automorphism_group(edgeless_graph(1)).order() == 1);
  CHECK(automorphism_group(Digraph(0, {})).order() == 1);
}
