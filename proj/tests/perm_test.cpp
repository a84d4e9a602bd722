#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "rackbench/perm.hpp"
#include "samples.hpp"

using namespace rackbench;

TEST_CASE("images are validated") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 3, 1}), std::invalid_argument);
  CHECK(Perm(std::vector<int>{}).degree() == 0);
  CHECK(Perm::identity(0).is_identity());
}

TEST_CASE("compose applies the right operand first") {
  // apply (2 3) then (1 3), 1-based: chasing all three points gives the
  // 3-cycle 1 -> 3 -> 2 -> 1
  const Perm p = Perm::from_cycles(3, {{0, 2}});
  const Perm q = Perm::from_cycles(3, {{1, 2}});
  CHECK(compose(p, q) == Perm({2, 0, 1}));

  CHECK(compose(Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1}})) ==
        Perm::identity(3));
  CHECK_THROWS_AS(compose(Perm::identity(2), Perm::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(inverse(Perm::from_cycles(3, {{0, 1, 2}})) == Perm::from_cycles(3, {{0, 2, 1}}));
  for (int trial = 0; trial < 100; ++trial) {
    for (int degree = 1; degree <= 8; ++degree) {
      const Perm p = samples::random_perm(degree);
      CHECK(compose(inverse(p), p) == Perm::identity(degree));
      CHECK(compose(p, inverse(p)) == Perm::identity(degree));
    }
  }
}

TEST_CASE("composition is associative") {
  for (int trial = 0; trial < 200; ++trial) {
    const Perm p = samples::random_perm(6);
    const Perm q = samples::random_perm(6);
    const Perm r = samples::random_perm(6);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
  }
}

TEST_CASE("conjugate") {
  // 1-based: (1 3)(2 3)(1 3) = (1 2), and (1 2 3 4)(2 4)(1 2 3 4)^-1 = (1 3)
  CHECK(conjugate(Perm::from_cycles(3, {{0, 2}}), Perm::from_cycles(3, {{1, 2}})) ==
        Perm::from_cycles(3, {{0, 1}}));
  CHECK(conjugate(Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{1, 3}})) ==
        Perm::from_cycles(4, {{0, 2}}));

  // conjugation preserves being an involution
  const Perm h = Perm::from_cycles(6, {{0, 3}, {1, 4}});
  for (int trial = 0; trial < 50; ++trial) {
    const Perm g = samples::random_perm(6);
    const Perm c = conjugate(g, h);
    CHECK(compose(c, c) == Perm::identity(6));
    CHECK(c != Perm::identity(6));
  }
}

TEST_CASE("cycle_string") {
  CHECK(cycle_string(Perm::identity(4)) == "id");
  CHECK(cycle_string(Perm::from_cycles(4, {{0, 2}, {1, 3}})) == "(1 3)(2 4)");
  CHECK(cycle_string(Perm::from_cycles(4, {{0, 2}, {1, 3}}), false) == "(0 2)(1 3)");
}

TEST_CASE("closure") {
  CHECK(closure(3, {}) == std::vector<Perm>{Perm::identity(3)});

  // <(3 4 5), (1 2)> 1-based has order 6
  const auto g = closure(5, {Perm::from_cycles(5, {{2, 3, 4}}),
                             Perm::from_cycles(5, {{0, 1}})});
  CHECK(g.size() == 6);
  CHECK(std::is_sorted(g.begin(), g.end()));
  CHECK(std::binary_search(g.begin(), g.end(), Perm::identity(5)));

  // closed under products and inverses
  for (const Perm& a : g) {
    CHECK(std::binary_search(g.begin(), g.end(), inverse(a)));
    for (const Perm& b : g) {
      CHECK(std::binary_search(g.begin(), g.end(), compose(a, b)));
    }
  }

  CHECK_THROWS_AS(closure(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}),
                              Perm::from_cycles(5, {{0, 1}})},
                          10),
                  CapExceeded);
}

TEST_CASE("Lagrange on nested closures") {
  for (int trial = 0; trial < 30; ++trial) {
    const int degree = 4 + static_cast<int>(samples::rng()() % 3);
    std::vector<Perm> gens{samples::random_perm(degree)};
    const auto small = closure(degree, gens);
    gens.push_back(samples::random_perm(degree));
    const auto big = closure(degree, gens);
    CHECK(big.size() % small.size() == 0);
  }
}

TEST_CASE("PermGroup caches its element list") {
  PermGroup g(4, {Perm::from_cycles(4, {{0, 1, 2, 3}})});
  const auto& first = g.elements();
  CHECK(first.size() == 4);
  CHECK(&g.elements() == &first);
  CHECK(g.contains(Perm::from_cycles(4, {{0, 2}, {1, 3}})));
  CHECK_FALSE(g.contains(Perm::from_cycles(4, {{0, 1}})));

  const PermGroup copy = g;  // copies share the cached list
  CHECK(&copy.elements() == &first);

  CHECK(PermGroup::trivial(3).order() == 1);
  CHECK(PermGroup::trivial(0).order() == 1);
}

TEST_CASE("dihedral_group") {
  for (int n = 3; n <= 8; ++n) {
    CHECK(dihedral_group(n).order() == 2 * static_cast<std::size_t>(n));
  }
  CHECK_THROWS_AS(dihedral_group(2), std::invalid_argument);
}

TEST_CASE("reflections") {
  SUBCASE("odd n: one axis vertex each") {
    const auto rs = reflections(5);
    REQUIRE(rs.size() == 5);
    std::set<int> axes;
    for (const auto& r : rs) {
      REQUIRE(r.axis_vertices.size() == 1);
      axes.insert(r.axis_vertices[0]);
      CHECK(compose(r.perm, r.perm) == Perm::identity(5));
    }
    CHECK(axes == std::set<int>{0, 1, 2, 3, 4});
  }
  SUBCASE("even n: half with two axis vertices, half with none") {
    const auto rs = reflections(4);
    REQUIRE(rs.size() == 4);
    int with_two = 0, with_none = 0;
    for (const auto& r : rs) {
      if (r.axis_vertices.size() == 2) ++with_two;
      if (r.axis_vertices.empty()) ++with_none;
    }
    CHECK(with_two == 2);
    CHECK(with_none == 2);
  }
  SUBCASE("reflections live in the dihedral group") {
    const PermGroup d = dihedral_group(6);
    for (const auto& r : reflections(6)) CHECK(d.contains(r.perm));
  }
}

namespace {

// Brute-force oracle: close every subset of the reflections.
std::size_t subgroups_by_subsets(int n) {
  const auto rs = reflections(n);
  std::set<std::vector<Perm>> seen;
  seen.insert({Perm::identity(n)});
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Perm> gens;
    for (int k = 0; k < n; ++k) {
      if (mask & (1u << k)) gens.push_back(rs[static_cast<std::size_t>(k)].perm);
    }
    seen.insert(closure(n, gens));
  }
  return seen.size();
}

}  // namespace

TEST_CASE("reflection_subgroups") {
  CHECK(reflection_subgroups(4).size() == 8);

  for (int n = 3; n <= 8; ++n) {
    const auto subs = reflection_subgroups(n);
    CHECK(subs.size() == subgroups_by_subsets(n));

    std::set<std::vector<Perm>> distinct;
    const PermGroup d = dihedral_group(n);
    for (const auto& sub : subs) {
      distinct.insert(sub.elements());
      for (const Perm& p : sub.elements()) CHECK(d.contains(p));
    }
    CHECK(distinct.size() == subs.size());
  }

  // counts match sigma(n) + 1 further out
  std::size_t sigma14 = 0;
  for (std::size_t d = 1; d <= 14; ++d) {
    if (14 % d == 0) sigma14 += d;
  }
  CHECK(reflection_subgroups(14).size() == sigma14 + 1);
}
