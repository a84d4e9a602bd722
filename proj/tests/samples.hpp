#pragma once

// Shared builders for the worked structures the suites keep coming back to,
// plus a seeded RNG so failures replay.

#include <random>
#include <vector>

#include "rackbench/algebra.hpp"

namespace samples {

using rackbench::Perm;
using rackbench::RightQuasigroup;

// Order 3, rows id, (1 2), (0 2): a right quasigroup that is not a rack.
inline RightQuasigroup nonrack3() {
  return RightQuasigroup({{0, 1, 2}, {0, 2, 1}, {2, 1, 0}});
}

// The dihedral quandle on 3 elements: row v is the transposition fixing v.
inline RightQuasigroup dihedral_quandle3() {
  return RightQuasigroup({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
}

// Order 3, rows (0 1), (0 2), (1 2): not a rack, but its full Cayley digraph
// matches dihedral_quandle3's.
inline RightQuasigroup nonrack3_swap() {
  return RightQuasigroup({{1, 0, 2}, {2, 1, 0}, {0, 2, 1}});
}

// Every row the 3-cycle (0 1 2): a rack that is neither involutory nor a
// quandle.
inline RightQuasigroup cyclic_rack3() {
  return RightQuasigroup({{1, 2, 0}, {1, 2, 0}, {1, 2, 0}});
}

// Order 4, rows id, (0 1 2 3), (0 2)(1 3), (1 3): not a rack; every row is an
// automorphism of the full Cayley digraph and RMlt is dihedral of order 8.
inline RightQuasigroup nonrack4_d4() {
  return RightQuasigroup({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {0, 3, 2, 1}});
}

// Order 5 quandle whose right multiplication group is S_3 x Z/2 (order 12).
inline RightQuasigroup quandle5() {
  return RightQuasigroup({{0, 1, 3, 4, 2},
                          {0, 1, 4, 2, 3},
                          {1, 0, 2, 4, 3},
                          {1, 0, 4, 3, 2},
                          {1, 0, 3, 2, 4}});
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20240817u);
  return gen;
}

inline Perm random_perm(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int w = 0; w < degree; ++w) img[static_cast<std::size_t>(w)] = w;
  std::shuffle(img.begin(), img.end(), rng());
  return Perm(std::move(img));
}

inline RightQuasigroup random_right_quasigroup(int order) {
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(order));
  for (int v = 0; v < order; ++v) rows.push_back(random_perm(order).images());
  return RightQuasigroup(std::move(rows));
}

}  // namespace samples
