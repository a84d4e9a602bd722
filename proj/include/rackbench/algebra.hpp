#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rackbench/perm.hpp"

namespace rackbench {

/// A finite magma on {0..order-1} stored through its right-multiplication
/// rows: rows()[v][w] = R_v(w) = w * v. Row v is the map "multiply on the
/// right by v".
class FiniteMagma {
 public:
  explicit FiniteMagma(std::vector<std::vector<int>> right_mult);

  int order() const { return static_cast<int>(rows_.size()); }
  /// R_v(w).
  int right_mult(int v, int w) const {
    return rows_[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
  }
  /// v * w = R_w(v).
  int op(int v, int w) const { return right_mult(w, v); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  friend bool operator==(const FiniteMagma&, const FiniteMagma&) = default;

 protected:
  std::vector<std::vector<int>> rows_;
};

/// A magma whose right-multiplication rows are all bijections.
class RightQuasigroup : public FiniteMagma {
 public:
  explicit RightQuasigroup(std::vector<std::vector<int>> right_mult);

  /// R_v as a permutation.
  Perm row(int v) const { return Perm(rows_[static_cast<std::size_t>(v)]); }
  std::vector<Perm> row_perms() const;
};

/// All rows injective.
bool is_right_cancellative(const FiniteMagma& q);
/// All rows surjective.
bool is_right_divisible(const FiniteMagma& q);
bool is_right_quasigroup(const FiniteMagma& q);

/// Rack axiom: R_v R_w = R_{R_v(w)} R_v for all v, w.
bool is_rack(const RightQuasigroup& q);
/// Rack with R_v(v) = v for all v.
bool is_quandle(const RightQuasigroup& q);
/// All rows involutions or the identity.
bool is_involutory(const RightQuasigroup& q);
bool is_kei(const RightQuasigroup& q);

/// The right multiplication group <R_v : v>.
PermGroup rmlt(const RightQuasigroup& q, std::size_t cap = kDefaultGroupCap);

/// The conjugation quandle on the element list of g (sorted by image
/// sequence): R_x(y) = x y x^{-1} read through element indices.
RightQuasigroup conj_quandle(const PermGroup& g);

/// The rack on {0..n-1} with every row equal to sigma.
RightQuasigroup permutation_rack(int n, const Perm& sigma);

/// The right quasigroup of a group given by its multiplication table
/// (table[g][h] = g*h): rows are R_h(g) = g*h. Throws if the table is not a
/// group.
RightQuasigroup regular_right_quasigroup(const std::vector<std::vector<int>>& table);

/// Whether phi (a vertex map, not necessarily injective) satisfies
/// phi(R_v(w)) = T_{phi(v)}(phi(w)) for all v, w.
bool is_magma_hom(const std::vector<int>& phi, const FiniteMagma& src,
                  const FiniteMagma& dst);

/// Rack test through conjugation: R_{R_v(w)} = R_v R_w R_v^{-1} for all v, w.
/// Agrees with is_rack; separate code path by design.
bool rack_via_hom(const RightQuasigroup& q);

/// Whether {R_v} is closed under conjugation by its own members; with
/// allow_inverses also accepts landing on an inverse R_w^{-1}.
bool closed_under_conjugation(const RightQuasigroup& q, bool allow_inverses);

/// Streams all (n!)^n labeled right quasigroups of order n exactly once, rows
/// ordered lexicographically (row 0 most significant, each row running
/// through the n! permutations in lexicographic image order). Guarded to
/// n <= 4. An index sub-range [first, last) over the flat rank space allows
/// splitting the stream.
class RightQuasigroupEnumerator {
 public:
  explicit RightQuasigroupEnumerator(int n);
  RightQuasigroupEnumerator(int n, std::uint64_t first, std::uint64_t last);

  std::uint64_t total() const { return total_; }
  std::optional<RightQuasigroup> next();

 private:
  int n_;
  std::vector<std::vector<int>> perms_;  // all n! image rows, lexicographic
  std::uint64_t total_;
  std::uint64_t index_;
  std::uint64_t last_;
};

}  // namespace rackbench
