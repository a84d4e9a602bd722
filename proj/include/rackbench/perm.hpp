#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rackbench/errors.hpp"

namespace rackbench {

/// A permutation of {0, ..., n-1} in one-line image form: images()[w] is the
/// image of w. The degree-0 permutation (empty image list) is allowed; it is
/// the identity on the empty set.
///
/// Composition follows the "right operand acts first" convention throughout
/// the library: compose(p, q) applies q, then p.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);
  /// Builds a permutation from disjoint cycles of 0-based points.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int w) const { return images_[static_cast<std::size_t>(w)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  std::vector<int> fixed_points() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

/// compose(p, q)(w) = p(q(w)).
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
/// conjugate(g, h) = g h g^{-1}.
Perm conjugate(const Perm& g, const Perm& h);

/// Disjoint-cycle rendering, fixed points omitted; identity renders as "id".
/// Points print 1-based by default to match hand notation.
std::string cycle_string(const Perm& p, bool one_based = true);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// Elements of the subgroup of Sym({0..degree-1}) generated by `generators`,
/// found by breadth-first multiplication until closed. Result is sorted by
/// image sequence and always contains the identity. Throws CapExceeded once
/// more than `cap` elements appear.
std::vector<Perm> closure(int degree, const std::vector<Perm>& generators,
                          std::size_t cap = kDefaultGroupCap);

/// A finite permutation group given by generators. The full element list is
/// computed on first use and cached; concurrent callers observe one consistent
/// result (single-initialization via std::call_once).
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators,
            std::size_t cap = kDefaultGroupCap);

  static PermGroup trivial(int degree);
  /// Wraps an already-closed element list (e.g. an automorphism search
  /// result) without re-running closure. The list doubles as the generator
  /// list.
  static PermGroup from_elements(int degree, std::vector<Perm> elements);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  /// Sorted element list; throws CapExceeded if closure passes the cap.
  const std::vector<Perm>& elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(const Perm& p) const;

 private:
  struct Lazy {
    std::once_flag once;
    std::vector<Perm> elems;
  };

  int degree_ = 0;
  std::vector<Perm> generators_;
  std::size_t cap_ = kDefaultGroupCap;
  std::shared_ptr<Lazy> lazy_;
};

/// The dihedral group acting on the vertices of an n-cycle (n >= 3), order 2n,
/// generated by the rotation w -> w+1 and the reflection w -> -w (mod n).
PermGroup dihedral_group(int n);

/// A reflection in the dihedral group on n points, together with the vertices
/// it fixes (its axis vertices).
struct Reflection {
  Perm perm;
  std::vector<int> axis_vertices;
};

/// The n reflections w -> k - w (mod n), k = 0..n-1. For odd n each fixes one
/// vertex; for even n half fix two vertices and half fix none.
std::vector<Reflection> reflections(int n);

/// All distinct subgroups of dihedral_group(n) that are trivial or generated
/// by a set of reflections, deduplicated by element set and sorted by (order,
/// element list). There are sigma(n) + 1 of them.
std::vector<PermGroup> reflection_subgroups(int n);

}  // namespace rackbench
