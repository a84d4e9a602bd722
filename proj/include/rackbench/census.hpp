#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "rackbench/cayley.hpp"
#include "rackbench/graphs.hpp"

namespace rackbench {

struct CensusResult {
  std::uint64_t mu_rack = 0;
  std::uint64_t mu_qnd = 0;
  /// |Aut|^order, saturating at the 64-bit limit.
  std::uint64_t total_markings = 0;
  std::chrono::milliseconds elapsed{0};
  /// Branch events: completed assignments plus pruned branch roots. Each
  /// event owns a disjoint nonempty block of raw assignments, so nodes never
  /// exceeds total_markings.
  std::uint64_t nodes = 0;
};

struct CensusBudget {
  double wall_seconds = 600.0;
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  int jobs = 1;
};

/// Thrown when a census runs out of wall clock or node budget; carries the
/// partial counts accumulated up to the abort.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, CensusResult partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}

  const CensusResult& partial() const noexcept { return partial_; }

 private:
  CensusResult partial_;
};

/// Counts the assignments R: V -> Aut(g) realizing racks (mu_rack) and
/// quandles (mu_qnd). Depth-first over vertices in index order; a rack-axiom
/// instance is checked as soon as all three rows it touches are assigned,
/// pruning the subtree on failure. With budget.jobs > 1 the top-level
/// candidates are split across threads; counts are independent of the split.
CensusResult mu_census(const Graph& g, const CensusBudget& budget = {});
CensusResult mu_census(const Digraph& g, const CensusBudget& budget = {});

/// Quandle-only count with the per-vertex candidate lists pre-filtered to the
/// stabilizer {a in Aut(g) : a(v) = v}.
std::uint64_t quandle_census(const Graph& g, const CensusBudget& budget = {});
std::uint64_t quandle_census(const Digraph& g, const CensusBudget& budget = {});

/// The quandle-realizing markings themselves, sorted lexicographically by
/// assignment.
std::vector<Marking> quandle_markings(const Graph& g, const CensusBudget& budget = {});

/// Closed forms for the path P_n, 2 <= n <= 10: mu_rack is 2^k for n = 2k and
/// 2^{k+1} for n = 2k+1; mu_qnd is 1 for even n and 2 for odd n.
std::uint64_t mu_rack_path(int n);
std::uint64_t mu_qnd_path(int n);

/// Sum of divisors.
std::uint64_t divisor_sigma(std::uint64_t n);
/// mu_qnd(C_n) = sigma(n) + 1.
std::uint64_t mu_qnd_cycle(int n);

/// The quandle-realizing markings of C_n, built directly: one per support
/// set, where a support is the empty set or a residue class {v = a mod d} for
/// a divisor d of n, and each supported vertex carries the reflection through
/// its own axis. 1 + sigma(n) markings in total.
std::vector<Marking> reflection_markings(int n);

}  // namespace rackbench
