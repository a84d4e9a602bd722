#include "rackbench/census.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace rackbench {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int k = 0; k < exp; ++k) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

// Shared per-census tables: group elements as indices, with composition and
// image lookups flattened to O(1).
struct Tables {
  int n = 0;
  int m = 0;
  std::vector<std::uint16_t> img;    // img[e*n + v] = elems[e](v)
  std::vector<std::uint16_t> comp;   // comp[e*m + f] = index of elems[e] o elems[f]
  std::vector<std::vector<std::uint16_t>> cand;  // candidate rows per vertex

  Tables(const PermGroup& aut, int order, bool stabilizers_only) : n(order) {
    const auto& elems = aut.elements();
    if (elems.size() > std::numeric_limits<std::uint16_t>::max()) {
      throw CapExceeded("automorphism group too large for census tables",
                        std::numeric_limits<std::uint16_t>::max());
    }
    m = static_cast<int>(elems.size());
    img.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (int e = 0; e < m; ++e) {
      for (int v = 0; v < n; ++v) {
        img[static_cast<std::size_t>(e) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(v)] =
            static_cast<std::uint16_t>(elems[static_cast<std::size_t>(e)](v));
      }
    }
    comp.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
      for (int f = 0; f < m; ++f) {
        const Perm p = compose(elems[static_cast<std::size_t>(e)],
                               elems[static_cast<std::size_t>(f)]);
        const auto it = std::lower_bound(elems.begin(), elems.end(), p);
        comp[static_cast<std::size_t>(e) * static_cast<std::size_t>(m) +
             static_cast<std::size_t>(f)] =
            static_cast<std::uint16_t>(it - elems.begin());
      }
    }
    cand.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      for (int e = 0; e < m; ++e) {
        if (!stabilizers_only || image(e, v) == v) {
          cand[static_cast<std::size_t>(v)].push_back(static_cast<std::uint16_t>(e));
        }
      }
    }
  }

  int image(int e, int v) const {
    return img[static_cast<std::size_t>(e) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(v)];
  }
  int product(int e, int f) const {
    return comp[static_cast<std::size_t>(e) * static_cast<std::size_t>(m) +
                static_cast<std::size_t>(f)];
  }
};

struct AbortSignal {};

// One depth-first worker. Checks every rack-axiom instance (a, b) the moment
// rows a, b and R_a(b) are all assigned; earlier instances were checked at
// earlier levels, so only instances touching the newest row are scanned.
class Worker {
 public:
  Worker(const Tables& t, Clock::time_point deadline, std::uint64_t max_nodes,
         std::atomic<bool>& abort, std::atomic<std::uint64_t>& global_nodes,
         std::vector<std::vector<std::uint16_t>>* collect)
      : t_(t),
        deadline_(deadline),
        max_nodes_(max_nodes),
        abort_(abort),
        global_nodes_(global_nodes),
        collect_(collect) {
    idx_.assign(static_cast<std::size_t>(t.n), 0);
  }

  std::uint64_t racks = 0;
  std::uint64_t quandles = 0;
  std::uint64_t nodes = 0;

  void run_slice(int first_offset, int stride) {
    const auto& top = t_.cand[0];
    for (std::size_t i = static_cast<std::size_t>(first_offset); i < top.size();
         i += static_cast<std::size_t>(stride)) {
      try_candidate(0, top[i]);
    }
    flush_nodes();
  }

  void run_all() { run_slice(0, 1); }

 private:
  void try_candidate(int v, std::uint16_t e) {
    idx_[static_cast<std::size_t>(v)] = e;
    if (!consistent(v)) {
      count_node();
      return;
    }
    if (v + 1 == t_.n) {
      count_node();
      ++racks;
      if (fixes_prefix(v)) {
        ++quandles;
        if (collect_ != nullptr) collect_->push_back(idx_);
      }
      return;
    }
    for (std::uint16_t f : t_.cand[static_cast<std::size_t>(v + 1)]) {
      try_candidate(v + 1, f);
    }
  }

  // All instances R_a R_b = R_{R_a(b)} R_a whose rows a, b, c = R_a(b) are
  // assigned and at least one of them is the newest row v.
  bool consistent(int v) const {
    for (int a = 0; a <= v; ++a) {
      const int ea = idx_[static_cast<std::size_t>(a)];
      for (int b = 0; b <= v; ++b) {
        const int c = t_.image(ea, b);
        if (c > v) continue;
        if (a != v && b != v && c != v) continue;
        if (t_.product(ea, idx_[static_cast<std::size_t>(b)]) !=
            t_.product(idx_[static_cast<std::size_t>(c)], ea)) {
          return false;
        }
      }
    }
    return true;
  }

  bool fixes_prefix(int v) const {
    for (int a = 0; a <= v; ++a) {
      if (t_.image(idx_[static_cast<std::size_t>(a)], a) != a) return false;
    }
    return true;
  }

  void count_node() {
    if (++nodes % 4096 == 0) {
      flush_nodes();
      if (abort_.load(std::memory_order_relaxed)) throw AbortSignal{};
      if (Clock::now() > deadline_ ||
          global_nodes_.load(std::memory_order_relaxed) > max_nodes_) {
        abort_.store(true, std::memory_order_relaxed);
        throw AbortSignal{};
      }
    }
  }

  void flush_nodes() {
    global_nodes_.fetch_add(nodes - flushed_, std::memory_order_relaxed);
    flushed_ = nodes;
  }

  const Tables& t_;
  Clock::time_point deadline_;
  std::uint64_t max_nodes_;
  std::atomic<bool>& abort_;
  std::atomic<std::uint64_t>& global_nodes_;
  std::vector<std::vector<std::uint16_t>>* collect_;
  std::vector<std::uint16_t> idx_;
  std::uint64_t flushed_ = 0;
};

struct SearchOutcome {
  CensusResult result;
  std::vector<std::vector<std::uint16_t>> collected;
  bool aborted = false;
};

SearchOutcome run_search(const Tables& t, const CensusBudget& budget, bool collect) {
  const auto start = Clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(budget.wall_seconds));
  std::atomic<bool> abort{false};
  std::atomic<std::uint64_t> global_nodes{0};
  if (Clock::now() > deadline) abort.store(true);

  const int jobs = std::max(1, budget.jobs);
  SearchOutcome out;
  out.result.total_markings =
      saturating_pow(static_cast<std::uint64_t>(t.m), t.n);

  if (t.n == 0) {
    // The empty assignment is vacuously a rack and a quandle.
    out.result.mu_rack = 1;
    out.result.mu_qnd = 1;
    out.result.total_markings = 1;
    out.result.nodes = 1;
    if (collect) out.collected.push_back({});
    out.result.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return out;
  }

  std::vector<Worker> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  std::vector<std::vector<std::vector<std::uint16_t>>> collected(
      static_cast<std::size_t>(jobs));
  for (int k = 0; k < jobs; ++k) {
    workers.emplace_back(t, deadline, budget.max_nodes, abort, global_nodes,
                         collect ? &collected[static_cast<std::size_t>(k)] : nullptr);
  }

  if (abort.load()) {
    out.aborted = true;
  } else if (jobs == 1) {
    try {
      workers[0].run_all();
    } catch (const AbortSignal&) {
      out.aborted = true;
    }
  } else {
    std::vector<std::thread> threads;
    std::atomic<bool> any_abort{false};
    for (int k = 0; k < jobs; ++k) {
      threads.emplace_back([&, k] {
        try {
          workers[static_cast<std::size_t>(k)].run_slice(k, jobs);
        } catch (const AbortSignal&) {
          any_abort.store(true);
        }
      });
    }
    for (auto& th : threads) th.join();
    out.aborted = any_abort.load();
  }

  for (int k = 0; k < jobs; ++k) {
    out.result.mu_rack += workers[static_cast<std::size_t>(k)].racks;
    out.result.mu_qnd += workers[static_cast<std::size_t>(k)].quandles;
    out.result.nodes += workers[static_cast<std::size_t>(k)].nodes;
    if (collect) {
      out.collected.insert(out.collected.end(),
                           collected[static_cast<std::size_t>(k)].begin(),
                           collected[static_cast<std::size_t>(k)].end());
    }
  }
  std::sort(out.collected.begin(), out.collected.end());
  out.result.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return out;
}

CensusResult census_impl(const PermGroup& aut, int order, const CensusBudget& budget,
                         bool stabilizers_only) {
  Tables t(aut, order, stabilizers_only);
  SearchOutcome out = run_search(t, budget, /*collect=*/false);
  if (out.aborted) {
    throw BudgetExceeded("census budget exceeded", out.result);
  }
  return out.result;
}

}  // namespace

CensusResult mu_census(const Graph& g, const CensusBudget& budget) {
  return census_impl(automorphism_group(g), g.order(), budget, false);
}

CensusResult mu_census(const Digraph& g, const CensusBudget& budget) {
  return census_impl(automorphism_group(g), g.order(), budget, false);
}

std::uint64_t quandle_census(const Graph& g, const CensusBudget& budget) {
  return census_impl(automorphism_group(g), g.order(), budget, true).mu_qnd;
}

std::uint64_t quandle_census(const Digraph& g, const CensusBudget& budget) {
  return census_impl(automorphism_group(g), g.order(), budget, true).mu_qnd;
}

std::vector<Marking> quandle_markings(const Graph& g, const CensusBudget& budget) {
  const PermGroup aut = automorphism_group(g);
  Tables t(aut, g.order(), /*stabilizers_only=*/true);
  SearchOutcome out = run_search(t, budget, /*collect=*/true);
  if (out.aborted) {
    throw BudgetExceeded("census budget exceeded", out.result);
  }
  const auto& elems = aut.elements();
  std::vector<Marking> markings;
  markings.reserve(out.collected.size());
  for (const auto& idx : out.collected) {
    std::vector<Perm> assignment;
    assignment.reserve(idx.size());
    for (std::uint16_t e : idx) assignment.push_back(elems[e]);
    markings.push_back(Marking{g, std::move(assignment)});
  }
  return markings;
}

std::uint64_t mu_rack_path(int n) {
  if (n < 2 || n > 10) throw std::invalid_argument("mu_rack_path: need 2 <= n <= 10");
  const int k = n / 2;
  return n % 2 == 0 ? (std::uint64_t{1} << k) : (std::uint64_t{1} << (k + 1));
}

std::uint64_t mu_qnd_path(int n) {
  if (n < 2 || n > 10) throw std::invalid_argument("mu_qnd_path: need 2 <= n <= 10");
  return n % 2 == 0 ? 1 : 2;
}

std::uint64_t divisor_sigma(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisor_sigma: need n >= 1");
  std::uint64_t sum = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      sum += d;
      if (d != n / d) sum += n / d;
    }
  }
  return sum;
}

std::uint64_t mu_qnd_cycle(int n) {
  if (n < 3) throw std::invalid_argument("mu_qnd_cycle: need n >= 3");
  return divisor_sigma(static_cast<std::uint64_t>(n)) + 1;
}

std::vector<Marking> reflection_markings(int n) {
  const Graph cycle = cycle_graph(n);
  const auto refls = reflections(n);
  // The one reflection fixing v is w -> 2v - w.
  std::vector<const Perm*> axis_refl(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    axis_refl[static_cast<std::size_t>(v)] =
        &refls[static_cast<std::size_t>((2 * v) % n)].perm;
  }
  // A vertex set S can carry its axis reflections (identity elsewhere) iff S
  // is closed under w -> 2v - w for v in S; those sets are exactly the
  // residue classes modulo divisors of n, plus the empty set. One marking
  // each: 1 + sum of divisors in total.
  std::vector<Marking> out;
  const auto support_marking = [&](int d, int a) {
    std::vector<Perm> assignment;
    assignment.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      assignment.push_back(d > 0 && v % d == a ? *axis_refl[static_cast<std::size_t>(v)]
                                               : Perm::identity(n));
    }
    return Marking{cycle, std::move(assignment)};
  };
  out.push_back(support_marking(0, 0));
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    for (int a = 0; a < d; ++a) out.push_back(support_marking(d, a));
  }
  return out;
}

}  // namespace rackbench
