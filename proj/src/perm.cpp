#include "rackbench/perm.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

namespace rackbench {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int w : images_) {
    if (w < 0 || w >= n) {
      throw std::invalid_argument("permutation image out of range");
    }
    if (seen[static_cast<std::size_t>(w)]) {
      throw std::invalid_argument("permutation image repeated; not a bijection");
    }
    seen[static_cast<std::size_t>(w)] = true;
  }
}

Perm Perm::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int w = 0; w < degree; ++w) img[static_cast<std::size_t>(w)] = w;
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i];
      int b = cyc[(i + 1) % cyc.size()];
      if (a < 0 || a >= degree) throw std::invalid_argument("cycle point out of range");
      if (used[static_cast<std::size_t>(a)]) {
        throw std::invalid_argument("cycles are not disjoint");
      }
      used[static_cast<std::size_t>(a)] = true;
      p.images_[static_cast<std::size_t>(a)] = b;
    }
  }
  return Perm(std::move(p.images_));  // revalidate
}

bool Perm::is_identity() const {
  for (int w = 0; w < degree(); ++w) {
    if (images_[static_cast<std::size_t>(w)] != w) return false;
  }
  return true;
}

std::vector<int> Perm::fixed_points() const {
  std::vector<int> out;
  for (int w = 0; w < degree(); ++w) {
    if (images_[static_cast<std::size_t>(w)] == w) out.push_back(w);
  }
  return out;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int w = 0; w < p.degree(); ++w) {
    img[static_cast<std::size_t>(w)] = p(q(w));
  }
  return Perm(std::move(img));
}

Perm inverse(const Perm& p) {
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int w = 0; w < p.degree(); ++w) {
    img[static_cast<std::size_t>(p(w))] = w;
  }
  return Perm(std::move(img));
}

Perm conjugate(const Perm& g, const Perm& h) {
  return compose(g, compose(h, inverse(g)));
}

std::string cycle_string(const Perm& p, bool one_based) {
  const int off = one_based ? 1 : 0;
  std::ostringstream out;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || p(start) == start) continue;
    out << '(';
    int w = start;
    bool first = true;
    do {
      seen[static_cast<std::size_t>(w)] = true;
      if (!first) out << ' ';
      out << (w + off);
      first = false;
      w = p(w);
    } while (w != start);
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "id" : s;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;  // FNV-1a
  for (int w : p.images()) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<Perm> closure(int degree, const std::vector<Perm>& generators,
                          std::size_t cap) {
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw std::invalid_argument("closure: generator degree mismatch");
    }
  }
  std::unordered_set<Perm, PermHash> seen;
  std::queue<Perm> work;
  auto push = [&](Perm p) {
    if (seen.insert(p).second) {
      if (seen.size() > cap) {
        throw CapExceeded("group too large: closure exceeded cap of " +
                              std::to_string(cap) + " elements",
                          cap);
      }
      work.push(std::move(p));
    }
  };
  push(Perm::identity(degree));
  for (const Perm& g : generators) push(g);
  // Every generator has finite order, so products alone reach all inverses.
  while (!work.empty()) {
    Perm cur = std::move(work.front());
    work.pop();
    for (const Perm& g : generators) {
      push(compose(cur, g));
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::size_t cap)
    : degree_(degree),
      generators_(std::move(generators)),
      cap_(cap),
      lazy_(std::make_shared<Lazy>()) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  for (const Perm& g : generators_) {
    if (g.degree() != degree_) {
      throw std::invalid_argument("generator degree mismatch");
    }
  }
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup g(degree, elements);
  g.lazy_->elems = std::move(elements);
  std::call_once(g.lazy_->once, [] {});  // mark as computed
  return g;
}

const std::vector<Perm>& PermGroup::elements() const {
  std::call_once(lazy_->once,
                 [&] { lazy_->elems = closure(degree_, generators_, cap_); });
  return lazy_->elems;
}

bool PermGroup::contains(const Perm& p) const {
  const auto& elems = elements();
  return std::binary_search(elems.begin(), elems.end(), p);
}

PermGroup dihedral_group(int n) {
  if (n < 3) throw std::invalid_argument("dihedral_group: need n >= 3");
  std::vector<int> rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) {
    rot[static_cast<std::size_t>(w)] = (w + 1) % n;
    refl[static_cast<std::size_t>(w)] = (n - w) % n;
  }
  return PermGroup(n, {Perm(std::move(rot)), Perm(std::move(refl))});
}

std::vector<Reflection> reflections(int n) {
  if (n < 3) throw std::invalid_argument("reflections: need n >= 3");
  std::vector<Reflection> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::vector<int> axis;
    for (int w = 0; w < n; ++w) {
      int image = ((k - w) % n + n) % n;
      img[static_cast<std::size_t>(w)] = image;
      if (image == w) axis.push_back(w);
    }
    out.push_back(Reflection{Perm(std::move(img)), std::move(axis)});
  }
  return out;
}

std::vector<PermGroup> reflection_subgroups(int n) {
  const auto refls = reflections(n);
  // Walk the subgroup lattice upward: extend each known subgroup by each
  // reflection outside it. Reaches exactly the subgroups generated by
  // reflection subsets without touching all 2^n subsets.
  using Key = std::vector<Perm>;
  std::map<Key, std::vector<Perm>> found;  // element set -> generating reflections
  std::vector<Key> frontier;

  Key triv = {Perm::identity(n)};
  found.emplace(triv, std::vector<Perm>{});
  frontier.push_back(triv);

  while (!frontier.empty()) {
    std::vector<Key> next;
    for (const Key& elems : frontier) {
      const std::vector<Perm>& gens = found.at(elems);
      for (const Reflection& r : refls) {
        if (std::binary_search(elems.begin(), elems.end(), r.perm)) continue;
        std::vector<Perm> bigger_gens = gens;
        bigger_gens.push_back(r.perm);
        Key bigger = closure(n, bigger_gens);
        if (found.emplace(bigger, bigger_gens).second) {
          next.push_back(std::move(bigger));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<PermGroup> out;
  out.reserve(found.size());
  std::vector<std::pair<std::size_t, Key>> keys;
  for (const auto& [elems, gens] : found) {
    keys.emplace_back(elems.size(), elems);
  }
  std::sort(keys.begin(), keys.end());
  for (auto& [sz, elems] : keys) {
    PermGroup g = PermGroup::from_elements(n, elems);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace rackbench
