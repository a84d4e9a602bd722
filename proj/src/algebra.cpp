#include "rackbench/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rackbench {

FiniteMagma::FiniteMagma(std::vector<std::vector<int>> right_mult)
    : rows_(std::move(right_mult)) {
  const int n = order();
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("right multiplication table is not square");
    }
    for (int w : row) {
      if (w < 0 || w >= n) {
        throw std::invalid_argument("right multiplication entry out of range");
      }
    }
  }
}

RightQuasigroup::RightQuasigroup(std::vector<std::vector<int>> right_mult)
    : FiniteMagma(std::move(right_mult)) {
  for (int v = 0; v < order(); ++v) {
    std::vector<bool> seen(static_cast<std::size_t>(order()), false);
    for (int w : rows_[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) {
        throw std::invalid_argument("row " + std::to_string(v) +
                                    " is not a bijection");
      }
      seen[static_cast<std::size_t>(w)] = true;
    }
  }
}

std::vector<Perm> RightQuasigroup::row_perms() const {
  std::vector<Perm> out;
  out.reserve(rows_.size());
  for (int v = 0; v < order(); ++v) out.push_back(row(v));
  return out;
}

bool is_right_cancellative(const FiniteMagma& q) {
  for (const auto& row : q.rows()) {
    std::vector<bool> seen(row.size(), false);
    for (int w : row) {
      if (seen[static_cast<std::size_t>(w)]) return false;
      seen[static_cast<std::size_t>(w)] = true;
    }
  }
  return true;
}

bool is_right_divisible(const FiniteMagma& q) {
  for (const auto& row : q.rows()) {
    std::vector<bool> seen(row.size(), false);
    std::size_t distinct = 0;
    for (int w : row) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++distinct;
      }
    }
    if (distinct != row.size()) return false;
  }
  return true;
}

bool is_right_quasigroup(const FiniteMagma& q) {
  // Finite, so injective rows and surjective rows coincide.
  return is_right_cancellative(q);
}

bool is_rack(const RightQuasigroup& q) {
  const int n = q.order();
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      const int c = q.right_mult(v, w);
      for (int x = 0; x < n; ++x) {
        // R_v(R_w(x)) vs R_{R_v(w)}(R_v(x))
        if (q.right_mult(v, q.right_mult(w, x)) !=
            q.right_mult(c, q.right_mult(v, x))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_quandle(const RightQuasigroup& q) {
  for (int v = 0; v < q.order(); ++v) {
    if (q.right_mult(v, v) != v) return false;
  }
  return is_rack(q);
}

bool is_involutory(const RightQuasigroup& q) {
  for (int v = 0; v < q.order(); ++v) {
    for (int w = 0; w < q.order(); ++w) {
      if (q.right_mult(v, q.right_mult(v, w)) != w) return false;
    }
  }
  return true;
}

bool is_kei(const RightQuasigroup& q) { return is_involutory(q) && is_quandle(q); }

PermGroup rmlt(const RightQuasigroup& q, std::size_t cap) {
  return PermGroup(q.order(), q.row_perms(), cap);
}

RightQuasigroup conj_quandle(const PermGroup& g) {
  const auto& elems = g.elements();
  const int n = static_cast<int>(elems.size());
  auto index_of = [&](const Perm& p) {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    return static_cast<int>(it - elems.begin());
  };
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = index_of(
          conjugate(elems[static_cast<std::size_t>(x)], elems[static_cast<std::size_t>(y)]));
    }
  }
  return RightQuasigroup(std::move(rows));
}

RightQuasigroup permutation_rack(int n, const Perm& sigma) {
  if (sigma.degree() != n) {
    throw std::invalid_argument("permutation_rack: degree mismatch");
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), sigma.images());
  return RightQuasigroup(std::move(rows));
}

RightQuasigroup regular_right_quasigroup(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("empty multiplication table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("multiplication table is not square");
    }
    for (int w : row) {
      if (w < 0 || w >= n) throw std::invalid_argument("table entry out of range");
    }
  }
  auto mul = [&](int a, int b) {
    return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw std::invalid_argument("multiplication table is not associative");
        }
      }
    }
  }
  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int a = 0; a < n; ++a) {
      if (mul(cand, a) != a || mul(a, cand) != a) {
        ok = false;
        break;
      }
    }
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) throw std::invalid_argument("multiplication table has no identity");
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == e && mul(b, a) == e) {
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) {
      throw std::invalid_argument("multiplication table element lacks an inverse");
    }
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int h = 0; h < n; ++h) {
    for (int g = 0; g < n; ++g) {
      rows[static_cast<std::size_t>(h)][static_cast<std::size_t>(g)] = mul(g, h);
    }
  }
  return RightQuasigroup(std::move(rows));
}

bool is_magma_hom(const std::vector<int>& phi, const FiniteMagma& src,
                  const FiniteMagma& dst) {
  if (static_cast<int>(phi.size()) != src.order()) {
    throw std::invalid_argument("is_magma_hom: map size mismatch");
  }
  for (int w : phi) {
    if (w < 0 || w >= dst.order()) {
      throw std::invalid_argument("is_magma_hom: image out of range");
    }
  }
  auto f = [&](int v) { return phi[static_cast<std::size_t>(v)]; };
  for (int v = 0; v < src.order(); ++v) {
    for (int w = 0; w < src.order(); ++w) {
      if (f(src.right_mult(v, w)) != dst.right_mult(f(v), f(w))) return false;
    }
  }
  return true;
}

bool rack_via_hom(const RightQuasigroup& q) {
  const auto rows = q.row_perms();
  for (int v = 0; v < q.order(); ++v) {
    for (int w = 0; w < q.order(); ++w) {
      if (rows[static_cast<std::size_t>(q.right_mult(v, w))] !=
          conjugate(rows[static_cast<std::size_t>(v)], rows[static_cast<std::size_t>(w)])) {
        return false;
      }
    }
  }
  return true;
}

bool closed_under_conjugation(const RightQuasigroup& q, bool allow_inverses) {
  auto rows = q.row_perms();
  std::vector<Perm> targets = rows;
  if (allow_inverses) {
    for (const Perm& r : rows) targets.push_back(inverse(r));
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  for (const Perm& v : rows) {
    for (const Perm& w : rows) {
      if (!std::binary_search(targets.begin(), targets.end(), conjugate(v, w))) {
        return false;
      }
    }
  }
  return true;
}

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

}  // namespace

RightQuasigroupEnumerator::RightQuasigroupEnumerator(int n)
    : RightQuasigroupEnumerator(n, 0, pow_u64(factorial(n < 0 ? 0 : n), n < 0 ? 0 : n)) {}

RightQuasigroupEnumerator::RightQuasigroupEnumerator(int n, std::uint64_t first,
                                                     std::uint64_t last)
    : n_(n) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument("enumeration is guarded to 1 <= n <= 4");
  }
  std::vector<int> row(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) row[static_cast<std::size_t>(w)] = w;
  do {
    perms_.push_back(row);
  } while (std::next_permutation(row.begin(), row.end()));
  total_ = pow_u64(static_cast<std::uint64_t>(perms_.size()), n);
  if (first > last || last > total_) {
    throw std::invalid_argument("enumeration range out of bounds");
  }
  index_ = first;
  last_ = last;
}

std::optional<RightQuasigroup> RightQuasigroupEnumerator::next() {
  if (index_ >= last_) return std::nullopt;
  std::uint64_t rem = index_++;
  const std::uint64_t base = static_cast<std::uint64_t>(perms_.size());
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n_));
  for (int v = n_ - 1; v >= 0; --v) {
    rows[static_cast<std::size_t>(v)] = perms_[static_cast<std::size_t>(rem % base)];
    rem /= base;
  }
  return RightQuasigroup(std::move(rows));
}

}  // namespace rackbench
