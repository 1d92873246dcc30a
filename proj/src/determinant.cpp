#include "gdet/determinant.hpp"

#include <bit>
#include <limits>
#include <utility>

namespace gdet {

namespace {

struct Overflow {};

struct Checked128 {
  __int128 v;

  friend Checked128 operator*(Checked128 a, Checked128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return {r};
  }
  friend Checked128 operator-(Checked128 a, Checked128 b) {
    __int128 r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return {r};
  }
  friend Checked128 operator/(Checked128 a, Checked128 b) { return {a.v / b.v}; }
  friend bool operator==(Checked128 a, Checked128 b) { return a.v == b.v; }
  bool is_zero() const { return v == 0; }
  Checked128 negated() const {
    if (v == std::numeric_limits<__int128>::min()) throw Overflow{};
    return {-v};
  }
};

bool is_zero(const Checked128& x) { return x.is_zero(); }
bool is_zero(const BigInt& x) { return x.is_zero(); }
Checked128 negate(const Checked128& x) { return x.negated(); }
BigInt negate(const BigInt& x) { return -x; }

// Bareiss elimination on a row-major n x n array. Every division is exact.
template <class T>
T bareiss(std::vector<T> a, int n, T one) {
  if (n == 0) return one;
  auto at = [&](int i, int j) -> T& { return a[std::size_t(i) * n + j]; };
  bool negative = false;
  T prev = one;
  for (int k = 0; k + 1 < n; ++k) {
    if (is_zero(at(k, k))) {
      int p = k + 1;
      while (p < n && is_zero(at(p, k))) ++p;
      if (p == n) return T{};
      for (int j = k; j < n; ++j) std::swap(at(k, j), at(p, j));
      negative = !negative;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  T result = at(n - 1, n - 1);
  return negative ? negate(result) : result;
}

void leibniz_rec(const IntMatrix& m, int row, VertexMask used, bool odd, const ExactInt& prod,
                 ExactInt& sum) {
  const int n = m.order();
  if (row == n) {
    if (odd) sum -= prod;
    else sum += prod;
    return;
  }
  for (int col = 0; col < n; ++col) {
    if (used & bit(col)) continue;
    const ExactInt& entry = m(row, col);
    if (entry.is_zero()) continue;
    // Inversions gained: earlier rows already mapped to larger columns.
    const int inv = std::popcount(used & ~full_mask(col + 1));
    leibniz_rec(m, row + 1, used | bit(col), odd ^ (inv & 1), prod * entry, sum);
  }
}

struct SachsWalker {
  const Graph& g;
  std::int64_t total = 0;

  // Cover the lowest uncovered vertex by an edge or by a cycle through it,
  // tracking (-1)^components * 2^cycles.
  void cover(VertexMask left, std::int64_t weight) {
    if (!left) {
      total += weight;
      return;
    }
    const int v = std::countr_zero(left);
    const VertexMask rest = left & ~bit(v);
    for (VertexMask r = g.row(v) & rest; r; r &= r - 1) {
      cover(rest & ~bit(std::countr_zero(r)), -weight);
    }
    // Cycles through v inside `left`; v is the smallest vertex so each cycle
    // is generated once per direction, keep second < last.
    std::vector<int> path{v};
    cycles_from(v, v, rest, path, left, weight);
  }

  void cycles_from(int start, int u, VertexMask avail, std::vector<int>& path, VertexMask left,
                   std::int64_t weight) {
    for (VertexMask r = g.row(u) & avail; r; r &= r - 1) {
      const int w = std::countr_zero(r);
      path.push_back(w);
      if (path.size() >= 3 && g.has_edge(w, start) && path[1] < w) {
        VertexMask used = 0;
        for (int x : path) used |= bit(x);
        cover(left & ~used, -2 * weight);
      }
      cycles_from(start, w, avail & ~bit(w), path, left, weight);
      path.pop_back();
    }
  }
};

}  // namespace

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix m(g.order());
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) m(i, j) = ExactInt(g.has_edge(i, j) ? 1 : 0);
  }
  return m;
}

ExactInt det_bareiss(const IntMatrix& m) {
  const int n = m.order();
  std::vector<Checked128> small;
  small.reserve(std::size_t(n) * n);
  bool fits = true;
  for (int i = 0; i < n && fits; ++i) {
    for (int j = 0; j < n; ++j) {
      auto v = m(i, j).to_int128();
      if (!v) {
        fits = false;
        break;
      }
      small.push_back({*v});
    }
  }
  if (fits) {
    try {
      return ExactInt(bareiss(std::move(small), n, Checked128{1}).v);
    } catch (const Overflow&) {
    }
  }
  std::vector<BigInt> big;
  big.reserve(std::size_t(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) big.push_back(m(i, j).to_big());
  }
  return ExactInt(bareiss(std::move(big), n, BigInt(1)));
}

ExactInt determinant(const Graph& g) {
  const int n = g.order();
  std::vector<Checked128> a(std::size_t(n) * n, Checked128{0});
  for (int i = 0; i < n; ++i) {
    for (VertexMask r = g.row(i); r; r &= r - 1) a[std::size_t(i) * n + std::countr_zero(r)] = {1};
  }
  try {
    return ExactInt(bareiss(std::move(a), n, Checked128{1}).v);
  } catch (const Overflow&) {
    return det_bareiss(adjacency_matrix(g));
  }
}

ExactInt det_leibniz(const IntMatrix& m) {
  if (m.order() > kLeibnizMaxOrder) throw OrderTooLarge("det_leibniz", m.order(), kLeibnizMaxOrder);
  ExactInt sum(0);
  leibniz_rec(m, 0, 0, false, ExactInt(1), sum);
  return sum;
}

ExactInt det_sachs(const Graph& g) {
  if (g.order() > kSachsMaxOrder) throw OrderTooLarge("det_sachs", g.order(), kSachsMaxOrder);
  SachsWalker w{g};
  w.cover(g.vertices(), 1);
  return g.order() % 2 ? ExactInt(-w.total) : ExactInt(w.total);
}

}  // namespace gdet
