#include "gdet/canonical.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

namespace gdet {

namespace {

using Code = std::array<std::uint64_t, kMaxVertices>;
using Perm = std::array<std::uint8_t, kMaxVertices>;

// Ordered partition of the vertex set: lab lists vertices by position and
// bit i of `ends` marks the last position of a cell.
struct Partition {
  Perm lab;
  std::uint64_t ends;
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Partition p;
    for (int i = 0; i < n_; ++i) p.lab[i] = static_cast<std::uint8_t>(i);
    p.ends = bit(n_ - 1);
    search(p, 0);
  }

  CanonicalForm result() const {
    CanonicalForm out;
    out.labeling.resize(n_);
    for (int pos = 0; pos < n_; ++pos) out.labeling[best_lab_[pos]] = pos;
    out.graph = g_.relabeled(out.labeling);
    for (const Perm& gen : gens_) out.automorphisms.emplace_back(gen.begin(), gen.begin() + n_);
    return out;
  }

  Graph result_graph() const {
    std::vector<int> labeling(n_);
    for (int pos = 0; pos < n_; ++pos) labeling[best_lab_[pos]] = pos;
    return g_.relabeled(labeling);
  }

 private:
  int cell_end(std::uint64_t ends, int start) const {
    return std::countr_zero(ends & ~full_mask(start));
  }

  // Split every cell by neighbourhood counts into each splitter cell until
  // the partition is equitable. Cell order is decided by the counts alone,
  // so the result commutes with relabelling.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int ws = 0; ws < n_ && !changed;) {
        const int we = cell_end(p.ends, ws);
        VertexMask splitter = 0;
        for (int i = ws; i <= we; ++i) splitter |= bit(p.lab[i]);
        for (int xs = 0; xs < n_;) {
          const int xe = cell_end(p.ends, xs);
          if (xe > xs && split(p, xs, xe, splitter)) changed = true;
          xs = xe + 1;
        }
        ws = we + 1;
      }
    }
  }

  bool split(Partition& p, int s, int e, VertexMask splitter) const {
    std::array<int, kMaxVertices> key;
    bool uniform = true;
    for (int i = s; i <= e; ++i) {
      key[i] = std::popcount(g_.row(p.lab[i]) & splitter);
      if (key[i] != key[s]) uniform = false;
    }
    if (uniform) return false;
    for (int i = s + 1; i <= e; ++i) {
      const int k = key[i];
      const std::uint8_t v = p.lab[i];
      int j = i - 1;
      while (j >= s && key[j] > k) {
        key[j + 1] = key[j];
        p.lab[j + 1] = p.lab[j];
        --j;
      }
      key[j + 1] = k;
      p.lab[j + 1] = v;
    }
    for (int i = s; i < e; ++i) {
      if (key[i] != key[i + 1]) p.ends |= bit(i);
    }
    return true;
  }

  void leaf(const Partition& p) {
    std::array<int, kMaxVertices> pos;
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = i;
    Code code;
    for (int i = 0; i < n_; ++i) {
      std::uint64_t c = 0;
      for (VertexMask r = g_.row(p.lab[i]); r; r &= r - 1) c |= bit(63 - pos[std::countr_zero(r)]);
      code[i] = c;
    }
    if (!have_best_) {
      have_best_ = true;
      best_code_ = first_code_ = code;
      best_lab_ = first_lab_ = p.lab;
      return;
    }
    if (equal(code, first_code_)) {
      add_automorphism(p.lab, first_lab_);
      return;
    }
    const int c = compare(code, best_code_);
    if (c == 0) {
      add_automorphism(p.lab, best_lab_);
    } else if (c < 0) {
      best_code_ = code;
      best_lab_ = p.lab;
    }
  }

  bool equal(const Code& a, const Code& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return false;
    }
    return true;
  }

  int compare(const Code& a, const Code& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  void add_automorphism(const Perm& from, const Perm& to) {
    Perm gamma;
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    gens_.push_back(gamma);
  }

  // Orbits of the group generated by the stored generators that fix every
  // vertex of `fixed`.
  void orbits(VertexMask fixed, std::array<int, kMaxVertices>& root) const {
    std::iota(root.begin(), root.begin() + n_, 0);
    auto find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (const Perm& gamma : gens_) {
      bool fixes = true;
      for (VertexMask f = fixed; f && fixes; f &= f - 1) {
        const int v = std::countr_zero(f);
        fixes = gamma[v] == v;
      }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v), b = find(gamma[v]);
        if (a != b) root[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) root[v] = find(v);
  }

  void search(Partition p, VertexMask fixed) {
    refine(p);
    if (std::popcount(p.ends) == n_) {
      leaf(p);
      return;
    }
    int s = 0;
    int e = cell_end(p.ends, 0);
    while (e == s) {
      s = e + 1;
      e = cell_end(p.ends, s);
    }
    const Perm cell = p.lab;
    VertexMask explored = 0;
    std::array<int, kMaxVertices> root;
    std::size_t seen_gens = static_cast<std::size_t>(-1);
    for (int i = s; i <= e; ++i) {
      const int v = cell[i];
      if (explored) {
        if (gens_.size() != seen_gens) {
          orbits(fixed, root);
          seen_gens = gens_.size();
        }
        bool pruned = false;
        for (VertexMask x = explored; x && !pruned; x &= x - 1) {
          pruned = root[std::countr_zero(x)] == root[v];
        }
        if (pruned) continue;
      }
      explored |= bit(v);
      Partition child = p;
      // Move v to the front of its cell and make it a singleton.
      int at = s;
      while (child.lab[at] != v) ++at;
      std::swap(child.lab[at], child.lab[s]);
      child.ends |= bit(s);
      search(child, fixed | bit(v));
    }
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  Code best_code_{};
  Code first_code_{};
  Perm best_lab_{};
  Perm first_lab_{};
  std::vector<Perm> gens_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  Canonizer c(g);
  c.run();
  return c.result();
}

Graph canonical_graph(const Graph& g) {
  Canonizer c(g);
  c.run();
  return c.result_graph();
}

std::string upper_triangle_bits(const Graph& g) {
  std::string out;
  for (int i = 0; i < g.order(); ++i) {
    for (int j = i + 1; j < g.order(); ++j) out.push_back(g.has_edge(i, j) ? '1' : '0');
  }
  return out;
}

std::string CanonicalForm::upper_triangle() const { return upper_triangle_bits(graph); }

}  // namespace gdet
