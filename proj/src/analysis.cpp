#include "gdet/analysis.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace gdet {

namespace {

VertexMask reach(const Graph& g, int start, VertexMask within) {
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexMask> component_masks_within(const Graph& g, VertexMask within) {
  std::vector<VertexMask> out;
  for (VertexMask left = within; left;) {
    VertexMask c = reach(g, std::countr_zero(left), within);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

std::vector<int> to_vertices(VertexMask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

int edges_within(const Graph& g, VertexMask m) {
  int twice = 0;
  for (VertexMask r = m; r; r &= r - 1) twice += std::popcount(g.row(std::countr_zero(r)) & m);
  return twice / 2;
}

bool match_rec(const Graph& g, VertexMask left, Matching& out) {
  if (!left) return true;
  if (std::popcount(left) % 2) return false;
  for (VertexMask c : component_masks_within(g, left)) {
    if (std::popcount(c) % 2) return false;
  }
  const int v = std::countr_zero(left);
  VertexMask nbrs = g.row(v) & left;
  for (; nbrs; nbrs &= nbrs - 1) {
    const int w = std::countr_zero(nbrs);
    out.emplace_back(v, w);
    if (match_rec(g, left & ~bit(v) & ~bit(w), out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace

std::vector<VertexMask> component_masks(const Graph& g) {
  return component_masks_within(g, g.vertices());
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (VertexMask c : component_masks(g)) out.push_back(to_vertices(c));
  return out;
}

bool is_connected(const Graph& g) { return reach(g, 0, g.vertices()) == g.vertices(); }

BipartiteResult is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      for (VertexMask r = g.row(u); r; r &= r - 1) {
        const int w = std::countr_zero(r);
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // Walk both BFS-tree branches up to their meeting point.
          std::vector<int> left{u}, right{w};
          int a = u, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          BipartiteResult res;
          res.odd_cycle = std::move(left);
          res.odd_cycle.insert(res.odd_cycle.begin(), right.begin(), right.end());
          return res;
        }
      }
    }
  }
  BipartiteResult res;
  res.bipartite = true;
  res.coloring = std::move(color);
  return res;
}

CycleList find_all_cycles(const Graph& g, int cap) {
  CycleList out;
  std::vector<int> path;
  VertexMask on_path = 0;
  int start = 0;

  std::function<void(int)> extend = [&](int u) {
    for (VertexMask r = g.row(u); r; r &= r - 1) {
      const int w = std::countr_zero(r);
      if (w == start) {
        if (path.size() >= 3 && path[1] < path.back()) {
          if (static_cast<int>(out.cycles.size()) >= cap) throw CycleBudgetExceeded(cap);
          out.cycles.push_back(path);
        }
      } else if (w > start && !(on_path & bit(w))) {
        path.push_back(w);
        on_path |= bit(w);
        extend(w);
        on_path &= ~bit(w);
        path.pop_back();
      }
    }
  };

  for (start = 0; start < g.order(); ++start) {
    path.assign(1, start);
    on_path = bit(start);
    extend(start);
  }
  return out;
}

VertexMask cycle_mask(const Cycle& c) {
  VertexMask m = 0;
  for (int v : c) m |= bit(v);
  return m;
}

int cyclomatic_number(const Graph& g, VertexMask component) {
  return edges_within(g, component) - std::popcount(component) + 1;
}

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::Forest: return "Forest";
    case ClassTag::Unicyclic: return "Unicyclic";
    case ClassTag::BicyclicSharedVertex: return "BicyclicSharedVertex";
    case ClassTag::BicyclicDisjoint: return "BicyclicDisjoint";
    case ClassTag::MultiCycle: return "MultiCycle";
  }
  return "?";
}

std::string GraphClass::describe() const {
  switch (tag) {
    case ClassTag::Unicyclic: return "Unicyclic(" + std::to_string(k) + ")";
    case ClassTag::BicyclicSharedVertex:
      return "BicyclicSharedVertex(" + std::to_string(k) + "," + std::to_string(l) + ")";
    case ClassTag::BicyclicDisjoint:
      return "BicyclicDisjoint(" + std::to_string(k) + "," + std::to_string(l) + "," +
             std::to_string(t) + ")";
    default: return to_string(tag);
  }
}

GraphClass classify(const Graph& g) {
  GraphClass out;
  const auto comps = component_masks(g);
  int total = 0;
  for (VertexMask c : comps) {
    const int r = cyclomatic_number(g, c);
    total += r;
    ClassTag tag = ClassTag::MultiCycle;
    if (r == 0) {
      tag = ClassTag::Forest;
    } else if (r == 1) {
      tag = ClassTag::Unicyclic;
    } else if (r == 2) {
      const Graph sub = g.induced(c);
      try {
        const auto cyc = find_all_cycles(sub, 2);
        tag = (cycle_mask(cyc.cycles[0]) & cycle_mask(cyc.cycles[1]))
                  ? ClassTag::BicyclicSharedVertex
                  : ClassTag::BicyclicDisjoint;
      } catch (const CycleBudgetExceeded&) {
        tag = ClassTag::MultiCycle;
      }
    }
    out.per_component.push_back({to_vertices(c), tag});
  }

  if (total > 2) {
    out.tag = ClassTag::MultiCycle;
    return out;
  }
  try {
    out.cycles = find_all_cycles(g, 2).cycles;
  } catch (const CycleBudgetExceeded&) {
    out.tag = ClassTag::MultiCycle;
    return out;
  }

  if (out.cycles.empty()) {
    out.tag = ClassTag::Forest;
    return out;
  }
  if (out.cycles.size() == 1) {
    out.tag = ClassTag::Unicyclic;
    out.k = static_cast<int>(out.cycles[0].size());
    return out;
  }

  if (out.cycles[0].size() > out.cycles[1].size()) std::swap(out.cycles[0], out.cycles[1]);
  out.k = static_cast<int>(out.cycles[0].size());
  out.l = static_cast<int>(out.cycles[1].size());
  const VertexMask a = cycle_mask(out.cycles[0]);
  const VertexMask b = cycle_mask(out.cycles[1]);
  if (a & b) {
    out.tag = ClassTag::BicyclicSharedVertex;
    return out;
  }

  out.tag = ClassTag::BicyclicDisjoint;
  // Multi-source BFS from the first cycle until the second is reached.
  std::vector<int> parent(g.order(), -1);
  VertexMask seen = a;
  std::vector<int> queue = to_vertices(a);
  int hit = -1;
  for (std::size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
    const int u = queue[qi];
    for (VertexMask r = g.row(u) & ~seen; r; r &= r - 1) {
      const int w = std::countr_zero(r);
      seen |= bit(w);
      parent[w] = u;
      if (b & bit(w)) {
        hit = w;
        break;
      }
      queue.push_back(w);
    }
  }
  if (hit < 0) {
    out.t = 0;
    return out;
  }
  for (int v = hit; v != -1; v = parent[v]) out.connecting_path.push_back(v);
  std::reverse(out.connecting_path.begin(), out.connecting_path.end());
  out.t = static_cast<int>(out.connecting_path.size());
  return out;
}

std::optional<Matching> perfect_matching(const Graph& g, VertexMask within) {
  Matching m;
  if (match_rec(g, within & g.vertices(), m)) return m;
  return std::nullopt;
}

std::optional<Matching> perfect_matching(const Graph& g) {
  return perfect_matching(g, g.vertices());
}

}  // namespace gdet
