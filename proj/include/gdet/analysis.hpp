#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gdet/graph.hpp"

namespace gdet {

std::vector<VertexMask> component_masks(const Graph& g);

// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

bool is_connected(const Graph& g);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> coloring;   // 0/1 per vertex when bipartite
  std::vector<int> odd_cycle;  // vertex sequence of an odd cycle otherwise
};

BipartiteResult is_bipartite(const Graph& g);

inline constexpr int kDefaultCycleCap = 64;

class CycleBudgetExceeded : public std::runtime_error {
 public:
  explicit CycleBudgetExceeded(int cap)
      : std::runtime_error("more than " + std::to_string(cap) + " simple cycles"), cap_(cap) {}
  int cap() const noexcept { return cap_; }

 private:
  int cap_;
};

// A simple cycle as a vertex sequence starting at its smallest vertex, with
// the second vertex smaller than the last (one representative per
// rotation/reflection class).
using Cycle = std::vector<int>;

struct CycleList {
  std::vector<Cycle> cycles;
};

// Throws CycleBudgetExceeded once more than `cap` cycles are found.
CycleList find_all_cycles(const Graph& g, int cap = kDefaultCycleCap);

VertexMask cycle_mask(const Cycle& c);

// m - n + c for the subgraph induced on `component`.
int cyclomatic_number(const Graph& g, VertexMask component);

enum class ClassTag {
  Forest,
  Unicyclic,
  BicyclicSharedVertex,
  BicyclicDisjoint,
  MultiCycle,
};

std::string to_string(ClassTag tag);

struct ComponentClass {
  std::vector<int> vertices;
  ClassTag tag;
};

// k <= l for the bicyclic tags. For BicyclicDisjoint, t counts the vertices
// of the path joining the cycles including both endpoints (t = 2 when a
// single edge joins them) and t = 0 when the cycles lie in different
// components.
struct GraphClass {
  ClassTag tag = ClassTag::Forest;
  int k = 0;
  int l = 0;
  int t = 0;
  std::vector<Cycle> cycles;         // the found cycles, ordered to match (k, l)
  std::vector<int> connecting_path;  // z_1..z_t for same-component BicyclicDisjoint
  std::vector<ComponentClass> per_component;

  std::string describe() const;
};

GraphClass classify(const Graph& g);

using Matching = std::vector<std::pair<int, int>>;

// Perfect matching on the vertices of `within` (the whole graph by default).
// The empty vertex set has the empty matching.
std::optional<Matching> perfect_matching(const Graph& g, VertexMask within);
std::optional<Matching> perfect_matching(const Graph& g);

inline bool has_perfect_matching(const Graph& g) { return perfect_matching(g).has_value(); }

}  // namespace gdet
