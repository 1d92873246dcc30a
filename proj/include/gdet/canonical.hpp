#pragma once

#include <string>
#include <vector>

#include "gdet/graph.hpp"

namespace gdet {

// Canonical labelling of a graph. `graph` is the relabelled graph, whose
// row-major upper triangle is the lexicographically least among the leaves of
// the refinement search (not necessarily over all n! labellings); `labeling[v]`
// is the canonical label of input vertex v. Isomorphic inputs produce equal
// `graph` values.
struct CanonicalForm {
  Graph graph{1};
  std::vector<int> labeling;
  std::vector<std::vector<int>> automorphisms;  // generators found during the search

  std::string upper_triangle() const;
};

CanonicalForm canonical_form(const Graph& g);

// Just the canonical graph; used in hot loops.
Graph canonical_graph(const Graph& g);

// Row-major upper-triangle bitstring ("0"/"1" per pair (i,j), i < j).
std::string upper_triangle_bits(const Graph& g);

}  // namespace gdet
