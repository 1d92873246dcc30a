#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gdet {

inline constexpr int kMaxVertices = 64;

using VertexMask = std::uint64_t;

constexpr VertexMask full_mask(int n) noexcept {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

constexpr VertexMask bit(int v) noexcept { return VertexMask{1} << v; }

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Graph6Error {
  MalformedHeader,
  OrderOutOfRange,
  BadCharacter,
  BadLength,
  TrailingBits,
};

class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(Graph6Error kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Graph6Error kind() const noexcept { return kind_; }

 private:
  Graph6Error kind_;
};

// Simple undirected graph on 1..64 vertices. Row i is a bitmask of the
// neighbours of vertex i. Values are immutable; the edit operations return
// a modified copy.
class Graph {
 public:
  explicit Graph(int n);

  // Validates symmetry and the zero diagonal.
  static Graph from_rows(int n, std::vector<VertexMask> rows);

  int order() const noexcept { return n_; }
  VertexMask row(int v) const noexcept { return rows_[v]; }
  std::span<const VertexMask> rows() const noexcept { return rows_; }
  VertexMask vertices() const noexcept { return full_mask(n_); }

  bool has_edge(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }
  int degree(int v) const noexcept;
  int edge_count() const noexcept;
  std::vector<int> degrees() const;
  std::vector<std::pair<int, int>> edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  // Subgraph induced on the vertices of `keep`, relabelled in increasing
  // order. Requires `keep` nonempty.
  Graph induced(VertexMask keep) const;

  // perm[v] is the new label of vertex v.
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;
  friend std::strong_ordering operator<=>(const Graph& a, const Graph& b);

 private:
  Graph(int n, std::vector<VertexMask> rows) : n_(n), rows_(std::move(rows)) {}

  void check_vertex(int v) const;

  int n_;
  std::vector<VertexMask> rows_;
};

Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);

// Block-diagonal union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// graph6 codec. Trailing CR/LF is ignored and an optional ">>graph6<<"
// header is accepted.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Standard families.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph empty_graph(int n);

}  // namespace gdet
