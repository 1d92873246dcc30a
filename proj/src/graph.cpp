#include "gdet/graph.hpp"

#include <algorithm>
#include <bit>

namespace gdet {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw GraphError("graph order " + std::to_string(n) + " outside [1, 64]");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_rows(int n, std::vector<VertexMask> rows) {
  check_order(n);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw GraphError("row count does not match graph order");
  }
  const VertexMask all = full_mask(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i] & ~all) throw GraphError("adjacency row has bits beyond order");
    if ((rows[i] >> i) & 1U) throw GraphError("loop at vertex " + std::to_string(i));
    for (VertexMask r = rows[i]; r; r &= r - 1) {
      int j = std::countr_zero(r);
      if (!((rows[j] >> i) & 1U)) throw GraphError("adjacency is not symmetric");
    }
  }
  return Graph(n, std::move(rows));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(n_));
  }
}

int Graph::degree(int v) const noexcept { return std::popcount(rows_[v]); }

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (VertexMask r : rows_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(rows_.size());
  std::transform(rows_.begin(), rows_.end(), out.begin(),
                 [](VertexMask r) { return std::popcount(r); });
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (VertexMask r = rows_[i] & ~full_mask(i + 1); r; r &= r - 1) {
      out.emplace_back(i, std::countr_zero(r));
    }
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.rows_[u] |= bit(v);
  g.rows_[v] |= bit(u);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  g.rows_[u] &= ~bit(v);
  g.rows_[v] &= ~bit(u);
  return g;
}

Graph Graph::induced(VertexMask keep) const {
  keep &= vertices();
  const int k = std::popcount(keep);
  if (k == 0) throw GraphError("induced subgraph on an empty vertex set");
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (VertexMask r = keep; r; r &= r - 1) index[std::countr_zero(r)] = next++;
  std::vector<VertexMask> rows(static_cast<std::size_t>(k), 0);
  for (VertexMask r = keep; r; r &= r - 1) {
    int v = std::countr_zero(r);
    for (VertexMask nb = rows_[v] & keep; nb; nb &= nb - 1) {
      rows[index[v]] |= bit(index[std::countr_zero(nb)]);
    }
  }
  return Graph(k, std::move(rows));
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (perm.size() != rows_.size()) throw GraphError("permutation size mismatch");
  std::vector<VertexMask> rows(rows_.size(), 0);
  VertexMask seen = 0;
  for (int v = 0; v < n_; ++v) {
    if (perm[v] < 0 || perm[v] >= n_ || (seen & bit(perm[v]))) {
      throw GraphError("relabeling is not a permutation");
    }
    seen |= bit(perm[v]);
  }
  for (int v = 0; v < n_; ++v) {
    VertexMask out = 0;
    for (VertexMask r = rows_[v]; r; r &= r - 1) out |= bit(perm[std::countr_zero(r)]);
    rows[perm[v]] = out;
  }
  return Graph(n_, std::move(rows));
}

std::strong_ordering operator<=>(const Graph& a, const Graph& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return a.rows_ <=> b.rows_;
}

Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  check_order(n);
  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has a vertex out of range");
    }
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    rows[u] |= bit(v);
    rows[v] |= bit(u);
  }
  return Graph::from_rows(n, std::move(rows));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  check_order(n);
  std::vector<VertexMask> rows(a.rows().begin(), a.rows().end());
  for (VertexMask r : b.rows()) rows.push_back(r << a.order());
  return Graph::from_rows(n, std::move(rows));
}

// graph6: N(n) followed by the upper triangle in column-major order
// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, most significant
// first, each byte biased by 63.
Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Graph6ParseError(Graph6Error::MalformedHeader, "empty graph6 line");

  auto value = [&](char c) -> int {
    if (c < 63 || c > 126) {
      throw Graph6ParseError(Graph6Error::BadCharacter,
                             "graph6 byte out of range: " + std::to_string(int(c)));
    }
    return c - 63;
  };

  std::size_t pos = 0;
  long n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') {
      throw Graph6ParseError(Graph6Error::OrderOutOfRange, "graph6 order exceeds 64");
    }
    if (text.size() < 4) {
      throw Graph6ParseError(Graph6Error::MalformedHeader, "truncated graph6 order field");
    }
    n = (long(value(text[1])) << 12) | (long(value(text[2])) << 6) | long(value(text[3]));
    pos = 4;
  } else {
    n = value(text[0]);
    pos = 1;
  }
  if (n < 1 || n > kMaxVertices) {
    throw Graph6ParseError(Graph6Error::OrderOutOfRange,
                           "graph6 order " + std::to_string(n) + " outside [1, 64]");
  }

  const std::size_t nbits = std::size_t(n) * std::size_t(n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes) {
    throw Graph6ParseError(Graph6Error::BadLength,
                           "graph6 body has " + std::to_string(text.size() - pos) +
                               " bytes, expected " + std::to_string(nbytes));
  }

  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = value(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  for (; k < nbytes * 6; ++k) {
    if ((value(text[pos + k / 6]) >> (5 - k % 6)) & 1) {
      throw Graph6ParseError(Graph6Error::TrailingBits, "nonzero graph6 padding bits");
    }
  }
  return Graph::from_rows(int(n), std::move(rows));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(char(n + 63));
  } else {
    out.push_back('~');
    out.push_back(char(((n >> 12) & 63) + 63));
    out.push_back(char(((n >> 6) & 63) + 63));
    out.push_back(char((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | int(g.has_edge(i, j));
      if (++filled == 6) {
        out.push_back(char(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(char((acc << (6 - filled)) + 63));
  return out;
}

Graph complete_graph(int n) {
  check_order(n);
  std::vector<VertexMask> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rows[i] = full_mask(n) & ~bit(i);
  return Graph::from_rows(n, std::move(rows));
}

Graph path_graph(int n) {
  check_order(n);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edge_list(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_edge_list(n, e);
}

Graph empty_graph(int n) { return Graph(n); }

}  // namespace gdet
