#include "gdet/enumeration.hpp"

#include <bit>
#include <istream>
#include <mutex>
#include <sstream>

#include "gdet/canonical.hpp"
#include "gdet/determinant.hpp"

namespace gdet {

namespace {

int max_edges(int n) { return n * (n - 1) / 2; }

// Isomorphism-invariant edge key; the deletable edge of a graph is chosen
// among the edges with the largest key.
int edge_key(const Graph& h, int u, int v) {
  const int du = h.degree(u);
  const int dv = h.degree(v);
  const int common = std::popcount(h.row(u) & h.row(v));
  return (std::max(du, dv) << 12) | (std::min(du, dv) << 6) | common;
}

// Canonical-deletion test for h = parent + uv, where `parent` is itself in
// canonical form. Returns the canonical form of h when accepted.
std::optional<Graph> accept_child(const Graph& parent, const Graph& h, int u, int v) {
  const int key = edge_key(h, u, v);
  int ties = 0;
  for (int a = 0; a < h.order(); ++a) {
    for (VertexMask r = h.row(a) & ~full_mask(a + 1); r; r &= r - 1) {
      const int k = edge_key(h, a, std::countr_zero(r));
      if (k > key) return std::nullopt;
      if (k == key) ++ties;
    }
  }
  CanonicalForm cf = canonical_form(h);
  if (ties == 1) return std::move(cf.graph);

  // Among the top-key edges, the deletable one has the smallest pair of
  // canonical labels.
  int best_a = -1, best_b = -1;
  std::pair<int, int> best_label{kMaxVertices, kMaxVertices};
  for (int a = 0; a < h.order(); ++a) {
    for (VertexMask r = h.row(a) & ~full_mask(a + 1); r; r &= r - 1) {
      const int b = std::countr_zero(r);
      if (edge_key(h, a, b) != key) continue;
      const int la = cf.labeling[a], lb = cf.labeling[b];
      const std::pair<int, int> label{std::min(la, lb), std::max(la, lb)};
      if (label < best_label) {
        best_label = label;
        best_a = a;
        best_b = b;
      }
    }
  }
  if ((best_a == u && best_b == v) || (best_a == v && best_b == u)) return std::move(cf.graph);
  if (canonical_graph(h.without_edge(best_a, best_b)) == parent) return std::move(cf.graph);
  return std::nullopt;
}

std::vector<Graph> children(const Graph& g) {
  std::vector<Graph> out;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      const Graph h = g.with_edge(u, v);
      auto child = accept_child(g, h, u, v);
      if (!child) continue;
      if (std::find(out.begin(), out.end(), *child) == out.end()) out.push_back(std::move(*child));
    }
  }
  return out;
}

void plan_rec(const Graph& g, int edges, int level, const std::function<void(const Graph&)>& above,
              std::vector<Graph>& roots) {
  if (edges == level) {
    roots.push_back(g);
    return;
  }
  above(g);
  for (const Graph& c : children(g)) plan_rec(c, edges + 1, level, above, roots);
}

void expand_rec(const Graph& g, const std::function<void(const Graph&)>& visit) {
  visit(g);
  for (const Graph& c : children(g)) expand_rec(c, visit);
}

}  // namespace

void check_generation_budget(int n, const GenerateOptions& opt) {
  if (n < 1) throw BudgetExceeded("graph order must be at least 1");
  const int limit = opt.force_budget ? kHardMaxGenerationOrder : kDefaultMaxGenerationOrder;
  if (n > limit) {
    throw BudgetExceeded("generation of order " + std::to_string(n) + " exceeds budget " +
                         std::to_string(limit) +
                         (opt.force_budget ? "" : " (use --force-budget to raise it to 16)"));
  }
}

int default_shard_level(int n) { return (max_edges(n) + 3) / 4; }

namespace detail {

std::vector<Graph> plan_shards(int n, int level, const std::function<void(const Graph&)>& above) {
  level = std::clamp(level, 0, max_edges(n));
  std::vector<Graph> roots;
  plan_rec(Graph(n), 0, level, above, roots);
  return roots;
}

void expand_subtree(const Graph& root, const std::function<void(const Graph&)>& visit) {
  expand_rec(root, visit);
}

}  // namespace detail

std::vector<Graph> generate_all(int n, const GenerateOptions& opt) {
  using Acc = std::vector<Graph>;
  auto parts = enumerate_sharded<Acc>(n, opt, [](Acc& acc, const Graph& g) { acc.push_back(g); });
  std::vector<Graph> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()),
                                   std::make_move_iterator(p.end()));
  return out;
}

void for_each_graph(int n, const std::function<void(const Graph&)>& visit,
                    const GenerateOptions& opt) {
  if (opt.jobs <= 1) {
    check_generation_budget(n, opt);
    expand_rec(Graph(n), visit);
    return;
  }
  std::mutex mu;
  enumerate_sharded<int>(n, opt, [&](int&, const Graph& g) {
    std::lock_guard lock(mu);
    visit(g);
  });
}

void DetDistribution::add(const ExactInt& det, std::uint64_t count) {
  counts[det] += count;
  total += count;
}

void DetDistribution::merge(const DetDistribution& other) {
  for (const auto& [det, c] : other.counts) add(det, c);
}

ExactInt DetDistribution::alpha() const {
  if (counts.empty()) throw std::logic_error("empty distribution");
  return counts.rbegin()->first;
}

ExactInt DetDistribution::beta() const {
  if (counts.empty()) throw std::logic_error("empty distribution");
  return counts.begin()->first;
}

std::uint64_t DetDistribution::count_of(const ExactInt& det) const {
  auto it = counts.find(det);
  return it == counts.end() ? 0 : it->second;
}

DetDistribution distribution(int n, const GenerateOptions& opt) {
  DetDistribution init;
  init.n = n;
  auto parts = enumerate_sharded<DetDistribution>(
      n, opt, [](DetDistribution& d, const Graph& g) { d.add(determinant(g)); }, init);
  DetDistribution out = init;
  for (const auto& p : parts) out.merge(p);
  return out;
}

DetDistribution distribution_from_stream(std::istream& in) {
  DetDistribution out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g = [&] {
      try {
        return from_graph6(line);
      } catch (const Graph6ParseError& e) {
        throw Graph6ParseError(e.kind(), "line " + std::to_string(lineno) + ": " + e.what());
      }
    }();
    if (out.n == 0) {
      out.n = g.order();
    } else if (g.order() != out.n) {
      throw GraphError("line " + std::to_string(lineno) + ": graph order " +
                       std::to_string(g.order()) + " differs from stream order " +
                       std::to_string(out.n));
    }
    out.add(determinant(g));
  }
  return out;
}

std::string to_tsv(const DetDistribution& d) {
  std::ostringstream os;
  for (const auto& [det, c] : d.counts) os << det << '\t' << c << '\n';
  return os.str();
}

namespace {

struct ExtremalAcc {
  bool any = false;
  ExactInt alpha, beta;
  std::vector<Graph> alpha_graphs, beta_graphs;

  void offer(const ExactInt& det, const Graph& g) {
    if (!any || det > alpha) {
      alpha = det;
      alpha_graphs.clear();
    }
    if (!any || det < beta) {
      beta = det;
      beta_graphs.clear();
    }
    any = true;
    if (det == alpha) alpha_graphs.push_back(g);
    if (det == beta) beta_graphs.push_back(g);
  }
};

Witness make_witness(const Graph& g) {
  return Witness{to_graph6(g), is_connected(g), classify(g)};
}

}  // namespace

ExtremalReport extremal(int n, const GenerateOptions& opt) {
  auto parts = enumerate_sharded<ExtremalAcc>(
      n, opt, [](ExtremalAcc& acc, const Graph& g) { acc.offer(determinant(g), g); });
  ExtremalAcc all;
  for (const auto& p : parts) {
    if (!p.any) continue;
    for (const Graph& g : p.alpha_graphs) all.offer(p.alpha, g);
    for (const Graph& g : p.beta_graphs) {
      if (p.beta != p.alpha) all.offer(p.beta, g);
    }
  }
  ExtremalReport r;
  r.n = n;
  r.alpha = all.alpha;
  r.beta = all.beta;
  for (const Graph& g : all.alpha_graphs) r.alpha_witnesses.push_back(make_witness(g));
  for (const Graph& g : all.beta_graphs) r.beta_witnesses.push_back(make_witness(g));
  r.witness_check_applicable = n > 5;
  if (r.witness_check_applicable) {
    for (const auto* list : {&r.alpha_witnesses, &r.beta_witnesses}) {
      for (const Witness& w : *list) {
        if (w.cls.tag == ClassTag::Unicyclic) r.witness_check_holds = false;
      }
    }
  }
  return r;
}

std::vector<ExactInt> absent_values(const DetDistribution& d) {
  std::vector<ExactInt> out;
  for (ExactInt x = d.beta(); x <= d.alpha(); x += ExactInt(1)) {
    if (!d.counts.contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<ExactInt> absent_values(int n, const GenerateOptions& opt) {
  return absent_values(distribution(n, opt));
}

Rational ZeroFraction::reduced() const {
  return Rational(BigInt(zeros), BigInt(total));
}

std::string ZeroFraction::to_string() const {
  return std::to_string(zeros) + "/" + std::to_string(total);
}

ZeroFraction zero_fraction(const DetDistribution& d) {
  return ZeroFraction{d.count_of(ExactInt(0)), d.total};
}

ZeroFraction zero_fraction(int n, const GenerateOptions& opt) {
  return zero_fraction(distribution(n, opt));
}

}  // namespace gdet
