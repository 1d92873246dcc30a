#include "gdet/closed_forms.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "gdet/determinant.hpp"

namespace gdet {

namespace {

// (-1)^e
int neg1(int e) { return (e % 2 == 0) ? 1 : -1; }

std::string set_string(const std::vector<ExactInt>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i].to_string();
  }
  return out + "}";
}

bool contains(const std::vector<ExactInt>& s, const ExactInt& x) {
  return std::find(s.begin(), s.end(), x) != s.end();
}

std::vector<ExactInt> ints(std::initializer_list<long long> xs) {
  return {xs.begin(), xs.end()};
}

bool is_path(const Graph& g) {
  if (g.edge_count() != g.order() - 1 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

bool is_complete(const Graph& g) {
  return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

ExactInt tree_component_det(const Graph& g, VertexMask comp) {
  const int size = std::popcount(comp);
  if (!perfect_matching(g, comp)) return ExactInt(0);
  return ExactInt(neg1(size / 2));
}

int gcd_int(int a, int b) { return std::gcd(a, b); }

}  // namespace

ExactInt det_complete(int n) {
  if (n < 1) throw HypothesisViolation("det_complete needs n >= 1");
  return ExactInt(neg1(n - 1) * (n - 1));
}

ExactInt det_path(int n) {
  if (n < 0) throw HypothesisViolation("det_path needs n >= 0");
  if (n % 2) return ExactInt(0);
  return ExactInt(neg1(n / 2));
}

ExactInt det_cycle(int m) {
  if (m < 3) throw HypothesisViolation("det_cycle needs m >= 3");
  if (m % 2) return ExactInt(2);
  return (m / 2) % 2 == 0 ? ExactInt(0) : ExactInt(-4);
}

ExactInt det_tree_or_forest(const Graph& g) {
  if (g.edge_count() != g.order() - static_cast<int>(component_masks(g).size())) {
    throw HypothesisViolation("det_tree_or_forest: graph contains a cycle");
  }
  ExactInt out(1);
  for (VertexMask c : component_masks(g)) out *= tree_component_det(g, c);
  return out;
}

HuCase hu_case(const Graph& g) {
  const GraphClass cls = classify(g);
  if (cls.tag != ClassTag::Unicyclic || !is_connected(g)) {
    throw HypothesisViolation("hu_case: graph is not connected unicyclic");
  }
  const int n = g.order();
  const int k = cls.k;
  if (k >= n) throw HypothesisViolation("hu_case: cycle spans the graph (use det_cycle)");

  if (has_perfect_matching(g)) {
    if (k % 2 == 1) {
      return n % 4 == 0 ? HuCase{1, "perfect matching, k odd, n = 0 mod 4", ExactInt(1)}
                        : HuCase{2, "perfect matching, k odd, n = 2 mod 4", ExactInt(-1)};
    }
    if (k % 4 == 2) {
      return n % 4 == 0 ? HuCase{3, "perfect matching, k = 2 mod 4, n = 0 mod 4", ExactInt(4)}
                        : HuCase{4, "perfect matching, k = 2 mod 4, n = 2 mod 4", ExactInt(-4)};
    }
    return HuCase{5, "perfect matching, k = 0 mod 4", ExactInt(0)};
  }
  const VertexMask rest = g.vertices() & ~cycle_mask(cls.cycles[0]);
  if (perfect_matching(g, rest)) {
    return (n - k) % 4 == 0
               ? HuCase{6, "no perfect matching, G-C has one, n-k = 0 mod 4", ExactInt(2)}
               : HuCase{7, "no perfect matching, G-C has one, n-k = 2 mod 4", ExactInt(-2)};
  }
  return HuCase{8, "neither G nor G-C has a perfect matching", ExactInt(0)};
}

ExactInt det_unicyclic(const Graph& g) { return hu_case(g).value; }

ExactInt det_unicyclic_general(const Graph& g) {
  const GraphClass cls = classify(g);
  if (cls.tag != ClassTag::Unicyclic) {
    throw HypothesisViolation("det_unicyclic_general: graph does not have exactly one cycle");
  }
  const VertexMask cyc = cycle_mask(cls.cycles[0]);
  ExactInt out(1);
  for (VertexMask c : component_masks(g)) {
    if (c & cyc) {
      const Graph sub = g.induced(c);
      out *= std::popcount(c) == cls.k ? det_cycle(cls.k) : det_unicyclic(sub);
    } else {
      out *= tree_component_det(g, c);
    }
    if (out.is_zero()) break;
  }
  return out;
}

ExactInt det_bicyclic_shared_formula(int k, int l) {
  if (k < 3 || l < 3) throw HypothesisViolation("cycle orders must be >= 3");
  const int outer = 2 * neg1(l + k - 1);
  if (k % 2 == 0 && l % 2 == 0) return ExactInt(0);
  if (k % 2 == 1 && l % 2 == 1) {
    return ExactInt(outer * (neg1((l - 1) / 2 + 1) + neg1((k - 1) / 2 + 1)));
  }
  if (k % 2 == 1) {
    return ExactInt(outer * (neg1(l / 2 + (k - 1) / 2) + neg1((k - 1) / 2 + 1)));
  }
  return ExactInt(outer * (neg1(k / 2 + (l - 1) / 2) + neg1((l - 1) / 2 + 1)));
}

ExactInt det_bicyclic_shared(const Graph& g) {
  const GraphClass cls = classify(g);
  if (cls.tag != ClassTag::BicyclicSharedVertex || g.order() != cls.k + cls.l - 1) {
    throw HypothesisViolation(
        "det_bicyclic_shared: needs two cycles sharing one vertex with n = k + l - 1");
  }
  return det_bicyclic_shared_formula(cls.k, cls.l);
}

DisjointBicyclicValue det_bicyclic_disjoint_formula(int k, int l, int t) {
  if (k < 3 || l < 3 || t < 2) throw HypothesisViolation("need k, l >= 3 and t >= 2");
  DisjointBicyclicValue out;
  if (t == 2) {
    // Bridge between the cycles.
    out.value = det_cycle(k) * det_cycle(l) - det_path(k - 1) * det_path(l - 1);
    out.advertised = ints({-8, 0, 3, 5, 16});
  } else {
    // H is C_k with the path z_2..z_{t-1} hanging off x_k; the bridge
    // z_{t-1} y_l splits G into H and C_l.
    auto pendant = [&](int extra) -> ExactInt {
      if (extra == 0) return det_cycle(k);
      if (extra == 1) return -det_path(k - 1);
      return det_cycle(k) * det_path(extra) - det_path(k - 1) * det_path(extra - 1);
    };
    const ExactInt det_h = pendant(t - 2);
    const ExactInt det_h_minus = pendant(t - 3);
    out.value = det_h * det_cycle(l) - det_h_minus * det_path(l - 1);
    if (t == 3) out.advertised = ints({-4, 0, 4});
    else if (t == 4) out.advertised = ints({-16, -8, -5, -3, 0});
    else out.advertised = ints({-16, -8, -5, -4, -3, 0, 3, 4, 5, 8, 16});
  }
  out.in_advertised = contains(out.advertised, out.value);
  return out;
}

DisjointBicyclicValue det_bicyclic_disjoint(const Graph& g) {
  const GraphClass cls = classify(g);
  if (cls.tag != ClassTag::BicyclicDisjoint || cls.t < 2 ||
      g.order() != cls.k + cls.l + cls.t - 2) {
    throw HypothesisViolation(
        "det_bicyclic_disjoint: needs two disjoint cycles joined by a path, nothing else");
  }
  return det_bicyclic_disjoint_formula(cls.k, cls.l, cls.t);
}

const std::vector<ExactInt>& two_cycle_values() {
  static const std::vector<ExactInt> values =
      ints({-16, -8, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 8, 16});
  return values;
}

bool two_cycle_value_set(const Graph& g, const ExactInt& det) {
  const ClassTag tag = classify(g).tag;
  if (tag != ClassTag::BicyclicSharedVertex && tag != ClassTag::BicyclicDisjoint) {
    throw HypothesisViolation("two_cycle_value_set: graph does not have exactly two cycles");
  }
  return contains(two_cycle_values(), det);
}

bool two_cycle_value_set(const Graph& g) { return two_cycle_value_set(g, determinant(g)); }

Rational ryser_bound(int n, int m) {
  if (n < 2) throw HypothesisViolation("ryser_bound needs n >= 2");
  if (m < 0 || m > n * (n - 1) / 2) throw HypothesisViolation("edge count out of range");
  const Rational ratio(BigInt(2 * m), BigInt(n));
  const Rational tail =
      Rational(1) - Rational(BigInt(2 * m - n), BigInt(std::int64_t(n) * (n - 1)));
  Rational out(1);
  for (int i = 0; i < n; ++i) out *= ratio;
  for (int i = 0; i + 1 < n; ++i) out *= tail;
  return out;
}

bool HadamardBound::admits(const ExactInt& det) const { return det * det <= n_pow_n; }

std::string HadamardBound::to_string() const {
  if (exact) return exact->to_string();
  return std::to_string(n) + "^(" + std::to_string(n) + "/2)";
}

HadamardBound hadamard_bound(int n) {
  if (n < 1) throw HypothesisViolation("hadamard_bound needs n >= 1");
  HadamardBound b;
  b.n = n;
  b.n_pow_n = pow(ExactInt(n), static_cast<unsigned>(n));
  if (n % 2 == 0) {
    b.exact = pow(ExactInt(n), static_cast<unsigned>(n / 2));
  } else {
    int r = 1;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r == n) b.exact = pow(ExactInt(r), static_cast<unsigned>(n));
  }
  return b;
}

BoundReport bound_report(const Graph& g, const ExactInt& det) {
  BoundReport r;
  r.n = g.order();
  r.m = g.edge_count();
  r.det_abs = det.abs();
  r.hadamard = hadamard_bound(r.n);
  r.hadamard_ok = r.hadamard.admits(det);
  if (r.n >= 2) {
    r.ryser_bound = ryser_bound(r.n, r.m);
    const Rational a = r.det_abs.to_rational();
    r.ryser_ok = a <= *r.ryser_bound;
    r.ryser_tight = a == *r.ryser_bound;
  }
  return r;
}

DivisibilityCertificate divisibility_certificate(const Graph& g, const ExactInt& det) {
  DivisibilityCertificate c;
  const auto degs = g.degrees();
  const int two_m = 2 * g.edge_count();
  for (int d : degs) {
    if (d > 0) c.d = gcd_int(c.d, d);
    if (d == 0) c.trivial = true;
  }
  if (c.d == 0) {
    c.holds = det.is_zero();
    return c;
  }
  c.q = gcd_int(two_m / c.d, c.d);
  c.divisor = c.d * c.q;
  c.holds = (det % ExactInt(c.divisor)).is_zero();
  return c;
}

DivisibilityCertificate divisibility_certificate(const Graph& g) {
  return divisibility_certificate(g, determinant(g));
}

ParityReport parity_predicates(const Graph& g, const ExactInt& det) {
  ParityReport p;
  if (g.order() % 2 == 1) {
    p.odd_order_applicable = true;
    p.odd_order_even_det = det.is_even();
    if (is_bipartite(g).bipartite) {
      p.bipartite_odd_applicable = true;
      p.bipartite_odd_zero = det.is_zero();
    }
  }
  return p;
}

ExtremalConstruction extremal_construction_bounds(int n) {
  if (n < 4) throw HypothesisViolation("extremal_construction_bounds needs n >= 4");
  ExtremalConstruction e;
  e.n = n;
  const std::string ns = std::to_string(n);
  const std::string n2 = std::to_string(n - 2);
  if (n % 2 == 1) {
    e.alpha_lower = ExactInt(n - 1);
    e.alpha_witness = complete_graph(n);
    e.alpha_witness_name = "K" + ns;
    e.beta_upper = ExactInt(-2);
    e.beta_witness = disjoint_union(cycle_graph(n - 2), path_graph(2));
    e.beta_witness_name = "C" + n2 + "+P2";
  } else {
    e.alpha_lower = ExactInt(n - 3);
    e.alpha_witness = disjoint_union(complete_graph(n - 2), path_graph(2));
    e.alpha_witness_name = "K" + n2 + "+P2";
    e.beta_upper = ExactInt(-(n - 1));
    e.beta_witness = complete_graph(n);
    e.beta_witness_name = "K" + ns;
  }
  if (determinant(e.alpha_witness) != e.alpha_lower ||
      determinant(e.beta_witness) != e.beta_upper) {
    throw std::logic_error("extremal witness determinant disagrees with construction");
  }
  return e;
}

FormulaResult evaluate_closed_form(const Graph& g, const GraphClass& cls, const ExactInt& oracle) {
  FormulaResult r;
  r.oracle = oracle;
  const int n = g.order();
  auto single = [&](std::string id, ExactInt v) {
    r.formula_id = std::move(id);
    r.applicable = true;
    r.value = std::move(v);
  };

  if (is_complete(g)) {
    single("complete", det_complete(n));
  } else if (cls.tag == ClassTag::Forest) {
    if (is_path(g)) single("path", det_path(n));
    else single("forest", det_tree_or_forest(g));
  } else if (cls.tag == ClassTag::Unicyclic) {
    if (cls.k == n) {
      single("cycle", det_cycle(n));
    } else if (is_connected(g)) {
      HuCase h = hu_case(g);
      single("hu-unicyclic", h.value);
      r.detail = "case " + std::to_string(h.index) + ": " + h.description;
    } else {
      single("unicyclic-general", det_unicyclic_general(g));
    }
  } else if (cls.tag == ClassTag::BicyclicSharedVertex && n == cls.k + cls.l - 1) {
    single("bicyclic-shared", det_bicyclic_shared_formula(cls.k, cls.l));
  } else if (cls.tag == ClassTag::BicyclicDisjoint && cls.t >= 2 &&
             n == cls.k + cls.l + cls.t - 2) {
    DisjointBicyclicValue v = det_bicyclic_disjoint_formula(cls.k, cls.l, cls.t);
    single("bicyclic-disjoint", v.value);
    r.value_set = std::move(v.advertised);
  } else if (cls.tag == ClassTag::BicyclicSharedVertex || cls.tag == ClassTag::BicyclicDisjoint) {
    r.formula_id = "two-cycle-set";
    r.applicable = true;
    r.value_set = two_cycle_values();
  } else {
    r.formula_id = "none";
    return r;
  }

  if (r.value && *r.value != oracle) r.agrees = false;
  if (!r.value_set.empty() && !contains(r.value_set, oracle)) r.agrees = false;
  return r;
}

std::optional<ErrataRecord> errata_for(const Graph& g, const FormulaResult& r) {
  if (!r.applicable || r.agrees) return std::nullopt;
  ErrataRecord e;
  e.graph6 = to_graph6(g);
  e.formula_id = r.formula_id;
  if (r.value && *r.value != r.oracle) {
    e.formula_value = r.value->to_string();
  } else {
    e.formula_id += "/value-set";
    e.formula_value = set_string(r.value_set);
  }
  e.oracle_value = r.oracle.to_string();
  return e;
}

std::string to_json_line(const ErrataRecord& e) {
  nlohmann::ordered_json j;
  j["graph6"] = e.graph6;
  j["formula_id"] = e.formula_id;
  j["formula_value"] = e.formula_value;
  j["oracle_value"] = e.oracle_value;
  return j.dump();
}

}  // namespace gdet
