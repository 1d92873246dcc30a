#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdet/analysis.hpp"
#include "gdet/exact_int.hpp"
#include "gdet/graph.hpp"

namespace gdet {

// Raised when a closed form is asked about a graph outside its hypotheses.
class HypothesisViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ExactInt det_complete(int n);
ExactInt det_path(int n);  // det_path(0) == 1, the empty graph
ExactInt det_cycle(int m);

ExactInt det_tree_or_forest(const Graph& g);

// One of the eight cases for a connected graph with a unique cycle C of
// length k < n, numbered in the order they are usually stated.
struct HuCase {
  int index = 0;
  std::string description;
  ExactInt value;
};

HuCase hu_case(const Graph& g);
ExactInt det_unicyclic(const Graph& g);
ExactInt det_unicyclic_general(const Graph& g);

// Two cycles of orders k, l meeting in exactly one vertex and nothing else
// (n = k + l - 1).
ExactInt det_bicyclic_shared_formula(int k, int l);
ExactInt det_bicyclic_shared(const Graph& g);

// Two vertex-disjoint cycles C_k, C_l joined by a path on t >= 2 vertices
// with no further vertices, via the bridge-deletion recurrences.
struct DisjointBicyclicValue {
  ExactInt value;
  std::vector<ExactInt> advertised;  // the value set claimed for this t
  bool in_advertised = false;
};

DisjointBicyclicValue det_bicyclic_disjoint_formula(int k, int l, int t);
DisjointBicyclicValue det_bicyclic_disjoint(const Graph& g);

// {0, ±1, ±2, ±3, ±4, ±5, ±8, ±16}
const std::vector<ExactInt>& two_cycle_values();
bool two_cycle_value_set(const Graph& g);
bool two_cycle_value_set(const Graph& g, const ExactInt& det);

Rational ryser_bound(int n, int m);

// n^(n/2). Held as n^n so odd n compares exactly through |det|^2 <= n^n.
struct HadamardBound {
  int n = 0;
  ExactInt n_pow_n;
  std::optional<ExactInt> exact;  // n^(n/2) when it is an integer

  bool admits(const ExactInt& det) const;
  std::string to_string() const;
};

HadamardBound hadamard_bound(int n);

struct BoundReport {
  int n = 0;
  int m = 0;
  std::optional<Rational> ryser_bound;  // absent for n < 2
  HadamardBound hadamard;
  ExactInt det_abs;
  bool ryser_ok = true;
  bool ryser_tight = false;
  bool hadamard_ok = true;
};

BoundReport bound_report(const Graph& g, const ExactInt& det);

struct DivisibilityCertificate {
  int d = 0;  // gcd of the nonzero vertex degrees
  int q = 0;  // gcd(2m/d, d)
  int divisor = 0;
  bool trivial = false;  // an isolated vertex (or no edges) forces det = 0
  bool holds = false;
};

DivisibilityCertificate divisibility_certificate(const Graph& g, const ExactInt& det);
DivisibilityCertificate divisibility_certificate(const Graph& g);

struct ParityReport {
  bool odd_order_applicable = false;
  bool odd_order_even_det = true;
  bool bipartite_odd_applicable = false;
  bool bipartite_odd_zero = true;

  bool holds() const { return odd_order_even_det && bipartite_odd_zero; }
};

ParityReport parity_predicates(const Graph& g, const ExactInt& det);

struct ExtremalConstruction {
  int n = 0;
  ExactInt alpha_lower;
  ExactInt beta_upper;
  Graph alpha_witness{1};
  Graph beta_witness{1};
  std::string alpha_witness_name;
  std::string beta_witness_name;
};

ExtremalConstruction extremal_construction_bounds(int n);

struct FormulaResult {
  std::string formula_id;  // "none" when nothing applies
  bool applicable = false;
  std::optional<ExactInt> value;
  std::vector<ExactInt> value_set;
  ExactInt oracle;
  bool agrees = true;  // value == oracle and oracle in value_set (when present)
  std::string detail;
};

// Picks the most specific closed form for g and checks it against `oracle`.
FormulaResult evaluate_closed_form(const Graph& g, const GraphClass& cls, const ExactInt& oracle);

struct ErrataRecord {
  std::string graph6;
  std::string formula_id;
  std::string formula_value;
  std::string oracle_value;
};

std::optional<ErrataRecord> errata_for(const Graph& g, const FormulaResult& r);
std::string to_json_line(const ErrataRecord& e);

}  // namespace gdet
