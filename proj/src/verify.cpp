#include "gdet/verify.hpp"

#include <algorithm>
#include <functional>

#include "gdet/determinant.hpp"
#include "gdet/reference_table.hpp"

namespace gdet {

namespace {

using Check = std::function<void(VerifyReport&, const Graph&)>;

VerifyReport sweep(const std::string& suite, int n, const GenerateOptions& opt, const Check& check) {
  VerifyReport init;
  init.suite = suite;
  init.n = n;
  auto parts = enumerate_sharded<VerifyReport>(
      n, opt,
      [&](VerifyReport& r, const Graph& g) {
        ++r.graphs_checked;
        check(r, g);
      },
      init);
  VerifyReport out = init;
  for (const auto& p : parts) out.merge(p);
  return out;
}

void fail(VerifyReport& r, const Graph& g, std::string expected, std::string got) {
  r.failures.push_back({to_graph6(g), std::move(expected), std::move(got)});
}

void check_engines(VerifyReport& r, const Graph& g) {
  ++r.applicable;
  const ExactInt bareiss = determinant(g);
  const IntMatrix a = adjacency_matrix(g);
  if (det_bareiss(a) != bareiss) fail(r, g, bareiss.to_string(), "matrix bareiss " + det_bareiss(a).to_string());
  if (g.order() <= kLeibnizMaxOrder) {
    const ExactInt leibniz = det_leibniz(a);
    if (leibniz != bareiss) fail(r, g, bareiss.to_string(), "leibniz " + leibniz.to_string());
  }
  if (g.order() <= 8) {
    const ExactInt sachs = det_sachs(g);
    if (sachs != bareiss) fail(r, g, bareiss.to_string(), "sachs " + sachs.to_string());
  }
}

void check_closed_forms(VerifyReport& r, const Graph& g) {
  const ExactInt det = determinant(g);
  const FormulaResult f = evaluate_closed_form(g, classify(g), det);
  if (!f.applicable) return;
  ++r.applicable;
  if (auto e = errata_for(g, f)) {
    fail(r, g, e->formula_id + "=" + e->formula_value, det.to_string());
    r.errata.push_back(*e);
  }
}

void check_bounds(VerifyReport& r, const Graph& g) {
  ++r.applicable;
  const ExactInt det = determinant(g);
  const BoundReport b = bound_report(g, det);
  if (!b.ryser_ok) fail(r, g, "|det| <= ryser " + to_string(*b.ryser_bound), det.to_string());
  if (!b.hadamard_ok) fail(r, g, "|det| <= hadamard " + b.hadamard.to_string(), det.to_string());
}

void check_divisibility(VerifyReport& r, const Graph& g) {
  if (g.edge_count() == 0) return;
  ++r.applicable;
  const ExactInt det = determinant(g);
  const DivisibilityCertificate c = divisibility_certificate(g, det);
  if (!c.holds) fail(r, g, std::to_string(c.divisor) + " | det", det.to_string());
}

void check_parity(VerifyReport& r, const Graph& g) {
  const ExactInt det = determinant(g);
  const ParityReport p = parity_predicates(g, det);
  if (!p.odd_order_applicable) return;
  ++r.applicable;
  if (!p.odd_order_even_det) fail(r, g, "even determinant (odd order)", det.to_string());
  if (!p.bipartite_odd_zero) fail(r, g, "zero determinant (bipartite, odd order)", det.to_string());
}

void check_two_cycles(VerifyReport& r, const Graph& g) {
  const ClassTag tag = classify(g).tag;
  if (tag != ClassTag::BicyclicSharedVertex && tag != ClassTag::BicyclicDisjoint) return;
  ++r.applicable;
  const ExactInt det = determinant(g);
  if (!two_cycle_value_set(g, det)) fail(r, g, "det in two-cycle value set", det.to_string());
}

VerifyReport table_suite(int n, const GenerateOptions& opt) {
  const DetDistribution d = distribution(n, opt);
  VerifyReport r;
  r.suite = "table";
  r.n = n;
  r.graphs_checked = d.total;
  r.applicable = d.total;
  const TableComparison c = compare_with_published(d);
  if (c.verdict == TableVerdict::NotEmbedded) {
    r.applicable = 0;
    return r;
  }
  for (const TableDelta& delta : c.deltas) {
    r.failures.push_back({"det=" + std::to_string(delta.det),
                          "published count " + std::to_string(delta.published_count),
                          "computed count " + std::to_string(delta.computed_count)});
  }
  return r;
}

VerifyReport extremal_suite(int n, const GenerateOptions& opt) {
  const ExtremalReport e = extremal(n, opt);
  VerifyReport r;
  r.suite = "extremal-class";
  r.n = n;
  r.graphs_checked = e.alpha_witnesses.size() + e.beta_witnesses.size();
  if (!e.witness_check_applicable) return r;
  r.applicable = r.graphs_checked;
  for (const auto* list : {&e.alpha_witnesses, &e.beta_witnesses}) {
    for (const Witness& w : *list) {
      if (w.cls.tag == ClassTag::Unicyclic) {
        r.failures.push_back({w.graph6, "extremal witness without a unique cycle", w.cls.describe()});
      }
    }
  }
  return r;
}

}  // namespace

void VerifyReport::merge(const VerifyReport& other) {
  graphs_checked += other.graphs_checked;
  applicable += other.applicable;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  errata.insert(errata.end(), other.errata.begin(), other.errata.end());
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "engines", "closed-forms", "bounds", "divisibility",
      "parity",  "two-cycles",   "table",  "extremal-class"};
  return names;
}

VerifyReport verify_suite(const std::string& suite, int n, const GenerateOptions& opt) {
  if (suite == "engines") {
    if (n > kLeibnizMaxOrder) {
      throw BudgetExceeded("engines suite needs n <= " + std::to_string(kLeibnizMaxOrder));
    }
    return sweep(suite, n, opt, check_engines);
  }
  if (suite == "closed-forms") return sweep(suite, n, opt, check_closed_forms);
  if (suite == "bounds") return sweep(suite, n, opt, check_bounds);
  if (suite == "divisibility") return sweep(suite, n, opt, check_divisibility);
  if (suite == "parity") return sweep(suite, n, opt, check_parity);
  if (suite == "two-cycles") return sweep(suite, n, opt, check_two_cycles);
  if (suite == "table") return table_suite(n, opt);
  if (suite == "extremal-class") return extremal_suite(n, opt);
  throw UnknownSuite(suite);
}

}  // namespace gdet
