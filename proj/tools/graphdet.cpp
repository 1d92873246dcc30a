// graphdet: exact determinants of graph adjacency matrices, closed-form
// checks, and exhaustive determinant distributions.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "gdet/analysis.hpp"
#include "gdet/canonical.hpp"
#include "gdet/closed_forms.hpp"
#include "gdet/determinant.hpp"
#include "gdet/enumeration.hpp"
#include "gdet/reference_table.hpp"
#include "gdet/verify.hpp"

using namespace gdet;
using nlohmann::ordered_json;

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kParseError = 3,
  kBudget = 4,
  kUnknownSuite = 5,
  kIoError = 6,
};

struct Config {
  int n = 0;
  std::string input;
  std::string graph6;
  std::string format = "tsv";
  int jobs = 1;
  bool force_budget = false;
  std::string suite;
  std::string errata_path;
  std::string discrepancy_path;
};

GenerateOptions options(const Config& c) {
  GenerateOptions o;
  o.jobs = c.jobs > 0 ? c.jobs : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  o.force_budget = c.force_budget;
  return o;
}

bool json_mode(const Config& c) { return c.format == "json-lines"; }

ordered_json json_int(const ExactInt& x) {
  if (auto v = x.to_int64()) return *v;
  return x.to_string();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Either graph6 lines or an edge list whose first line is the vertex count
// followed by "u v" lines ('#' starts a comment).
std::vector<Graph> read_graphs(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos && !line.starts_with(">>")) {
      line.resize(hash);
    }
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  std::vector<Graph> out;
  if (lines.empty()) return out;
  const bool edge_list = std::all_of(lines[0].begin(), lines[0].end(),
                                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
  if (!edge_list) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      try {
        out.push_back(from_graph6(lines[i]));
      } catch (const Graph6ParseError& e) {
        throw Graph6ParseError(e.kind(), "line " + std::to_string(i + 1) + ": " + e.what());
      }
    }
    return out;
  }
  const int n = std::stoi(lines[0]);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    int u, v;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) {
      throw GraphError("edge list line " + std::to_string(i + 1) + ": expected two vertex indices");
    }
    edges.emplace_back(u, v);
  }
  out.push_back(from_edge_list(n, edges));
  return out;
}

std::vector<Graph> load_input(const Config& c) {
  if (!c.graph6.empty()) {
    std::istringstream in(c.graph6);
    return read_graphs(in);
  }
  if (c.input.empty() || c.input == "-") return read_graphs(std::cin);
  std::ifstream in(c.input);
  if (!in) throw std::ios_base::failure("cannot open " + c.input);
  return read_graphs(in);
}

DetDistribution load_distribution(const Config& c) {
  if (!c.input.empty()) {
    if (c.input == "-") return distribution_from_stream(std::cin);
    std::ifstream in(c.input);
    if (!in) throw std::ios_base::failure("cannot open " + c.input);
    return distribution_from_stream(in);
  }
  if (c.n <= 0) throw CLI::ValidationError("-n", "either -n or --input is required");
  return distribution(c.n, options(c));
}

int cmd_det(const Config& c) {
  const auto graphs = load_input(c);
  if (graphs.empty()) throw GraphError("no graph given");
  bool all_ok = true;
  bool first = true;
  for (const Graph& g : graphs) {
    const ExactInt det = determinant(g);
    const GraphClass cls = classify(g);
    const FormulaResult f = evaluate_closed_form(g, cls, det);
    const BoundReport b = bound_report(g, det);
    const DivisibilityCertificate dc = divisibility_certificate(g, det);
    const ParityReport p = parity_predicates(g, det);
    std::optional<ExactInt> leibniz;
    if (g.order() <= kLeibnizMaxOrder) leibniz = det_leibniz(adjacency_matrix(g));
    const bool ok = f.agrees && b.ryser_ok && b.hadamard_ok && dc.holds && p.holds() &&
                    (!leibniz || *leibniz == det);
    all_ok = all_ok && ok;

    if (json_mode(c)) {
      ordered_json j;
      j["graph6"] = to_graph6(g);
      j["n"] = g.order();
      j["m"] = g.edge_count();
      j["det"] = json_int(det);
      if (leibniz) j["det_leibniz"] = json_int(*leibniz);
      j["class"] = cls.describe();
      j["closed_form"] = f.formula_id;
      if (f.value) j["closed_form_value"] = json_int(*f.value);
      if (!f.value_set.empty()) {
        ordered_json set = ordered_json::array();
        for (const auto& x : f.value_set) set.push_back(json_int(x));
        j["closed_form_value_set"] = set;
      }
      if (f.applicable) j["closed_form_agrees"] = f.agrees;
      if (!f.detail.empty()) j["closed_form_detail"] = f.detail;
      if (b.ryser_bound) {
        j["ryser_bound"] = to_string(*b.ryser_bound);
        j["ryser_ok"] = b.ryser_ok;
        j["ryser_tight"] = b.ryser_tight;
      }
      j["hadamard_bound"] = b.hadamard.to_string();
      j["hadamard_ok"] = b.hadamard_ok;
      j["divisibility"] = {{"d", dc.d}, {"q", dc.q}, {"divisor", dc.divisor},
                           {"trivial", dc.trivial}, {"holds", dc.holds}};
      j["odd_order_even_det"] =
          p.odd_order_applicable ? ordered_json(p.odd_order_even_det) : ordered_json(nullptr);
      j["bipartite_odd_zero"] =
          p.bipartite_odd_applicable ? ordered_json(p.bipartite_odd_zero) : ordered_json(nullptr);
      std::cout << j.dump() << '\n';
      continue;
    }

    if (!first) std::cout << '\n';
    first = false;
    std::cout << "graph6\t" << to_graph6(g) << '\n'
              << "n\t" << g.order() << '\n'
              << "m\t" << g.edge_count() << '\n'
              << "det\t" << det << '\n';
    if (leibniz) std::cout << "det_leibniz\t" << *leibniz << '\n';
    std::cout << "class\t" << cls.describe() << '\n' << "closed_form\t" << f.formula_id << '\n';
    if (f.value) std::cout << "closed_form_value\t" << *f.value << '\n';
    if (!f.value_set.empty()) {
      std::cout << "closed_form_value_set\t";
      for (std::size_t i = 0; i < f.value_set.size(); ++i) std::cout << (i ? "," : "") << f.value_set[i];
      std::cout << '\n';
    }
    if (f.applicable) std::cout << "closed_form_agrees\t" << yes_no(f.agrees) << '\n';
    if (!f.detail.empty()) std::cout << "closed_form_detail\t" << f.detail << '\n';
    if (b.ryser_bound) {
      std::cout << "ryser_bound\t" << to_string(*b.ryser_bound) << '\n'
                << "ryser_ok\t" << yes_no(b.ryser_ok) << (b.ryser_tight ? " (tight)" : "") << '\n';
    }
    std::cout << "hadamard_bound\t" << b.hadamard.to_string() << '\n'
              << "hadamard_ok\t" << yes_no(b.hadamard_ok) << '\n'
              << "divisor\t" << dc.divisor << " (d=" << dc.d << ", q=" << dc.q
              << (dc.trivial ? ", isolated vertex" : "") << ")\n"
              << "divisibility_holds\t" << yes_no(dc.holds) << '\n'
              << "odd_order_even_det\t"
              << (p.odd_order_applicable ? yes_no(p.odd_order_even_det) : "n/a") << '\n'
              << "bipartite_odd_zero\t"
              << (p.bipartite_odd_applicable ? yes_no(p.bipartite_odd_zero) : "n/a") << '\n';
  }
  return all_ok ? kOk : kFailure;
}

int cmd_enumerate(const Config& c) {
  const auto graphs = generate_all(c.n, options(c));
  std::string out;
  for (const Graph& g : graphs) {
    out += to_graph6(g);
    out += '\n';
  }
  std::cout << out;
  return kOk;
}

void write_discrepancies(const Config& c, const TableComparison& cmp) {
  if (c.discrepancy_path.empty()) return;
  std::ofstream out(c.discrepancy_path);
  if (!out) throw std::ios_base::failure("cannot write " + c.discrepancy_path);
  for (const TableDelta& d : cmp.deltas) out << to_json_line(d) << '\n';
}

int cmd_distribution(const Config& c) {
  const DetDistribution d = load_distribution(c);
  if (d.total == 0) throw GraphError("no graphs in input");
  const TableComparison cmp = compare_with_published(d);
  const ZeroFraction z = zero_fraction(d);
  write_discrepancies(c, cmp);
  if (json_mode(c)) {
    for (const auto& [det, count] : d.counts) {
      std::cout << ordered_json{{"det", json_int(det)}, {"count", count}}.dump() << '\n';
    }
    ordered_json r;
    r["n"] = d.n;
    r["total"] = d.total;
    r["alpha"] = json_int(d.alpha());
    r["beta"] = json_int(d.beta());
    r["zero_fraction_numerator"] = z.zeros;
    r["zero_fraction_denominator"] = z.total;
    r["table"] = to_string(cmp.verdict);
    if (cmp.verdict != TableVerdict::NotEmbedded) r["published_total"] = cmp.published_total;
    std::cout << r.dump() << '\n';
    for (const TableDelta& delta : cmp.deltas) std::cout << to_json_line(delta) << '\n';
    return kOk;
  }
  std::cout << to_tsv(d);
  std::cout << "# n=" << d.n << " total=" << d.total << " alpha=" << d.alpha()
            << " beta=" << d.beta() << " zero_fraction=" << z.to_string() << '\n';
  std::cout << "# table: " << to_string(cmp.verdict);
  if (cmp.verdict != TableVerdict::NotEmbedded) {
    std::cout << " published_total=" << cmp.published_total << " computed_total=" << cmp.computed_total;
  }
  std::cout << '\n';
  for (const TableDelta& delta : cmp.deltas) {
    std::cout << "# delta\tdet=" << delta.det << "\tpublished=" << delta.published_count
              << "\tcomputed=" << delta.computed_count << '\n';
  }
  return kOk;
}

int cmd_extremal(const Config& c) {
  const ExtremalReport r = extremal(c.n, options(c));
  const std::string verdict =
      !r.witness_check_applicable ? "n/a" : (r.witness_check_holds ? "PASS" : "FAIL");
  if (json_mode(c)) {
    auto witnesses = [](const std::vector<Witness>& ws) {
      ordered_json a = ordered_json::array();
      for (const Witness& w : ws) {
        a.push_back({{"graph6", w.graph6}, {"connected", w.connected}, {"class", w.cls.describe()}});
      }
      return a;
    };
    ordered_json j;
    j["n"] = r.n;
    j["alpha"] = json_int(r.alpha);
    j["beta"] = json_int(r.beta);
    j["alpha_witnesses"] = witnesses(r.alpha_witnesses);
    j["beta_witnesses"] = witnesses(r.beta_witnesses);
    j["no_unique_cycle_witness"] = verdict;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "n\t" << r.n << '\n' << "alpha\t" << r.alpha << '\n' << "beta\t" << r.beta << '\n';
    for (const Witness& w : r.alpha_witnesses) {
      std::cout << "alpha_witness\t" << w.graph6 << "\tconnected=" << yes_no(w.connected)
                << "\tclass=" << w.cls.describe() << '\n';
    }
    for (const Witness& w : r.beta_witnesses) {
      std::cout << "beta_witness\t" << w.graph6 << "\tconnected=" << yes_no(w.connected)
                << "\tclass=" << w.cls.describe() << '\n';
    }
    std::cout << "no_unique_cycle_witness\t" << verdict << '\n';
  }
  return r.witness_check_holds ? kOk : kFailure;
}

int cmd_absent(const Config& c) {
  const DetDistribution d = load_distribution(c);
  if (d.total == 0) throw GraphError("no graphs in input");
  const auto absent = absent_values(d);
  if (json_mode(c)) {
    ordered_json a = ordered_json::array();
    for (const auto& x : absent) a.push_back(json_int(x));
    std::cout << ordered_json{{"n", d.n}, {"beta", json_int(d.beta())},
                              {"alpha", json_int(d.alpha())}, {"absent", a}}
                     .dump()
              << '\n';
    return kOk;
  }
  std::cout << "# n=" << d.n << " range=[" << d.beta() << "," << d.alpha() << "]\n";
  for (const auto& x : absent) std::cout << x << '\n';
  return kOk;
}

int cmd_zerofrac(const Config& c) {
  const DetDistribution d = load_distribution(c);
  if (d.total == 0) throw GraphError("no graphs in input");
  const ZeroFraction z = zero_fraction(d);
  if (json_mode(c)) {
    std::cout << ordered_json{{"n", d.n}, {"numerator", z.zeros}, {"denominator", z.total},
                              {"reduced", to_string(z.reduced())}}
                     .dump()
              << '\n';
  } else {
    std::cout << d.n << '\t' << z.to_string() << '\t' << to_string(z.reduced()) << '\n';
  }
  return kOk;
}

int cmd_verify(const Config& c) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), c.suite) == names.end()) throw UnknownSuite(c.suite);
  const VerifyReport r = verify_suite(c.suite, c.n, options(c));
  if (!c.errata_path.empty()) {
    std::ofstream out(c.errata_path);
    if (!out) throw std::ios_base::failure("cannot write " + c.errata_path);
    for (const ErrataRecord& e : r.errata) out << to_json_line(e) << '\n';
  }
  if (json_mode(c)) {
    ordered_json f = ordered_json::array();
    for (const auto& x : r.failures) f.push_back({{"graph6", x.graph6}, {"expected", x.expected}, {"got", x.got}});
    std::cout << ordered_json{{"suite", r.suite}, {"n", r.n}, {"graphs", r.graphs_checked},
                              {"applicable", r.applicable}, {"failures", f},
                              {"passed", r.passed()}}
                     .dump()
              << '\n';
  } else {
    for (const auto& x : r.failures) {
      std::cout << "failure\t" << x.graph6 << "\texpected=" << x.expected << "\tgot=" << x.got << '\n';
    }
    std::cout << "suite\t" << r.suite << "\tn=" << r.n << "\tapplicable=" << r.applicable << '\n'
              << r.failures.size() << " failures / " << r.graphs_checked << " graphs\n";
  }
  return r.passed() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact determinants of graph adjacency matrices"};
  app.require_subcommand(1, 1);
  Config cfg;

  auto add_common = [&](CLI::App* sub, bool needs_n, bool takes_input) {
    if (needs_n) sub->add_option("-n", cfg.n, "number of vertices")->check(CLI::Range(1, 64));
    if (takes_input) {
      sub->add_option("--input", cfg.input, "graph6 stream file, '-' for standard input");
    }
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"tsv", "json-lines"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    sub->add_flag("--force-budget", cfg.force_budget, "allow generation up to 16 vertices");
  };

  auto* det = app.add_subcommand("det", "determinant, class, closed form, bounds of one graph");
  det->add_option("graph6", cfg.graph6, "graph6 string (otherwise --input)");
  add_common(det, false, true);

  auto* enumerate = app.add_subcommand("enumerate", "all non-isomorphic graphs as graph6");
  add_common(enumerate, true, false);
  enumerate->get_option("-n")->required();

  auto* dist = app.add_subcommand("distribution", "determinant distribution (det<TAB>count)");
  add_common(dist, true, true);
  dist->add_option("--discrepancies", cfg.discrepancy_path,
                   "write table deltas as JSON lines to this file");

  auto* ext = app.add_subcommand("extremal", "maximum/minimum determinants and witnesses");
  add_common(ext, true, false);
  ext->get_option("-n")->required();

  auto* absent = app.add_subcommand("absent", "integers in [beta, alpha] never attained");
  add_common(absent, true, true);

  auto* zero = app.add_subcommand("zerofrac", "fraction of graphs with determinant zero");
  add_common(zero, true, true);

  auto* verify = app.add_subcommand("verify", "exhaustive verification sweep");
  add_common(verify, true, false);
  verify->get_option("-n")->required();
  verify->add_option("--suite", cfg.suite, "engines|closed-forms|bounds|divisibility|parity|"
                                           "two-cycles|table|extremal-class")
      ->required();
  verify->add_option("--errata", cfg.errata_path, "write closed-form errata as JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*det) return cmd_det(cfg);
    if (*enumerate) return cmd_enumerate(cfg);
    if (*dist) return cmd_distribution(cfg);
    if (*ext) return cmd_extremal(cfg);
    if (*absent) return cmd_absent(cfg);
    if (*zero) return cmd_zerofrac(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const Graph6ParseError& e) {
    std::cerr << "graphdet: parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const GraphError& e) {
    std::cerr << "graphdet: invalid graph: " << e.what() << '\n';
    return kParseError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "graphdet: " << e.what() << '\n';
    return kBudget;
  } catch (const UnknownSuite& e) {
    std::cerr << "graphdet: " << e.what() << '\n';
    return kUnknownSuite;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "graphdet: " << e.what() << '\n';
    return kUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "graphdet: " << e.what() << '\n';
    return kIoError;
  }
  return kUsage;
}
