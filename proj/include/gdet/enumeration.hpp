#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "gdet/analysis.hpp"
#include "gdet/exact_int.hpp"
#include "gdet/graph.hpp"

namespace gdet {

inline constexpr int kDefaultMaxGenerationOrder = 10;
inline constexpr int kHardMaxGenerationOrder = 16;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenerateOptions {
  int jobs = 1;
  bool force_budget = false;
  int shard_level = -1;  // edge count at which the search tree is cut; -1 picks a default
};

void check_generation_budget(int n, const GenerateOptions& opt);

// Default shard level: a quarter of the maximum edge count, rounded up.
int default_shard_level(int n);

namespace detail {

// Depth-first canonical-deletion search from the empty graph. Graphs with
// fewer than `level` edges go to `above`; graphs with exactly `level` edges
// become shard roots (returned, not visited).
std::vector<Graph> plan_shards(int n, int level, const std::function<void(const Graph&)>& above);

// Visits `root` and every descendant in the generation tree.
void expand_subtree(const Graph& root, const std::function<void(const Graph&)>& visit);

}  // namespace detail

// One representative per isomorphism class of n-vertex graphs, each in its
// canonical labelling. Representatives are grouped into shards; result[0]
// accumulates the graphs above the shard level and result[i + 1] the subtree
// of the i-th shard root. Each accumulator sees its graphs sequentially in a
// fixed order, so merging the results in index order is deterministic
// regardless of `jobs`.
template <class Acc>
std::vector<Acc> enumerate_sharded(int n, const GenerateOptions& opt,
                                   const std::function<void(Acc&, const Graph&)>& visit,
                                   const Acc& init = Acc{}) {
  check_generation_budget(n, opt);
  const int level = opt.shard_level >= 0 ? opt.shard_level : default_shard_level(n);
  std::vector<Acc> out(1, init);
  const std::vector<Graph> roots =
      detail::plan_shards(n, level, [&](const Graph& g) { visit(out[0], g); });
  out.resize(roots.size() + 1, init);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < roots.size();) {
      Acc& acc = out[i + 1];
      detail::expand_subtree(roots[i], [&](const Graph& g) { visit(acc, g); });
    }
  };
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  return out;
}

// Every isomorphism class of n-vertex graphs, in deterministic order.
std::vector<Graph> generate_all(int n, const GenerateOptions& opt = {});

void for_each_graph(int n, const std::function<void(const Graph&)>& visit,
                    const GenerateOptions& opt = {});

struct DetDistribution {
  int n = 0;
  std::map<ExactInt, std::uint64_t> counts;
  std::uint64_t total = 0;

  void add(const ExactInt& det, std::uint64_t count = 1);
  void merge(const DetDistribution& other);
  ExactInt alpha() const;  // max determinant
  ExactInt beta() const;   // min determinant
  std::uint64_t count_of(const ExactInt& det) const;

  friend bool operator==(const DetDistribution&, const DetDistribution&) = default;
};

DetDistribution distribution(int n, const GenerateOptions& opt = {});

// Newline-delimited graph6; blank lines are skipped. All graphs must share
// one order. Parse errors carry the line number.
DetDistribution distribution_from_stream(std::istream& in);

std::string to_tsv(const DetDistribution& d);

struct Witness {
  std::string graph6;
  bool connected = false;
  GraphClass cls;
};

struct ExtremalReport {
  int n = 0;
  ExactInt alpha;
  ExactInt beta;
  std::vector<Witness> alpha_witnesses;
  std::vector<Witness> beta_witnesses;
  bool witness_check_applicable = false;  // n > 5: no witness has a unique cycle
  bool witness_check_holds = true;
};

ExtremalReport extremal(int n, const GenerateOptions& opt = {});

std::vector<ExactInt> absent_values(const DetDistribution& d);
std::vector<ExactInt> absent_values(int n, const GenerateOptions& opt = {});

struct ZeroFraction {
  std::uint64_t zeros = 0;
  std::uint64_t total = 0;

  Rational reduced() const;
  std::string to_string() const;  // "zeros/total", unreduced
};

ZeroFraction zero_fraction(const DetDistribution& d);
ZeroFraction zero_fraction(int n, const GenerateOptions& opt = {});

}  // namespace gdet
