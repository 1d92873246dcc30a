#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "gdet/canonical.hpp"
#include "gdet/determinant.hpp"
#include "gdet/enumeration.hpp"
#include "gdet/reference_table.hpp"
#include "oracles.hpp"

using namespace gdet;

namespace {

std::map<ExactInt, std::uint64_t> row(std::initializer_list<std::pair<int, std::uint64_t>> r) {
  std::map<ExactInt, std::uint64_t> m;
  for (auto [det, c] : r) m[ExactInt(det)] = c;
  return m;
}

std::vector<long long> as_ints(const std::vector<ExactInt>& v) {
  std::vector<long long> out;
  for (const auto& x : v) out.push_back(*x.to_int64());
  return out;
}

}  // namespace

TEST_CASE("generation counts") {
  const std::vector<std::size_t> expected = {1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) CHECK(generate_all(n).size() == expected[n - 1]);
}

TEST_CASE("generation count equals the labelled-graph census up to six vertices") {
  for (int n = 1; n <= 6; ++n) CHECK(generate_all(n).size() == oracle::census(n));
}

TEST_CASE("every labelled graph on up to six vertices has exactly one representative") {
  for (int n = 1; n <= 6; ++n) {
    const auto reps = generate_all(n);
    std::map<std::uint64_t, int> hits;
    for (const Graph& g : reps) hits[oracle::perm_min_code(g)] = 0;
    REQUIRE(hits.size() == reps.size());
    const std::uint64_t limit = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < limit; ++code) {
      const auto it = hits.find(oracle::perm_min_code(oracle::labeled_graph(n, code)));
      REQUIRE(it != hits.end());
      ++it->second;
    }
    for (const auto& [key, h] : hits) CHECK(h > 0);
  }
}

TEST_CASE("no two representatives are isomorphic up to nine vertices") {
  for (int n = 1; n <= 9; ++n) {
    std::set<Graph> seen;
    std::size_t count = 0;
    for_each_graph(n, [&](const Graph& g) {
      ++count;
      seen.insert(canonical_graph(g));
    });
    CHECK(seen.size() == count);
  }
}

TEST_CASE("output order does not depend on threads; the set does not depend on the cut") {
  const auto base = generate_all(7);
  const std::set<Graph> base_set(base.begin(), base.end());
  for (int level : {0, 3, 7, 21}) {
    GenerateOptions opt;
    opt.shard_level = level;
    const auto serial = generate_all(7, opt);
    REQUIRE(std::set<Graph>(serial.begin(), serial.end()) == base_set);
    REQUIRE(serial.size() == base.size());
    for (int jobs : {2, 4}) {
      opt.jobs = jobs;
      REQUIRE(generate_all(7, opt) == serial);
    }
  }
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(generate_all(11), BudgetExceeded);
  CHECK_THROWS_AS(generate_all(17, {1, true, -1}), BudgetExceeded);
  CHECK_THROWS_AS(generate_all(0), BudgetExceeded);
  CHECK_NOTHROW(check_generation_budget(12, {1, true, -1}));
}

TEST_CASE("small distributions") {
  CHECK(distribution(1).counts == row({{0, 1}}));
  CHECK(distribution(2).counts == row({{-1, 1}, {0, 1}}));
  CHECK(distribution(3).counts == row({{0, 3}, {2, 1}}));
  CHECK(distribution(4).counts == row({{-3, 1}, {0, 7}, {1, 3}}));
  CHECK(distribution(4).total == 11);
}

TEST_CASE("computed rows where the published table disagrees") {
  const DetDistribution d5 = distribution(5);
  CHECK(d5.counts == row({{-4, 1}, {-2, 6}, {0, 25}, {2, 1}, {4, 1}}));
  CHECK(d5.total == 34);
  const DetDistribution d6 = distribution(6);
  CHECK(d6.counts == row({{-5, 3}, {-4, 5}, {-1, 32}, {0, 99}, {3, 10}, {4, 5}, {7, 2}}));
  CHECK(d6.total == 156);
}

TEST_CASE("distribution counts agree with a direct tally over the generated graphs") {
  for (int n = 1; n <= 7; ++n) {
    std::map<ExactInt, std::uint64_t> tally;
    for (const Graph& g : generate_all(n)) ++tally[oracle::det_rational(g)];
    CHECK(distribution(n).counts == tally);
  }
}

TEST_CASE("published table comparison") {
  for (int n : {1, 2, 3, 4, 7, 8}) {
    const TableComparison c = compare_with_published(distribution(n));
    CHECK(c.verdict == TableVerdict::Match);
    CHECK(c.deltas.empty());
    CHECK(c.published_total == c.computed_total);
  }
  const TableComparison c5 = compare_with_published(distribution(5));
  CHECK(c5.verdict == TableVerdict::Mismatch);
  CHECK(c5.published_total == 33);
  CHECK(c5.computed_total == 34);
  REQUIRE(c5.deltas.size() == 2);
  CHECK(c5.deltas[0].det == -2);
  CHECK(c5.deltas[0].published_count == 0);
  CHECK(c5.deltas[0].computed_count == 6);
  CHECK(c5.deltas[1].det == 2);
  CHECK(c5.deltas[1].published_count == 6);
  CHECK(c5.deltas[1].computed_count == 1);

  const TableComparison c6 = compare_with_published(distribution(6));
  CHECK(c6.verdict == TableVerdict::Mismatch);
  CHECK(c6.published_total == 153);
  REQUIRE(c6.deltas.size() == 1);
  CHECK(c6.deltas[0].det == 4);
  CHECK(c6.deltas[0].published_count == 2);
  CHECK(c6.deltas[0].computed_count == 5);
  CHECK(to_json_line(c6.deltas[0]) == R"({"n":6,"det":4,"paper_count":2,"computed_count":5})");

  DetDistribution d10;
  d10.n = 10;
  d10.add(ExactInt(0));
  CHECK(compare_with_published(d10).verdict == TableVerdict::NotEmbedded);
  CHECK(to_string(TableVerdict::NotEmbedded) == "NOT-EMBEDDED");
}

TEST_CASE("published row totals") {
  const std::vector<std::uint64_t> totals = {1, 2, 4, 11, 33, 153, 1044, 12346, 274668};
  for (int n = 1; n <= 9; ++n) CHECK(row_total(*published_row(n)) == totals[n - 1]);
  CHECK(published_row(10) == nullptr);
}

TEST_CASE("extremal values and witnesses") {
  const ExtremalReport e5 = extremal(5);
  CHECK(e5.alpha == ExactInt(4));
  CHECK(e5.beta == ExactInt(-4));
  CHECK_FALSE(e5.witness_check_applicable);

  const ExtremalReport e7 = extremal(7);
  CHECK(e7.alpha == ExactInt(12));
  CHECK(e7.beta == ExactInt(-12));
  CHECK(e7.alpha_witnesses.size() == 5);
  CHECK(e7.beta_witnesses.size() == 2);
  CHECK(e7.witness_check_applicable);
  CHECK(e7.witness_check_holds);

  const ExtremalReport e8 = extremal(8);
  CHECK(e8.alpha == ExactInt(21));
  CHECK(e8.beta == ExactInt(-28));
  CHECK(e8.alpha_witnesses.size() == 3);
  CHECK(e8.beta_witnesses.size() == 2);
  for (const auto& w : e8.alpha_witnesses) CHECK(determinant(from_graph6(w.graph6)) == e8.alpha);
  for (const auto& w : e8.beta_witnesses) CHECK(determinant(from_graph6(w.graph6)) == e8.beta);
  CHECK(e8.witness_check_holds);
}

TEST_CASE("absent values") {
  CHECK(as_ints(absent_values(3)) == std::vector<long long>{1});
  CHECK(as_ints(absent_values(4)) == std::vector<long long>{-2, -1});
  // -2 is attained at five vertices (six graphs), so only four gaps remain
  CHECK(as_ints(absent_values(5)) == std::vector<long long>{-3, -1, 1, 3});
  CHECK(as_ints(absent_values(6)) == std::vector<long long>{-3, -2, 1, 2, 5, 6});
}

TEST_CASE("zero fractions") {
  CHECK(zero_fraction(4).to_string() == "7/11");
  CHECK(zero_fraction(3).to_string() == "3/4");
  CHECK(zero_fraction(7).to_string() == "690/1044");
  CHECK(zero_fraction(7).reduced() == Rational(115, 174));
}

TEST_CASE("distribution from a graph6 stream") {
  std::ostringstream lines;
  for (const Graph& g : generate_all(6)) lines << to_graph6(g) << "\n\n";
  std::istringstream in(lines.str());
  CHECK(distribution_from_stream(in) == distribution(6));

  // relabelled copies count the same
  std::mt19937_64 rng(8);
  std::ostringstream shuffled;
  for (const Graph& g : generate_all(5)) shuffled << to_graph6(oracle::random_relabel(g, rng)) << '\n';
  std::istringstream in2(shuffled.str());
  CHECK(distribution_from_stream(in2) == distribution(5));

  std::istringstream bad("C~\nC!\n");
  try {
    distribution_from_stream(bad);
    FAIL("expected a parse error");
  } catch (const Graph6ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream mixed("C~\nD?{\n");
  CHECK_THROWS_AS(distribution_from_stream(mixed), GraphError);
}

TEST_CASE("TSV is ascending and stable across thread counts") {
  const std::string one = to_tsv(distribution(7, {1, false, -1}));
  const std::string four = to_tsv(distribution(7, {4, false, -1}));
  CHECK(one == four);
  CHECK(to_tsv(distribution(4)) == "-3\t1\n0\t7\n1\t3\n");
}
