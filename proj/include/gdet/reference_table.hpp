#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdet/enumeration.hpp"

namespace gdet {

// Published determinant multiplicities for graphs on 1..9 vertices, as
// printed (including the known inconsistencies at n = 5 and n = 6).
using TableRow = std::vector<std::pair<std::int64_t, std::uint64_t>>;

inline constexpr int kReferenceMaxOrder = 9;

const TableRow* published_row(int n);
std::uint64_t row_total(const TableRow& row);

enum class TableVerdict { Match, Mismatch, NotEmbedded };

std::string to_string(TableVerdict v);

struct TableDelta {
  int n = 0;
  std::int64_t det = 0;
  std::uint64_t published_count = 0;
  std::uint64_t computed_count = 0;
};

struct TableComparison {
  TableVerdict verdict = TableVerdict::NotEmbedded;
  std::uint64_t published_total = 0;
  std::uint64_t computed_total = 0;
  std::vector<TableDelta> deltas;  // ascending by det
};

TableComparison compare_with_published(const DetDistribution& d);

std::string to_json_line(const TableDelta& delta);

}  // namespace gdet
