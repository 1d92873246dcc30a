#include "gdet/reference_table.hpp"

#include <array>
#include <map>

#include <json.hpp>

namespace gdet {

namespace {

const std::array<TableRow, kReferenceMaxOrder>& rows() {
  static const std::array<TableRow, kReferenceMaxOrder> table = {{
      {{0, 1}},
      {{-1, 1}, {0, 1}},
      {{0, 3}, {2, 1}},
      {{-3, 1}, {0, 7}, {1, 3}},
      {{-4, 1}, {0, 25}, {2, 6}, {4, 1}},
      {{-5, 3}, {-4, 5}, {-1, 32}, {0, 99}, {3, 10}, {4, 2}, {7, 2}},
      {{-12, 2}, {-10, 2}, {-6, 13}, {-4, 21}, {-2, 20}, {0, 690}, {2, 204}, {4, 40},
       {6, 17}, {8, 25}, {10, 5}, {12, 5}},
      {{-28, 2},  {-27, 2},   {-24, 5},  {-23, 5},   {-20, 7},  {-19, 21}, {-16, 51},
       {-15, 43}, {-12, 90},  {-11, 79}, {-8, 128},  {-7, 251}, {-4, 581}, {-3, 813},
       {0, 6551}, {1, 2416},  {4, 758},  {5, 240},   {8, 73},   {9, 139},  {12, 24},
       {13, 23},  {16, 32},   {17, 8},   {20, 1},    {21, 3}},
      {{-128, 2},   {-96, 3},    {-72, 12},   {-64, 7},    {-60, 5},     {-56, 17},
       {-54, 12},   {-50, 27},   {-48, 13},   {-46, 20},   {-44, 39},    {-42, 47},
       {-40, 103},  {-38, 52},   {-36, 110},  {-34, 128},  {-32, 593},   {-30, 199},
       {-28, 295},  {-26, 392},  {-24, 765},  {-22, 579},  {-20, 869},   {-18, 2747},
       {-16, 2247}, {-14, 1805}, {-12, 3062}, {-10, 4290}, {-8, 17582},  {-6, 8531},
       {-4, 14901}, {-2, 57065}, {0, 133174}, {2, 6767},   {4, 6950},    {6, 4669},
       {8, 1566},   {10, 1349},  {12, 1156},  {14, 695},   {16, 606},    {18, 106},
       {20, 297},   {22, 173},   {24, 240},   {26, 95},    {28, 91},     {30, 61},
       {32, 46},    {34, 5},     {36, 32},    {38, 28},    {40, 3},      {42, 17},
       {44, 16},    {54, 3},     {60, 3},     {64, 1}},
  }};
  return table;
}

}  // namespace

const TableRow* published_row(int n) {
  if (n < 1 || n > kReferenceMaxOrder) return nullptr;
  return &rows()[n - 1];
}

std::uint64_t row_total(const TableRow& row) {
  std::uint64_t t = 0;
  for (const auto& [det, c] : row) t += c;
  return t;
}

std::string to_string(TableVerdict v) {
  switch (v) {
    case TableVerdict::Match: return "MATCH";
    case TableVerdict::Mismatch: return "MISMATCH";
    case TableVerdict::NotEmbedded: return "NOT-EMBEDDED";
  }
  return "?";
}

TableComparison compare_with_published(const DetDistribution& d) {
  TableComparison c;
  c.computed_total = d.total;
  const TableRow* row = published_row(d.n);
  if (!row) return c;
  c.published_total = row_total(*row);

  std::map<std::int64_t, std::pair<std::uint64_t, std::uint64_t>> merged;
  for (const auto& [det, count] : *row) merged[det].first = count;
  for (const auto& [det, count] : d.counts) {
    auto small = det.to_int64();
    if (!small) throw std::logic_error("determinant out of range for a tabulated order");
    merged[*small].second = count;
  }
  for (const auto& [det, pc] : merged) {
    if (pc.first != pc.second) c.deltas.push_back({d.n, det, pc.first, pc.second});
  }
  c.verdict = c.deltas.empty() ? TableVerdict::Match : TableVerdict::Mismatch;
  return c;
}

std::string to_json_line(const TableDelta& delta) {
  nlohmann::ordered_json j;
  j["n"] = delta.n;
  j["det"] = delta.det;
  j["paper_count"] = delta.published_count;
  j["computed_count"] = delta.computed_count;
  return j.dump();
}

}  // namespace gdet
