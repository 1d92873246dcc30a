#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gdet/exact_int.hpp"
#include "gdet/graph.hpp"

namespace gdet {

// Square matrix of exact integers, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
    if (n < 0) throw std::invalid_argument("negative matrix order");
  }

  int order() const noexcept { return n_; }
  const ExactInt& operator()(int i, int j) const { return entries_[std::size_t(i) * n_ + j]; }
  ExactInt& operator()(int i, int j) { return entries_[std::size_t(i) * n_ + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_;
  std::vector<ExactInt> entries_;
};

class OrderTooLarge : public std::runtime_error {
 public:
  OrderTooLarge(const std::string& engine, int n, int limit)
      : std::runtime_error(engine + ": order " + std::to_string(n) + " exceeds limit " +
                           std::to_string(limit)) {}
};

inline constexpr int kLeibnizMaxOrder = 11;
inline constexpr int kSachsMaxOrder = 12;

IntMatrix adjacency_matrix(const Graph& g);

// Fraction-free Gaussian elimination. Runs in checked 128-bit arithmetic and
// redoes the elimination with unbounded integers if anything overflows.
ExactInt det_bareiss(const IntMatrix& m);

// Exact determinant of a graph's adjacency matrix (Bareiss).
ExactInt determinant(const Graph& g);

// Sum over permutations of sign * product, visiting permutations in
// lexicographic order and skipping branches whose partial product is zero.
ExactInt det_leibniz(const IntMatrix& m);

// Sum over spanning elementary figures (vertex-disjoint edges and cycles
// covering every vertex): det = (-1)^n * sum (-1)^components * 2^cycles.
ExactInt det_sachs(const Graph& g);

}  // namespace gdet
