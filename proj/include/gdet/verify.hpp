#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdet/closed_forms.hpp"
#include "gdet/enumeration.hpp"

namespace gdet {

class UnknownSuite : public std::invalid_argument {
 public:
  explicit UnknownSuite(const std::string& name)
      : std::invalid_argument("unknown verification suite: " + name) {}
};

struct VerifyFailure {
  std::string graph6;
  std::string expected;
  std::string got;
};

struct VerifyReport {
  std::string suite;
  int n = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t applicable = 0;  // graphs the suite's claim applies to
  std::vector<VerifyFailure> failures;
  std::vector<ErrataRecord> errata;

  bool passed() const { return failures.empty(); }
  void merge(const VerifyReport& other);
};

// engines, closed-forms, bounds, divisibility, parity, two-cycles, table,
// extremal-class
const std::vector<std::string>& suite_names();

VerifyReport verify_suite(const std::string& suite, int n, const GenerateOptions& opt = {});

}  // namespace gdet
