#pragma once

#include <string>
#include <vector>

#include "minkowski/report.hpp"
#include "minkowski/types.hpp"

namespace mink {

struct Check {
  std::string id;
  int criterion = 0;  // acceptance criterion 1..14, 0 for supporting checks
  std::string description;
  std::string anchor;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct CriterionSummary {
  int criterion = 0;
  int checks = 0;
  int failed = 0;
  bool pass() const { return failed == 0; }
};

enum class Suite { core, full };

struct VerifyReport {
  Suite suite = Suite::core;
  std::vector<Check> checks;

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
  std::vector<CriterionSummary> criteria() const;
  // deterministic for a fixed configuration
  std::string to_json() const;
};

Suite parse_suite(const std::string& name);
const char* suite_name(Suite s);

VerifyReport run_verify(Suite suite, const PrecisionConfig& cfg = {});

}  // namespace mink
