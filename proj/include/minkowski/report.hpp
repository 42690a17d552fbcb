#pragma once

#include <string>
#include <vector>

namespace mink {

struct Relation {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline Relation make_relation(std::string name, double lhs, double rhs, double residual, double tolerance) {
  return {std::move(name), lhs, rhs, residual, tolerance, residual <= tolerance};
}

inline bool all_pass(const std::vector<Relation>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

}  // namespace mink
