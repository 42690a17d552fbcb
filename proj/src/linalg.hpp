#pragma once

#include <vector>

#include "minkowski/transfer.hpp"

namespace mink::detail {

// LU with partial pivoting at the current mpfr precision.
class ExtLU {
 public:
  explicit ExtLU(ExtMatrix m);
  std::vector<Real> solve(std::vector<Real> b) const;

 private:
  ExtMatrix lu_;
  std::vector<int> perm_;
};

std::vector<Real> multiply(const ExtMatrix& m, const std::vector<Real>& v);

}  // namespace mink::detail
