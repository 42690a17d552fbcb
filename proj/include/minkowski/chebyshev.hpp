#pragma once

#include <span>
#include <vector>

namespace mink {

// First-kind Chebyshev points on [0,1] with barycentric weights.
class ChebGrid {
 public:
  explicit ChebGrid(int n);

  int size() const { return static_cast<int>(x_.size()); }
  const std::vector<double>& points() const { return x_; }

  // Lagrange basis values l_k(y) for all k.
  void basis(double y, std::span<double> out) const;
  double eval(std::span<const double> values, double y) const;

 private:
  std::vector<double> x_, w_;
};

}  // namespace mink
