#include "minkowski/chebyshev.hpp"

#include <cmath>
#include <numbers>

#include "minkowski/types.hpp"

namespace mink {

ChebGrid::ChebGrid(int n) : x_(n), w_(n) {
  if (n < 1) throw Error(ErrorKind::domain, "ChebGrid: need at least one point");
  for (int k = 0; k < n; ++k) {
    double theta = (2.0 * k + 1.0) * std::numbers::pi / (2.0 * n);
    x_[k] = 0.5 * (1.0 - std::cos(theta));
    w_[k] = (k % 2 == 0 ? 1.0 : -1.0) * std::sin(theta);
  }
}

void ChebGrid::basis(double y, std::span<double> out) const {
  const int n = size();
  for (int k = 0; k < n; ++k) {
    double d = y - x_[k];
    if (d == 0.0) {
      for (int j = 0; j < n; ++j) out[j] = 0.0;
      out[k] = 1.0;
      return;
    }
    out[k] = w_[k] / d;
  }
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += out[k];
  for (int k = 0; k < n; ++k) out[k] /= s;
}

double ChebGrid::eval(std::span<const double> values, double y) const {
  const int n = size();
  double num = 0.0, den = 0.0;
  for (int k = 0; k < n; ++k) {
    double d = y - x_[k];
    if (d == 0.0) return values[k];
    double t = w_[k] / d;
    num += t * values[k];
    den += t;
  }
  return num / den;
}

}  // namespace mink
