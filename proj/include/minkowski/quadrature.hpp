#pragma once

#include <functional>
#include <span>
#include <vector>

#include "minkowski/contfrac.hpp"
#include "minkowski/types.hpp"

namespace mink {

inline constexpr int max_quadrature_depth = 26;

// Neumaier compensated accumulation.
class CompensatedSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) comp_ += (sum_ - t) + v;
    else comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0, comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(Complex v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_, im_;
};

// F-midpoint rule: nodes are the preimages of (2k-1)/2^(r+1), each with weight 2^-(r+1).
struct QuadratureRule {
  int depth = 0;
  std::vector<Frac> nodes;
  Rational weight;
};

QuadratureRule quadrature_rule(int r);

// Ascending node values in blocks; nodes at depths up to 20 are cached.
void for_each_node_block(int r, const std::function<void(std::span<const double>)>& sink);
const std::vector<double>& quadrature_nodes(int r);

double integrate_unit(const std::function<double(double)>& f, int r);
Complex integrate_unit_complex(const std::function<Complex(double)>& f, int r);
double integrate_halfline(const std::function<double(double)>& g, int r);

// int_0^1 f dF through one step of  int f dF = sum_n 2^-n int f(1/(x+n)) dF.
double integrate_unit_smoothed(const std::function<double(double)>& f, int r, double truncation_eps = 1e-16);

// Number of terms kept in sums over n of 2^-n (...).
int transfer_terms(double truncation_eps);

struct GaussLegendre {
  std::vector<double> x, w;  // nodes and weights on [-1, 1]
};
GaussLegendre gauss_legendre(int n);

struct TransferAverage {
  double value = 0.0;              // estimate of int_0^1 f dF
  std::vector<double> estimates;   // after 0, 1, ..., n iterations
};

// (1/2) [S^n f](1/2) with S applied on a Chebyshev interpolant of the given degree.
TransferAverage transfer_average(const std::function<double(double)>& f, int iterations, int degree = 40,
                                 double truncation_eps = 1e-16);

}  // namespace mink
