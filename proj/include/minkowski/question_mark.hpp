#pragma once

#include <string>

#include "minkowski/types.hpp"

namespace mink {

// k / 2^e with k odd, or k = 0 and e = 0.
struct Dyadic {
  Integer k = 0;
  int e = 0;

  static Dyadic make(Integer k, int e);
  Rational to_rational() const;
  double to_double() const;
  std::string str() const;  // "k/2^e" with the power expanded, e.g. "3/8"
  friend bool operator==(const Dyadic&, const Dyadic&) = default;
};

// F(x) = 1 - 2^-a0 + 2^-(a0+a1) - ... exactly, for rational x >= 0.
Dyadic F_exact(const Rational& x);
// ?(x) = 2F(x) on [0,1].
Dyadic qm_exact(const Rational& x);
// Inverse of ? on dyadics of [0,1] (the box function).
Rational qm_inverse(const Dyadic& d);

// F at a floating argument; negative x uses F(x) = 2F(x+1) - 1.
double F_real(double x, double truncation_eps = 1e-16);
double qm_real(double x);
// 2^x (1 - F(x)), periodic with period 1.
double psi(double x);

}  // namespace mink
