#pragma once

#include "minkowski/types.hpp"

namespace mink {

// Gamma on the complex plane; throws ErrorKind::pole at 0, -1, -2, ...
Complex gamma(Complex s);
// 1/Gamma, entire; exactly zero at the poles of Gamma.
Complex rgamma(Complex s);

// J_0 and J_1 for x >= 0.
double bessel_j(int order, double x);

// Li_m(1/2) = sum_{n>=1} 2^-n n^-m.
double polylog_half(int m);
// Same sum at the current mpfr default precision.
Real polylog_half_ext(int m);

// w(w-1)...(w-j+1)/j!
Complex gen_binomial(Complex w, int j);
double binomial(int n, int k);

}  // namespace mink
