#include "minkowski/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace mink {

namespace {

constexpr double pi = std::numbers::pi;

// Lanczos g = 7, n = 9.
constexpr std::array<double, 9> lanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

// Gamma for Re s >= 1/2.
Complex gamma_right(Complex s) {
  Complex z = s - 1.0;
  Complex a = lanczos[0];
  for (int i = 1; i < 9; ++i) a += lanczos[i] / (z + static_cast<double>(i));
  Complex t = z + 7.5;
  return std::sqrt(2.0 * pi) * std::exp((z + 0.5) * std::log(t) - t) * a;
}

double bessel_series(int order, double x) {
  double h = 0.5 * x;
  double term = order == 0 ? 1.0 : h;
  double sum = term;
  double q = -h * h;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + order));
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

// Backward recurrence normalised by J0 + 2 sum J_2k = 1.
double bessel_miller(int order, double x) {
  int start = 2 * ((static_cast<int>(x + 20.0 + 8.0 * std::sqrt(x)) + 1) / 2);
  double jp1 = 0.0, j = 1e-300, norm = 0.0, j0 = 0.0, j1 = 0.0;
  for (int k = start; k >= 1; --k) {
    double jm1 = 2.0 * k / x * j - jp1;
    jp1 = j;
    j = jm1;
    if (std::abs(j) > 1e250) {
      j *= 1e-250;
      jp1 *= 1e-250;
      norm *= 1e-250;
      j1 *= 1e-250;
    }
    if (k - 1 == 1) j1 = j;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * j;
  }
  j0 = j;
  norm += j0;
  return (order == 0 ? j0 : j1) / norm;
}

double bessel_asymptotic(int order, double x) {
  double mu = 4.0 * order * order;
  double p = 1.0, q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    if (std::abs(term) > last) break;
    last = std::abs(term);
    int r = k % 4;
    if (r == 1) q += term;
    else if (r == 2) p -= term;
    else if (r == 3) q -= term;
    else p += term;
    if (last < 1e-18) break;
  }
  double chi = x - (0.5 * order + 0.25) * pi;
  return std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

Complex gamma(Complex s) {
  if (is_nonpositive_integer(s)) throw Error(ErrorKind::pole, "gamma: pole at non-positive integer");
  if (s.real() < 0.5) return pi / (std::sin(pi * s) * gamma_right(1.0 - s));
  return gamma_right(s);
}

Complex rgamma(Complex s) {
  if (is_nonpositive_integer(s)) return 0.0;
  if (s.real() < 0.5) return std::sin(pi * s) * gamma_right(1.0 - s) / pi;
  return 1.0 / gamma_right(s);
}

double bessel_j(int order, double x) {
  if (order != 0 && order != 1) throw Error(ErrorKind::domain, "bessel_j: order must be 0 or 1");
  if (!std::isfinite(x) || x < 0.0) throw Error(ErrorKind::domain, "bessel_j: x must be finite and >= 0");
  if (x < 12.0) return bessel_series(order, x);
  if (x < 30.0) return bessel_miller(order, x);
  return bessel_asymptotic(order, x);
}

double polylog_half(int m) {
  if (m < 0) throw Error(ErrorKind::domain, "polylog_half: m must be >= 0");
  double sum = 0.0;
  double p = 1.0;
  for (int n = 1; n < 2000; ++n) {
    p *= 0.5;
    double term = p / std::pow(static_cast<double>(n), m);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

Real polylog_half_ext(int m) {
  if (m < 0) throw Error(ErrorKind::domain, "polylog_half: m must be >= 0");
  Real sum = 0;
  Real p = 1;
  Real eps = pow(Real(10), -static_cast<int>(Real::default_precision()) - 2);
  for (int n = 1;; ++n) {
    p /= 2;
    Real term = p / pow(Real(n), m);
    sum += term;
    if (term < eps * sum) break;
  }
  return sum;
}

Complex gen_binomial(Complex w, int j) {
  if (j < 0) throw Error(ErrorKind::domain, "gen_binomial: j must be >= 0");
  Complex r = 1.0;
  for (int i = 0; i < j; ++i) r *= (w - static_cast<double>(i)) / static_cast<double>(i + 1);
  return r;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r < 9e15 ? std::round(r) : r;
}

}  // namespace mink
