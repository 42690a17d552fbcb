#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "minkowski/chebyshev.hpp"
#include "minkowski/types.hpp"

namespace mink {

// [S_w f](x) = sum_{n>=1} 2^-n (x+n)^-w f(1/(x+n))
enum class Basis {
  monomial,     // powers of x
  collocation,  // Lagrange basis at Chebyshev points of [0,1]
  centred,      // powers of u = 2x - 1
};

struct TransferMatrix {
  int weight = 2;
  int dim = 0;
  Basis basis = Basis::collocation;
  Eigen::MatrixXd entries;
};

// Dense row-major matrix at the current mpfr precision.
struct ExtMatrix {
  int dim = 0;
  std::vector<Real> a;

  explicit ExtMatrix(int n = 0) : dim(n), a(static_cast<std::size_t>(n) * n) {}
  Real& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
  const Real& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }
};

inline constexpr int max_matrix_dim = 256;
inline constexpr int max_standard_monomial_dim = 40;

TransferMatrix build_matrix(int w, int N, Basis basis, double truncation_eps = 1e-16);
// Monomial or centred entries at the current mpfr precision.
ExtMatrix build_matrix_ext(int w, int N, Basis basis);

// All real eigenvalues of the collocation matrix, sorted by |lambda| descending.
std::vector<double> raw_spectrum(int w, int N);
// Eigenvalues that persist when the dimension grows by 16; spurious drifting ones are dropped.
std::vector<double> spectrum(int N, int w = 2);

struct EigenPair {
  double lambda = 0.0;
  std::vector<double> taylor;   // G_lambda(-z) = sum g_j z^j
  std::vector<double> centred;  // G_lambda(-x) = sum a_k (2x-1)^k
  double residual = 0.0;        // |A v - lambda v| / |v| in the centred basis
};

// Eigenpair i (1-based) of the weight-2 operator, normalised by G_lambda(-1) = 1.
EigenPair eigenfunction(int index, const PrecisionConfig& cfg);

// Centred coefficients of G(-x), from (I + S_2) g = sum 2^-n/(x+n).
std::vector<double> period_centred_coeffs(const PrecisionConfig& cfg);

// m_1..m_N from (I + B_2) g = h in the monomial basis; needs digits >= N.
std::vector<Real> solve_period_coeffs(int N, int digits);

struct ChebFunction {
  ChebGrid grid{1};
  std::vector<double> values;
  double operator()(double x) const { return grid.eval(values, x); }
};

struct NeumannResult {
  ChebFunction g;
  int terms = 0;
  double residual = 0.0;
};

// g = sum_n S^n f for f with int_0^1 f dF = 0, so that g - S g = f.
NeumannResult neumann_solve(const std::function<double(double)>& f, double tolerance = 1e-12, int degree = 48);

// Apply S = S_0 to a function given pointwise, truncating the sum at nmax terms.
double apply_transfer(const std::function<double(double)>& f, double x, int nmax);

struct EigenPolynomial {
  int n = 0;
  std::vector<Rational> coeffs;  // ascending powers, monic
  Rational delta;

  Rational operator()(const Rational& y) const;
  double operator()(double y) const;
};

EigenPolynomial eigen_polynomial(int n);
// Coefficients of 2P(1-2y) - P(1-y) - P(y)/delta; all zero for a true eigen-polynomial.
std::vector<Rational> eigen_polynomial_defect(const EigenPolynomial& p);
// max over samples of |S(P o F)(x) - delta P(F(x))|
double point_spectrum_residual(const EigenPolynomial& p, const std::vector<double>& samples, int nmax = 64);

// Eigenvalues of the symmetric Bessel kernel discretised with M Gauss-Legendre nodes on (0, T].
std::vector<double> nystrom_spectrum(int M, double T = 40.0);

}  // namespace mink
