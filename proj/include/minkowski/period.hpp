#pragma once

#include <functional>
#include <vector>

#include "minkowski/report.hpp"
#include "minkowski/transfer.hpp"
#include "minkowski/types.hpp"

namespace mink {

struct MomentTable;

inline constexpr int max_descent_depth = 64;
inline constexpr double cut_guard = 1e-6;

// Solution of 2f(z+1) = f(z) - c/z + f(1/z)/(lambda z^2) on C \ [1,inf),
// stored as coefficients of f(-x) in powers of 2x-1.
// G has lambda = -1, c = 1; G_lambda has c = 0.
class ThreeTermFunction {
 public:
  ThreeTermFunction() = default;
  ThreeTermFunction(double lambda, double inhomogeneity, std::vector<double> centred);

  Complex operator()(Complex z) const;
  double operator()(double z) const;

  double lambda() const { return lambda_; }
  double inhomogeneity() const { return c_; }
  const std::vector<double>& centred() const { return a_; }

 private:
  Complex eval(Complex z, int depth) const;
  Complex series(Complex u) const;
  Complex reflect(Complex zeta, int depth) const;

  double lambda_ = -1.0;
  double c_ = 1.0;
  std::vector<double> a_;
  int reflect_terms_ = 64;
};

// G built from the centred solve at the given precision; the default one is cached.
ThreeTermFunction period_function(const PrecisionConfig& cfg);
const ThreeTermFunction& period_function();

Complex G_eval(Complex z);
// Taylor coefficients of G at 0, i.e. m_1, m_2, ...
std::vector<double> G_taylor(int count);

ThreeTermFunction eigen_evaluator(const EigenPair& p);
double G_lambda_eval(const EigenPair& p, double z);
Complex G_lambda_eval(const EigenPair& p, Complex z);

// 1/z + z^-2 G(1/z) + 2G(z+1) - G(z)
Complex three_term_residual(Complex z);
// G(z+1) + z^-2 G(1/z + 1) + 1/z
Complex symmetry_residual(Complex z);
// 2G_lambda(z+1) - G_lambda(z) - G_lambda(1/z)/(lambda z^2)
double eigen_residual(const EigenPair& p, double z);

// Coefficients of f around 0 by the trapezoidal Cauchy integral on |z| = radius.
std::vector<double> taylor_coefficients(const std::function<Complex(Complex)>& f, int count, double radius = 0.9,
                                        int points = 512);

struct EigenIdentities {
  Relation ratio;           // int G_l(-x) F(x) dx / int G_l(-x) dx = l/(l+1), first pair
  Relation log_quadrature;  // -int log x dF against int_0^1 G(-x) dx
  Relation log_moments;     // 2 int log(1+x) dF against int_0^1 G(-x) dx
  Relation alternating;     // sum (-1)^(L-1) m_L (m_{L-1} + m_{L+1}) = 1/2
  std::vector<Relation> annihilation;  // int G_l(-x) (1 - x^2/l) dF = 0 per pair, relative

  std::vector<Relation> all() const;
};

EigenIdentities eigen_identities(const MomentTable& table, const std::vector<EigenPair>& pairs,
                                 const PrecisionConfig& cfg = {});

// sum_L (-1)^L (m^mu_L m^lambda_{L+1} lambda - m^lambda_L m^mu_{L+1} mu), relative to the sum of |terms|.
double orthogonality(const EigenPair& lam, const EigenPair& mu);

// m^lambda_L = -(lambda/2) (-1)^(L-1) g_{L-1} for L >= 1
std::vector<double> eigen_moments(const EigenPair& p);

}  // namespace mink
