#pragma once

#include <functional>
#include <string>
#include <vector>

#include "minkowski/report.hpp"
#include "minkowski/types.hpp"

namespace mink {

struct MomentTable {
  int lmax = 0;
  int digits = 0;
  std::string method;
  std::vector<Real> m_ext;       // m_0..m_lmax
  std::vector<Real> M_ext;       // M_0..M_lmax
  std::vector<double> m;         // rounded copies of m_ext
  std::vector<double> centred;   // d_j = int (2x-1)^j d?(x); odd ones vanish
  std::vector<Real> centred_ext;

  // M_L as a double; infinite once L! (1/log 2)^L leaves the double range
  double M(int L) const { return to_double(M_ext.at(L)); }
};

// m_L from the self-similarity of ? in the variable u = 2x - 1, M_L by the binomial recursion.
MomentTable moment_tables(int lmax = 200, int digits = 60);
// m_1..m_N from the monomial transfer solve.
MomentTable moment_tables_monomial(int N = 100, int digits = 120);
// Cached moment_tables() with the defaults.
const MomentTable& default_moments();

// M_L = m_L + sum_{s<L} C(L,s) M_s
std::vector<Real> big_moments(const std::vector<Real>& m);

std::vector<Relation> check_cross_relations(const MomentTable& t);

// Gauss rule for dF on [0,1] from the centred moments; weights sum to 1/2.
struct GaussRule {
  std::vector<double> x, w;
  double integrate(const std::function<double(double)>& f) const;
};
const GaussRule& gauss_rule_F();

// int_0^1 f dF by the Gauss rule mapped onto Stern-Brocot cells. A cell is split while
// scale * width > max_phase or its endpoint denominators differ by more than max_ratio;
// cells lighter than mass_floor are collapsed to their mediant.
Complex integrate_cells(const std::function<Complex(double)>& f, double scale, double max_phase = 16.0,
                        double mass_floor = 1e-20, double max_ratio = 16.0);

struct QPolynomial {
  int n = 0;
  std::vector<Integer> coeffs;  // ascending powers

  int degree() const;
};

QPolynomial q_polynomial(int n);
// (Q_2n + 3)/x equals its own reversal
bool q_hat_reciprocal(int two_n);
// Exact coefficients of Q_2n on Q_1, Q_3, ..., Q_{2n-1}; empty when no solution exists.
std::vector<Rational> q_span(int two_n);
// sum_k [x^k]Q_n M_k
double q_annihilation(int n, const MomentTable& t);
std::vector<Relation> q_relations(int nmax, const MomentTable& t);

// 2^(1-n) sum over generation n of x^L, or 2^(2-n) sum over its elements below 1.
Rational empirical_moment_exact(int n, int L, bool below_one = false);
double empirical_moment(int n, int L, bool below_one = false);

// C = exp(-2 sqrt(log 2))
double asym_constant();
// r_L = m_L / (L^(1/4) C^sqrt(L)) for L = 0..lmax (r_0 = m_0)
std::vector<double> asym_ratio(const MomentTable& t, int lmax);
bool strictly_increasing(const std::vector<double>& v, int from, int to);

// c*_j = sin((j+1)pi/(J+2)) / sin(j pi/(J+2)), j = 1..J
std::vector<double> chebyshev_chain(int J);
// max defect of c*_1 = 1/c*_j + c*_{j+1} and c*_1 = 1/c*_J
double chebyshev_chain_defect(const std::vector<double>& c);

// m(t) = sum m_L t^L / L! = 2 int_0^1 e^{xt} dF
Complex m_exp(Complex t);
// m'(-t) = 2 int_0^1 x e^{-xt} dF
double m_exp_derivative_neg(double t);
// |m(-s) - (2e^s - 1) int_0^inf m'(-t) J_0(2 sqrt(st)) dt|
double integral_equation_residual(double s);

}  // namespace mink
