#pragma once

#include <vector>

#include "minkowski/types.hpp"

namespace mink {

inline constexpr int max_fourier_index = 10000;
inline constexpr int max_l2_terms = 512;
inline constexpr double max_zeta_real = 120.0;
inline constexpr double max_scan_t = 200.0;

// log 2 - 2 pi i n
Complex fourier_node(int n);

// c*_n = m(log 2 - 2 pi i n) = c_n (2 log 2 - 4 pi i n)
Complex fourier_star(int n);
Complex fourier_coeff(int n);
// Same coefficient from the F-midpoint rule at the given depth.
Complex fourier_coeff_midpoint(int n, int depth);

// c_0..c_N, immutable once built; c_{-n} = conj(c_n).
class FourierTable {
 public:
  explicit FourierTable(int N);

  int size() const { return static_cast<int>(c_.size()) - 1; }
  Complex operator[](int n) const;
  Complex star(int n) const { return (*this)[n] * 2.0 * fourier_node(n); }

 private:
  std::vector<Complex> c_;
};

// Shared table covering at least 0..N.
const FourierTable& fourier_table(int N);

// int_0^1 |Psi - sum_{|n|<=N} c_n e^{2 pi i n x}|^2 dx, Simpson on 2^14 panels
double psi_fourier_l2(int N);
double psi_l2_norm();
// sum_{|n|<=N} |c_n|^2
double parseval_sum(int N);

// L! sum_{|n|<=N} c_n / (log 2 - 2 pi i n)^L
double M_from_fourier(int L, int N);
// Smallest N whose tail bound is below tol, from |c_n| <= m(log 2) / (4 pi |n|).
int fourier_terms(int L, double tol);

enum class ZetaMethod { phi, dirichlet, quadrature };
const char* method_name(ZetaMethod m);

struct ZetaValue {
  Complex s;
  Complex value;
  ZetaMethod method = ZetaMethod::phi;
};

// int_0^1 x^-w dF
Complex phi_integral(Complex w);
// int_0^inf x^s dF = Phi(s) + Phi(-s) = zeta_M(s) Gamma(s+1)
Complex mellin_F(Complex s);

// Phi form, with the inner integrals done by quadrature when |Im s| > 10.
ZetaValue zeta_M(Complex s);
// Symmetric partial sum over |n| <= N, +n and -n paired.
ZetaValue zeta_dirichlet(Complex s, int N = 2000);

// central difference of the Phi form at s = -L
double zeta_derivative_at_negative(int L, double h = 1e-4);

// |zeta(s)Gamma(s) + zeta(-s)Gamma(-s)| with the Dirichlet sum at s and the Phi form at -s
double functional_equation_residual(Complex s, int N = 2000);
double conjugate_symmetry_residual(Complex s);

// Z(t) = zeta_M(it) Gamma(1+it) = 2 Re Phi(it)
double critical_line_Z(double t);
// The same through zeta_M and Gamma separately; the imaginary part should vanish.
Complex critical_line_Z_complex(double t);

struct ZeroBracket {
  double t_zero = 0.0;
  double bracket_width = 0.0;
  double Z_left = 0.0;
  double Z_right = 0.0;
};

struct ScanSample {
  double t, Z;
};

std::vector<ScanSample> sample_Z(double t0, double t1, double step);
// sign changes of Z on the grid, bisected to 1e-8
std::vector<ZeroBracket> zero_scan(double t0, double t1, double step);

// int_0^inf G(1-z) z^(s-1) dz for 0 < Re s < 1
Complex mellin_G(Complex s);
// zeta_M(s-1) Gamma(s) pi / sin(pi s)
Complex mellin_G_closed(Complex s);
// (s - L) G*(s) averaged over s = L +- h
Complex mellin_G_residue(int L, double h = 1e-5);

// pi^2/3 - 8 pi^2 sum sigma_1(n) q^n, q = e^{2 pi i z}
Complex eisenstein_g1(Complex z);
inline constexpr double min_eisenstein_imag = 0.3;
// |-(1-z)^-2 f0(1/(1-z)) + 2 f0(z+1) - f0(z)| with f0 = G - (i/2pi) G_1
double dpf_residual(Complex z);

}  // namespace mink
