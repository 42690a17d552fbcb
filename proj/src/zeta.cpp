#include "minkowski/zeta.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "minkowski/moments.hpp"
#include "minkowski/period.hpp"
#include "minkowski/quadrature.hpp"
#include "minkowski/question_mark.hpp"
#include "minkowski/special.hpp"

namespace mink {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double ln2 = std::numbers::ln2;
constexpr Complex I(0.0, 1.0);

void check_index(int n) {
  if (std::abs(n) > max_fourier_index)
    throw Error(ErrorKind::limit, "Fourier index " + std::to_string(n) + " exceeds limit " + std::to_string(max_fourier_index));
}

bool finite(Complex s) { return std::isfinite(s.real()) && std::isfinite(s.imag()); }

}  // namespace

Complex fourier_node(int n) { return {ln2, -2.0 * pi * n}; }

Complex fourier_star(int n) {
  check_index(n);
  if (n < 0) return std::conj(fourier_star(-n));
  return m_exp(fourier_node(n));
}

Complex fourier_coeff(int n) { return fourier_star(n) / (2.0 * fourier_node(n)); }

Complex fourier_coeff_midpoint(int n, int depth) {
  check_index(n);
  const Complex t = fourier_node(n);
  const Complex m = 2.0 * integrate_unit_complex([t](double x) { return std::exp(x * t); }, depth);
  return m / (2.0 * t);
}

FourierTable::FourierTable(int N) {
  if (N < 0) throw Error(ErrorKind::domain, "Fourier table size must be >= 0");
  check_index(N);
  c_.resize(N + 1);
  for (int n = 0; n <= N; ++n) c_[n] = fourier_coeff(n);
}

Complex FourierTable::operator[](int n) const {
  if (std::abs(n) > size()) throw Error(ErrorKind::limit, "Fourier index outside the table");
  return n >= 0 ? c_[n] : std::conj(c_[-n]);
}

const FourierTable& fourier_table(int N) {
  static std::mutex mu;
  static std::unique_ptr<FourierTable> table;
  std::lock_guard lock(mu);
  if (!table || table->size() < N) table = std::make_unique<FourierTable>(N);
  return *table;
}

namespace {

constexpr int simpson_panels = 1 << 14;

const std::vector<double>& psi_samples() {
  static const std::vector<double> v = [] {
    std::vector<double> out(simpson_panels + 1);
    for (int k = 0; k <= simpson_panels; ++k) out[k] = psi(static_cast<double>(k) / simpson_panels);
    out[simpson_panels] = out[0];
    return out;
  }();
  return v;
}

double simpson(const std::vector<double>& y) {
  CompensatedSum s;
  for (int k = 0; k <= simpson_panels; ++k) {
    double w = (k == 0 || k == simpson_panels) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    s.add(w * y[k]);
  }
  return s.value() / (3.0 * simpson_panels);
}

}  // namespace

double psi_fourier_l2(int N) {
  if (N < 0) throw Error(ErrorKind::domain, "number of Fourier terms must be >= 0");
  if (N > max_l2_terms) throw Error(ErrorKind::limit, "L2 check limited to N <= 512");
  const auto& tab = fourier_table(N);
  const auto& p = psi_samples();
  std::vector<double> err(simpson_panels + 1);
  for (int k = 0; k <= simpson_panels; ++k) {
    const Complex e = std::polar(1.0, 2.0 * pi * k / simpson_panels);
    Complex z = 1.0, s = 0.0;
    for (int n = 1; n <= N; ++n) {
      z *= e;
      s += tab[n] * z;
    }
    const double partial = tab[0].real() + 2.0 * s.real();
    err[k] = (p[k] - partial) * (p[k] - partial);
  }
  return simpson(err);
}

double psi_l2_norm() {
  auto sq = psi_samples();
  for (auto& v : sq) v *= v;
  return simpson(sq);
}

double parseval_sum(int N) {
  if (N < 0) throw Error(ErrorKind::domain, "number of Fourier terms must be >= 0");
  const auto& tab = fourier_table(N);
  double s = std::norm(tab[0]);
  for (int n = 1; n <= N; ++n) s += 2.0 * std::norm(tab[n]);
  return s;
}

double M_from_fourier(int L, int N) {
  if (L < 1) throw Error(ErrorKind::domain, "moment index must be >= 1");
  if (L > 170) throw Error(ErrorKind::limit, "moment index must be <= 170");
  if (N < 0) throw Error(ErrorKind::domain, "number of Fourier terms must be >= 0");
  const auto& tab = fourier_table(N);
  CompensatedSum s;
  s.add((tab[0] / std::pow(fourier_node(0), L)).real());
  for (int n = 1; n <= N; ++n) s.add(2.0 * (tab[n] / std::pow(fourier_node(n), L)).real());
  return std::tgamma(L + 1.0) * s.value();
}

int fourier_terms(int L, double tol) {
  if (L < 1) throw Error(ErrorKind::domain, "moment index must be >= 1");
  if (!(tol > 0.0)) throw Error(ErrorKind::domain, "tolerance must be positive");
  // tail <= 2 L! K (2 pi)^-L N^-L / L with K = m(log 2) / (4 pi)
  const double K = m_exp(Complex(ln2, 0.0)).real() / (4.0 * pi);
  const double A = 2.0 * std::tgamma(L + 1.0) * K * std::pow(2.0 * pi, -L) / L;
  const double N = std::ceil(std::pow(A / tol, 1.0 / L));
  if (!(N <= max_fourier_index))
    throw Error(ErrorKind::convergence, "tail bound for L=" + std::to_string(L) + " needs more than " +
                                            std::to_string(max_fourier_index) + " Fourier terms");
  return std::max(1, static_cast<int>(N));
}

const char* method_name(ZetaMethod m) {
  switch (m) {
    case ZetaMethod::phi: return "phi";
    case ZetaMethod::dirichlet: return "dirichlet";
    case ZetaMethod::quadrature: return "quadrature";
  }
  return "?";
}

namespace {

// sum_{j even} C(w,j) (2n+1)^-j d_j / 2 = int_0^1 (1 + (2x-1)/(2n+1))^w dF; false on cancellation
bool centred_series(Complex w, int n, Complex& out) {
  const auto& d = default_moments().centred;
  const double r = 1.0 / (2.0 * n + 1.0);
  Complex c = 1.0, s = 0.0;
  double rj = 1.0, biggest = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j % 2 == 0) {
      const Complex t = c * rj * (0.5 * d[j]);
      s += t;
      biggest = std::max(biggest, std::abs(t));
      if (j > std::abs(w) && std::abs(c) * rj < 1e-18 * std::abs(s)) {
        out = s;
        return biggest <= 1e6 * std::abs(s);
      }
    }
    c *= (w - static_cast<double>(j)) / static_cast<double>(j + 1);
    rj *= r;
    if (c == 0.0) {
      out = s;
      return biggest <= 1e6 * std::abs(s);
    }
  }
  return false;
}

struct PhiResult {
  Complex value;
  bool quadrature = false;
};

PhiResult phi_sum(Complex w, bool force_quadrature) {
  if (!finite(w)) throw Error(ErrorKind::domain, "zeta argument must be finite");
  if (std::abs(w.real()) > max_zeta_real) throw Error(ErrorKind::limit, "|Re s| must be <= 120");
  CompensatedComplexSum total;
  PhiResult res;
  const double peak = std::max(0.0, w.real() / ln2);
  for (int n = 1; n <= 20000; ++n) {
    // 2^-n (n + 1/2)^w
    const double h = n + 0.5;
    const Complex scale = std::exp(w * std::log(h) - n * ln2);
    Complex inner;
    const bool use_cells = force_quadrature && std::abs(w) > 2.0 * (2.0 * n + 1.0);
    if (use_cells || !centred_series(w, n, inner)) {
      const double dn = n;
      inner = integrate_cells([w, dn, h](double x) { return std::exp(w * std::log((x + dn) / h)); }, std::abs(w) / n);
      res.quadrature = true;
    }
    const Complex term = scale * inner;
    total.add(term);
    if (n > peak + 2.0 && std::abs(scale) * std::exp(std::abs(w.real()) * std::log1p(1.0 / (2.0 * h))) <
                              1e-18 * std::abs(total.value()))
      break;
  }
  res.value = total.value();
  return res;
}

}  // namespace

Complex phi_integral(Complex w) { return phi_sum(w, std::abs(w.imag()) > 10.0).value; }

Complex mellin_F(Complex s) {
  const bool quad = std::abs(s.imag()) > 10.0;
  return phi_sum(s, quad).value + phi_sum(-s, quad).value;
}

ZetaValue zeta_M(Complex s) {
  const bool quad = std::abs(s.imag()) > 10.0;
  const auto a = phi_sum(s, quad);
  const auto b = phi_sum(-s, quad);
  ZetaValue z{s, (a.value + b.value) * rgamma(s + 1.0), ZetaMethod::phi};
  if (a.quadrature || b.quadrature) z.method = ZetaMethod::quadrature;
  return z;
}

ZetaValue zeta_dirichlet(Complex s, int N) {
  if (!finite(s)) throw Error(ErrorKind::domain, "zeta argument must be finite");
  if (!(s.real() > 0.25)) throw Error(ErrorKind::domain, "Dirichlet series needs Re s > 0.25");
  if (N < 1) throw Error(ErrorKind::domain, "Dirichlet series needs N >= 1");
  const auto& tab = fourier_table(N);
  CompensatedComplexSum sum;
  sum.add(tab[0] * std::pow(fourier_node(0), -s));
  for (int n = 1; n <= N; ++n) sum.add(tab[n] * std::pow(fourier_node(n), -s) + tab[-n] * std::pow(fourier_node(-n), -s));
  return {s, sum.value(), ZetaMethod::dirichlet};
}

double zeta_derivative_at_negative(int L, double h) {
  if (L < 1) throw Error(ErrorKind::domain, "derivative checked at s = -L with L >= 1");
  const double s = -L;
  const Complex up = zeta_M(Complex(s + h, 0.0)).value;
  const Complex dn = zeta_M(Complex(s - h, 0.0)).value;
  return (up - dn).real() / (2.0 * h);
}

double functional_equation_residual(Complex s, int N) {
  const Complex left = zeta_dirichlet(s, N).value * gamma(s);
  const Complex right = zeta_M(-s).value * gamma(-s);
  return std::abs(left + right);
}

double conjugate_symmetry_residual(Complex s) {
  return std::abs(zeta_M(std::conj(s)).value - std::conj(zeta_M(s).value));
}

namespace {

void check_t(double t) {
  if (!std::isfinite(t) || t < 0.0) throw Error(ErrorKind::domain, "t must be >= 0");
  if (t > max_scan_t) throw Error(ErrorKind::limit, "t must be <= 200");
}

}  // namespace

double critical_line_Z(double t) {
  check_t(t);
  return 2.0 * phi_sum(Complex(0.0, t), t > 10.0).value.real();
}

Complex critical_line_Z_complex(double t) {
  check_t(t);
  return zeta_M(Complex(0.0, t)).value * gamma(Complex(1.0, t));
}

std::vector<ScanSample> sample_Z(double t0, double t1, double step) {
  if (!(step > 0.0) || !(t1 > t0)) throw Error(ErrorKind::domain, "scan needs t0 < t1 and step > 0");
  check_t(t0);
  check_t(t1);
  const long count = std::lround(std::floor((t1 - t0) / step + 1e-9));
  if (count > 1000000) throw Error(ErrorKind::limit, "scan grid exceeds 10^6 points");
  std::vector<ScanSample> out;
  out.reserve(count + 1);
  for (long k = 0; k <= count; ++k) {
    const double t = t0 + k * step;
    out.push_back({t, critical_line_Z(t)});
  }
  return out;
}

std::vector<ZeroBracket> zero_scan(double t0, double t1, double step) {
  const auto grid = sample_Z(t0, t1, step);
  std::vector<ZeroBracket> zeros;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    double a = grid[k].t, b = grid[k + 1].t, za = grid[k].Z, zb = grid[k + 1].Z;
    if (za == 0.0) {
      zeros.push_back({a, 0.0, za, za});
      continue;
    }
    if ((za < 0.0) == (zb < 0.0) || zb == 0.0) continue;
    while (b - a > 1e-8) {
      const double m = 0.5 * (a + b);
      const double zm = critical_line_Z(m);
      if (zm == 0.0) {
        a = b = m;
        za = zb = 0.0;
        break;
      }
      if ((zm < 0.0) == (za < 0.0)) {
        a = m;
        za = zm;
      } else {
        b = m;
        zb = zm;
      }
    }
    zeros.push_back({0.5 * (a + b), b - a, za, zb});
  }
  return zeros;
}

namespace {

constexpr double asym_cut = 0.02;

// G(1-z) ~ sum (-1)^L M_{L+1} z^L as z -> 0+, G(1-1/y) ~ sum (-1)^L M_L y^{L+1} as y -> 0+
double asymptotic(double v, int shift) {
  const auto& tab = default_moments();
  double s = 0.0, p = 1.0, last = INFINITY;
  for (int L = 0; L + shift <= tab.lmax; ++L) {
    const double t = tab.M(L + shift) * p;
    if (!(std::abs(t) < last) || t == 0.0) break;
    s += L % 2 == 0 ? t : -t;
    last = std::abs(t);
    p *= v;
  }
  return s;
}

double G_near_one(double z) { return z < asym_cut ? asymptotic(z, 1) : period_function()(1.0 - z); }
// G(1-1/y) / y
double G_far(double y) { return y < asym_cut ? asymptotic(y, 0) : period_function()(1.0 - 1.0 / y) / y; }

}  // namespace

Complex mellin_G(Complex s) {
  if (!finite(s)) throw Error(ErrorKind::domain, "Mellin argument must be finite");
  if (!(s.real() > 0.0 && s.real() < 1.0)) throw Error(ErrorKind::domain, "direct Mellin integral needs 0 < Re s < 1");
  boost::math::quadrature::tanh_sinh<double> ts;
  auto part = [&](auto&& g, Complex e, bool imag) {
    return ts.integrate(
        [&](double v) {
          if (v <= 0.0) return 0.0;
          const Complex w = g(v) * std::exp(e * std::log(v));
          // only reached next to 0, where the tanh-sinh weight underflows anyway
          if (!finite(w)) return 0.0;
          return imag ? w.imag() : w.real();
        },
        0.0, 1.0, 1e-13);
  };
  // [0,1] in z, and [1,inf) through z = 1/y
  const Complex e0 = s - 1.0, e1 = -s;
  const double re = part(G_near_one, e0, false) + part(G_far, e1, false);
  const double im = s.imag() == 0.0 ? 0.0 : part(G_near_one, e0, true) + part(G_far, e1, true);
  return {re, im};
}

Complex mellin_G_closed(Complex s) {
  if (!finite(s)) throw Error(ErrorKind::domain, "Mellin argument must be finite");
  if (s.imag() == 0.0 && s.real() == std::round(s.real()))
    throw Error(ErrorKind::pole, "G* has poles at the integers");
  return zeta_M(s - 1.0).value * gamma(s) * pi / std::sin(pi * s);
}

Complex mellin_G_residue(int L, double h) {
  if (L < 1) throw Error(ErrorKind::domain, "residue checked at s = L >= 1");
  const double s = L;
  return 0.5 * (h * mellin_G_closed(Complex(s + h, 0.0)) - h * mellin_G_closed(Complex(s - h, 0.0)));
}

Complex eisenstein_g1(Complex z) {
  if (!finite(z)) throw Error(ErrorKind::domain, "Eisenstein argument must be finite");
  if (z.imag() < min_eisenstein_imag) throw Error(ErrorKind::domain, "Eisenstein series needs Im z >= 0.3");
  const double aq = std::exp(-2.0 * pi * z.imag());
  // sigma_1(n) <= n (1 + log n)
  int nmax = 1;
  while (nmax * (1.0 + std::log(nmax)) * std::pow(aq, nmax) >= 1e-17) ++nmax;
  std::vector<double> sigma(nmax + 1, 0.0);
  for (int d = 1; d <= nmax; ++d)
    for (int m = d; m <= nmax; m += d) sigma[m] += d;
  const Complex q = std::exp(2.0 * pi * I * z);
  Complex p = 1.0;
  CompensatedComplexSum s;
  for (int n = 1; n <= nmax; ++n) {
    p *= q;
    s.add(sigma[n] * p);
  }
  return pi * pi / 3.0 - 8.0 * pi * pi * s.value();
}

double dpf_residual(Complex z) {
  if (!finite(z)) throw Error(ErrorKind::domain, "DPF argument must be finite");
  auto f0 = [](Complex w) { return G_eval(w) - I / (2.0 * pi) * eisenstein_g1(w); };
  const Complex v = 1.0 / (1.0 - z);
  return std::abs(-f0(v) / ((1.0 - z) * (1.0 - z)) + 2.0 * f0(z + 1.0) - f0(z));
}

}  // namespace mink
