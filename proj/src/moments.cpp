#include "minkowski/moments.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "linalg.hpp"
#include "minkowski/contfrac.hpp"
#include "minkowski/quadrature.hpp"
#include "minkowski/special.hpp"
#include "minkowski/transfer.hpp"

namespace mink {

namespace {

std::string indexed(const std::string& base, int a) { return base + "." + std::to_string(a); }

Real real_binomial(int n, int k) {
  Real r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// d_j for j < K from d_L = int psi0(u)^L d?(u), psi0(u) = (u-1)/(u+3), even L.
std::vector<Real> centred_moments(int K) {
  // rows[L][k] = [u^k] psi0^L for even L >= 2
  const int half = K / 2;  // unknowns d_2, d_4, ..., d_{2(half-1)}
  std::vector<Real> poly(K, Real(0)), next(K);
  poly[0] = 1;
  ExtMatrix A(half - 1);
  std::vector<Real> rhs(half - 1);
  for (int L = 1; L < K; ++L) {
    // multiply by (u - 1), then divide by (3 + u)
    Real prev = 0;
    for (int k = 0; k < K; ++k) {
      Real a = (k > 0 ? poly[k - 1] : Real(0)) - poly[k];
      next[k] = (a - prev) / 3;
      prev = next[k];
    }
    poly.swap(next);
    if (L % 2 != 0 || L < 2) continue;
    const int row = L / 2 - 1;
    if (row >= half - 1) break;
    for (int c = 0; c < half - 1; ++c) A(row, c) = -poly[2 * (c + 1)];
    A(row, row) += 1;
    rhs[row] = poly[0];
  }
  auto sol = detail::ExtLU(std::move(A)).solve(rhs);
  std::vector<Real> d(K, Real(0));
  d[0] = 1;
  for (int i = 0; i < half - 1; ++i) d[2 * (i + 1)] = sol[i];
  return d;
}

void fill_doubles(MomentTable& t) {
  t.m.resize(t.m_ext.size());
  for (std::size_t i = 0; i < t.m_ext.size(); ++i) t.m[i] = to_double(t.m_ext[i]);
}

}  // namespace

std::vector<Real> big_moments(const std::vector<Real>& m) {
  std::vector<Real> M(m.size());
  for (std::size_t L = 0; L < m.size(); ++L) {
    Real s = m[L];
    Real c = 1;  // C(L, s)
    for (std::size_t s_ = 0; s_ < L; ++s_) {
      s += c * M[s_];
      c = c * Real(static_cast<long>(L - s_)) / Real(static_cast<long>(s_ + 1));
    }
    M[L] = s;
  }
  return M;
}

MomentTable moment_tables(int lmax, int digits) {
  if (lmax < 1) throw Error(ErrorKind::domain, "lmax must be >= 1");
  if (lmax > 1000) throw Error(ErrorKind::limit, "lmax must be <= 1000");
  if (digits < 30) throw Error(ErrorKind::precision, "moment table needs at least 30 digits");
  ScopedDigits sd(digits + 20);
  const int K = 2 * ((lmax + 1) + 20);
  auto d = centred_moments(K);
  MomentTable t;
  t.lmax = lmax;
  t.digits = digits;
  t.method = "centred-self-similarity";
  t.m_ext.resize(lmax + 1);
  for (int L = 0; L <= lmax; ++L) {
    Real s = 0;
    Real c = 1;
    for (int k = 0; k <= L; ++k) {
      if (k % 2 == 0) s += c * d[k];
      c = c * (L - k) / (k + 1);
    }
    t.m_ext[L] = ldexp(s, -L);
  }
  t.M_ext = big_moments(t.m_ext);
  t.centred.resize(K);
  for (int j = 0; j < K; ++j) t.centred[j] = to_double(d[j]);
  t.centred_ext = std::move(d);
  fill_doubles(t);
  return t;
}

MomentTable moment_tables_monomial(int N, int digits) {
  auto m = solve_period_coeffs(N, digits);
  MomentTable t;
  t.lmax = N;
  t.digits = digits;
  t.method = "monomial-transfer";
  t.m_ext.reserve(N + 1);
  t.m_ext.push_back(Real(1));
  for (auto& v : m) t.m_ext.push_back(v);
  t.M_ext = big_moments(t.m_ext);
  fill_doubles(t);
  return t;
}

const MomentTable& default_moments() {
  static const MomentTable table = moment_tables();
  return table;
}

std::vector<Relation> check_cross_relations(const MomentTable& t) {
  std::vector<Relation> out;
  // M_L = sum_{s >= L} C(s-1, L-1) m_s, truncated at the end of the table
  for (int L = 1; L <= 3 && L <= t.lmax; ++L) {
    Real s = 0;
    for (int j = L; j <= t.lmax; ++j) s += real_binomial(j - 1, L - 1) * t.m_ext[j];
    double lhs = t.M(L), rhs = to_double(s);
    out.push_back(make_relation(indexed("est", L), lhs, rhs, std::abs(lhs - rhs) / lhs, 1e-4));
  }
  // m_L = sum_s (-1)^s C(L,s) m_s
  for (int L = 1; L <= 20 && L <= t.lmax; ++L) {
    Real s = 0;
    for (int k = 0; k <= L; ++k) s += (k % 2 == 0 ? 1 : -1) * real_binomial(L, k) * t.m_ext[k];
    double lhs = t.m[L], rhs = to_double(s);
    out.push_back(make_relation(indexed("symmetry", L), lhs, rhs, std::abs(lhs - rhs), 1e-10));
  }
  // sum_i C(m,i) (-1)^i m_{i+n} > 0
  double worst = 1e300;
  std::string where;
  for (int mm = 1; mm <= 12; ++mm)
    for (int n = 0; n <= 12; ++n) {
      if (mm + n > t.lmax) continue;
      Real s = 0;
      for (int i = 0; i <= mm; ++i) s += (i % 2 == 0 ? 1 : -1) * real_binomial(mm, i) * t.m_ext[i + n];
      double v = to_double(s);
      if (v < worst) {
        worst = v;
        where = std::to_string(mm) + "," + std::to_string(n);
      }
      if (mm == 3 && n == 2) out.push_back(make_relation("hausdorff.3.2", v, 0.0, v > 0 ? 0.0 : -v, 0.0));
    }
  out.push_back(make_relation("hausdorff.min." + where, worst, 0.0, worst > 0 ? 0.0 : -worst, 0.0));
  for (auto& r : out)
    if (r.name.rfind("hausdorff", 0) == 0) r.pass = r.lhs > 0;  // strict positivity
  return out;
}

double GaussRule::integrate(const std::function<double(double)>& f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(x[i]);
  return s;
}

const GaussRule& gauss_rule_F() {
  static const GaussRule rule = [] {
    constexpr int n = 30;
    const auto& t = default_moments();
    ScopedDigits sd(t.digits + 20);
    if (t.centred_ext.size() < 2 * n) throw Error(ErrorKind::limit, "moment table too short for the Gauss rule");
    std::vector<Real> d(t.centred_ext.begin(), t.centred_ext.begin() + 2 * n);
    // Chebyshev algorithm for the recurrence coefficients
    std::vector<Real> alpha(n), beta(n);
    std::vector<Real> prev(2 * n, Real(0)), cur = d, nxt(2 * n);
    alpha[0] = d[1] / d[0];
    beta[0] = d[0];
    for (int k = 1; k < n; ++k) {
      for (int l = k; l < 2 * n - k; ++l) nxt[l] = cur[l + 1] - alpha[k - 1] * cur[l] - beta[k - 1] * prev[l];
      alpha[k] = nxt[k + 1] / nxt[k] - cur[k] / cur[k - 1];
      beta[k] = nxt[k] / cur[k - 1];
      prev = cur;
      cur = nxt;
    }
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) J(k, k) = to_double(alpha[k]);
    for (int k = 1; k < n; ++k) {
      if (!(beta[k] > 0)) throw Error(ErrorKind::precision, "moment Gauss rule lost positivity");
      J(k, k - 1) = J(k - 1, k) = std::sqrt(to_double(beta[k]));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    GaussRule g;
    for (int i = 0; i < n; ++i) {
      double v = es.eigenvectors()(0, i);
      g.x.push_back(0.5 * (1.0 + es.eigenvalues()(i)));
      g.w.push_back(0.5 * v * v);
    }
    return g;
  }();
  return rule;
}

int QPolynomial::degree() const {
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    if (coeffs[k] != 0) return k;
  return -1;
}

QPolynomial q_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::domain, "Q polynomial index must be >= 1");
  if (n > 16) throw Error(ErrorKind::limit, "Q polynomial index must be <= 16");
  QPolynomial q;
  q.n = n;
  q.coeffs.assign(n + 1, Integer(0));
  Integer c = 1;
  for (int k = 0; k <= n; ++k) {
    // 2x^n - (x+1)^n - 2(1-x)^n + (-x)^n
    Integer v = -c - 2 * c * (k % 2 == 0 ? 1 : -1);
    if (k == n) v += 2 + (n % 2 == 0 ? 1 : -1);
    q.coeffs[k] = v;
    c = c * (n - k) / (k + 1);
  }
  while (q.coeffs.size() > 1 && q.coeffs.back() == 0) q.coeffs.pop_back();
  return q;
}

bool q_hat_reciprocal(int two_n) {
  if (two_n < 2 || two_n % 2 != 0) throw Error(ErrorKind::domain, "reciprocity applies to even indices");
  auto q = q_polynomial(two_n);
  if (q.coeffs[0] != -3) return false;
  // (Q + 3)/x as a polynomial of formal degree 2n - 2
  std::vector<Integer> h(two_n - 1, Integer(0));
  for (int k = 1; k < static_cast<int>(q.coeffs.size()); ++k) {
    if (k - 1 >= two_n - 1) {
      if (q.coeffs[k] != 0) return false;
      continue;
    }
    h[k - 1] = q.coeffs[k];
  }
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h[k] != h[h.size() - 1 - k]) return false;
  return true;
}

std::vector<Rational> q_span(int two_n) {
  if (two_n < 2 || two_n % 2 != 0) throw Error(ErrorKind::domain, "span check applies to even indices");
  const int n = two_n / 2;
  const int rows = two_n + 1;
  // columns Q_1, Q_3, ..., Q_{2n-1}, augmented by Q_{2n}
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(n + 1, Rational(0)));
  for (int c = 0; c <= n; ++c) {
    auto q = q_polynomial(c < n ? 2 * c + 1 : two_n);
    for (int k = 0; k < static_cast<int>(q.coeffs.size()); ++k) a[k][c] = Rational(q.coeffs[k]);
  }
  int r = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < n && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (int k = c; k <= n; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (a[i][n] != 0) return {};
  std::vector<Rational> x(n, Rational(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = a[i][n] / a[i][pivot_col[i]];
  return x;
}

double q_annihilation(int n, const MomentTable& t) {
  auto q = q_polynomial(n);
  if (static_cast<int>(q.coeffs.size()) - 1 > t.lmax) throw Error(ErrorKind::limit, "moment table too short");
  Real s = 0;
  for (int k = 0; k < static_cast<int>(q.coeffs.size()); ++k) s += Real(q.coeffs[k]) * t.M_ext[k];
  return to_double(s);
}

std::vector<Relation> q_relations(int nmax, const MomentTable& t) {
  std::vector<Relation> out;
  for (int n = 1; n <= nmax; ++n) {
    auto q = q_polynomial(n);
    const int expect = n % 2 == 0 ? n - 1 : n;
    out.push_back(make_relation(indexed("q.degree", n), q.degree(), expect, std::abs(q.degree() - expect), 0.0));
    double v = q_annihilation(n, t);
    out.push_back(make_relation(indexed("q.annihilation", n), v, 0.0, std::abs(v), 1e-6));
    if (n % 2 == 0) {
      bool rec = q_hat_reciprocal(n);
      out.push_back(make_relation(indexed("q.reciprocal", n), rec ? 1.0 : 0.0, 1.0, rec ? 0.0 : 1.0, 0.0));
      bool span = !q_span(n).empty();
      out.push_back(make_relation(indexed("q.span", n), span ? 1.0 : 0.0, 1.0, span ? 0.0 : 1.0, 0.0));
    }
  }
  return out;
}

Rational empirical_moment_exact(int n, int L, bool below_one) {
  if (n < 1) throw Error(ErrorKind::domain, "generation must be >= 1");
  if (n > 20) throw Error(ErrorKind::limit, "generation must be <= 20");
  if (L < 0 || L > 4) throw Error(ErrorKind::limit, "moment order must lie in [0, 4]");
  Rational s = 0;
  for (const auto& f : cw_generation_frac(n)) {
    if (below_one && f.num >= f.den) continue;
    Rational x = f.to_rational();
    Rational p = 1;
    for (int i = 0; i < L; ++i) p *= x;
    s += p;
  }
  return below_one ? s * 4 / Rational(Integer(1) << n) : s * 2 / Rational(Integer(1) << n);
}

double empirical_moment(int n, int L, bool below_one) {
  if (n < 1) throw Error(ErrorKind::domain, "generation must be >= 1");
  if (n > 20) throw Error(ErrorKind::limit, "generation must be <= 20");
  if (L < 0 || L > 4) throw Error(ErrorKind::limit, "moment order must lie in [0, 4]");
  CompensatedSum s;
  for (const auto& f : cw_generation_frac(n)) {
    if (below_one && f.num >= f.den) continue;
    s.add(std::pow(f.value(), L));
  }
  return std::ldexp(s.value(), (below_one ? 2 : 1) - n);
}

double asym_constant() { return std::exp(-2.0 * std::sqrt(std::numbers::ln2)); }

std::vector<double> asym_ratio(const MomentTable& t, int lmax) {
  if (lmax > t.lmax) throw Error(ErrorKind::limit, "moment table too short for the requested ratios");
  const double logc = std::log(asym_constant());
  std::vector<double> r(lmax + 1);
  r[0] = t.m[0];
  for (int L = 1; L <= lmax; ++L) r[L] = t.m[L] / (std::pow(L, 0.25) * std::exp(std::sqrt(L) * logc));
  return r;
}

bool strictly_increasing(const std::vector<double>& v, int from, int to) {
  for (int i = from; i < to; ++i)
    if (!(v[i + 1] > v[i])) return false;
  return true;
}

std::vector<double> chebyshev_chain(int J) {
  if (J < 1) throw Error(ErrorKind::domain, "chain length must be >= 1");
  std::vector<double> c(J);
  const double h = std::numbers::pi / (J + 2);
  for (int j = 1; j <= J; ++j) c[j - 1] = std::sin((j + 1) * h) / std::sin(j * h);
  return c;
}

double chebyshev_chain_defect(const std::vector<double>& c) {
  const std::size_t J = c.size();
  double worst = std::abs(c[0] - 1.0 / c[J - 1]);
  for (std::size_t j = 0; j + 1 < J; ++j) worst = std::max(worst, std::abs(c[0] - 1.0 / c[j] - c[j + 1]));
  return worst;
}

Complex integrate_cells(const std::function<Complex(double)>& f, double scale, double max_phase, double mass_floor,
                        double max_ratio) {
  struct Cell {
    double a, b, c, d, mass;
  };
  const auto& rule = gauss_rule_F();
  std::vector<Cell> stack{{0.0, 1.0, 1.0, 1.0, 0.5}};
  CompensatedComplexSum total;
  while (!stack.empty()) {
    Cell k = stack.back();
    stack.pop_back();
    const double p = k.a + k.c, q = k.b + k.d;
    if (k.mass < mass_floor) {
      total.add(k.mass * f(p / q));
      continue;
    }
    const double width = 1.0 / (k.b * k.d);
    if (scale * width > max_phase || k.d > max_ratio * k.b || k.b > max_ratio * k.d) {
      stack.push_back({k.a, k.b, p, q, 0.5 * k.mass});
      stack.push_back({p, q, k.c, k.d, 0.5 * k.mass});
      continue;
    }
    // ? on the cell is the image of ? on [0,1] under x -> (a + (c-a)x) / (b + (d-b)x)
    Complex s = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double x = rule.x[i];
      s += rule.w[i] * f((k.a + (k.c - k.a) * x) / (k.b + (k.d - k.b) * x));
    }
    total.add(2.0 * k.mass * s);
  }
  return total.value();
}

namespace {

// sum_L m_{L+shift} t^L / L! at the table precision; false when cancellation eats the table accuracy
bool moment_series(Complex t, int shift, Complex& out) {
  const auto& tab = default_moments();
  ScopedDigits sd(tab.digits + 20);
  Real tr = t.real(), ti = t.imag();
  Real pr = 1, pi = 0, sr = 0, si = 0;
  double biggest = 0.0, last = 0.0;
  for (int L = 0; L + shift <= tab.lmax; ++L) {
    if (L > 0) {
      Real nr = (pr * tr - pi * ti) / L;
      Real ni = (pr * ti + pi * tr) / L;
      pr = nr;
      pi = ni;
    }
    const Real& m = tab.m_ext[L + shift];
    sr += m * pr;
    si += m * pi;
    last = to_double(abs(m * pr) + abs(m * pi));
    biggest = std::max(biggest, last);
  }
  out = Complex(to_double(sr), to_double(si));
  const double size = std::abs(out);
  // the table carries about 25 good digits
  if (last > 1e-22 * std::max(size, 1e-300)) return false;
  if (biggest > 1e8 * size) return false;
  return true;
}

// 2 sum_n 2^-n int g(1/(x+n)) dF with the moment Gauss rule
double smoothed_gauss(const std::function<double(double)>& g, int nmin_terms) {
  const auto& rule = gauss_rule_F();
  double total = 0.0, w = 1.0;
  for (int n = 1; n <= 4000; ++n) {
    w *= 0.5;
    double part = w * rule.integrate([&](double x) { return g(1.0 / (x + n)); });
    total += part;
    if (n >= nmin_terms && std::abs(part) < 1e-19 * std::abs(total)) break;
    if (w == 0.0) break;
  }
  return 2.0 * total;
}

}  // namespace

Complex m_exp(Complex t) {
  if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) throw Error(ErrorKind::domain, "m(t) needs a finite argument");
  if (std::abs(t.imag()) <= 10.0) {
    Complex s;
    if (moment_series(t, 0, s)) return s;
    if (t.imag() == 0.0) {
      const double r = t.real();
      const int nmin = static_cast<int>(std::sqrt(std::abs(r) / std::numbers::ln2)) + 8;
      return smoothed_gauss([r](double y) { return std::exp(r * y); }, nmin);
    }
  }
  return 2.0 * integrate_cells([t](double x) { return std::exp(x * t); }, std::abs(t));
}

double m_exp_derivative_neg(double t) {
  if (t < 0.0 || !std::isfinite(t)) throw Error(ErrorKind::domain, "m'(-t) needs t >= 0");
  if (t <= 15.0) {
    Complex s;
    if (moment_series(Complex(-t, 0.0), 1, s)) return s.real();
  }
  const int nmin = static_cast<int>(std::sqrt(t / std::numbers::ln2)) + 8;
  return smoothed_gauss([t](double y) { return y * std::exp(-t * y); }, nmin);
}

double integral_equation_residual(double s) {
  if (!(s > 0.0)) throw Error(ErrorKind::domain, "integral equation needs s > 0");
  if (s > 20.0) throw Error(ErrorKind::limit, "integral equation checked for s <= 20");
  const double amp = 2.0 * std::exp(s) - 1.0;
  // the tail beyond T is bounded by m(-T)
  double T = 16.0;
  while (amp * m_exp(Complex(-T, 0.0)).real() > 1e-8) {
    T *= 1.5;
    if (T > 1e5) throw Error(ErrorKind::convergence, "truncation bound not reached");
  }
  // t = tau^2, panels of width 1/2 in tau
  const auto gl = gauss_legendre(16);
  const double tmax = std::sqrt(T);
  const int panels = static_cast<int>(std::ceil(tmax / 0.5));
  const double h = tmax / panels;
  const double k = 2.0 * std::sqrt(s);
  CompensatedSum integral;
  for (int p = 0; p < panels; ++p)
    for (std::size_t i = 0; i < gl.x.size(); ++i) {
      double tau = h * (p + 0.5 * (gl.x[i] + 1.0));
      double v = 2.0 * tau * m_exp_derivative_neg(tau * tau) * bessel_j(0, k * tau);
      integral.add(0.5 * h * gl.w[i] * v);
    }
  double lhs = m_exp(Complex(-s, 0.0)).real();
  return std::abs(lhs - amp * integral.value());
}

}  // namespace mink
