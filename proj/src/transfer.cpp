#include "minkowski/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "linalg.hpp"
#include "minkowski/period.hpp"
#include "minkowski/quadrature.hpp"
#include "minkowski/question_mark.hpp"
#include "minkowski/special.hpp"

namespace mink {

namespace {

void check_weight(int w) {
  if (w != 0 && w != 2) throw Error(ErrorKind::domain, "transfer weight must be 0 or 2");
}

void check_dim(int N, int limit = max_matrix_dim) {
  if (N < 1) throw Error(ErrorKind::domain, "matrix dimension must be >= 1");
  if (N > limit) throw Error(ErrorKind::limit, "matrix dimension " + std::to_string(N) + " exceeds " + std::to_string(limit));
}

bool by_modulus(double a, double b) {
  if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
  return a > b;
}

// Pascal triangle up to row n at the current precision.
std::vector<std::vector<Real>> pascal(int n) {
  std::vector<std::vector<Real>> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].resize(i + 1);
    c[i][0] = c[i][i] = 1;
    for (int k = 1; k < i; ++k) c[i][k] = c[i - 1][k - 1] + c[i - 1][k];
  }
  return c;
}

// C(m-1+l, l), the coefficient pattern of (1+t)^-m; C(-1,0) = 1 and C(l-1,l) = 0.
const Real& neg_binomial(const std::vector<std::vector<Real>>& c, int m, int l) {
  static const Real zero = 0;
  if (l == 0) return c[0][0];
  if (m == 0) return zero;
  return c[m - 1 + l][l];
}

double neg_binomial(int m, int l) {
  if (l == 0) return 1.0;
  if (m == 0) return 0.0;
  return binomial(m - 1 + l, l);
}

// W[a][d] = sum_n 2^-n (q/p)^a p^-d with p = 2n+1, q = 3-2n.
std::vector<std::vector<Real>> w_table(int amax, int dmax) {
  const double bits = Real::default_precision() * std::numbers::log2e * std::numbers::ln10 + 20.0;
  const int nlimit = static_cast<int>(bits + 4.0 + (amax + dmax) * std::log2(3.0));
  std::vector<double> maxlog(static_cast<std::size_t>(amax) * dmax, -1e300);
  auto idx = [dmax](int a, int d) { return static_cast<std::size_t>(a) * dmax + d; };
  for (int n = 1; n <= nlimit; ++n) {
    const double p = 2.0 * n + 1.0, q = 3.0 - 2.0 * n;
    const double lq = std::log2(std::abs(q) / p), lp = std::log2(p);
    for (int a = 0; a < amax; ++a)
      for (int d = 0; d < dmax; ++d) {
        double lt = -n + a * lq - d * lp;
        double& m = maxlog[idx(a, d)];
        if (lt > m) m = lt;
      }
  }
  std::vector<std::vector<Real>> W(amax, std::vector<Real>(dmax, Real(0)));
  std::vector<Real> qa(amax), pd(dmax);
  Real scale = 1;
  for (int n = 1; n <= nlimit; ++n) {
    scale /= 2;
    const double p = 2.0 * n + 1.0, q = 3.0 - 2.0 * n;
    const double lq = std::log2(std::abs(q) / p), lp = std::log2(p);
    bool any = false;
    for (int a = 0; a < amax && !any; ++a)
      for (int d = 0; d < dmax; ++d)
        if (-n + a * lq - d * lp >= maxlog[idx(a, d)] - bits) {
          any = true;
          break;
        }
    if (!any) continue;
    Real ratio = Real(static_cast<long>(q)) / Real(static_cast<long>(p));
    Real pinv = 1 / Real(static_cast<long>(p));
    qa[0] = scale;
    for (int a = 1; a < amax; ++a) qa[a] = qa[a - 1] * ratio;
    pd[0] = 1;
    for (int d = 1; d < dmax; ++d) pd[d] = pd[d - 1] * pinv;
    for (int a = 0; a < amax; ++a)
      for (int d = 0; d < dmax; ++d)
        if (-n + a * lq - d * lp >= maxlog[idx(a, d)] - bits) W[a][d] += qa[a] * pd[d];
  }
  return W;
}

struct CentredSystem {
  ExtMatrix A;
  std::vector<Real> h;  // centred coefficients of sum 2^-n/(x+n)
};

CentredSystem centred_system(int w, int K) {
  auto W = w_table(K, K + w + 1);
  auto C = pascal(2 * K + w + 2);
  CentredSystem s{ExtMatrix(K), std::vector<Real>(K)};
  const Real factor = w == 2 ? Real(4) : Real(1);
  for (int j = 0; j < K; ++j)
    for (int k = 0; k < K; ++k) {
      Real sum = 0;
      for (int i = 0; i <= std::min(j, k); ++i) sum += C[k][i] * neg_binomial(C, k + w, j - i) * W[k - i][j + w];
      s.A(j, k) = (j % 2 == 0 ? factor : -factor) * sum;
    }
  for (int j = 0; j < K; ++j) s.h[j] = (j % 2 == 0 ? 2 : -2) * W[0][j + 1];
  return s;
}

ExtMatrix monomial_ext(int w, int N) {
  std::vector<Real> li(2 * N + w + 1);
  for (int m = 0; m <= 2 * N + w; ++m) li[m] = polylog_half_ext(m);
  auto C = pascal(2 * N + w);
  ExtMatrix B(N);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) {
      const Real& b = neg_binomial(C, k + w, j);
      B(j, k) = (j % 2 == 0 ? b : Real(-b)) * li[k + w + j];
    }
  return B;
}

Eigen::MatrixXd collocation(int w, int N, double truncation_eps) {
  ChebGrid grid(N);
  const int nmax = transfer_terms(truncation_eps);
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(N, N);
  std::vector<double> row(N);
  for (int j = 0; j < N; ++j) {
    const double x = grid.points()[j];
    double weight = 1.0;
    for (int n = 1; n <= nmax + 1; ++n) {
      weight *= 0.5;
      // the last term carries the whole tail sum_{n > nmax} 2^-n
      double c = n <= nmax ? weight : 2.0 * weight;
      if (w == 2) c /= (x + n) * (x + n);
      grid.basis(1.0 / (x + n), row);
      for (int k = 0; k < N; ++k) E(j, k) += c * row[k];
    }
  }
  return E;
}

std::mutex cache_mutex;

const CentredSystem& cached_centred(int w, int K, int digits) {
  static std::map<std::tuple<int, int, int>, CentredSystem> cache;
  std::lock_guard lock(cache_mutex);
  auto key = std::make_tuple(w, K, digits);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, centred_system(w, K)).first->second;
}

}  // namespace

TransferMatrix build_matrix(int w, int N, Basis basis, double truncation_eps) {
  check_weight(w);
  check_dim(N);
  TransferMatrix t{w, N, basis, Eigen::MatrixXd(N, N)};
  switch (basis) {
    case Basis::collocation:
      t.entries = collocation(w, N, truncation_eps);
      break;
    case Basis::monomial:
      if (N > max_standard_monomial_dim)
        throw Error(ErrorKind::precision, "monomial basis overflows standard precision beyond dimension 40; use the extended build");
      for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k)
          t.entries(j, k) = (j % 2 == 0 ? 1.0 : -1.0) * neg_binomial(k + w, j) * polylog_half(k + w + j);
      break;
    case Basis::centred: {
      ScopedDigits sd(40);
      auto s = centred_system(w, N);
      for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) t.entries(j, k) = to_double(s.A(j, k));
      break;
    }
  }
  return t;
}

ExtMatrix build_matrix_ext(int w, int N, Basis basis) {
  check_weight(w);
  check_dim(N);
  if (basis == Basis::monomial) return monomial_ext(w, N);
  if (basis == Basis::centred) return centred_system(w, N).A;
  throw Error(ErrorKind::domain, "extended build supports the monomial and centred bases");
}

namespace {

std::vector<double> real_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::convergence, "eigensolver did not converge");
  std::vector<double> out;
  for (const auto& z : es.eigenvalues())
    if (std::abs(z.imag()) <= 1e-9 * std::max(1.0, std::abs(z.real()))) out.push_back(z.real());
  std::sort(out.begin(), out.end(), by_modulus);
  return out;
}

// values of a that reappear in b; discretisation artefacts drift with the dimension
std::vector<double> stable_part(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out;
  for (double x : a) {
    if (std::abs(x) < 1e-6) continue;
    bool stable = std::any_of(b.begin(), b.end(), [x](double y) { return std::abs(x - y) <= 1e-7 + 1e-4 * std::abs(x); });
    if (stable) out.push_back(x);
  }
  return out;
}

// shifts for inverse iteration, from the centred basis in double precision
const std::vector<double>& centred_shifts() {
  static const std::vector<double> shifts =
      stable_part(real_eigenvalues(build_matrix(2, 40, Basis::centred).entries),
                  real_eigenvalues(build_matrix(2, 60, Basis::centred).entries));
  return shifts;
}

}  // namespace

std::vector<double> raw_spectrum(int w, int N) {
  check_weight(w);
  check_dim(N, max_matrix_dim + 16);
  return real_eigenvalues(collocation(w, N, 1e-16));
}

std::vector<double> spectrum(int N, int w) {
  if (N < 16) throw Error(ErrorKind::domain, "spectrum needs dimension >= 16");
  check_dim(N);
  static std::map<std::pair<int, int>, std::vector<double>> cache;
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find({N, w});
    if (it != cache.end()) return it->second;
  }
  auto out = stable_part(raw_spectrum(w, N), raw_spectrum(w, N + 16));
  std::lock_guard lock(cache_mutex);
  cache[{N, w}] = out;
  return out;
}

EigenPair eigenfunction(int index, const PrecisionConfig& cfg) {
  cfg.validate();
  if (index < 1) throw Error(ErrorKind::domain, "eigen index starts at 1");
  if (index > 8) throw Error(ErrorKind::limit, "eigen index must be <= 8");
  const auto& lam = centred_shifts();
  if (index > static_cast<int>(lam.size())) throw Error(ErrorKind::limit, "not enough stable eigenvalues");
  const int K = cfg.coeff_dim;
  const int digits = cfg.digits + 10;
  ScopedDigits sd(digits);
  const ExtMatrix& A = cached_centred(2, K, digits).A;
  const Real sigma = lam[index - 1];
  ExtMatrix M = A;
  for (int i = 0; i < K; ++i) M(i, i) -= sigma;
  detail::ExtLU lu(std::move(M));

  std::vector<Real> v(K, Real(1));
  const Real tol = pow(Real(10), -cfg.digits);
  for (int it = 0; it < 80; ++it) {
    auto x = lu.solve(v);
    Real big = 0;
    for (const auto& t : x) big = std::max<Real>(big, abs(t));
    for (auto& t : x) t /= big;
    // fix the sign so that successive iterates are comparable
    int lead = 0;
    for (int i = 1; i < K; ++i)
      if (abs(x[i]) > abs(x[lead])) lead = i;
    if (x[lead] < 0)
      for (auto& t : x) t = -t;
    Real change = 0;
    for (int i = 0; i < K; ++i) change = std::max<Real>(change, abs(x[i] - v[i]));
    v = std::move(x);
    if (change < tol) break;
  }
  auto Av = detail::multiply(A, v);
  Real num = 0, den = 0;
  for (int i = 0; i < K; ++i) {
    num += v[i] * Av[i];
    den += v[i] * v[i];
  }
  const Real lambda = num / den;
  Real res = 0;
  for (int i = 0; i < K; ++i) res += (Av[i] - lambda * v[i]) * (Av[i] - lambda * v[i]);
  Real norm = 0;
  for (const auto& t : v) norm += t;
  if (abs(norm) < pow(Real(10), -20)) throw Error(ErrorKind::convergence, "eigenfunction vanishes at -1; cannot normalise");

  EigenPair p;
  p.lambda = to_double(lambda);
  p.residual = to_double(sqrt(res / den));
  p.centred.resize(K);
  for (int i = 0; i < K; ++i) p.centred[i] = to_double(v[i] / norm);
  if (p.residual > 1e-8) throw Error(ErrorKind::convergence, "eigenpair residual above 1e-8");
  ThreeTermFunction f(p.lambda, 0.0, p.centred);
  p.taylor = taylor_coefficients([&f](Complex z) { return f(-z); }, std::min(K, 80));
  return p;
}

std::vector<double> period_centred_coeffs(const PrecisionConfig& cfg) {
  cfg.validate();
  const int K = cfg.coeff_dim;
  const int digits = cfg.digits + 10;
  ScopedDigits sd(digits);
  const auto& s = cached_centred(2, K, digits);
  ExtMatrix M = s.A;
  for (int i = 0; i < K; ++i) M(i, i) += 1;
  auto a = detail::ExtLU(M).solve(s.h);
  auto r = detail::multiply(M, a);
  Real worst = 0;
  for (int i = 0; i < K; ++i) worst = std::max<Real>(worst, abs(r[i] - s.h[i]));
  if (worst > pow(Real(10), -(cfg.digits - 5))) throw Error(ErrorKind::precision, "centred period solve residual too large");
  std::vector<double> out(K);
  for (int i = 0; i < K; ++i) out[i] = to_double(a[i]);
  return out;
}

std::vector<Real> solve_period_coeffs(int N, int digits) {
  check_dim(N);
  if (digits < N) throw Error(ErrorKind::precision, "monomial solve needs digits >= N");
  // entries grow like C(2N, N); carry that many guard digits
  const int guard = static_cast<int>(std::ceil(std::log10(binomial(2 * N, N)))) + 10;
  ScopedDigits sd(digits + guard);
  ExtMatrix B = monomial_ext(2, N);
  for (int i = 0; i < N; ++i) B(i, i) += 1;
  std::vector<Real> h(N);
  for (int j = 0; j < N; ++j) h[j] = (j % 2 == 0 ? 1 : -1) * polylog_half_ext(j + 1);
  auto g = detail::ExtLU(B).solve(h);
  auto r = detail::multiply(B, g);
  Real worst = 0;
  for (int i = 0; i < N; ++i) worst = std::max<Real>(worst, abs(r[i] - h[i]));
  if (worst > pow(Real(10), -(digits - N / 3))) throw Error(ErrorKind::precision, "monomial solve residual check failed");
  std::vector<Real> m(N);
  for (int j = 0; j < N; ++j) m[j] = j % 2 == 0 ? g[j] : Real(-g[j]);
  return m;
}

double apply_transfer(const std::function<double(double)>& f, double x, int nmax) {
  double s = 0.0, w = 1.0;
  for (int n = 1; n <= nmax; ++n) {
    w *= 0.5;
    s += w * f(1.0 / (x + n));
  }
  return s;
}

NeumannResult neumann_solve(const std::function<double(double)>& f, double tolerance, int degree) {
  if (!(tolerance > 0.0)) throw Error(ErrorKind::domain, "tolerance must be positive");
  if (degree < 8 || degree > max_matrix_dim) throw Error(ErrorKind::limit, "degree must lie in [8, 256]");
  const double mean = transfer_average(f, 40, degree).value;
  if (std::abs(mean) >= 1e-10)
    throw Error(ErrorKind::domain, "neumann_solve needs int f dF = 0; the series would tend to a nonzero constant");
  ChebGrid grid(degree + 1);
  const int n = grid.size();
  const int nmax = transfer_terms(1e-16);
  std::vector<double> v(n), g(n), next(n), fv(n);
  for (int j = 0; j < n; ++j) fv[j] = v[j] = g[j] = f(grid.points()[j]);
  auto apply = [&](const std::vector<double>& src, std::vector<double>& dst) {
    for (int j = 0; j < n; ++j)
      dst[j] = apply_transfer([&](double y) { return grid.eval(src, y); }, grid.points()[j], nmax) +
               std::ldexp(grid.eval(src, 0.0), -nmax);
  };
  int terms = 1;
  auto sup = [](const std::vector<double>& x) {
    double m = 0.0;
    for (double t : x) m = std::max(m, std::abs(t));
    return m;
  };
  while (sup(v) >= tolerance) {
    if (terms > 400) throw Error(ErrorKind::convergence, "neumann series did not reach the tolerance");
    apply(v, next);
    v.swap(next);
    for (int j = 0; j < n; ++j) g[j] += v[j];
    ++terms;
  }
  NeumannResult out{ChebFunction{grid, g}, terms, 0.0};
  apply(g, next);
  double res = 0.0;
  for (int j = 0; j < n; ++j) res = std::max(res, std::abs(g[j] - next[j] - fv[j]));
  for (int i = 0; i <= 32; ++i) {
    double x = (i + 0.5) / 33.5;
    double sg = apply_transfer(out.g, x, nmax) + std::ldexp(out.g(0.0), -nmax);
    res = std::max(res, std::abs(out.g(x) - sg - f(x)));
  }
  out.residual = res;
  if (res >= 10.0 * tolerance) throw Error(ErrorKind::convergence, "neumann residual above 10 x tolerance");
  return out;
}

Rational EigenPolynomial::operator()(const Rational& y) const {
  Rational s = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * y + *it;
  return s;
}

double EigenPolynomial::operator()(double y) const {
  double s = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * y + to_double(*it);
  return s;
}

namespace {

// coefficient of y^j in 2P(1-2y) - P(1-y), without the a_j term's own factor split out
Rational shifted_coeff(const std::vector<Rational>& a, int j, int from) {
  Rational s = 0;
  Integer factor = (Integer(1) << (j + 1)) - 1;
  for (int i = from; i < static_cast<int>(a.size()); ++i) {
    Integer c = 1;
    for (int t = 0; t < j; ++t) c = c * (i - t) / (t + 1);
    s += a[i] * Rational(c * factor);
  }
  return j % 2 == 0 ? s : Rational(-s);
}

}  // namespace

EigenPolynomial eigen_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::domain, "eigen polynomial index must be >= 1");
  if (n > 16) throw Error(ErrorKind::limit, "eigen polynomial index must be <= 16");
  EigenPolynomial p;
  p.n = n;
  const Integer den = (Integer(1) << (n + 1)) - 1;
  p.delta = Rational(n % 2 == 0 ? Integer(1) : Integer(-1), den);
  const Rational inv = 1 / p.delta;
  p.coeffs.assign(n + 1, Rational(0));
  p.coeffs[n] = 1;
  for (int j = n - 1; j >= 0; --j) {
    Rational own = Rational((Integer(1) << (j + 1)) - 1);
    if (j % 2 == 1) own = -own;
    p.coeffs[j] = -shifted_coeff(p.coeffs, j, j + 1) / (own - inv);
  }
  return p;
}

std::vector<Rational> eigen_polynomial_defect(const EigenPolynomial& p) {
  const Rational inv = 1 / p.delta;
  std::vector<Rational> d(p.coeffs.size());
  for (int j = 0; j < static_cast<int>(p.coeffs.size()); ++j) d[j] = shifted_coeff(p.coeffs, j, j) - inv * p.coeffs[j];
  return d;
}

double point_spectrum_residual(const EigenPolynomial& p, const std::vector<double>& samples, int nmax) {
  const double delta = to_double(p.delta);
  double worst = 0.0;
  for (double x : samples) {
    double lhs = apply_transfer([&p](double y) { return p(F_real(y)); }, x, nmax);
    worst = std::max(worst, std::abs(lhs - delta * p(F_real(x))));
  }
  return worst;
}

std::vector<double> nystrom_spectrum(int M, double T) {
  if (M < 40) throw Error(ErrorKind::domain, "nystrom needs at least 40 nodes");
  if (M > 400) throw Error(ErrorKind::limit, "nystrom node count must be <= 400");
  if (!(T > 0.0 && T <= 200.0)) throw Error(ErrorKind::domain, "nystrom interval must lie in (0, 200]");
  auto gl = gauss_legendre(M);
  std::vector<double> s(M), w(M), psi(M);
  for (int i = 0; i < M; ++i) {
    s[i] = 0.5 * T * (gl.x[i] + 1.0);
    w[i] = 0.5 * T * gl.w[i];
    if (!(w[i] > 1e-300)) throw Error(ErrorKind::precision, "nystrom node weight underflow");
    psi[i] = std::sqrt(2.0 * std::exp(s[i]) - 1.0);
  }
  Eigen::MatrixXd A(M, M);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j <= i; ++j) {
      double k = bessel_j(1, 2.0 * std::sqrt(s[i] * s[j])) / (psi[i] * psi[j]);
      A(i, j) = A(j, i) = std::sqrt(w[i] * w[j]) * k;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::convergence, "nystrom eigensolver did not converge");
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + M);
  std::sort(out.begin(), out.end(), by_modulus);
  return out;
}

}  // namespace mink
