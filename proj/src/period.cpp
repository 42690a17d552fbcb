#include "minkowski/period.hpp"

#include <cmath>
#include <numbers>

#include "minkowski/moments.hpp"
#include "minkowski/quadrature.hpp"

namespace mink {

ThreeTermFunction::ThreeTermFunction(double lambda, double inhomogeneity, std::vector<double> centred)
    : lambda_(lambda), c_(inhomogeneity), a_(std::move(centred)) {
  if (lambda == 0.0) throw Error(ErrorKind::domain, "three-term function needs lambda != 0");
  reflect_terms_ = 64 + static_cast<int>(std::ceil(std::log2(1.0 + 1.0 / std::abs(lambda))));
}

Complex ThreeTermFunction::operator()(Complex z) const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw Error(ErrorKind::domain, "argument must be finite");
  double dist = z.real() >= 1.0 ? std::abs(z.imag()) : std::abs(z - 1.0);
  if (dist < cut_guard) throw Error(ErrorKind::domain, "argument too close to the cut [1, inf)");
  return eval(z, 0);
}

double ThreeTermFunction::operator()(double z) const { return (*this)(Complex(z, 0.0)).real(); }

Complex ThreeTermFunction::series(Complex u) const {
  Complex s = 0.0;
  for (auto it = a_.rbegin(); it != a_.rend(); ++it) s = s * u + *it;
  return s;
}

Complex ThreeTermFunction::eval(Complex z, int depth) const {
  if (depth > max_descent_depth) throw Error(ErrorKind::convergence, "descent depth exceeded");
  const Complex u = -2.0 * z - 1.0;
  if (std::abs(u) <= 1.5) return series(u);
  if (z.real() <= -0.2) return reflect(-z, depth);
  // 2f(w) = f(w-1) - c/(w-1) + f(1/(w-1)) / (lambda (w-1)^2)
  const Complex v = z - 1.0;
  Complex r = eval(v, depth + 1) - c_ / v + eval(1.0 / v, depth + 1) / (lambda_ * v * v);
  return 0.5 * r;
}

// f(-zeta) = sum_n 2^-n [c/(zeta+n) + f(-1/(zeta+n)) / (lambda (zeta+n)^2)]
Complex ThreeTermFunction::reflect(Complex zeta, int depth) const {
  Complex s = 0.0;
  double w = 1.0;
  for (int n = 1; n <= reflect_terms_; ++n) {
    w *= 0.5;
    const Complex t = zeta + static_cast<double>(n);
    s += w * (c_ / t + eval(-1.0 / t, depth + 1) / (lambda_ * t * t));
  }
  return s;
}

ThreeTermFunction period_function(const PrecisionConfig& cfg) { return {-1.0, 1.0, period_centred_coeffs(cfg)}; }

const ThreeTermFunction& period_function() {
  static const ThreeTermFunction g = period_function(PrecisionConfig{});
  return g;
}

Complex G_eval(Complex z) { return period_function()(z); }

std::vector<double> G_taylor(int count) {
  const auto& g = period_function();
  return taylor_coefficients([&g](Complex z) { return g(z); }, count);
}

ThreeTermFunction eigen_evaluator(const EigenPair& p) { return {p.lambda, 0.0, p.centred}; }

double G_lambda_eval(const EigenPair& p, double z) { return eigen_evaluator(p)(z); }

Complex G_lambda_eval(const EigenPair& p, Complex z) { return eigen_evaluator(p)(z); }

Complex three_term_residual(Complex z) {
  if (z == 0.0) throw Error(ErrorKind::pole, "three-term relation is singular at 0");
  return 1.0 / z + G_eval(1.0 / z) / (z * z) + 2.0 * G_eval(z + 1.0) - G_eval(z);
}

Complex symmetry_residual(Complex z) {
  if (z == 0.0) throw Error(ErrorKind::pole, "symmetry relation is singular at 0");
  return G_eval(z + 1.0) + G_eval(1.0 / z + 1.0) / (z * z) + 1.0 / z;
}

double eigen_residual(const EigenPair& p, double z) {
  if (z == 0.0) throw Error(ErrorKind::pole, "eigen relation is singular at 0");
  auto f = eigen_evaluator(p);
  return 2.0 * f(z + 1.0) - f(z) - f(1.0 / z) / (p.lambda * z * z);
}

std::vector<double> taylor_coefficients(const std::function<Complex(Complex)>& f, int count, double radius, int points) {
  if (count < 1 || points < count) throw Error(ErrorKind::domain, "taylor extraction needs points >= count >= 1");
  std::vector<Complex> v(points);
  for (int k = 0; k < points; ++k) {
    double th = 2.0 * std::numbers::pi * k / points;
    v[k] = f(std::polar(radius, th));
  }
  std::vector<double> out(count);
  double scale = 1.0;
  for (int j = 0; j < count; ++j) {
    CompensatedComplexSum s;
    for (int k = 0; k < points; ++k) {
      double th = -2.0 * std::numbers::pi * static_cast<double>((static_cast<long>(j) * k) % points) / points;
      s.add(v[k] * std::polar(1.0, th));
    }
    out[j] = s.value().real() / points / scale;
    scale *= radius;
  }
  return out;
}

std::vector<Relation> EigenIdentities::all() const {
  std::vector<Relation> r{ratio, log_quadrature, log_moments, alternating};
  r.insert(r.end(), annihilation.begin(), annihilation.end());
  return r;
}

namespace {

// int_0^1 G(-x) dx and int_0^1 G(-x) F(x) dx from centred coefficients
double centred_integral(const std::vector<double>& a) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); k += 2) s += a[k] / (k + 1.0);
  return s;
}

double centred_integral_F(const std::vector<double>& a, const std::vector<double>& d) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * (1.0 - d.at(k + 1)) / (4.0 * (k + 1.0));
  return s;
}

}  // namespace

EigenIdentities eigen_identities(const MomentTable& table, const std::vector<EigenPair>& pairs, const PrecisionConfig& cfg) {
  if (pairs.empty()) throw Error(ErrorKind::domain, "identity checks need at least one eigenpair");
  if (table.centred.empty()) throw Error(ErrorKind::domain, "identity checks need the centred moment table");
  EigenIdentities rep;
  const auto& d = table.centred;

  const auto& p = pairs.front();
  double ratio = centred_integral_F(p.centred, d) / centred_integral(p.centred);
  double expect = p.lambda / (p.lambda + 1.0);
  rep.ratio = make_relation("eigen.ratio", ratio, expect, std::abs(ratio - expect), 1e-5);

  // -int_0^1 log x dF = sum_n 2^-n int_0^1 log(x+n) dF
  double left = integrate_unit(
      [](double x) {
        double s = 0.0, w = 1.0;
        for (int n = 1; n <= 60; ++n) {
          w *= 0.5;
          s += w * std::log(x + n);
        }
        return s;
      },
      cfg.quadrature_depth);
  // 2 int log(1+x) dF = log(3/2) + sum_{j even} (-1)^(j+1) 3^-j d_j / j
  double series = std::log(1.5);
  double p3 = 1.0;
  for (std::size_t j = 1; j < d.size(); ++j) {
    p3 /= 3.0;
    if (j % 2 == 0) series -= p3 * d[j] / static_cast<double>(j);
  }
  double right = centred_integral(period_function(cfg).centred());
  rep.log_quadrature = make_relation("log.quadrature", left, right, std::abs(left - right), 1e-6);
  rep.log_moments = make_relation("log.moments", series, right, std::abs(series - right), 1e-6);

  Real alt = 0;
  for (int L = 1; L < table.lmax; ++L) {
    Real t = table.m_ext[L] * (table.m_ext[L - 1] + table.m_ext[L + 1]);
    alt += L % 2 == 1 ? t : Real(-t);
  }
  rep.alternating = make_relation("alternating.half", to_double(alt), 0.5, std::abs(to_double(alt) - 0.5), 1e-10);

  // int G_lambda(-x) (1 - x^2/lambda) dF with x^2 = (1 + 2u + u^2)/4 and int u^k dF = d_k/2
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& q = pairs[i];
    double s = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < q.centred.size(); ++k) {
      double x2 = (d.at(k) + 2.0 * d.at(k + 1) + d.at(k + 2)) / 8.0;
      double t = q.centred[k] * (0.5 * d[k] - x2 / q.lambda);
      s += t;
      scale += std::abs(q.centred[k]) * (0.5 * std::abs(d[k]) + std::abs(x2 / q.lambda));
    }
    rep.annihilation.push_back(
        make_relation("annihilation." + std::to_string(i + 1), s, 0.0, std::abs(s) / scale, 1e-6));
  }
  return rep;
}

std::vector<double> eigen_moments(const EigenPair& p) {
  std::vector<double> m(p.taylor.size() + 1, 0.0);
  for (std::size_t L = 1; L <= p.taylor.size(); ++L)
    m[L] = -(p.lambda / 2.0) * (L % 2 == 1 ? 1.0 : -1.0) * p.taylor[L - 1];
  return m;
}

double orthogonality(const EigenPair& lam, const EigenPair& mu) {
  auto a = eigen_moments(lam);
  auto b = eigen_moments(mu);
  const std::size_t n = std::min(a.size(), b.size());
  CompensatedSum s;
  double scale = 0.0;
  for (std::size_t L = 1; L + 1 < n; ++L) {
    double sign = L % 2 == 0 ? 1.0 : -1.0;
    double t1 = b[L] * a[L + 1] * lam.lambda;
    double t2 = a[L] * b[L + 1] * mu.lambda;
    s.add(sign * (t1 - t2));
    scale += std::abs(t1) + std::abs(t2);
  }
  return scale == 0.0 ? 0.0 : std::abs(s.value()) / scale;
}

}  // namespace mink
