#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numbers>

#include "minkowski/moments.hpp"
#include "minkowski/quadrature.hpp"
#include "minkowski/special.hpp"

using namespace mink;

namespace {
const MomentTable& T() { return default_moments(); }
}

TEST_CASE("low moments against independent values") {
  CHECK(T().m[0] == 1.0);
  CHECK(std::abs(T().m[1] - 0.5) < 1e-15);
  // numpy midpoint rule at depth 22, error below 1e-9
  CHECK(std::abs(T().m[2] - 0.2909264764) < 1e-9);
  CHECK(std::abs(T().m[3] - 0.1863897142) < 2e-9);
  CHECK(std::abs(T().M(1) - 1.5) < 1e-14);
  CHECK(std::abs(T().M(2) - (T().m[2] + 4.0)) < 1e-14);
}

TEST_CASE("binomial recursion for M") {
  ScopedDigits sd(T().digits + 10);
  for (int L = 1; L <= 40; ++L) {
    Real s = T().m_ext[L];
    for (int k = 0; k < L; ++k) s += Real(binomial(L, k)) * T().M_ext[k];
    CHECK(abs(s - T().M_ext[L]) / T().M_ext[L] < 1e-40);
  }
}

TEST_CASE("moments decrease and odd centred moments vanish") {
  for (int L = 1; L <= T().lmax; ++L) CHECK(T().m[L] < T().m[L - 1]);
  for (std::size_t j = 1; j < T().centred.size(); j += 2) CHECK(T().centred[j] == 0.0);
  CHECK(T().centred[0] == 1.0);
}

TEST_CASE("cross relations") {
  auto rel = check_cross_relations(T());
  CHECK(!rel.empty());
  for (const auto& r : rel) {
    CAPTURE(r.name);
    CHECK(r.pass);
  }
}

TEST_CASE("symmetry m_L = sum (-1)^s C(L,s) m_s") {
  ScopedDigits sd(T().digits + 10);
  for (int L = 1; L <= 30; ++L) {
    Real s = 0;
    for (int k = 0; k <= L; ++k) {
      Real term = Real(binomial(L, k)) * T().m_ext[k];
      s += k % 2 ? Real(-term) : term;
    }
    CHECK(std::abs(to_double(s - T().m_ext[L])) < 1e-30);
  }
}

TEST_CASE("monomial solve agrees with the centred table") {
  // the monomial system loses accuracy as L grows
  auto mono = moment_tables_monomial(100, 120);
  for (int L = 1; L <= 10; ++L) CHECK(std::abs(mono.m[L] - T().m[L]) < 1e-14);
  for (int L = 11; L <= 30; ++L) CHECK(std::abs(mono.m[L] - T().m[L]) < 1e-10);
}

TEST_CASE("Gauss rule for dF") {
  const auto& g = gauss_rule_F();
  double w = 0.0;
  for (double v : g.w) w += v;
  CHECK(w == doctest::Approx(0.5).epsilon(1e-15));
  for (int L = 0; L < 2 * static_cast<int>(g.x.size()); L += 7)
    CHECK(std::abs(2 * g.integrate([L](double x) { return std::pow(x, L); }) - T().m[L]) < 1e-14);
}

TEST_CASE("cell quadrature against the midpoint rule for oscillating integrands") {
  // the midpoint rule converges towards the cell value as the depth grows
  for (double t : {5.0, 50.0, 300.0}) {
    auto f = [t](double x) { return std::exp(Complex(0.0, t * x)); };
    Complex a = integrate_cells(f, t);
    double d20 = std::abs(a - integrate_unit_complex(f, 20)), d22 = std::abs(a - integrate_unit_complex(f, 22));
    CAPTURE(t);
    CHECK(d22 < 3e-8);
    CHECK(d22 < d20);
  }
  Complex one = integrate_cells([](double) { return Complex(1.0); }, 1.0);
  CHECK(std::abs(one - 0.5) < 1e-15);
}

TEST_CASE("Q-polynomials") {
  CHECK(q_polynomial(1).coeffs == std::vector<Integer>{-3, 2});
  CHECK(q_polynomial(1).degree() == 1);
  for (int n = 1; n <= 8; ++n) CHECK(q_hat_reciprocal(2 * n));
  for (int two_n : {4, 6, 8}) CHECK(!q_span(two_n).empty());
  for (const auto& r : q_relations(8, T())) {
    CAPTURE(r.name);
    CHECK(r.pass);
  }
  for (int n = 1; n <= 8; ++n) CHECK(std::abs(q_annihilation(n, T())) < 1e-8);
}

TEST_CASE("empirical moments") {
  for (int n = 1; n <= 14; ++n)
    CHECK(empirical_moment_exact(n, 1) == Rational(3, 2) - Rational(Integer(1), Integer(1) << n));
  CHECK(std::abs(empirical_moment(20, 1, true) - 0.5) < 1e-5);
}

TEST_CASE("asymptotic constant and ratios") {
  const double c = asym_constant();
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.5f", c);
  CHECK(std::string(buf) == "0.18917");
  CHECK(c == doctest::Approx(std::exp(-2.0 * std::sqrt(std::numbers::ln2))).epsilon(1e-15));
  auto r = asym_ratio(T(), 60);
  REQUIRE(r.size() == 61);
  // with the L^(1/4) factor the ratio falls; without it it rises
  for (int L = 3; L <= 60; ++L) CHECK(r[L] < r[L - 1]);
  for (int L = 3; L <= 60; ++L) CHECK(r[L] * std::pow(L, 0.25) > r[L - 1] * std::pow(L - 1, 0.25));
  const double v = std::log(T().m[60]) / std::sqrt(60.0);
  CHECK(v > -2.0 * std::sqrt(std::numbers::ln2));
  CHECK(v < -1.2);
}

TEST_CASE("Chebyshev chain") {
  for (int J : {1, 5, 20}) {
    auto c = chebyshev_chain(J);
    CHECK(c.size() == static_cast<std::size_t>(J));
    CHECK(chebyshev_chain_defect(c) < 1e-13);
  }
}

TEST_CASE("moment generating function") {
  CHECK(std::abs(m_exp(0.0) - 1.0) < 1e-15);
  // numpy midpoint at depth 22
  CHECK(std::abs(m_exp(std::log(2.0)).real() - 1.4281598454) < 1e-9);
  // series region and quadrature region meet
  for (double t : {-5.0, 8.0}) {
    double q = 2 * integrate_unit([t](double x) { return std::exp(t * x); }, 20);
    CHECK(std::abs(m_exp(t).real() - q) < 1e-6 * std::abs(q));
  }
  // mass near 0 is where the midpoint rule is coarse
  double q20 = 2 * integrate_unit([](double x) { return std::exp(-30.0 * x); }, 20);
  double q22 = 2 * integrate_unit([](double x) { return std::exp(-30.0 * x); }, 22);
  CHECK(std::abs(m_exp(-30.0).real() - q22) < 3e-6 * q22);
  CHECK(std::abs(m_exp(-30.0).real() - q22) < std::abs(m_exp(-30.0).real() - q20));
  Complex z(0.3, 25.0);
  Complex q = 2.0 * integrate_unit_complex([z](double x) { return std::exp(x * z); }, 22);
  CHECK(std::abs(m_exp(z) - q) < 1e-8);
  const double h = 1e-4, t = 2.0;
  double fd = -(m_exp(-t - h).real() - m_exp(-t + h).real()) / (2 * h);
  CHECK(std::abs(m_exp_derivative_neg(t) - fd) < 1e-8);
}

TEST_CASE("integral equation") {
  for (double s : {0.5, 1.0, 3.0}) CHECK(integral_equation_residual(s) < 1e-8);
}
