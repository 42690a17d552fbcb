#include <doctest.h>

#include <cmath>
#include <random>

#include "minkowski/moments.hpp"
#include "minkowski/period.hpp"
#include "minkowski/special.hpp"

using namespace mink;

TEST_CASE("Taylor coefficients at 0 are the moments") {
  const auto& t = default_moments();
  CHECK(G_eval(0.0).real() == doctest::Approx(0.5).epsilon(1e-14));
  auto g = G_taylor(8);
  REQUIRE(g.size() == 8);
  for (int k = 0; k < 8; ++k) CHECK(std::abs(g[k] - t.m[k + 1]) < 1e-12);
}

TEST_CASE("Cauchy extraction") {
  auto c = taylor_coefficients([](Complex z) { return std::exp(z); }, 10);
  double fact = 1.0;
  for (int k = 0; k < 10; ++k) {
    if (k) fact *= k;
    CHECK(std::abs(c[k] - 1.0 / fact) < 1e-14);
  }
}

TEST_CASE("expansion at 1 from the left") {
  const auto& t = default_moments();
  // G(1+z) ~ sum M_L z^(L-1) as z -> 0-
  for (double z : {-0.01, -0.003}) {
    double s = 0.0;
    for (int L = 1; L <= 8; ++L) s += t.M(L) * std::pow(z, L - 1);
    CHECK(std::abs(G_eval(1.0 + z).real() - s) < 1e-8);
  }
  // left derivative at 1 is M_2
  const double h = 1e-5;
  double d = (G_eval(1.0 - h).real() - G_eval(1.0 - 2 * h).real()) / h;
  CHECK(std::abs(d - t.M(2)) < 1e-3);
}

TEST_CASE("three-term equation and symmetry on random points") {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int used = 0;
  while (used < 60) {
    Complex z(8.0 * u(gen), 8.0 * u(gen));
    auto off = [](Complex w) { return w.real() >= 1.0 ? std::abs(w.imag()) : std::abs(w - 1.0); };
    if (std::abs(z) < 0.05 || std::min({off(z), off(z + 1.0), off(1.0 / z), off(1.0 / z + 1.0)}) < 0.1) continue;
    ++used;
    CHECK(std::abs(three_term_residual(z)) < 1e-9);
    CHECK(std::abs(symmetry_residual(z)) < 1e-9);
    CHECK(std::abs(G_eval(std::conj(z)) - std::conj(G_eval(z))) < 1e-12 * (1.0 + std::abs(G_eval(z))));
  }
}

TEST_CASE("real on the real axis below 1, descent for large negative z") {
  for (double x : {-40.0, -3.5, -1.0, 0.2, 0.9}) {
    Complex v = G_eval(Complex(x, 0.0));
    CHECK(v.imag() == 0.0);
    CHECK(std::isfinite(v.real()));
  }
  CHECK_THROWS_AS(G_eval(Complex(2.0, 0.0)), Error);
  CHECK_THROWS_AS(G_eval(Complex(3.0, 1e-9)), Error);
}

TEST_CASE("eigenfunctions satisfy their equation and the identities") {
  PrecisionConfig cfg;
  std::vector<EigenPair> pairs;
  for (int i = 1; i <= 4; ++i) pairs.push_back(eigenfunction(i, cfg));
  for (const auto& p : pairs) {
    double worst = 0.0;
    for (int k = 0; k <= 40; ++k) worst = std::max(worst, std::abs(eigen_residual(p, -1.0 + 0.02 * k)));
    CHECK(worst < 1e-7);
    CHECK(G_lambda_eval(p, -1.0) == doctest::Approx(1.0).epsilon(1e-12));
  }
  auto ids = eigen_identities(default_moments(), pairs, cfg);
  for (const auto& r : ids.all()) {
    CAPTURE(r.name);
    CHECK(r.pass);
  }
  CHECK(ids.ratio.rhs == doctest::Approx(pairs[0].lambda / (pairs[0].lambda + 1.0)).epsilon(1e-12));
  CHECK(orthogonality(pairs[0], pairs[1]) < 1e-6);
  auto em = eigen_moments(pairs[0]);
  CHECK(em.size() > 2);
}
