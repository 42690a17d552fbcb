#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "minkowski/transfer.hpp"

using namespace mink;

namespace {
const double captions[6] = {0.25553210, -0.08892666, 0.03261586, -0.01217621, 0.00458154, -0.00173113};
}

TEST_CASE("leading eigenvalues of S_2") {
  auto ev = spectrum(64);
  REQUIRE(ev.size() >= 6);
  for (int i = 0; i < 6; ++i) CHECK(std::abs(ev[i] - captions[i]) < 1e-6);
  for (std::size_t i = 1; i < ev.size(); ++i) CHECK(std::abs(ev[i]) < std::abs(ev[i - 1]));
  // signs alternate
  for (int i = 1; i < 6; ++i) CHECK(ev[i] * ev[i - 1] < 0.0);
}

TEST_CASE("spectrum is stable in the dimension") {
  auto a = spectrum(64), b = spectrum(96);
  for (int i = 0; i < 6; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);
}

TEST_CASE("S_0 spectrum is 1 and the S_2 spectrum in magnitude") {
  auto s0 = raw_spectrum(0, 64), s2 = spectrum(64);
  REQUIRE(!s0.empty());
  CHECK(s0[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 0; i < 4; ++i) {
    bool found = std::any_of(s0.begin(), s0.end(), [&](double v) { return std::abs(std::abs(v) - std::abs(s2[i])) < 1e-8; });
    CHECK(found);
  }
}

TEST_CASE("eigenfunctions") {
  PrecisionConfig cfg;
  for (int i = 1; i <= 3; ++i) {
    auto p = eigenfunction(i, cfg);
    CHECK(std::abs(p.lambda - captions[i - 1]) < 1e-6);
    CHECK(p.residual < 1e-10);
    // G_lambda(-1) = 1, i.e. sum of the centred coefficients at x = 1
    double s = 0.0;
    for (double a : p.centred) s += a;
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(eigenfunction(0, cfg), Error);
}

TEST_CASE("matrices") {
  auto m = build_matrix(2, 32, Basis::collocation);
  CHECK(m.dim == 32);
  CHECK(m.entries.rows() == 32);
  ScopedDigits sd(40);
  auto e = build_matrix_ext(2, 24, Basis::centred);
  auto d = build_matrix(2, 24, Basis::centred);
  double worst = 0.0;
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) worst = std::max(worst, std::abs(to_double(e(i, j)) - d.entries(i, j)));
  CHECK(worst < 1e-12);
  try {
    build_matrix(2, max_matrix_dim + 1, Basis::collocation);
    FAIL("no limit");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::limit);
  }
}

TEST_CASE("period coefficients from the monomial solve") {
  auto m = solve_period_coeffs(100, 120);
  REQUIRE(m.size() >= 2);
  CHECK(std::abs(to_double(m[0]) - 0.5) < 1e-14);
  CHECK(std::abs(to_double(m[1]) - 0.2909264764) < 1e-9);
}

TEST_CASE("eigen-polynomials are exact") {
  for (int n = 1; n <= 8; ++n) {
    auto p = eigen_polynomial(n);
    CHECK(p.coeffs.size() == static_cast<std::size_t>(n + 1));
    CHECK(p.coeffs.back() == 1);
    auto defect = eigen_polynomial_defect(p);
    CHECK(std::all_of(defect.begin(), defect.end(), [](const Rational& c) { return c == 0; }));
  }
  CHECK(eigen_polynomial(1).coeffs == std::vector<Rational>{Rational(-1, 4), 1});
  std::vector<double> samples;
  for (int k = 0; k < 50; ++k) samples.push_back((k + 0.5) / 50.0);
  for (int n = 1; n <= 4; ++n) CHECK(point_spectrum_residual(eigen_polynomial(n), samples) < 1e-10);
}

TEST_CASE("Neumann series solves (I - S) g = f") {
  auto f = [](double x) { return x - 0.5; };
  auto r = neumann_solve(f);
  CHECK(r.residual < 1e-11);
  for (double x : {0.05, 0.3, 0.77, 0.99}) {
    double lhs = r.g(x) - apply_transfer([&](double y) { return r.g(y); }, x, 60);
    CHECK(std::abs(lhs - f(x)) < 1e-10);
  }
  // x^2 has nonzero dF-average, so no bounded solution
  CHECK_THROWS_AS(neumann_solve([](double x) { return x * x; }), Error);
}

TEST_CASE("Nystrom cross-check") {
  auto ny = nystrom_spectrum(80);
  REQUIRE(!ny.empty());
  CHECK(std::abs(ny[0] - captions[0]) < 1e-6);
}
