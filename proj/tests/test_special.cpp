#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "minkowski/special.hpp"

using namespace mink;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("gamma matches reference values") {
  Complex g = gamma(Complex(0.3, 2.0));
  CHECK(std::abs(g - Complex(0.05746533756958803, -0.07498491258264614)) < 1e-14);
  CHECK(gamma(Complex(-1.5, 0.0)).real() == doctest::Approx(2.3632718012073547).epsilon(1e-14));
  CHECK(gamma(Complex(5.0, 0.0)).real() == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(std::abs(gamma(Complex(0.5, 0.0)) - std::sqrt(pi)) < 1e-14);
}

TEST_CASE("gamma poles") {
  CHECK_THROWS_AS(gamma(Complex(-2.0, 0.0)), Error);
  try {
    gamma(Complex(0.0, 0.0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::pole);
  }
  CHECK(rgamma(Complex(-3.0, 0.0)) == Complex(0.0, 0.0));
  CHECK(std::abs(rgamma(Complex(4.0, 0.0)) - 1.0 / 6.0) < 1e-15);
}

TEST_CASE("gamma recurrence and reflection on random points") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> re(-4.5, 6.0), im(-8.0, 8.0);
  for (int k = 0; k < 200; ++k) {
    Complex s(re(gen), im(gen));
    Complex lhs = gamma(s + 1.0), rhs = s * gamma(s);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs) + 1e-300);
    Complex refl = gamma(s) * gamma(1.0 - s) * std::sin(pi * s);
    CHECK(std::abs(refl - pi) < 1e-10 * pi);
    CHECK(std::abs(rgamma(s) * gamma(s) - 1.0) < 1e-12);
  }
}

TEST_CASE("bessel matches reference values in every regime") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 0.0) == 0.0);
  CHECK(bessel_j(0, 1.0) == doctest::Approx(0.7651976865579666).epsilon(1e-13));
  CHECK(std::abs(bessel_j(0, 15.0) - -0.014224472826780773) < 1e-12);
  CHECK(std::abs(bessel_j(0, 40.0) - 0.0073668905842372896) < 1e-12);
  CHECK(std::abs(bessel_j(1, 5.0) - -0.32757913759146523) < 1e-12);
  CHECK(std::abs(bessel_j(1, 25.0) - -0.12535024958028990) < 1e-12);
  CHECK_THROWS_AS(bessel_j(0, -1.0), Error);
  CHECK_THROWS_AS(bessel_j(2, 1.0), Error);
}

TEST_CASE("bessel J0' = -J1 and continuity at the switchovers") {
  for (double x : {0.5, 3.0, 11.0, 13.0, 20.0, 29.0, 31.0, 50.0}) {
    const double h = 1e-5;
    double d = (bessel_j(0, x + h) - bessel_j(0, x - h)) / (2 * h);
    CHECK(std::abs(d + bessel_j(1, x)) < 1e-8);
  }
  for (double x : {12.0, 30.0})
    for (int order : {0, 1}) CHECK(std::abs(bessel_j(order, x - 1e-12) - bessel_j(order, x + 1e-12)) < 1e-11);
}

TEST_CASE("polylog at one half") {
  CHECK(polylog_half(0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(polylog_half(1) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(polylog_half(2) == doctest::Approx(0.5822405264650125).epsilon(1e-15));
  CHECK(polylog_half(5) == doctest::Approx(0.5084005792422687).epsilon(1e-15));
  ScopedDigits sd(60);
  CHECK(std::abs(to_double(polylog_half_ext(5)) - 0.5084005792422687) < 1e-16);
}

TEST_CASE("generalised binomial") {
  CHECK(std::abs(gen_binomial(Complex(0.5, 1.0), 3) - Complex(0.3125, -0.20833333333333334)) < 1e-15);
  CHECK(gen_binomial(Complex(2.7, -1.0), 0) == Complex(1.0, 0.0));
  CHECK(std::abs(gen_binomial(Complex(7.0, 0.0), 3) - 35.0) < 1e-13);
  CHECK(std::abs(gen_binomial(Complex(3.0, 0.0), 5)) < 1e-15);
  CHECK(binomial(10, 3) == 120.0);
  Complex w(1.3, -0.4);
  for (int j = 1; j < 12; ++j)
    CHECK(std::abs(gen_binomial(w, j) - gen_binomial(w - 1.0, j) - gen_binomial(w - 1.0, j - 1)) < 1e-14);
}
