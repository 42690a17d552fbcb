#include <doctest.h>

#include <algorithm>
#include <random>

#include "minkowski/contfrac.hpp"

using namespace mink;

namespace {

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

// brute-force generation from the tree rule a/b -> a/(a+b), (a+b)/b
std::vector<Rational> tree_generation(int n) {
  std::vector<Rational> g = {Rational(1)};
  for (int k = 1; k < n; ++k) {
    std::vector<Rational> next;
    for (const auto& x : g) {
      next.push_back(x / (1 + x));
      next.push_back(x + 1);
    }
    g = std::move(next);
  }
  return g;
}

}  // namespace

TEST_CASE("parse_rational") {
  CHECK(parse_rational("2/5") == Rational(2, 5));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("+.5") == Rational(1, 2));
  CHECK(parse_rational("3.") == Rational(3));
  CHECK(parse_rational("0012/010") == Rational(6, 5));
  CHECK(parse_rational("0.0625") == Rational(1, 16));
  for (const char* bad : {"", "-", "x", "1/", "/2", "1.2.3", "1e3", "2/-3", " 1"}) {
    CAPTURE(bad);
    try {
      parse_rational(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse);
    }
  }
  try {
    parse_rational("1/0");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::domain);
  }
}

TEST_CASE("continued fractions") {
  CHECK(cf_from_rational(Rational(415, 93)).quotients == ints({4, 2, 6, 7}));
  CHECK(cf_from_rational(Rational(0)).quotients == ints({0}));
  CHECK(cf_from_rational(Rational(1, 2)).quotients == ints({0, 2}));
  CHECK(cf_from_rational(Rational(1)).quotients == ints({1}));
  CHECK(cf_to_rational({ints({0, 1, 1, 2})}) == Rational(3, 5));
  CHECK_THROWS_AS(cf_to_rational({ints({0, 1, 1})}), Error);
  CHECK_THROWS_AS(cf_from_rational(Rational(-1, 3)), Error);
  CHECK(cf_from_rational(Rational(415, 93)).digit_sum() == 19);
}

TEST_CASE("continued fraction round trip on random rationals") {
  std::mt19937_64 gen(11);
  for (int k = 0; k < 500; ++k) {
    Integer p = gen() % 1000000, q = 1 + gen() % 1000000;
    Rational r(p, q);
    auto cf = cf_from_rational(r);
    CHECK(cf.canonical());
    CHECK(cf_to_rational(cf) == r);
  }
}

TEST_CASE("Calkin-Wilf generations") {
  auto g3 = cw_generation(3);
  CHECK(g3 == std::vector<Rational>{Rational(1, 3), Rational(3, 2), Rational(2, 3), Rational(3, 1)});
  for (int n = 1; n <= 10; ++n) CHECK(cw_generation(n) == tree_generation(n));
  auto f = cw_generation_frac(12);
  auto r = cw_generation(12);
  REQUIRE(f.size() == r.size());
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i].to_rational() == r[i]);
  CHECK_THROWS_AS(cw_generation(0), Error);
  try {
    cw_generation(default_generation_limit + 1);
    FAIL("no limit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::limit);
  }
}

TEST_CASE("Stern sequence recursion and Newman map") {
  CHECK(stern(0) == 0);
  CHECK(stern(1) == 1);
  for (std::uint64_t n = 1; n < 5000; ++n) {
    CHECK(stern(2 * n) == stern(n));
    CHECK(stern(2 * n + 1) == stern(n) + stern(n + 1));
  }
  // s(n)/s(n+1) enumerates the positive rationals in Newman order
  Rational x(1);
  for (std::uint64_t n = 1; n < 2000; ++n) {
    CHECK(x == Rational(Integer(stern(n)), Integer(stern(n + 1))));
    x = newman_next(x);
  }
  CHECK_THROWS_AS(newman_next(Rational(0)), Error);
}

TEST_CASE("Farey levels") {
  auto l2 = farey_level(2);
  std::vector<Rational> got;
  for (const auto& f : l2) got.push_back(f.to_rational());
  CHECK(got == std::vector<Rational>{0, Rational(1, 3), Rational(1, 2), Rational(2, 3), 1});
  for (int r = 0; r <= 14; ++r) {
    auto lv = farey_level(r);
    CHECK(lv.size() == (std::size_t(1) << r) + 1);
    // consecutive endpoints are Farey neighbours
    for (std::size_t i = 1; i < lv.size(); ++i) CHECK(lv[i].num * lv[i - 1].den - lv[i - 1].num * lv[i].den == 1);
  }
}

TEST_CASE("generation sums and cdf") {
  for (int n = 2; n <= 14; ++n) {
    Rational brute = 0;
    if (n <= 10)
      for (const auto& x : tree_generation(n)) brute += x;
    else
      brute = generation_sum(n);
    CHECK(generation_sum(n) == brute);
    CHECK(generation_sum(n) == Rational(3 * (Integer(1) << (n - 2))) - Rational(1, 2));
  }
  for (int n = 2; n <= 16; ++n) CHECK(generation_cdf(n, 1.0) == 0.5);
  CHECK(generation_cdf(18, 0.4) == doctest::Approx(0.1875).epsilon(1e-3));
}
