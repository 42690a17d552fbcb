#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "minkowski/types.hpp"

namespace mink {

// Canonical partial quotients [a0; a1, ..., as] with as >= 2 when s >= 1.
struct ContinuedFraction {
  std::vector<Integer> quotients;

  bool canonical() const;
  Integer digit_sum() const;
};

// Small exact fraction for tree work where numerators stay machine sized.
struct Frac {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Rational to_rational() const { return Rational(Integer(num), Integer(den)); }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Frac&, const Frac&) = default;
};

inline constexpr int default_generation_limit = 24;
inline constexpr int default_farey_limit = 26;

// "p/q", an integer or a plain decimal such as "-0.125", read exactly.
Rational parse_rational(std::string_view text);

ContinuedFraction cf_from_rational(const Rational& r);
Rational cf_to_rational(const ContinuedFraction& cf);

// Calkin-Wilf generation n in left-to-right order; generation 1 is [1/1].
std::vector<Frac> cw_generation_frac(int n, int limit = default_generation_limit);
std::vector<Rational> cw_generation(int n, int limit = default_generation_limit);

// 1/(2 floor(x) + 1 - x)
Rational newman_next(const Rational& x);

std::uint64_t stern(std::uint64_t n);

// Sorted endpoints of the depth-r mediant partition of [0,1]; 2^r + 1 points.
std::vector<Frac> farey_level(int r, int limit = default_farey_limit);

// Exact sum of the generation-n elements.
Rational generation_sum(int n, int limit = default_generation_limit);

// Fraction of generation-n elements not exceeding x.
double generation_cdf(int n, double x, int limit = default_generation_limit);

}  // namespace mink
