#include "minkowski/contfrac.hpp"

#include <algorithm>
#include <string>

namespace mink {

namespace {

void check_generation(int n, int limit) {
  if (n < 1) throw Error(ErrorKind::domain, "generation index must be >= 1");
  if (n > limit) throw Error(ErrorKind::limit, "generation " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// base 10 regardless of leading zeros, which gmp would read as octal
Integer decimal(std::string_view digits) {
  auto nz = digits.find_first_not_of('0');
  return nz == std::string_view::npos ? Integer(0) : Integer(std::string(digits.substr(nz)));
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw Error(ErrorKind::parse, "not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  Rational r;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) bad_rational(text);
    Integer den = decimal(q);
    if (den == 0) throw Error(ErrorKind::domain, "zero denominator in '" + std::string(text) + "'");
    r = Rational(decimal(p), den);
  } else {
    auto dot = s.find('.');
    auto whole = s.substr(0, dot);
    auto frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_rational(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) bad_rational(text);
    Integer num = decimal(std::string(whole) + std::string(frac));
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    r = Rational(num, den);
  }
  return negative ? Rational(-r) : r;
}

bool ContinuedFraction::canonical() const {
  if (quotients.empty()) return false;
  if (quotients[0] < 0) return false;
  for (std::size_t i = 1; i < quotients.size(); ++i)
    if (quotients[i] < 1) return false;
  if (quotients.size() >= 2 && quotients.back() < 2) return false;
  return true;
}

Integer ContinuedFraction::digit_sum() const {
  Integer s = 0;
  for (const auto& a : quotients) s += a;
  return s;
}

ContinuedFraction cf_from_rational(const Rational& r) {
  if (r < 0) throw Error(ErrorKind::domain, "cf_from_rational: negative input");
  Integer p = numerator(r), q = denominator(r);
  ContinuedFraction cf;
  while (true) {
    Integer a = p / q;
    cf.quotients.push_back(a);
    Integer rem = p - a * q;
    if (rem == 0) break;
    p = q;
    q = rem;
  }
  return cf;
}

Rational cf_to_rational(const ContinuedFraction& cf) {
  if (!cf.canonical()) throw Error(ErrorKind::domain, "cf_to_rational: non-canonical continued fraction");
  // Convergent recurrence h_k = a_k h_{k-1} + h_{k-2}.
  Integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (const auto& a : cf.quotients) {
    Integer h = a * h1 + h2;
    Integer k = a * k1 + k2;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  return Rational(h1, k1);
}

std::vector<Frac> cw_generation_frac(int n, int limit) {
  check_generation(n, limit);
  std::vector<Frac> gen{{1, 1}};
  for (int g = 2; g <= n; ++g) {
    std::vector<Frac> next;
    next.reserve(gen.size() * 2);
    for (const auto& f : gen) {
      next.push_back({f.num, f.num + f.den});
      next.push_back({f.num + f.den, f.den});
    }
    gen = std::move(next);
  }
  return gen;
}

std::vector<Rational> cw_generation(int n, int limit) {
  auto small = cw_generation_frac(n, limit);
  std::vector<Rational> out;
  out.reserve(small.size());
  for (const auto& f : small) out.push_back(f.to_rational());
  return out;
}

Rational newman_next(const Rational& x) {
  if (x <= 0) throw Error(ErrorKind::domain, "newman_next: x must be positive");
  Integer fl = numerator(x) / denominator(x);
  return Rational(1) / (Rational(2 * fl + 1) - x);
}

std::uint64_t stern(std::uint64_t n) {
  // s(n) via the binary digits of n: track (s(m), s(m+1)).
  std::uint64_t a = 1, b = 0;
  while (n > 0) {
    if (n & 1) b += a;
    else a += b;
    n >>= 1;
  }
  return b;
}

std::vector<Frac> farey_level(int r, int limit) {
  if (r < 0) throw Error(ErrorKind::domain, "farey_level: depth must be >= 0");
  if (r > limit) throw Error(ErrorKind::limit, "farey depth " + std::to_string(r) + " exceeds limit " + std::to_string(limit));
  std::vector<Frac> pts{{0, 1}, {1, 1}};
  for (int level = 1; level <= r; ++level) {
    std::vector<Frac> next;
    next.reserve(pts.size() * 2 - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      next.push_back(pts[i]);
      next.push_back({pts[i].num + pts[i + 1].num, pts[i].den + pts[i + 1].den});
    }
    next.push_back(pts.back());
    pts = std::move(next);
  }
  return pts;
}

Rational generation_sum(int n, int limit) {
  check_generation(n, limit);
  Rational sum = 0;
  for (const auto& f : cw_generation_frac(n, limit)) sum += f.to_rational();
  return sum;
}

double generation_cdf(int n, double x, int limit) {
  check_generation(n, limit);
  if (x < 0.0) throw Error(ErrorKind::domain, "generation_cdf: x must be >= 0");
  Rational rx(x);
  auto gen = cw_generation_frac(n, limit);
  std::size_t count = 0;
  for (const auto& f : gen)
    if (f.to_rational() <= rx) ++count;
  return static_cast<double>(count) / static_cast<double>(gen.size());
}

}  // namespace mink
