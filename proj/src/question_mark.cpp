#include "minkowski/question_mark.hpp"

#include <cmath>
#include <limits>

#include "minkowski/contfrac.hpp"

namespace mink {

namespace {

constexpr int max_exponent = 1 << 24;

Integer pow2(int e) {
  Integer p = 1;
  return p << e;
}

// Sum 1 + sum_i (-1)^(i+1) 2^-s_i over the prefix sums of the quotients.
double F_from_quotients_real(std::uint64_t a0, unsigned __int128 p, unsigned __int128 q, double eps) {
  long double acc_sum = static_cast<long double>(a0);
  long double f = 1.0L - std::ldexp(1.0L, -static_cast<int>(std::min<std::uint64_t>(a0, 16000)));
  int sign = 1;
  // p/q in (0,1): next quotient is floor(q/p).
  while (p != 0) {
    unsigned __int128 a = q / p;
    unsigned __int128 r = q - a * p;
    // Quotients beyond this bound put the term below long double range.
    if (a > 16000) break;
    long double next = acc_sum + static_cast<long double>(static_cast<std::uint64_t>(a));
    if (next > 16000.0L) break;
    long double term = std::ldexp(1.0L, -static_cast<int>(next));
    if (f != 0.0L && term < eps * std::fabs(f)) break;
    acc_sum = next;
    f += sign * term;
    sign = -sign;
    q = p;
    p = r;
  }
  return static_cast<double>(f);
}

}  // namespace

Dyadic Dyadic::make(Integer k, int e) {
  if (k == 0) return {Integer(0), 0};
  while (e > 0 && (k & 1) == 0) {
    k >>= 1;
    --e;
  }
  while (e < 0) {
    k <<= 1;
    ++e;
  }
  return {k, e};
}

Rational Dyadic::to_rational() const { return Rational(k, pow2(e)); }

double Dyadic::to_double() const { return to_rational().convert_to<double>(); }

std::string Dyadic::str() const { return k.str() + "/" + pow2(e).str(); }

Dyadic F_exact(const Rational& x) {
  if (x < 0) throw Error(ErrorKind::domain, "F_exact: x must be >= 0");
  auto cf = cf_from_rational(x);
  // Accumulate over the common denominator 2^total.
  Integer total_big = cf.digit_sum();
  if (total_big > max_exponent) throw Error(ErrorKind::limit, "F_exact: continued fraction digit sum too large");
  int total = total_big.convert_to<int>();
  Integer num = pow2(total);
  int s = 0;
  int sign = -1;
  for (const auto& a : cf.quotients) {
    s += a.convert_to<int>();
    num += sign * pow2(total - s);
    sign = -sign;
  }
  return Dyadic::make(num, total);
}

Dyadic qm_exact(const Rational& x) {
  if (x < 0 || x > 1) throw Error(ErrorKind::domain, "qm_exact: x must lie in [0,1]");
  Dyadic f = F_exact(x);
  return Dyadic::make(f.k, f.e - 1);
}

Rational qm_inverse(const Dyadic& d) {
  Rational target = d.to_rational();
  if (target < 0 || target > 1) throw Error(ErrorKind::domain, "qm_inverse: value must lie in [0,1]");
  if (target == 0) return 0;
  if (target == 1) return 1;
  // Stern-Brocot descent: the mediant of the bracket maps to the midpoint of the values.
  Integer ln = 0, ld = 1, hn = 1, hd = 1;
  Rational lo = 0, hi = 1;
  for (int step = 0; step <= d.e + 1; ++step) {
    Integer mn = ln + hn, md = ld + hd;
    Rational mid = (lo + hi) / 2;
    if (target == mid) return Rational(mn, md);
    if (target < mid) {
      hn = mn;
      hd = md;
      hi = mid;
    } else {
      ln = mn;
      ld = md;
      lo = mid;
    }
  }
  throw Error(ErrorKind::convergence, "qm_inverse: descent did not terminate");
}

double F_real(double x, double truncation_eps) {
  if (!std::isfinite(x)) throw Error(ErrorKind::domain, "F_real: non-finite argument");
  if (x < 0.0) {
    // F(x) = 2F(x+1) - 1, unrolled over k steps.
    double k = std::ceil(-x);
    double y = x + k;
    return 1.0 - std::ldexp(1.0 - F_real(y, truncation_eps), static_cast<int>(std::min(k, 2000.0)));
  }
  double r = std::round(x);
  if (std::abs(x - r) < 1e-14) x = r;
  if (x >= 4503599627370496.0) return 1.0;
  double a0d = std::floor(x);
  auto a0 = static_cast<std::uint64_t>(a0d);
  double f = x - a0d;
  if (f == 0.0) return static_cast<double>(1.0L - std::ldexp(1.0L, -static_cast<int>(std::min<std::uint64_t>(a0, 16000))));
  int ex = 0;
  double mant = std::frexp(f, &ex);
  auto m = static_cast<std::uint64_t>(std::ldexp(mant, 53));
  int e = 53 - ex;
  while ((m & 1) == 0) {
    m >>= 1;
    --e;
  }
  if (e > 120) return static_cast<double>(1.0L - std::ldexp(1.0L, -static_cast<int>(std::min<std::uint64_t>(a0, 16000))));
  unsigned __int128 p = m;
  unsigned __int128 q = static_cast<unsigned __int128>(1) << e;
  return F_from_quotients_real(a0, p, q, truncation_eps);
}

double qm_real(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::domain, "qm_real: x must lie in [0,1]");
  return 2.0 * F_real(x);
}

double psi(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::domain, "psi: non-finite argument");
  double f = x - std::floor(x);
  if (f >= 1.0) f = 0.0;
  return std::exp2(f) * (1.0 - F_real(f));
}

}  // namespace mink
