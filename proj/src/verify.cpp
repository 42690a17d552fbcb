#include "minkowski/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>

#include <json.hpp>

#include "minkowski/contfrac.hpp"
#include "minkowski/moments.hpp"
#include "minkowski/period.hpp"
#include "minkowski/quadrature.hpp"
#include "minkowski/question_mark.hpp"
#include "minkowski/special.hpp"
#include "minkowski/transfer.hpp"
#include "minkowski/zeta.hpp"

namespace mink {

int VerifyReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

int VerifyReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::vector<CriterionSummary> VerifyReport::criteria() const {
  std::map<int, CriterionSummary> m;
  for (const auto& c : checks) {
    if (c.criterion == 0) continue;
    auto& s = m[c.criterion];
    s.criterion = c.criterion;
    ++s.checks;
    if (!c.pass) ++s.failed;
  }
  std::vector<CriterionSummary> out;
  for (auto& [k, v] : m) out.push_back(v);
  return out;
}

Suite parse_suite(const std::string& name) {
  if (name == "core") return Suite::core;
  if (name == "full") return Suite::full;
  throw Error(ErrorKind::parse, "unknown suite '" + name + "' (expected core or full)");
}

const char* suite_name(Suite s) { return s == Suite::core ? "core" : "full"; }

namespace {

// non-finite numbers become strings so the report stays valid JSON
nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

}  // namespace

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite_name(suite);
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["criterion"] = c.criterion;
    e["description"] = c.description;
    e["anchor"] = c.anchor;
    e["lhs"] = number(c.lhs);
    e["rhs"] = number(c.rhs);
    e["residual"] = number(c.residual);
    e["tolerance"] = number(c.tolerance);
    e["pass"] = c.pass;
    arr.push_back(std::move(e));
  }
  auto& crit = j["criteria"] = nlohmann::ordered_json::array();
  for (const auto& s : criteria())
    crit.push_back({{"criterion", s.criterion}, {"checks", s.checks}, {"failed", s.failed}, {"pass", s.pass()}});
  j["summary"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  return j.dump(2) + "\n";
}

namespace {

constexpr double pi = std::numbers::pi;

class Builder {
 public:
  explicit Builder(VerifyReport& r) : r_(r) {}

  void add(std::string id, int crit, std::string desc, std::string anchor, double lhs, double rhs, double residual,
           double tol) {
    r_.checks.push_back({std::move(id), crit, std::move(desc), std::move(anchor), lhs, rhs, residual, tol,
                         std::isfinite(residual) && residual <= tol});
  }
  void close(std::string id, int crit, std::string desc, std::string anchor, double lhs, double rhs, double tol) {
    add(std::move(id), crit, std::move(desc), std::move(anchor), lhs, rhs, std::abs(lhs - rhs), tol);
  }
  void exact(std::string id, int crit, std::string desc, std::string anchor, bool ok) {
    add(std::move(id), crit, std::move(desc), std::move(anchor), ok ? 1.0 : 0.0, 1.0, ok ? 0.0 : 1.0, 0.0);
  }
  void relation(const Relation& rel, int crit, std::string desc, std::string anchor) {
    r_.checks.push_back(
        {rel.name, crit, std::move(desc), std::move(anchor), rel.lhs, rel.rhs, rel.residual, rel.tolerance, rel.pass});
  }
  // exceptions inside a group become a failed check instead of aborting the run
  template <class F>
  void guarded(const std::string& id, int crit, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      add(id + ".error", crit, std::string("raised: ") + e.what(), "", NAN, NAN, NAN, 0.0);
    }
  }

 private:
  VerifyReport& r_;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

void spectrum_checks(Builder& b, const PrecisionConfig& cfg) {
  b.guarded("fig2", 1, [&] {
    const double captions[6] = {0.25553210, -0.08892666, 0.03261586, -0.01217621, 0.00458154, -0.00173113};
    auto ev = spectrum(cfg.matrix_dim);
    for (int i = 0; i < 6; ++i) {
      double v = i < static_cast<int>(ev.size()) ? ev[i] : NAN;
      b.close("fig2.lambda" + std::to_string(i + 1), 1, "eigenvalue " + std::to_string(i + 1) + " of S_2, collocation",
              "eigenfunction figure captions", v, captions[i], 1e-6);
    }
  });
}

void fourier_checks(Builder& b, Suite suite) {
  b.guarded("fourier", 2, [&] {
    const double table[9][2] = {{1.428159, 0.0},        {-0.521907, 0.148754},  {-0.334910, -0.017869},
                                {0.128533, -0.026840},  {-0.140524, -0.021886}, {0.285790, 0.003744},
                                {-0.262601, 0.004128},  {0.198742, -0.013703},  {-0.008479, 0.024012}};
    for (int n = 0; n <= 8; ++n) {
      Complex c = fourier_star(n);
      double res = std::max(std::abs(c.real() - table[n][0]), std::abs(c.imag() - table[n][1]));
      b.add("fourier.cstar" + std::to_string(n), 2, "c*_n against the printed table, worst component",
            "Fourier coefficient table", c.real(), table[n][0], res, 5e-6);
    }
    if (suite == Suite::full) {
      for (int n : {1, 4, 8}) {
        Complex a = fourier_coeff(n), q = fourier_coeff_midpoint(n, 24);
        b.add("fourier.midpoint24." + std::to_string(n), 2, "c_n, cell Gauss rule against the depth-24 midpoint rule",
              "Fourier coefficients", a.real(), q.real(), std::abs(a - q), 1e-8);
      }
    }
  });
}

void moment_checks(Builder& b, const MomentTable& t) {
  b.guarded("moments", 3, [&] {
    b.close("moments.m1", 3, "m_1", "first moment", t.m[1], 0.5, 1e-12);
    b.close("moments.M1", 3, "M_1", "first moment", t.M(1), 1.5, 1e-10);
    b.close("moments.cubic", 3, "2M_3 - 9M_2 + 3M_1", "moment relation", 2 * t.M(3) - 9 * t.M(2) + 3 * t.M(1), 3.0, 1e-8);
    double worst = 0.0;
    for (const auto& r : check_cross_relations(t))
      if (r.name.rfind("symmetry", 0) == 0) worst = std::max(worst, r.residual);
    b.add("moments.symmetry", 3, "max_{L<=20} |m_L - sum (-1)^s C(L,s) m_s|", "symmetry of the moments", worst, 0.0,
          worst, 1e-10);
  });
  b.guarded("alternating", 4, [&] {
    ScopedDigits sd(t.digits + 10);
    Real s = 0;
    for (int L = 1; L <= 80; ++L) {
      Real term = t.m_ext[L] * (t.m_ext[L - 1] + t.m_ext[L + 1]);
      s += L % 2 == 1 ? term : Real(-term);
    }
    const double tail = to_double(t.m_ext[81] * (t.m_ext[80] + t.m_ext[82]));
    const double v = to_double(s);
    b.add("alternating.half", 4, "sum_{L<=80} (-1)^(L-1) m_L (m_{L-1} + m_{L+1}); tail bound " + fmt("%.1e", tail),
          "alternating moment sum", v, 0.5, std::abs(v - 0.5) + tail, 1e-10);
  });
}

void eigen_checks(Builder& b, const MomentTable& t, const PrecisionConfig& cfg) {
  std::vector<EigenPair> pairs;
  b.guarded("eigen", 5, [&] {
    for (int i = 1; i <= 4; ++i) pairs.push_back(eigenfunction(i, cfg));
    auto ids = eigen_identities(t, pairs, cfg);
    b.relation(ids.ratio, 5, "int G_1(-x)F(x)dx / int G_1(-x)dx = l_1/(l_1+1)", "eigenfunction ratio");
    b.relation(ids.log_quadrature, 5, "-int_0^1 log x dF by quadrature against int_0^1 G(-x)dx", "log integrals");
    b.relation(ids.log_moments, 5, "2 int log(1+x) dF by moments against int_0^1 G(-x)dx", "log integrals");
    for (const auto& r : ids.annihilation) b.relation(r, 5, "int G_l(-x)(1 - x^2/l) dF = 0, relative", "annihilation");
    double o = orthogonality(pairs[0], pairs[1]);
    b.add("orthogonality.1.2", 5, "moment orthogonality of G_l1 and G_l2, relative", "orthogonality", o, 0.0, o, 1e-6);
  });
  b.guarded("funct", 6, [&] {
    std::mt19937_64 gen(20240607);
    auto uniform = [&] { return static_cast<double>(gen() >> 11) * 0x1p-53; };
    auto off_cut = [](Complex z) { return z.real() >= 1.0 ? std::abs(z.imag()) : std::abs(z - 1.0); };
    double three = 0.0, sym = 0.0;
    int used = 0;
    while (used < 100) {
      const Complex z = std::polar(20.0 * std::sqrt(uniform()), 2.0 * pi * uniform());
      if (std::abs(z) < 0.05) continue;
      if (std::min({off_cut(z), off_cut(z + 1.0), off_cut(1.0 / z), off_cut(1.0 / z + 1.0)}) < 0.1) continue;
      three = std::max(three, std::abs(three_term_residual(z)));
      sym = std::max(sym, std::abs(symmetry_residual(z)));
      ++used;
    }
    b.add("funct.three_term", 6, "max |1/z + G(1/z)/z^2 + 2G(z+1) - G(z)| on 100 points", "three-term equation", three,
          0.0, three, 1e-8);
    b.add("funct.symmetry", 6, "max |G(z+1) + G(1/z+1)/z^2 + 1/z| on 100 points", "symmetry property", sym, 0.0, sym,
          1e-8);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      double worst = 0.0;
      for (int k = 0; k <= 40; ++k) worst = std::max(worst, std::abs(eigen_residual(pairs[i], -1.0 + 0.02 * k)));
      b.add("eigen.residual." + std::to_string(i + 1), 6, "eigen-equation residual on [-1,-0.2]", "eigen equation", worst,
            0.0, worst, 1e-7);
    }
  });
}

void zeta_checks(Builder& b, const MomentTable& t, Suite suite) {
  b.guarded("zeta", 7, [&] {
    for (int L = 1; L <= 6; ++L) {
      const double z = zeta_M(Complex(L, 0.0)).value.real();
      b.close("zeta.special." + std::to_string(L), 7, "zeta_M(L) = M_L/L!", "special values", z,
              t.M(L) / std::tgamma(L + 1.0), 1e-8);
    }
    const double d = zeta_dirichlet(1.0, 2000).value.real();
    const double p = zeta_M(1.0).value.real();
    b.close("zeta.dirichlet.s1", 7, "Dirichlet sum N=2000 at s=1 against the Phi form", "Dirichlet series", d, p, 2e-3);
    double worst = 0.0;
    for (int k = 1; k <= 20; ++k) worst = std::max(worst, std::abs(critical_line_Z_complex(10.0 * k - 0.5).imag()));
    b.add("zeta.reality", 7, "max |Im zeta_M(it)Gamma(1+it)| on 20 points in (0,200]", "reality on the critical line",
          worst, 0.0, worst, 1e-9);
    for (int L = 1; L <= 4; ++L) {
      const double dz = zeta_derivative_at_negative(L);
      const double expect = std::tgamma(L) * t.M(L);
      const char* sign = dz > 0 ? "+" : "-";
      b.add("zeta.derivative." + std::to_string(L), 7,
            std::string("|zeta_M'(-L)| = (L-1)! M_L, relative; measured sign ") + sign, "derivative at -L", std::abs(dz),
            expect, std::abs(std::abs(dz) - expect) / expect, 1e-4);
    }
  });
  b.guarded("zeta.extra", 0, [&] {
    b.close("zeta.zero", 0, "zeta_M(0)", "total mass", zeta_M(0.0).value.real(), 1.0, 1e-12);
    const Complex s(0.4, 3.0);
    const double c = conjugate_symmetry_residual(s);
    b.add("zeta.conjugate", 0, "zeta_M(conj s) = conj zeta_M(s)", "real on the real line", c, 0.0, c, 1e-10);
    const int npts = suite == Suite::full ? 10 : 3;
    double fe = 0.0;
    for (int k = 0; k < npts; ++k) fe = std::max(fe, functional_equation_residual(Complex(0.3 + 0.7 * k / 9.0, 0.5 * k)));
    b.add("zeta.functional", 0, "zeta(s)Gamma(s) + zeta(-s)Gamma(-s), Dirichlet at s, Phi at -s", "functional equation",
          fe, 0.0, fe, 1e-3);
  });
}

void mellin_checks(Builder& b, const MomentTable& t) {
  b.guarded("mellin", 8, [&] {
    for (double s : {0.3, 0.5, 0.7}) {
      const Complex a = mellin_G(s), c = mellin_G_closed(s);
      b.add("mellin." + fmt("%.1f", s), 8, "direct Mellin transform of G(1-z) against zeta_M(s-1)Gamma(s)pi/sin(pi s)",
            "Mellin transform", a.real(), c.real(), std::abs(a - c), 1e-6);
    }
    for (int L = 1; L <= 2; ++L) {
      const double r = mellin_G_residue(L).real();
      const double expect = (L % 2 == 0 ? 1.0 : -1.0) * t.M(L - 1);
      b.close("mellin.residue." + std::to_string(L), 8, "residue of G* at s=L equals (-1)^L M_{L-1}", "residues", r,
              expect, 1e-6);
    }
    const double refl = std::abs(mellin_G_closed(1.3) + mellin_G_closed(0.7));
    b.add("mellin.reflection", 0, "G*(1+s) + G*(1-s) at s=0.3", "reflection", refl, 0.0, refl, 1e-10);
  });
}

void asym_checks(Builder& b, const MomentTable& t) {
  b.guarded("asym", 9, [&] {
    const double c = asym_constant();
    const bool prints = fmt("%.5f", c) == "0.18917";
    b.add("asym.constant", 9, "C = exp(-2 sqrt(log 2)) prints as 0.18917", "asymptotic constant", c, 0.18917,
          prints ? 0.0 : 1.0, 0.0);
    const auto r = asym_ratio(t, 60);
    b.exact("asym.monotone", 9, "m_L / (L^(1/4) C^sqrt(L)) strictly increasing for 2 <= L <= 60", "monotonicity",
            strictly_increasing(r, 2, 60));
  });
}

void exact_checks(Builder& b) {
  b.guarded("exact", 10, [&] {
    const std::uint64_t s17[17] = {0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4, 1};
    bool ok = true;
    for (int n = 0; n < 17; ++n) ok = ok && stern(n) == s17[n];
    b.exact("exact.stern", 10, "Stern sequence s(0..16)", "Stern sequence", ok);

    ok = true;
    for (int n = 2; n <= 12; ++n)
      ok = ok && generation_sum(n) == Rational(3 * (Integer(1) << (n - 2))) - Rational(1, 2);
    b.exact("exact.generation_sum", 10, "generation sums equal 3*2^(n-2) - 1/2 for 2 <= n <= 12", "generation sums", ok);

    ok = true;
    for (int n = 1; n <= 12 && ok; ++n) {
      std::vector<Rational> img;
      for (const auto& x : cw_generation(n)) img.push_back(F_exact(x).to_rational());
      std::sort(img.begin(), img.end());
      const Integer den = Integer(1) << n;
      for (std::size_t k = 0; k < img.size(); ++k) ok = ok && img[k] == Rational(Integer(2 * k + 1), den);
      ok = ok && img.size() == (std::size_t(1) << (n - 1));
    }
    b.exact("exact.qm_image", 10, "F maps generation n onto the odd dyadics k/2^n, n <= 12", "image of the tree", ok);

    ok = true;
    Rational x(1);
    int gen = 1;
    std::size_t pos = 0;
    auto row = cw_generation(1);
    for (int step = 0; step < (1 << 14) - 1; ++step) {
      if (pos == row.size()) {
        row = cw_generation(++gen);
        pos = 0;
      }
      ok = ok && x == row[pos++];
      x = newman_next(x);
    }
    b.exact("exact.newman", 10, "Newman successor reproduces the tree order for 2^14 - 1 steps", "Newman map", ok);

    ok = true;
    for (int n = 1; n <= 12; ++n)
      ok = ok && empirical_moment_exact(n, 1) == Rational(3, 2) - Rational(Integer(1), Integer(1) << n);
    b.exact("exact.empirical_moment", 10, "2^(1-n) * generation sum = 3/2 - 2^-n for n <= 12", "empirical moments", ok);
  });
}

void polynomial_checks(Builder& b) {
  b.guarded("eigenpoly", 11, [&] {
    const std::vector<std::vector<Rational>> P = {
        {Rational(-1, 4), 1},
        {Rational(1, 15), Rational(-3, 5), 1},
        {Rational(-7, 352), Rational(3, 11), Rational(-21, 22), 1},
        {Rational(37, 5865), Rational(-45, 391), Rational(14, 23), Rational(-30, 23), 1}};
    std::vector<double> samples;
    for (int k = 0; k < 50; ++k) samples.push_back((k + 0.5) / 50.0);
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
      auto p = eigen_polynomial(n);
      b.exact("eigenpoly.P" + std::to_string(n), 11, "P_n coefficients, exact", "eigen-polynomial table",
              p.coeffs == P[n - 1]);
      worst = std::max(worst, point_spectrum_residual(p, samples, 64));
    }
    b.add("eigenpoly.point_spectrum", 11, "max_n<=4 |S(P_n o F) - delta_n P_n o F| on 50 samples", "point spectrum",
          worst, 0.0, worst, 1e-10);
  });
  b.guarded("qpoly", 12, [&] {
    const std::vector<std::vector<int>> Q = {{-3, 2},
                                             {-3, 2},
                                             {-3, 3, -9, 2},
                                             {-3, 4, -18, 4},
                                             {-3, 5, -30, 10, -15, 2},
                                             {-3, 6, -45, 20, -45, 6},
                                             {-3, 7, -63, 35, -105, 21, -21, 2},
                                             {-3, 8, -84, 56, -210, 56, -84, 8}};
    auto trimmed = [](QPolynomial q) {
      while (q.coeffs.size() > 1 && q.coeffs.back() == 0) q.coeffs.pop_back();
      return q.coeffs;
    };
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
      auto c = trimmed(q_polynomial(n));
      std::vector<Integer> expect(Q[n - 1].begin(), Q[n - 1].end());
      ok = ok && c == expect;
    }
    b.exact("qpoly.table", 12, "Q_1..Q_8 coefficients, exact", "Q-polynomial table", ok);
    b.exact("qpoly.Q2_is_Q1", 12, "Q_2 = Q_1", "Q-polynomial table", trimmed(q_polynomial(2)) == trimmed(q_polynomial(1)));
    ok = true;
    for (int n = 1; n <= 8; ++n) ok = ok && q_hat_reciprocal(2 * n);
    b.exact("qpoly.reciprocal", 12, "(Q_2n + 3)/x reciprocal for n <= 8", "reciprocity", ok);
    ok = true;
    for (int two_n : {4, 6, 8}) ok = ok && !q_span(two_n).empty();
    b.exact("qpoly.span", 12, "Q_4, Q_6, Q_8 in the span of odd Q, solved exactly", "span membership", ok);
  });
}

void dpf_checks(Builder& b) {
  b.guarded("dpf", 13, [&] {
    b.close("dpf.g1_at_i", 13, "G_1(i) = pi", "Eisenstein series", eisenstein_g1(Complex(0.0, 1.0)).real(), pi, 1e-9);
    double worst = 0.0;
    for (Complex z : {Complex(0, 1), Complex(-0.5, 2), Complex(0.5, 1), Complex(0, 2), Complex(0.3, 1.2)})
      worst = std::max(worst, dpf_residual(z));
    b.add("dpf.homogeneous", 13, "homogeneous three-term residual of G - (i/2pi)G_1 at 5 points", "dyadic period function",
          worst, 0.0, worst, 1e-6);
  });
}

void scan_checks(Builder& b, const MomentTable& t, Suite suite) {
  b.guarded("scan", 14, [&] {
    b.close("scan.Z0", 14, "Z(0) = 1", "critical line", critical_line_Z(0.0), 1.0, 1e-12);
    const double t1 = suite == Suite::full ? 90.0 : 30.0;
    const double step = suite == Suite::full ? 0.05 : 0.1;
    const auto coarse = zero_scan(1.5, t1, step);
    const auto fine = zero_scan(1.5, t1, step / 2);
    double shift = coarse.size() == fine.size() ? 0.0 : INFINITY;
    for (std::size_t i = 0; i < coarse.size() && i < fine.size(); ++i)
      shift = std::max(shift, std::abs(coarse[i].t_zero - fine[i].t_zero));
    b.add("scan.stability", 14,
          "zeros in [1.5," + fmt("%g", t1) + "] unchanged when the step halves; " + std::to_string(coarse.size()) +
              " found",
          "critical-line zeros", static_cast<double>(coarse.size()), static_cast<double>(fine.size()), shift, 1e-6);
    double biggest = 0.0;
    for (const auto& s : sample_Z(0.5, t1, step)) biggest = std::max(biggest, std::abs(s.Z));
    b.add("scan.bounded", 14, "|Z(t)| <= Z(0) on the scan grid", "vertical bound", biggest, 1.0,
          std::max(0.0, biggest - 1.0), 0.0);
    const double v = std::log(t.m[60]) / std::sqrt(60.0);
    const double lo = -2.0 * std::sqrt(std::numbers::ln2);
    b.add("asym.bracket", 14, "log m_60 / sqrt(60) lies in (-2 sqrt(log 2), -1.2)", "asymptotic bracketing", v, lo,
          (v > lo && v < -1.2) ? 0.0 : 1.0, 0.0);
  });
}

void supporting_checks(Builder& b, const MomentTable& t, Suite suite) {
  b.guarded("support", 0, [&] {
    b.close("special.polylog2", 0, "Li_2(1/2) = pi^2/12 - log^2 2 / 2", "polylogarithm", polylog_half(2),
            pi * pi / 12 - std::log(2.0) * std::log(2.0) / 2, 1e-15);
    b.close("special.bessel_zero", 0, "J_0 at its first zero", "Bessel function", bessel_j(0, 2.404825557695773), 0.0,
            1e-10);
    b.close("qm.F1", 0, "F(1) = 1/2", "question mark", F_real(1.0), 0.5, 1e-15);
    b.exact("qm.two_fifths", 0, "?(2/5) = 3/8 exactly", "question mark", qm_exact(Rational(2, 5)).str() == "3/8");
    b.close("moments.log2", 0, "m(log 2) = c*_0", "generating function", m_exp(Complex(std::log(2.0), 0.0)).real(),
            1.428159846, 1e-9);
    const double ie = integral_equation_residual(1.0);
    b.add("moments.integral_equation", 0, "m(-s) against the Bessel-kernel integral at s=1", "integral equation", ie, 0.0,
          ie, 1e-8);
    const double l2 = fourier_terms(2, 1e-6);
    b.close("fourier.M2", 0, "M_2 from the Fourier coefficients", "moments from Fourier coefficients",
            M_from_fourier(2, static_cast<int>(l2)), t.M(2), 1e-5);
    const double lead = std::tgamma(21.0) * (fourier_coeff(0) / std::pow(fourier_node(0), 20)).real();
    b.add("fourier.leading", 0, "n=0 term alone at L=20 against M_20, relative", "leading term", lead, t.M(20),
          std::abs(lead - t.M(20)) / t.M(20), 1e-2);
    if (suite == Suite::full) {
      const double e8 = psi_fourier_l2(8), e64 = psi_fourier_l2(64);
      b.add("fourier.l2", 0, "L2 error of the Fourier partial sum of Psi, N=64 against N=8", "L2 convergence", e64, e8,
            e64 < e8 ? 0.0 : 1.0, 0.0);
      const double excess = parseval_sum(512) - psi_l2_norm();
      b.add("fourier.bessel", 0, "sum |c_n|^2 <= int Psi^2", "Bessel inequality", excess, 0.0, std::max(0.0, excess),
            1e-6);
      b.close("fourier.M1", 0, "M_1 from 2000 Fourier coefficients", "moments from Fourier coefficients",
              M_from_fourier(1, 2000), 1.5, 2e-3);
      const auto ny = nystrom_spectrum(80);
      b.close("nystrom.lambda1", 0, "first eigenvalue of the Nystrom discretisation", "integral operator", ny.at(0),
              0.25553210, 1e-6);
      const auto mono = moment_tables_monomial(100, 120);
      b.close("moments.monomial.m1", 0, "m_1 from the monomial transfer solve", "moments", mono.m[1], 0.5, 1e-12);
      const auto ng = neumann_solve([](double x) { return x - 0.5; });
      b.add("neumann.residual", 0, "(I - S)g = x - 1/2", "Neumann series", ng.residual, 0.0, ng.residual, 1e-11);
    }
  });
}

}  // namespace

VerifyReport run_verify(Suite suite, const PrecisionConfig& cfg) {
  cfg.validate();
  VerifyReport rep;
  rep.suite = suite;
  Builder b(rep);
  const auto& t = default_moments();
  spectrum_checks(b, cfg);
  fourier_checks(b, suite);
  moment_checks(b, t);
  eigen_checks(b, t, cfg);
  zeta_checks(b, t, suite);
  mellin_checks(b, t);
  asym_checks(b, t);
  exact_checks(b);
  polynomial_checks(b);
  dpf_checks(b);
  scan_checks(b, t, suite);
  supporting_checks(b, t, suite);
  return rep;
}

}  // namespace mink
