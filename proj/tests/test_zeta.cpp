#include <doctest.h>

#include <cmath>
#include <numbers>

#include "minkowski/moments.hpp"
#include "minkowski/special.hpp"
#include "minkowski/zeta.hpp"

using namespace mink;

namespace {

constexpr double pi = std::numbers::pi;

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("did not throw");
  return ErrorKind::domain;
}

}  // namespace

TEST_CASE("Fourier coefficients against an independent midpoint implementation") {
  // numpy, depth 22
  CHECK(std::abs(fourier_star(1) - Complex(-0.5219010570724095, 0.14875585264961852)) < 1e-8);
  CHECK(std::abs(fourier_star(2) - Complex(-0.33493213844729536, -0.017870577469089856)) < 1e-8);
  CHECK(std::abs(fourier_coeff(1) - Complex(-0.016221865306837786, -0.03974200602519486)) < 1e-9);
  CHECK(std::abs(fourier_star(0).real() - 1.4281598454) < 1e-9);
}

TEST_CASE("Fourier table structure") {
  const auto& t = fourier_table(40);
  CHECK(t.size() >= 40);
  for (int n = 0; n <= 40; ++n) {
    CHECK(t[-n] == std::conj(t[n]));
    CHECK(std::abs(t[n] - fourier_coeff(n)) < 1e-15);
    CHECK(std::abs(t.star(n) - fourier_star(n)) < 1e-13);
  }
  CHECK(std::abs(fourier_coeff(3) - fourier_coeff_midpoint(3, 20)) < 1e-7);
  CHECK(kind_of([] { fourier_coeff(max_fourier_index + 1); }) == ErrorKind::limit);
}

TEST_CASE("L2 convergence of the Fourier series of Psi") {
  const double e0 = psi_fourier_l2(0), e8 = psi_fourier_l2(8), e64 = psi_fourier_l2(64);
  CHECK(e8 < e0);
  CHECK(e64 < e8);
  CHECK(parseval_sum(512) <= psi_l2_norm() + 1e-9);
  CHECK(kind_of([] { psi_fourier_l2(max_l2_terms + 1); }) == ErrorKind::limit);
}

TEST_CASE("moments from Fourier coefficients") {
  const auto& t = default_moments();
  int n2 = fourier_terms(2, 1e-6);
  CHECK(std::abs(M_from_fourier(2, n2) - t.M(2)) < 1e-5);
  CHECK(std::abs(M_from_fourier(3, fourier_terms(3, 1e-6)) - t.M(3)) < 1e-5);
  CHECK(kind_of([] { fourier_terms(1, 1e-12); }) == ErrorKind::convergence);
}

TEST_CASE("special values") {
  const auto& t = default_moments();
  CHECK(std::abs(zeta_M(0.0).value - 1.0) < 1e-13);
  for (int L = 1; L <= 8; ++L) {
    double expect = t.M(L) / std::tgamma(L + 1.0);
    CHECK(std::abs(zeta_M(Complex(L, 0.0)).value.real() - expect) < 1e-12 * expect);
  }
  CHECK(zeta_M(2.0).method == ZetaMethod::phi);
  CHECK(std::string(method_name(ZetaMethod::dirichlet)) == "dirichlet");
}

TEST_CASE("Dirichlet series") {
  CHECK(std::abs(zeta_dirichlet(1.0, 2000).value.real() - 1.5) < 2e-3);
  Complex s(0.8, 4.0);
  CHECK(std::abs(zeta_dirichlet(s, 2000).value - zeta_M(s).value) < 1e-3);
  CHECK(kind_of([] { zeta_dirichlet(0.1); }) == ErrorKind::domain);
}

TEST_CASE("functional equation and conjugate symmetry") {
  for (Complex s : {Complex(0.4, 3.0), Complex(0.7, 0.5), Complex(0.9, 10.0)}) {
    Complex lhs = zeta_M(s).value * gamma(s), rhs = -zeta_M(-s).value * gamma(-s);
    CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(lhs)));
    CHECK(functional_equation_residual(s) < 1e-6);
    CHECK(conjugate_symmetry_residual(s) < 1e-12);
  }
}

TEST_CASE("derivative at negative integers") {
  const auto& t = default_moments();
  for (int L = 1; L <= 4; ++L) {
    double d = zeta_derivative_at_negative(L);
    double expect = (L % 2 == 1 ? 1.0 : -1.0) * std::tgamma(L) * t.M(L);
    CHECK(std::abs(d - expect) < 1e-6 * std::abs(expect));
  }
}

TEST_CASE("critical line") {
  CHECK(critical_line_Z(0.0) == doctest::Approx(1.0).epsilon(1e-13));
  // numpy midpoint at depth 22, error below 1e-8
  CHECK(std::abs(critical_line_Z(1.5) - 0.322291057) < 3e-8);
  for (double t : {3.0, 47.5, 150.0}) {
    Complex z = critical_line_Z_complex(t);
    CHECK(std::abs(z.imag()) < 1e-9);
    CHECK(std::abs(z.real() - critical_line_Z(t)) < 1e-9);
  }
  CHECK(kind_of([] { sample_Z(0.0, max_scan_t + 10.0, 1.0); }) == ErrorKind::limit);
}

TEST_CASE("zeros of Z") {
  auto zs = zero_scan(1.5, 20.0, 0.05);
  REQUIRE(zs.size() >= 3);
  const double expect[3] = {2.174731329, 12.129168037, 15.468457630};
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(zs[i].t_zero - expect[i]) < 1e-7);
    CHECK(zs[i].bracket_width < 1e-7);
    CHECK(zs[i].Z_left * zs[i].Z_right <= 0.0);
    CHECK(std::abs(critical_line_Z(zs[i].t_zero)) < 1e-8);
  }
  auto samples = sample_Z(1.5, 20.0, 0.05);
  int changes = 0;
  for (std::size_t i = 1; i < samples.size(); ++i) changes += (samples[i - 1].Z > 0) != (samples[i].Z > 0);
  CHECK(changes == static_cast<int>(zs.size()));
}

TEST_CASE("Mellin transform of G") {
  const auto& t = default_moments();
  for (double s : {0.3, 0.5, 0.7}) CHECK(std::abs(mellin_G(s) - mellin_G_closed(s)) < 1e-9);
  CHECK(std::abs(mellin_G(Complex(0.5, 2.0)) - mellin_G_closed(Complex(0.5, 2.0))) < 1e-8);
  CHECK(std::abs(mellin_G_residue(1).real() + t.M(0)) < 1e-6);
  CHECK(std::abs(mellin_G_residue(2).real() - t.M(1)) < 1e-6);
  CHECK(std::abs(mellin_G_residue(3).real() + t.M(2)) < 1e-5);
  CHECK(kind_of([] { mellin_G(1.2); }) == ErrorKind::domain);
}

TEST_CASE("Eisenstein series") {
  CHECK(std::abs(eisenstein_g1(Complex(0.0, 1.0)) - pi) < 1e-12);
  for (Complex z : {Complex(0.3, 1.2), Complex(-0.1, 0.9), Complex(0.45, 1.0)}) {
    Complex w = -1.0 / z;
    // weight-2 quasi-modularity
    CHECK(std::abs(eisenstein_g1(w) - z * z * eisenstein_g1(z) + Complex(0.0, 2.0 * pi) * z) < 1e-9);
    CHECK(std::abs(eisenstein_g1(z + 1.0) - eisenstein_g1(z)) < 1e-11);
  }
  CHECK(kind_of([] { eisenstein_g1(Complex(0.0, 0.1)); }) == ErrorKind::domain);
}

TEST_CASE("dyadic period function") {
  for (Complex z : {Complex(0, 1), Complex(-0.5, 2), Complex(0.5, 1), Complex(0.2, 1.5)}) CHECK(dpf_residual(z) < 1e-6);
}

TEST_CASE("limits") {
  CHECK(kind_of([] { zeta_M(Complex(max_zeta_real + 1.0, 0.0)); }) == ErrorKind::limit);
}
