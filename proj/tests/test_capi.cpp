#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "minkowski.h"

namespace {

struct Ctx {
  mink_context* c = nullptr;
  Ctx() { REQUIRE(mink_context_create(&c) == MINK_OK); }
  ~Ctx() { mink_context_destroy(c); }
};

}  // namespace

TEST_CASE("null handling") {
  CHECK(mink_context_create(nullptr) == MINK_ERR_ARGUMENT);
  double v = 0.0;
  CHECK(mink_qm(nullptr, 0.5, &v) == MINK_ERR_ARGUMENT);
  Ctx ctx;
  CHECK(mink_qm(ctx.c, 0.5, nullptr) == MINK_ERR_ARGUMENT);
  CHECK(std::string(mink_last_error(ctx.c)) == "null output pointer");
  CHECK(mink_table_rows(nullptr) == 0);
  CHECK(mink_table_csv(nullptr) == nullptr);
  mink_table_free(nullptr);
  mink_context_destroy(nullptr);
  CHECK(std::string(mink_status_name(MINK_ERR_LIMIT)) == "limit");
  CHECK(std::strlen(mink_version()) > 0);
}

TEST_CASE("scalar evaluation") {
  Ctx ctx;
  double v = 0.0;
  REQUIRE(mink_F(ctx.c, 1.0, &v) == MINK_OK);
  CHECK(v == 0.5);
  REQUIRE(mink_qm(ctx.c, std::sqrt(2.0) - 1.0, &v) == MINK_OK);
  CHECK(std::abs(v - 0.4) < 1e-11);
  CHECK(mink_qm(ctx.c, 1.5, &v) == MINK_ERR_DOMAIN);
  CHECK(std::string(mink_last_error(ctx.c)).find("[0,1]") != std::string::npos);
  REQUIRE(mink_psi(ctx.c, 0.0, &v) == MINK_OK);
  CHECK(v == 1.0);
  CHECK(std::string(mink_last_error(ctx.c)).empty());

  const char* s = nullptr;
  REQUIRE(mink_qm_exact(ctx.c, "2/5", &s) == MINK_OK);
  CHECK(std::string(s) == "3/8");
  REQUIRE(mink_qm_exact(ctx.c, "0.4", &s) == MINK_OK);
  CHECK(std::string(s) == "3/8");
  REQUIRE(mink_F_exact(ctx.c, "3", &s) == MINK_OK);
  CHECK(std::string(s) == "7/8");
  REQUIRE(mink_qm_inverse(ctx.c, "3/8", &s) == MINK_OK);
  CHECK(std::string(s) == "2/5");
  CHECK(mink_qm_inverse(ctx.c, "1/3", &s) == MINK_ERR_DOMAIN);
  CHECK(mink_qm_exact(ctx.c, "two", &s) == MINK_ERR_PARSE);
  CHECK(mink_qm_exact(ctx.c, "3/2", &s) == MINK_ERR_DOMAIN);

  double re = 0.0, im = 0.0;
  REQUIRE(mink_G(ctx.c, 0.0, 0.0, &re, &im) == MINK_OK);
  CHECK(re == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(mink_G(ctx.c, 2.0, 0.0, &re, &im) == MINK_ERR_DOMAIN);
  REQUIRE(mink_zeta(ctx.c, 1.0, 0.0, &re, &im) == MINK_OK);
  CHECK(re == doctest::Approx(1.5).epsilon(1e-12));
  REQUIRE(mink_critical_Z(ctx.c, 0.0, &v) == MINK_OK);
  CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(mink_fourier_coeff(ctx.c, 0, &re, &im) == MINK_OK);
  CHECK(im == 0.0);

  double unit = 0.0, half = 0.0;
  REQUIRE(mink_integrate_power(ctx.c, 1.0, 16, &unit, &half) == MINK_OK);
  CHECK(unit == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(std::abs(half - 1.5) < 1e-4);
  CHECK(mink_integrate_power(ctx.c, 1.0, 40, &unit, &half) == MINK_ERR_LIMIT);
}

TEST_CASE("configuration") {
  Ctx ctx;
  const char* v = nullptr;
  REQUIRE(mink_config_get(ctx.c, "dim", &v) == MINK_OK);
  CHECK(std::string(v) == "64");
  CHECK(mink_config_set(ctx.c, "dim", "48") == MINK_OK);
  REQUIRE(mink_config_get(ctx.c, "dim", &v) == MINK_OK);
  CHECK(std::string(v) == "48");
  CHECK(mink_config_set(ctx.c, "dim", "999") == MINK_ERR_LIMIT);
  CHECK(mink_config_set(ctx.c, "dim", "4") == MINK_ERR_DOMAIN);
  CHECK(mink_config_set(ctx.c, "dim", "4x") == MINK_ERR_PARSE);
  CHECK(mink_config_set(ctx.c, "colour", "1") == MINK_ERR_PARSE);
  CHECK(mink_config_set(ctx.c, "truncation_eps", "1e-12") == MINK_OK);
  REQUIRE(mink_config_get(ctx.c, "dim", &v) == MINK_OK);
  CHECK(std::string(v) == "48");
}

TEST_CASE("tables") {
  Ctx ctx;
  mink_table* t = nullptr;
  REQUIRE(mink_table_tree(ctx.c, 3, &t) == MINK_OK);
  CHECK(mink_table_rows(t) == 4);
  CHECK(mink_table_cols(t) == 2);
  CHECK(std::string(mink_table_header(t, 0)) == "fraction");
  CHECK(std::string(mink_table_cell(t, 1, 0)) == "3/2");
  CHECK(mink_table_cell(t, 4, 0) == nullptr);
  CHECK(std::string(mink_table_csv(t)).rfind("fraction,value\n1/3,", 0) == 0);
  mink_table_free(t);

  t = nullptr;
  CHECK(mink_table_tree(ctx.c, 99, &t) == MINK_ERR_LIMIT);
  CHECK(t == nullptr);
  CHECK(std::string(mink_last_error(ctx.c)).find("limit") != std::string::npos);

  REQUIRE(mink_table_spectrum(ctx.c, 64, &t) == MINK_OK);
  REQUIRE(mink_table_rows(t) >= 6);
  CHECK(std::abs(std::stod(mink_table_cell(t, 0, 1)) - 0.25553210) < 1e-6);
  mink_table_free(t);

  REQUIRE(mink_table_grid(ctx.c, "qm", 0.0, 1.0, 8, &t) == MINK_OK);
  CHECK(mink_table_rows(t) == 9);
  CHECK(std::string(mink_table_cell(t, 8, 1)) == "1");
  mink_table_free(t);
  CHECK(mink_table_grid(ctx.c, "sin", 0.0, 1.0, 8, &t) == MINK_ERR_PARSE);

  REQUIRE(mink_table_moments(ctx.c, 25, &t) == MINK_OK);
  CHECK(mink_table_rows(t) == 26);
  CHECK(std::stod(mink_table_cell(t, 1, 2)) == 1.5);
  mink_table_free(t);

  REQUIRE(mink_table_fourier(ctx.c, 3, &t) == MINK_OK);
  CHECK(mink_table_cols(t) == 5);
  CHECK(std::string(mink_table_header(t, 1)) == "c_re");
  mink_table_free(t);

  REQUIRE(mink_table_periodfn(ctx.c, 1, -1.0, -0.2, 0.1, &t) == MINK_OK);
  CHECK(mink_table_rows(t) == 9);
  CHECK(std::stod(mink_table_cell(t, 0, 1)) == doctest::Approx(1.0).epsilon(1e-12));
  mink_table_free(t);

  REQUIRE(mink_table_zeros(ctx.c, 1.5, 16.0, 0.05, &t) == MINK_OK);
  CHECK(mink_table_rows(t) == 3);
  CHECK(std::abs(std::stod(mink_table_cell(t, 0, 0)) - 2.174731329) < 1e-7);
  mink_table_free(t);

  CHECK(mink_table_zeta(ctx.c, 1.0, 0.0, 0.1, &t) == MINK_ERR_DOMAIN);
  CHECK(mink_table_zeta(ctx.c, 0.0, 1e9, 1e-3, &t) == MINK_ERR_LIMIT);
}
