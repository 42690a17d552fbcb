#include "minkowski.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minkowski/contfrac.hpp"
#include "minkowski/moments.hpp"
#include "minkowski/period.hpp"
#include "minkowski/quadrature.hpp"
#include "minkowski/question_mark.hpp"
#include "minkowski/transfer.hpp"
#include "minkowski/verify.hpp"
#include "minkowski/zeta.hpp"

struct mink_context {
  mink::PrecisionConfig cfg;
  std::string error;
  std::string text;
  std::optional<mink::ThreeTermFunction> G;  // built for the current cfg
};

struct mink_table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string csv;
};

namespace {

constexpr int max_grid_points = 1000000;

struct NullArgument {};

template <class T>
T& deref(T* p) {
  if (!p) throw NullArgument{};
  return *p;
}

mink_status status_of(mink::ErrorKind k) {
  switch (k) {
    case mink::ErrorKind::domain: return MINK_ERR_DOMAIN;
    case mink::ErrorKind::limit: return MINK_ERR_LIMIT;
    case mink::ErrorKind::pole: return MINK_ERR_POLE;
    case mink::ErrorKind::precision: return MINK_ERR_PRECISION;
    case mink::ErrorKind::convergence: return MINK_ERR_CONVERGENCE;
    case mink::ErrorKind::parse: return MINK_ERR_PARSE;
  }
  return MINK_ERR_INTERNAL;
}

mink_status guarded(mink_context* ctx, const std::function<void()>& body) {
  if (!ctx) return MINK_ERR_ARGUMENT;
  ctx->error.clear();
  try {
    body();
    return MINK_OK;
  } catch (const NullArgument&) {
    ctx->error = "null output pointer";
    return MINK_ERR_ARGUMENT;
  } catch (const mink::Error& e) {
    ctx->error = e.what();
    return status_of(e.kind());
  } catch (const std::domain_error& e) {
    ctx->error = e.what();
    return MINK_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    ctx->error = "out of memory";
    return MINK_ERR_LIMIT;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return MINK_ERR_INTERNAL;
  } catch (...) {
    ctx->error = "unknown failure";
    return MINK_ERR_INTERNAL;
  }
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(const mink::Real& v) { return v.str(17); }

std::string need_text(const char* s) {
  if (!s) throw NullArgument{};
  return s;
}

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw mink::Error(mink::ErrorKind::domain, std::string(what) + " must be finite");
}

// Number of samples t0, t0+step, ... not beyond t1 (with a small slack for rounding).
int grid_count(double t0, double t1, double step) {
  check_finite(t0, "range start");
  check_finite(t1, "range end");
  check_finite(step, "range step");
  if (!(step > 0.0)) throw mink::Error(mink::ErrorKind::domain, "range step must be positive");
  if (t1 < t0) throw mink::Error(mink::ErrorKind::domain, "range end is below its start");
  double n = std::floor((t1 - t0) / step + 1e-9) + 1.0;
  if (n > max_grid_points)
    throw mink::Error(mink::ErrorKind::limit, "grid exceeds max_grid_points = " + std::to_string(max_grid_points));
  return static_cast<int>(n);
}

const mink::ThreeTermFunction& period_fn(mink_context& ctx) {
  if (!ctx.G) {
    const mink::PrecisionConfig defaults;
    ctx.G = (ctx.cfg.coeff_dim == defaults.coeff_dim && ctx.cfg.digits == defaults.digits)
                ? mink::period_function()
                : mink::period_function(ctx.cfg);
  }
  return *ctx.G;
}

mink_status emit(mink_context* ctx, mink_table** out, const std::function<void(mink_table&)>& fill) {
  return guarded(ctx, [&] {
    auto& slot = deref(out);
    slot = nullptr;
    auto t = std::make_unique<mink_table>();
    fill(*t);
    slot = t.release();
  });
}

int parse_int(std::string_view s, const std::string& key) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw mink::Error(mink::ErrorKind::parse, key + ": not an integer: '" + std::string(s) + "'");
  return v;
}

double parse_double(std::string_view s, const std::string& key) {
  std::string tmp(s);
  char* end = nullptr;
  double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size())
    throw mink::Error(mink::ErrorKind::parse, key + ": not a number: '" + tmp + "'");
  return v;
}

using IntField = int mink::PrecisionConfig::*;
const std::map<std::string, IntField, std::less<>>& int_fields() {
  static const std::map<std::string, IntField, std::less<>> m = {
      {"digits", &mink::PrecisionConfig::digits},
      {"depth", &mink::PrecisionConfig::quadrature_depth},
      {"dim", &mink::PrecisionConfig::matrix_dim},
      {"coeff_dim", &mink::PrecisionConfig::coeff_dim},
      {"lmax", &mink::PrecisionConfig::lmax},
  };
  return m;
}

}  // namespace

extern "C" {

const char* mink_version(void) { return "0.1.0"; }

const char* mink_status_name(mink_status status) {
  switch (status) {
    case MINK_OK: return "ok";
    case MINK_ERR_DOMAIN: return "domain";
    case MINK_ERR_LIMIT: return "limit";
    case MINK_ERR_POLE: return "pole";
    case MINK_ERR_PRECISION: return "precision";
    case MINK_ERR_CONVERGENCE: return "convergence";
    case MINK_ERR_PARSE: return "parse";
    case MINK_ERR_ARGUMENT: return "argument";
    case MINK_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

mink_status mink_context_create(mink_context** out) {
  if (!out) return MINK_ERR_ARGUMENT;
  *out = new (std::nothrow) mink_context();
  return *out ? MINK_OK : MINK_ERR_INTERNAL;
}

void mink_context_destroy(mink_context* ctx) { delete ctx; }

const char* mink_last_error(const mink_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

mink_status mink_config_set(mink_context* ctx, const char* key, const char* value) {
  return guarded(ctx, [&] {
    std::string k = need_text(key), v = need_text(value);
    mink::PrecisionConfig next = ctx->cfg;
    if (auto it = int_fields().find(k); it != int_fields().end())
      next.*(it->second) = parse_int(v, k);
    else if (k == "truncation_eps")
      next.truncation_eps = parse_double(v, k);
    else
      throw mink::Error(mink::ErrorKind::parse, "unknown config key '" + k + "'");
    next.validate();
    if (next.coeff_dim != ctx->cfg.coeff_dim || next.digits != ctx->cfg.digits) ctx->G.reset();
    ctx->cfg = next;
  });
}

mink_status mink_config_get(mink_context* ctx, const char* key, const char** value) {
  return guarded(ctx, [&] {
    std::string k = need_text(key);
    auto& out = deref(value);
    if (auto it = int_fields().find(k); it != int_fields().end())
      ctx->text = std::to_string(ctx->cfg.*(it->second));
    else if (k == "truncation_eps")
      ctx->text = fmt(ctx->cfg.truncation_eps);
    else
      throw mink::Error(mink::ErrorKind::parse, "unknown config key '" + k + "'");
    out = ctx->text.c_str();
  });
}

mink_status mink_qm(mink_context* ctx, double x, double* out) {
  return guarded(ctx, [&] { deref(out) = mink::qm_real(x); });
}

mink_status mink_F(mink_context* ctx, double x, double* out) {
  return guarded(ctx, [&] { deref(out) = mink::F_real(x, ctx->cfg.truncation_eps); });
}

mink_status mink_psi(mink_context* ctx, double x, double* out) {
  return guarded(ctx, [&] { deref(out) = mink::psi(x); });
}

mink_status mink_qm_exact(mink_context* ctx, const char* rational, const char** out) {
  return guarded(ctx, [&] {
    auto& slot = deref(out);
    ctx->text = mink::qm_exact(mink::parse_rational(need_text(rational))).str();
    slot = ctx->text.c_str();
  });
}

mink_status mink_F_exact(mink_context* ctx, const char* rational, const char** out) {
  return guarded(ctx, [&] {
    auto& slot = deref(out);
    ctx->text = mink::F_exact(mink::parse_rational(need_text(rational))).str();
    slot = ctx->text.c_str();
  });
}

mink_status mink_qm_inverse(mink_context* ctx, const char* dyadic, const char** out) {
  return guarded(ctx, [&] {
    auto& slot = deref(out);
    mink::Rational d = mink::parse_rational(need_text(dyadic));
    const mink::Integer den = denominator(d);
    if (den != 1 && (den & (den - 1)) != 0)
      throw mink::Error(mink::ErrorKind::domain, "not a dyadic rational: '" + std::string(dyadic) + "'");
    int e = 0;
    for (mink::Integer q = den; q > 1; q >>= 1) ++e;
    ctx->text = mink::qm_inverse(mink::Dyadic::make(numerator(d), e)).str();
    slot = ctx->text.c_str();
  });
}

mink_status mink_integrate_power(mink_context* ctx, double p, int depth, double* unit, double* halfline) {
  return guarded(ctx, [&] {
    check_finite(p, "power");
    auto& u = deref(unit);
    auto& h = deref(halfline);
    int r = depth < 0 ? ctx->cfg.quadrature_depth : depth;
    auto f = [p](double x) { return std::pow(x, p); };
    u = mink::integrate_unit(f, r);
    h = mink::integrate_halfline(f, r);
  });
}

mink_status mink_G(mink_context* ctx, double re, double im, double* out_re, double* out_im) {
  return guarded(ctx, [&] {
    auto& a = deref(out_re);
    auto& b = deref(out_im);
    mink::Complex v = period_fn(*ctx)(mink::Complex(re, im));
    a = v.real();
    b = v.imag();
  });
}

mink_status mink_fourier_coeff(mink_context* ctx, int n, double* out_re, double* out_im) {
  return guarded(ctx, [&] {
    auto& a = deref(out_re);
    auto& b = deref(out_im);
    mink::Complex c = mink::fourier_coeff(n);
    a = c.real();
    b = c.imag();
  });
}

mink_status mink_zeta(mink_context* ctx, double re, double im, double* out_re, double* out_im) {
  return guarded(ctx, [&] {
    auto& a = deref(out_re);
    auto& b = deref(out_im);
    mink::Complex z = mink::zeta_M(mink::Complex(re, im)).value;
    a = z.real();
    b = z.imag();
  });
}

mink_status mink_critical_Z(mink_context* ctx, double t, double* out) {
  return guarded(ctx, [&] { deref(out) = mink::critical_line_Z(t); });
}

mink_status mink_table_tree(mink_context* ctx, int generation, mink_table** out) {
  return emit(ctx, out, [&](mink_table& t) {
    t.header = {"fraction", "value"};
    for (const auto& f : mink::cw_generation_frac(generation))
      t.rows.push_back({std::to_string(f.num) + "/" + std::to_string(f.den), fmt(f.value())});
  });
}

mink_status mink_table_grid(mink_context* ctx, const char* which, double x0, double x1, int points,
                            mink_table** out) {
  return emit(ctx, out, [&](mink_table& t) {
    std::string w = need_text(which);
    std::function<double(double)> f;
    if (w == "qm") f = mink::qm_real;
    else if (w == "F") f = [&](double x) { return mink::F_real(x, ctx->cfg.truncation_eps); };
    else if (w == "psi") f = mink::psi;
    else throw mink::Error(mink::ErrorKind::parse, "unknown function '" + w + "', expected qm, F or psi");
    check_finite(x0, "grid start");
    check_finite(x1, "grid end");
    if (points < 1) throw mink::Error(mink::ErrorKind::domain, "grid needs at least one interval");
    if (points >= max_grid_points)
      throw mink::Error(mink::ErrorKind::limit, "grid exceeds max_grid_points = " + std::to_string(max_grid_points));
    t.header = {"x", "value"};
    for (int k = 0; k <= points; ++k) {
      double x = k == points ? x1 : x0 + (x1 - x0) * k / points;
      t.rows.push_back({fmt(x), fmt(f(x))});
    }
  });
}

mink_status mink_table_moments(mink_context* ctx, int lmax, mink_table** out) {
  return emit(ctx, out, [&](mink_table& t) {
    int L = lmax <= 0 ? ctx->cfg.lmax : lmax;
    const mink::PrecisionConfig defaults;
    std::optional<mink::MomentTable> own;
    if (L != defaults.lmax || ctx->cfg.digits != defaults.digits) own = mink::moment_tables(L, ctx->cfg.digits);
    const mink::MomentTable& m = own ? *own : mink::default_moments();
    t.header = {"L", "m", "M"};
    for (int l = 0; l <= L; ++l) t.rows.push_back({std::to_string(l), fmt(m.m_ext[l]), fmt(m.M_ext[l])});
  });
}

mink_status mink_table_spectrum(mink_context* ctx, int dim, mink_table** out) {
  return emit(ctx, out, [&](mink_table& t) {
    int N = dim <= 0 ? ctx->cfg.matrix_dim : dim;
    t.header = {"index", "lambda"};
    auto ev = mink::spectrum(N);
    for (std::size_t i = 0; i < ev.size(); ++i) t.rows.push_back({std::to_string(i + 1), fmt(ev[i])});
  });
}

mink_status mink_table_periodfn(mink_context* ctx, int index, double z0, double z1, double step,
                                mink_table** out) {
  return emit(ctx, out, [&](mink_table& t) {
    if (index < 0) throw mink::Error(mink::ErrorKind::domain, "eigen index must be >= 0");
    int n = grid_count(z0, z1, step);
    std::function<double(double)> f;
    std::optional<mink::EigenPair> pair;
    if (index == 0) {
      const auto& G = period_fn(*ctx);
      f = [&G](double z) { return G(z); };
    } else {
      pair = mink::eigenfunction(index, ctx->cfg);
      f = [&pair](double z) { return mink::G_lambda_eval(*pair, z); };
    }
    t.header = {"z", "value"};
    for (int k = 0; k < n; ++k) {
      double z = z0 + k * step;
      t.rows.push_back({fmt(z), fmt(f(z))});
    }
  });
}

mink_status mink_table_fourier(mink_context* ctx, int nmax, mink_table** out) {
  return emit(ctx, out, [&](mink_table& t) {
    if (nmax < 0) throw mink::Error(mink::ErrorKind::domain, "nmax must be >= 0");
    const auto& c = mink::fourier_table(nmax);
    t.header = {"n", "c_re", "c_im", "cstar_re", "cstar_im"};
    for (int n = 0; n <= nmax; ++n) {
      auto v = c[n], s = c.star(n);
      t.rows.push_back({std::to_string(n), fmt(v.real()), fmt(v.imag()), fmt(s.real()), fmt(s.imag())});
    }
  });
}

mink_status mink_table_zeta(mink_context* ctx, double t0, double t1, double step, mink_table** out) {
  return emit(ctx, out, [&](mink_table& t) {
    grid_count(t0, t1, step);
    t.header = {"t", "Z"};
    for (const auto& s : mink::sample_Z(t0, t1, step)) t.rows.push_back({fmt(s.t), fmt(s.Z)});
  });
}

mink_status mink_table_zeros(mink_context* ctx, double t0, double t1, double step, mink_table** out) {
  return emit(ctx, out, [&](mink_table& t) {
    grid_count(t0, t1, step);
    t.header = {"t_zero", "bracket_width", "Z_left", "Z_right"};
    for (const auto& z : mink::zero_scan(t0, t1, step))
      t.rows.push_back({fmt(z.t_zero), fmt(z.bracket_width), fmt(z.Z_left), fmt(z.Z_right)});
  });
}

size_t mink_table_rows(const mink_table* t) { return t ? t->rows.size() : 0; }

size_t mink_table_cols(const mink_table* t) { return t ? t->header.size() : 0; }

const char* mink_table_header(const mink_table* t, size_t col) {
  if (!t || col >= t->header.size()) return nullptr;
  return t->header[col].c_str();
}

const char* mink_table_cell(const mink_table* t, size_t row, size_t col) {
  if (!t || row >= t->rows.size() || col >= t->rows[row].size()) return nullptr;
  return t->rows[row][col].c_str();
}

const char* mink_table_csv(mink_table* t) {
  if (!t) return nullptr;
  if (t->csv.empty()) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t j = 0; j < cells.size(); ++j) {
        if (j) t->csv += ',';
        t->csv += cells[j];
      }
      t->csv += '\n';
    };
    line(t->header);
    for (const auto& r : t->rows) line(r);
  }
  return t->csv.c_str();
}

void mink_table_free(mink_table* t) { delete t; }

mink_status mink_verify(mink_context* ctx, const char* suite, const char** json, int* failed) {
  return guarded(ctx, [&] {
    auto& j = deref(json);
    auto& f = deref(failed);
    auto report = mink::run_verify(mink::parse_suite(need_text(suite)), ctx->cfg);
    ctx->text = report.to_json();
    f = report.failed();
    j = ctx->text.c_str();
  });
}

}  // extern "C"
