#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minkowski.h"

namespace {

enum Exit { ok = 0, verify_failed = 1, usage = 2, domain = 3 };

struct Failure {
  int code;
  std::string message;
};

struct Context {
  mink_context* raw = nullptr;
  Context() {
    if (mink_context_create(&raw) != MINK_OK) throw Failure{domain, "cannot create context"};
  }
  ~Context() { mink_context_destroy(raw); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  void check(mink_status s) const {
    if (s == MINK_OK) return;
    std::string msg = std::string(mink_status_name(s)) + ": " + mink_last_error(raw);
    throw Failure{s == MINK_ERR_PARSE ? usage : domain, msg};
  }
};

struct TableHandle {
  mink_table* t = nullptr;
  ~TableHandle() { mink_table_free(t); }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Failure{domain, "cannot open " + path + " for writing"};
  f << text;
  if (!f) throw Failure{domain, "write to " + path + " failed"};
}

double parse_number(const std::string& s) {
  const char* b = s.c_str();
  char* end = nullptr;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    char *e1 = nullptr, *e2 = nullptr;
    double num = std::strtod(p.c_str(), &e1), den = std::strtod(q.c_str(), &e2);
    if (p.empty() || q.empty() || *e1 || *e2) throw Failure{usage, "not a number: '" + s + "'"};
    if (den == 0.0) throw Failure{domain, "zero denominator in '" + s + "'"};
    return num / den;
  }
  double v = std::strtod(b, &end);
  if (s.empty() || *end) throw Failure{usage, "not a number: '" + s + "'"};
  return v;
}

struct Range {
  double t0, t1, step;
};

Range parse_range(const std::string& s) {
  std::vector<double> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ':')) parts.push_back(parse_number(item));
  if (parts.size() != 3) throw Failure{usage, "range must be start:end:step, got '" + s + "'"};
  return {parts[0], parts[1], parts[2]};
}

// key -> (value, where it came from); later layers overwrite earlier ones
using Settings = std::map<std::string, std::pair<std::string, std::string>>;

// key=value lines, '#' starts a comment
void read_config_file(Settings& out, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Failure{usage, "cannot read config file " + path};
  auto trim = [](const std::string& s) {
    auto b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    std::string where = path + ":" + std::to_string(lineno);
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw Failure{usage, where + ": expected key=value"};
    out[trim(line.substr(0, eq))] = {trim(line.substr(eq + 1)), where};
  }
}

const char* const config_keys[] = {"digits", "depth", "dim", "coeff_dim", "lmax", "truncation_eps"};

void read_environment(Settings& out) {
  for (const char* key : config_keys) {
    std::string var = "MINK_" + std::string(key);
    for (auto& c : var) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (const char* v = std::getenv(var.c_str())) out[key] = {v, var};
  }
}

void apply_settings(Context& ctx, const Settings& settings) {
  for (const auto& [key, entry] : settings) {
    mink_status s = mink_config_set(ctx.raw, key.c_str(), entry.first.c_str());
    if (s != MINK_OK)
      throw Failure{s == MINK_ERR_PARSE ? usage : domain, entry.second + ": " + mink_last_error(ctx.raw)};
  }
}

void emit_table(Context& ctx, mink_status s, TableHandle& t, const std::string& out) {
  ctx.check(s);
  write_text(out, mink_table_csv(t.t));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minkowski question mark function toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_path;
  std::optional<int> digits, depth, dim, coeff_dim, lmax;
  std::optional<double> eps;
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--out,-o", out_path, "output file, stdout when omitted");
  app.add_option("--digits", digits, "working decimal digits of the extended solves");
  app.add_option("--depth", depth, "midpoint quadrature depth");
  app.add_option("--dim", dim, "collocation dimension");
  app.add_option("--coeff-dim", coeff_dim, "centred-basis truncation");
  app.add_option("--lmax", lmax, "moment table length");
  app.add_option("--eps", eps, "truncation epsilon");

  auto* eval = app.add_subcommand("eval", "evaluate ?(x), F(x) and Psi(x), or emit a grid");
  std::string eval_arg, grid_fn = "qm";
  bool exact = false;
  int grid = 0;
  double grid_from = 0.0, grid_to = 1.0;
  eval->add_option("x", eval_arg, "number or fraction p/q");
  eval->add_flag("--exact", exact, "exact ?(x) for rational x in [0,1]");
  eval->add_option("--grid", grid, "emit x,value on grid+1 points instead");
  eval->add_option("--fn", grid_fn, "grid function: qm, F or psi")->check(CLI::IsMember({"qm", "F", "psi"}));
  eval->add_option("--from", grid_from, "grid start");
  eval->add_option("--to", grid_to, "grid end");

  auto* tree = app.add_subcommand("tree", "Calkin-Wilf generation");
  int generation = 1;
  tree->add_option("--gen", generation, "generation index")->required();

  auto* quad = app.add_subcommand("quad", "integrate x^p against dF");
  double power = 1.0;
  quad->add_option("--power", power, "exponent p");

  auto* moments = app.add_subcommand("moments", "moment tables m_L and M_L");
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the weight-2 transfer operator");
  int eigen_index = 0;
  std::string ef_range = "-1:-0.2:0.01";
  spectrum->add_option("--eigenfunction", eigen_index, "emit z,G_lambda(z) for the i-th eigenvalue instead")
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--range", ef_range, "start:end:step in z for --eigenfunction");

  auto* periodfn = app.add_subcommand("periodfn", "period function G (index 0) or eigenfunction values");
  int index = 1;
  std::string pf_range = "-1:-0.2:0.01";
  periodfn->add_option("--index", index, "0 for G, i >= 1 for the i-th eigenfunction");
  periodfn->add_option("--range", pf_range, "start:end:step in z");

  auto* fourier = app.add_subcommand("fourier", "Fourier coefficients of Psi");
  int nmax = 64;
  fourier->add_option("--nmax", nmax, "largest index");

  auto* zeta = app.add_subcommand("zeta", "Z(t) on the critical line, or zeta_M at a point");
  std::string z_range = "1.5:90:0.05", zeros_path, at;
  zeta->add_option("--range", z_range, "start:end:step in t");
  zeta->add_option("--zeros", zeros_path, "write bracketed zeros as JSON");
  zeta->add_option("--at", at, "evaluate zeta_M at re or re,im instead");

  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  std::string suite = "core", json_path;
  verify->add_option("--suite", suite, "core or full")->check(CLI::IsMember({"core", "full"}));
  verify->add_option("--json", json_path, "write the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    Context ctx;
    Settings settings;
    if (!config_path.empty()) read_config_file(settings, config_path);
    read_environment(settings);
    auto flag = [&](const char* key, const char* name, const auto& v) {
      if (!v) return;
      std::ostringstream s;
      s.precision(17);
      s << *v;
      settings[key] = {s.str(), name};
    };
    flag("digits", "--digits", digits);
    flag("depth", "--depth", depth);
    flag("dim", "--dim", dim);
    flag("coeff_dim", "--coeff-dim", coeff_dim);
    flag("lmax", "--lmax", lmax);
    flag("truncation_eps", "--eps", eps);
    apply_settings(ctx, settings);

    TableHandle t;
    if (*eval) {
      if (grid > 0) {
        emit_table(ctx, mink_table_grid(ctx.raw, grid_fn.c_str(), grid_from, grid_to, grid, &t.t), t, out_path);
      } else {
        if (eval_arg.empty()) throw Failure{usage, "eval needs x or --grid"};
        std::string text;
        if (exact) {
          const char* r = nullptr;
          ctx.check(mink_qm_exact(ctx.raw, eval_arg.c_str(), &r));
          text = std::string(r) + "\n";
        } else {
          double x = parse_number(eval_arg), v = 0.0;
          if (!std::isfinite(x)) throw Failure{domain, "x must be finite"};
          text = "x=" + fmt(x) + "\n";
          if (x >= 0.0 && x <= 1.0) {
            ctx.check(mink_qm(ctx.raw, x, &v));
            text += "qm=" + fmt(v) + "\n";
          }
          ctx.check(mink_F(ctx.raw, x, &v));
          text += "F=" + fmt(v) + "\n";
          ctx.check(mink_psi(ctx.raw, x, &v));
          text += "psi=" + fmt(v) + "\n";
        }
        write_text(out_path, text);
      }
    } else if (*tree) {
      emit_table(ctx, mink_table_tree(ctx.raw, generation, &t.t), t, out_path);
    } else if (*quad) {
      double unit = 0.0, half = 0.0;
      ctx.check(mink_integrate_power(ctx.raw, power, depth.value_or(-1), &unit, &half));
      const char* r = nullptr;
      ctx.check(mink_config_get(ctx.raw, "depth", &r));
      write_text(out_path, "power,depth,unit,halfline\n" + fmt(power) + "," + r + "," + fmt(unit) + "," + fmt(half) + "\n");
    } else if (*moments) {
      emit_table(ctx, mink_table_moments(ctx.raw, 0, &t.t), t, out_path);
    } else if (*spectrum) {
      if (eigen_index > 0) {
        Range r = parse_range(ef_range);
        ctx.check(mink_table_periodfn(ctx.raw, eigen_index, r.t0, r.t1, r.step, &t.t));
        std::string text = "z,G_lambda(z)\n";
        for (size_t i = 0; i < mink_table_rows(t.t); ++i)
          text += std::string(mink_table_cell(t.t, i, 0)) + "," + mink_table_cell(t.t, i, 1) + "\n";
        write_text(out_path, text);
      } else {
        emit_table(ctx, mink_table_spectrum(ctx.raw, 0, &t.t), t, out_path);
      }
    } else if (*periodfn) {
      Range r = parse_range(pf_range);
      emit_table(ctx, mink_table_periodfn(ctx.raw, index, r.t0, r.t1, r.step, &t.t), t, out_path);
    } else if (*fourier) {
      emit_table(ctx, mink_table_fourier(ctx.raw, nmax, &t.t), t, out_path);
    } else if (*zeta) {
      if (!at.empty()) {
        auto comma = at.find(',');
        double re = parse_number(at.substr(0, comma));
        double im = comma == std::string::npos ? 0.0 : parse_number(at.substr(comma + 1));
        double vr = 0.0, vi = 0.0;
        ctx.check(mink_zeta(ctx.raw, re, im, &vr, &vi));
        write_text(out_path, "s_re,s_im,zeta_re,zeta_im\n" + fmt(re) + "," + fmt(im) + "," + fmt(vr) + "," + fmt(vi) + "\n");
      } else {
        Range r = parse_range(z_range);
        emit_table(ctx, mink_table_zeta(ctx.raw, r.t0, r.t1, r.step, &t.t), t, out_path);
        if (!zeros_path.empty()) {
          TableHandle z;
          ctx.check(mink_table_zeros(ctx.raw, r.t0, r.t1, r.step, &z.t));
          nlohmann::ordered_json doc;
          doc["range"] = {{"start", r.t0}, {"end", r.t1}, {"step", r.step}};
          doc["zeros"] = nlohmann::ordered_json::array();
          for (size_t i = 0; i < mink_table_rows(z.t); ++i) {
            nlohmann::ordered_json row;
            for (size_t j = 0; j < mink_table_cols(z.t); ++j)
              row[mink_table_header(z.t, j)] = std::strtod(mink_table_cell(z.t, i, j), nullptr);
            doc["zeros"].push_back(row);
          }
          write_text(zeros_path, doc.dump(2) + "\n");
        }
      }
    } else if (*verify) {
      const char* json = nullptr;
      int failed = 0;
      ctx.check(mink_verify(ctx.raw, suite.c_str(), &json, &failed));
      if (!json_path.empty()) write_text(json_path, json);
      auto doc = nlohmann::ordered_json::parse(json);
      for (const auto& c : doc["checks"])
        std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["id"].get<std::string>() << "\n";
      std::cout << (doc["checks"].size() - failed) << "/" << doc["checks"].size() << " checks passed\n";
      return failed == 0 ? ok : verify_failed;
    }
    return ok;
  } catch (const Failure& f) {
    std::cerr << "mink: " << f.message << "\n";
    return f.code;
  }
}
