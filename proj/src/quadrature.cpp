#include "minkowski/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "minkowski/chebyshev.hpp"

namespace mink {

namespace {

constexpr int cached_depth = 20;
constexpr std::size_t block_size = 1 << 16;

void check_depth(int r) {
  if (r < 0) throw Error(ErrorKind::domain, "quadrature depth must be >= 0");
  if (r > max_quadrature_depth)
    throw Error(ErrorKind::limit, "quadrature depth " + std::to_string(r) + " exceeds limit " + std::to_string(max_quadrature_depth));
}

struct NodeWriter {
  int depth;
  std::vector<double> buffer;
  const std::function<void(std::span<const double>)>* sink;

  void flush() {
    if (!buffer.empty()) (*sink)(buffer);
    buffer.clear();
  }

  // In-order mediants below the bracket (a/b, c/d).
  void walk(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d, int level) {
    std::uint64_t mn = a + c, md = b + d;
    if (level == depth) {
      buffer.push_back(static_cast<double>(mn) / static_cast<double>(md));
      if (buffer.size() == block_size) flush();
      return;
    }
    walk(a, b, mn, md, level + 1);
    walk(mn, md, c, d, level + 1);
  }
};

void generate_nodes(int r, const std::function<void(std::span<const double>)>& sink) {
  NodeWriter w{r, {}, &sink};
  w.buffer.reserve(block_size);
  w.walk(0, 1, 1, 1, 0);
  w.flush();
}

void report_bad_node(double x, double v) {
  std::ostringstream os;
  os.precision(17);
  os << "integrand not finite at node " << x << " (value " << v << ")";
  throw Error(ErrorKind::domain, os.str());
}

}  // namespace

QuadratureRule quadrature_rule(int r) {
  check_depth(r);
  if (r > 20) throw Error(ErrorKind::limit, "exact quadrature rule limited to depth 20");
  QuadratureRule rule;
  rule.depth = r;
  rule.weight = Rational(1, Integer(1) << (r + 1));
  auto pts = farey_level(r + 1, max_quadrature_depth + 1);
  for (std::size_t i = 1; i < pts.size(); i += 2) rule.nodes.push_back(pts[i]);
  return rule;
}

const std::vector<double>& quadrature_nodes(int r) {
  check_depth(r);
  if (r > cached_depth) throw Error(ErrorKind::limit, "node cache holds depths up to 20; stream deeper rules");
  static std::mutex mu;
  static std::map<int, std::vector<double>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  std::vector<double> nodes;
  nodes.reserve(std::size_t{1} << r);
  generate_nodes(r, [&](std::span<const double> blk) { nodes.insert(nodes.end(), blk.begin(), blk.end()); });
  return cache.emplace(r, std::move(nodes)).first->second;
}

void for_each_node_block(int r, const std::function<void(std::span<const double>)>& sink) {
  check_depth(r);
  if (r <= cached_depth) {
    const auto& nodes = quadrature_nodes(r);
    for (std::size_t i = 0; i < nodes.size(); i += block_size) {
      std::size_t n = std::min(block_size, nodes.size() - i);
      sink(std::span<const double>(nodes.data() + i, n));
    }
    return;
  }
  generate_nodes(r, sink);
}

double integrate_unit(const std::function<double(double)>& f, int r) {
  CompensatedSum sum;
  for_each_node_block(r, [&](std::span<const double> blk) {
    for (double x : blk) {
      double v = f(x);
      if (!std::isfinite(v)) report_bad_node(x, v);
      sum.add(v);
    }
  });
  return std::ldexp(sum.value(), -(r + 1));
}

Complex integrate_unit_complex(const std::function<Complex(double)>& f, int r) {
  CompensatedComplexSum sum;
  for_each_node_block(r, [&](std::span<const double> blk) {
    for (double x : blk) {
      Complex v = f(x);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) report_bad_node(x, std::abs(v));
      sum.add(v);
    }
  });
  Complex s = sum.value();
  return {std::ldexp(s.real(), -(r + 1)), std::ldexp(s.imag(), -(r + 1))};
}

double integrate_halfline(const std::function<double(double)>& g, int r) {
  return integrate_unit([&](double x) { return g(x) + g(1.0 / x); }, r);
}

int transfer_terms(double truncation_eps) {
  if (!(truncation_eps > 0.0 && truncation_eps < 1.0)) throw Error(ErrorKind::domain, "truncation_eps must lie in (0,1)");
  return static_cast<int>(std::ceil(-std::log2(truncation_eps))) + 4;
}

double integrate_unit_smoothed(const std::function<double(double)>& f, int r, double truncation_eps) {
  const int nmax = transfer_terms(truncation_eps);
  return integrate_unit(
      [&](double x) {
        double s = 0.0;
        double w = 1.0;
        for (int n = 1; n <= nmax; ++n) {
          w *= 0.5;
          s += w * f(1.0 / (x + n));
        }
        return s;
      },
      r);
}

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorKind::domain, "gauss_legendre needs n >= 1");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) J(k, k - 1) = J(k - 1, k) = k / std::sqrt(4.0 * k * k - 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  GaussLegendre g{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < n; ++i) {
    g.x[i] = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    g.w[i] = 2.0 * v * v;
  }
  return g;
}

TransferAverage transfer_average(const std::function<double(double)>& f, int iterations, int degree, double truncation_eps) {
  if (iterations < 0 || iterations > 60) throw Error(ErrorKind::limit, "transfer_average: iterations must lie in [0,60]");
  ChebGrid grid(degree + 1);
  const int n = grid.size();
  const int nmax = transfer_terms(truncation_eps);
  std::vector<double> v(n), next(n);
  for (int j = 0; j < n; ++j) v[j] = f(grid.points()[j]);
  double scale = 0.0;
  for (double t : v) scale = std::max(scale, std::abs(t));
  TransferAverage out;
  out.estimates.push_back(0.5 * grid.eval(v, 0.5));
  for (int it = 0; it < iterations; ++it) {
    double tail_weight = std::ldexp(1.0, -nmax);
    double at_zero = grid.eval(v, 0.0);
    for (int j = 0; j < n; ++j) {
      double x = grid.points()[j];
      double s = 0.0, w = 1.0;
      for (int k = 1; k <= nmax; ++k) {
        w *= 0.5;
        s += w * grid.eval(v, 1.0 / (x + k));
      }
      next[j] = s + tail_weight * at_zero;
    }
    v.swap(next);
    double mx = 0.0;
    for (double t : v) mx = std::max(mx, std::abs(t));
    if (!std::isfinite(mx) || mx > 1e6 * std::max(scale, 1e-300))
      throw Error(ErrorKind::convergence, "transfer_average: interpolated iterates grow; degree too low");
    out.estimates.push_back(0.5 * grid.eval(v, 0.5));
  }
  out.value = out.estimates.back();
  return out;
}

}  // namespace mink
