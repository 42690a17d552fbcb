#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace mink {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
// Runtime-precision float used by the extended solves.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Complex = std::complex<double>;

enum class ErrorKind {
  domain,      // argument outside the operation's domain
  limit,       // configured size/depth limit exceeded
  pole,        // argument at a pole
  precision,   // working precision too small for the request
  convergence, // iteration or series failed to settle
  parse,       // malformed textual input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class PrecisionMode { standard, extended };

struct PrecisionConfig {
  PrecisionMode mode = PrecisionMode::standard;
  int digits = 60;            // extended solves
  int quadrature_depth = 20;  // F-midpoint rule depth
  int matrix_dim = 64;        // collocation dimension
  double truncation_eps = 1e-16;
  int coeff_dim = 100;        // centred-basis truncation for G and eigenfunctions
  int lmax = 200;             // moment table length

  void validate() const;
};

// Sets the process-wide default mpfr precision and restores it on exit.
class ScopedDigits {
 public:
  explicit ScopedDigits(int digits) : saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(digits));
  }
  ~ScopedDigits() { Real::default_precision(saved_); }
  ScopedDigits(const ScopedDigits&) = delete;
  ScopedDigits& operator=(const ScopedDigits&) = delete;

 private:
  unsigned saved_;
};

inline double to_double(const Real& x) { return x.convert_to<double>(); }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace mink
