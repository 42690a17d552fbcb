#include <string>

#include "minkowski/quadrature.hpp"
#include "minkowski/transfer.hpp"
#include "minkowski/types.hpp"

namespace mink {

void PrecisionConfig::validate() const {
  auto bad = [](ErrorKind k, const std::string& what) { throw Error(k, "config: " + what); };
  if (digits < 16) bad(ErrorKind::domain, "digits must be >= 16");
  if (digits > 2000) bad(ErrorKind::limit, "digits must be <= 2000");
  if (quadrature_depth < 0) bad(ErrorKind::domain, "quadrature depth must be >= 0");
  if (quadrature_depth > max_quadrature_depth) bad(ErrorKind::limit, "quadrature depth must be <= 26");
  if (matrix_dim < 16) bad(ErrorKind::domain, "matrix dimension must be >= 16");
  if (matrix_dim > max_matrix_dim) bad(ErrorKind::limit, "matrix dimension must be <= 256");
  if (!(truncation_eps > 0.0 && truncation_eps < 1e-3)) bad(ErrorKind::domain, "truncation eps must lie in (0, 1e-3)");
  if (coeff_dim < 20) bad(ErrorKind::domain, "coefficient dimension must be >= 20");
  if (coeff_dim > 400) bad(ErrorKind::limit, "coefficient dimension must be <= 400");
  if (lmax < 20) bad(ErrorKind::domain, "lmax must be >= 20");
  if (lmax > 1000) bad(ErrorKind::limit, "lmax must be <= 1000");
}

}  // namespace mink
