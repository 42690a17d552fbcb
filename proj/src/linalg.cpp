#include "linalg.hpp"

#include <numeric>
#include <utility>

namespace mink::detail {

ExtLU::ExtLU(ExtMatrix m) : lu_(std::move(m)), perm_(lu_.dim) {
  const int n = lu_.dim;
  std::iota(perm_.begin(), perm_.end(), 0);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    Real best = abs(lu_(c, c));
    for (int r = c + 1; r < n; ++r) {
      Real v = abs(lu_(r, c));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0) throw Error(ErrorKind::precision, "singular matrix in extended solve");
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(lu_(c, k), lu_(piv, k));
      std::swap(perm_[c], perm_[piv]);
    }
    const Real inv = 1 / lu_(c, c);
    for (int r = c + 1; r < n; ++r) {
      Real f = lu_(r, c) * inv;
      lu_(r, c) = f;
      if (f == 0) continue;
      for (int k = c + 1; k < n; ++k) lu_(r, k) -= f * lu_(c, k);
    }
  }
}

std::vector<Real> ExtLU::solve(std::vector<Real> b) const {
  const int n = lu_.dim;
  std::vector<Real> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[perm_[i]];
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < i; ++k) x[i] -= lu_(i, k) * x[k];
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) x[i] -= lu_(i, k) * x[k];
    x[i] /= lu_(i, i);
  }
  return x;
}

std::vector<Real> multiply(const ExtMatrix& m, const std::vector<Real>& v) {
  std::vector<Real> out(m.dim);
  for (int i = 0; i < m.dim; ++i) {
    Real s = 0;
    for (int k = 0; k < m.dim; ++k) s += m(i, k) * v[k];
    out[i] = s;
  }
  return out;
}

}  // namespace mink::detail
