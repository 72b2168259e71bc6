#include "jbmeans/octonion.hpp"

#include <algorithm>

#include "jbmeans/errors.hpp"

namespace jbmeans {

Octonion oct_mul(const Octonion& x, const Octonion& y) {
  Octonion z;
  for (int i = 0; i < Octonion::kDim; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < Octonion::kDim; ++j) {
      const BasisProduct p = kOctonionTable[i][j];
      z[p.index] += p.sign * x[i] * y[j];
    }
  }
  return z;
}

Octonion oct_conj(const Octonion& x) {
  Octonion z = -x;
  z[0] = x[0];
  return z;
}

double oct_norm_squared(const Octonion& x) {
  double s = 0.0;
  for (double v : x.coords()) s += v * v;
  return s;
}

double oct_norm(const Octonion& x) {
  double scale = 0.0;
  for (double v : x.coords()) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (double v : x.coords()) s += (v / scale) * (v / scale);
  return scale * std::sqrt(s);
}

Octonion oct_inverse(const Octonion& x) {
  const double n2 = oct_norm_squared(x);
  if (n2 == 0.0) throw DomainError("oct_inverse: zero octonion");
  return oct_conj(x) * (1.0 / n2);
}

}  // namespace jbmeans
