#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "jbmeans/algebra.hpp"
#include "jbmeans/random.hpp"
#include "jbmeans/spectral.hpp"

namespace testing {

using jbmeans::AlgebraDescriptor;
using jbmeans::Element;

// ||x - y|| / max(||x||, ||y||, floor), spectral norms.
inline double rel_residual(const Element& x, const Element& y, double floor = 1e-300) {
  const double scale =
      std::max({jbmeans::spectral_norm(x), jbmeans::spectral_norm(y), floor});
  return jbmeans::spectral_norm(x - y) / scale;
}

inline double max_coord_diff(const Element& x, const Element& y) {
  return (x.coords() - y.coords()).cwiseAbs().maxCoeff();
}

inline Element real_diag(std::initializer_list<double> d) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(d.size()));
  int i = 0;
  for (double x : d) v[i++] = x;
  Eigen::MatrixXd m = v.asDiagonal();
  return jbmeans::from_real_matrix(m);
}

inline Element scalar(double x) {
  return Element::scalar(AlgebraDescriptor::real_symmetric(1), x);
}

// Quaternions as (w, x, y, z), Hamilton product.
using Quat = std::array<double, 4>;

inline Quat qmul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}
inline Quat qconj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }
inline Quat qsub(const Quat& a, const Quat& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline Quat qadd(const Quat& a, const Quat& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

// Octonion product straight from the doubling formula
// (a, b)(c, d) = (ac - conj(d) b, da + b conj(c)).
inline std::array<double, 8> doubling_product(const std::array<double, 8>& x,
                                              const std::array<double, 8>& y) {
  const Quat a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
  const Quat c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  const Quat lo = qsub(qmul(a, c), qmul(qconj(d), b));
  const Quat hi = qadd(qmul(d, a), qmul(b, qconj(c)));
  return {lo[0], lo[1], lo[2], lo[3], hi[0], hi[1], hi[2], hi[3]};
}

// 3x3 octonion matrix (full, not just the upper triangle).
using OctMatrix = std::array<std::array<std::array<double, 8>, 3>, 3>;

inline OctMatrix to_oct_matrix(const Element& a) {
  const auto m = jbmeans::to_albert_matrix(a);
  OctMatrix out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i][j] = m.entry(i, j).coords();
  }
  return out;
}

// (XY + YX) / 2 computed entrywise with the doubling product.
inline Element albert_product_oracle(const Element& x, const Element& y) {
  const OctMatrix X = to_oct_matrix(x), Y = to_oct_matrix(y);
  jbmeans::AlbertMatrix out;
  auto entry = [&](int i, int j) {
    std::array<double, 8> sum{};
    for (int k = 0; k < 3; ++k) {
      const auto p = doubling_product(X[i][k], Y[k][j]);
      const auto q = doubling_product(Y[i][k], X[k][j]);
      for (int c = 0; c < 8; ++c) sum[c] += 0.5 * (p[c] + q[c]);
    }
    return sum;
  };
  for (int i = 0; i < 3; ++i) out.diag[i] = entry(i, i)[0];
  out.upper[0] = jbmeans::Octonion(entry(0, 1));
  out.upper[1] = jbmeans::Octonion(entry(0, 2));
  out.upper[2] = jbmeans::Octonion(entry(1, 2));
  return jbmeans::from_albert_matrix(out);
}

// Albert element whose off-diagonal octonions lie in span{1, e1}; it is then
// a complex Hermitian matrix in disguise.
inline Element complex_albert(const Eigen::Matrix3cd& h) {
  jbmeans::AlbertMatrix m;
  for (int i = 0; i < 3; ++i) m.diag[i] = h(i, i).real();
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int k = 0; k < 3; ++k) {
    const auto z = h(pairs[k][0], pairs[k][1]);
    jbmeans::Octonion o;
    o[0] = z.real();
    o[1] = z.imag();
    m.upper[k] = o;
  }
  return jbmeans::from_albert_matrix(m);
}

inline std::vector<AlgebraDescriptor> sample_kinds() {
  return {AlgebraDescriptor::real_symmetric(3), AlgebraDescriptor::complex_hermitian(3),
          AlgebraDescriptor::spin_factor(4), AlgebraDescriptor::albert()};
}

}  // namespace testing
