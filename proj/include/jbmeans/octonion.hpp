#pragma once

#include <array>
#include <cmath>

namespace jbmeans {

/// Real octonion c0 + c1 e1 + ... + c7 e7.
///
/// Multiplication follows the Cayley-Dickson doubling of the quaternions
/// (a, b)(c, d) = (ac - conj(d) b, da + b conj(c)), where (1, i, j, k) are
/// e0..e3 and e4 = (0, 1) is the doubling unit, e(4+m) = (0, e_m).
class Octonion {
 public:
  static constexpr int kDim = 8;

  constexpr Octonion() : c_{} {}
  constexpr explicit Octonion(double real) : c_{real, 0, 0, 0, 0, 0, 0, 0} {}
  constexpr explicit Octonion(const std::array<double, kDim>& coords)
      : c_(coords) {}

  static constexpr Octonion unit(int i) {
    Octonion e;
    e.c_[i] = 1.0;
    return e;
  }

  constexpr double operator[](int i) const { return c_[i]; }
  constexpr double& operator[](int i) { return c_[i]; }
  constexpr const std::array<double, kDim>& coords() const { return c_; }

  constexpr double real() const { return c_[0]; }

  Octonion& operator+=(const Octonion& o) {
    for (int i = 0; i < kDim; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Octonion& operator-=(const Octonion& o) {
    for (int i = 0; i < kDim; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Octonion& operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator-(Octonion a) { return a *= -1.0; }
  friend Octonion operator*(Octonion a, double s) { return a *= s; }
  friend Octonion operator*(double s, Octonion a) { return a *= s; }
  friend bool operator==(const Octonion&, const Octonion&) = default;

 private:
  std::array<double, kDim> c_;
};

struct BasisProduct {
  int index;
  int sign;
};

/// e_i * e_j = sign * e_index, generated from the doubling formula above.
inline constexpr std::array<std::array<BasisProduct, 8>, 8> kOctonionTable{{
    {{{0, +1}, {1, +1}, {2, +1}, {3, +1}, {4, +1}, {5, +1}, {6, +1}, {7, +1}}},
    {{{1, +1}, {0, -1}, {3, +1}, {2, -1}, {5, +1}, {4, -1}, {7, -1}, {6, +1}}},
    {{{2, +1}, {3, -1}, {0, -1}, {1, +1}, {6, +1}, {7, +1}, {4, -1}, {5, -1}}},
    {{{3, +1}, {2, +1}, {1, -1}, {0, -1}, {7, +1}, {6, -1}, {5, +1}, {4, -1}}},
    {{{4, +1}, {5, -1}, {6, -1}, {7, -1}, {0, -1}, {1, +1}, {2, +1}, {3, +1}}},
    {{{5, +1}, {4, +1}, {7, -1}, {6, +1}, {1, -1}, {0, -1}, {3, -1}, {2, +1}}},
    {{{6, +1}, {7, +1}, {4, +1}, {5, -1}, {2, -1}, {3, +1}, {0, -1}, {1, -1}}},
    {{{7, +1}, {6, -1}, {5, +1}, {4, +1}, {3, -1}, {2, -1}, {1, +1}, {0, -1}}},
}};

Octonion oct_mul(const Octonion& x, const Octonion& y);
Octonion oct_conj(const Octonion& x);
double oct_norm(const Octonion& x);
double oct_norm_squared(const Octonion& x);
/// Inverse by conjugation, conj(x) / |x|^2. Requires x != 0.
Octonion oct_inverse(const Octonion& x);

inline Octonion operator*(const Octonion& x, const Octonion& y) {
  return oct_mul(x, y);
}

}  // namespace jbmeans
