#include "jbmeans/algebra.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "jbmeans/errors.hpp"

namespace jbmeans {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

int triangle_size(int n) { return n * (n + 1) / 2; }

void require_order(int order, int min_order, const char* what) {
  if (order < min_order) {
    throw DomainError(std::string(what) + ": order must be >= " +
                      std::to_string(min_order));
  }
}

Octonion albert_offdiag(const Eigen::VectorXd& c, int slot) {
  Octonion o;
  for (int k = 0; k < 8; ++k) o[k] = c[3 + 8 * slot + k];
  return o;
}

// Index of (i, j), i < j, in the upper-triangle slots x01, x02, x12.
int albert_slot(int i, int j) { return i == 0 ? j - 1 : 2; }

}  // namespace

AlgebraDescriptor AlgebraDescriptor::real_symmetric(int n) {
  require_order(n, 1, "RealSymmetric");
  return {AlgebraKind::RealSymmetric, n};
}

AlgebraDescriptor AlgebraDescriptor::complex_hermitian(int n) {
  require_order(n, 1, "ComplexHermitian");
  return {AlgebraKind::ComplexHermitian, n};
}

AlgebraDescriptor AlgebraDescriptor::spin_factor(int d) {
  require_order(d, 1, "SpinFactor");
  return {AlgebraKind::SpinFactor, d};
}

AlgebraDescriptor AlgebraDescriptor::albert() {
  return {AlgebraKind::Albert, 3};
}

int AlgebraDescriptor::dimension() const {
  switch (kind_) {
    case AlgebraKind::RealSymmetric:
      return triangle_size(order_);
    case AlgebraKind::ComplexHermitian:
      return order_ * order_;
    case AlgebraKind::SpinFactor:
      return order_ + 1;
    case AlgebraKind::Albert:
      return 27;
  }
  return 0;
}

int AlgebraDescriptor::rank() const {
  switch (kind_) {
    case AlgebraKind::RealSymmetric:
    case AlgebraKind::ComplexHermitian:
      return order_;
    case AlgebraKind::SpinFactor:
      return 2;
    case AlgebraKind::Albert:
      return 3;
  }
  return 0;
}

std::string AlgebraDescriptor::name() const {
  switch (kind_) {
    case AlgebraKind::RealSymmetric:
      return "sym" + std::to_string(order_);
    case AlgebraKind::ComplexHermitian:
      return "herm" + std::to_string(order_);
    case AlgebraKind::SpinFactor:
      return "spin" + std::to_string(order_);
    case AlgebraKind::Albert:
      return "albert";
  }
  return {};
}

AlgebraDescriptor AlgebraDescriptor::parse(std::string_view text) {
  if (text == "albert") return albert();
  auto with_order = [&](std::string_view prefix) -> int {
    std::string_view rest = text.substr(prefix.size());
    int value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty()) {
      throw DomainError("cannot parse algebra '" + std::string(text) + "'");
    }
    return value;
  };
  if (text.starts_with("sym")) return real_symmetric(with_order("sym"));
  if (text.starts_with("herm")) return complex_hermitian(with_order("herm"));
  if (text.starts_with("spin")) return spin_factor(with_order("spin"));
  throw DomainError("unknown algebra '" + std::string(text) + "'");
}

std::string kind_name(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::RealSymmetric:
      return "real_symmetric";
    case AlgebraKind::ComplexHermitian:
      return "complex_hermitian";
    case AlgebraKind::SpinFactor:
      return "spin_factor";
    case AlgebraKind::Albert:
      return "albert";
  }
  return {};
}

AlgebraKind parse_kind_name(std::string_view name) {
  if (name == "real_symmetric") return AlgebraKind::RealSymmetric;
  if (name == "complex_hermitian") return AlgebraKind::ComplexHermitian;
  if (name == "spin_factor") return AlgebraKind::SpinFactor;
  if (name == "albert") return AlgebraKind::Albert;
  throw DomainError("unknown algebra kind '" + std::string(name) + "'");
}

Element::Element(AlgebraDescriptor descriptor, Eigen::VectorXd coords)
    : descriptor_(descriptor), coords_(std::move(coords)) {
  if (coords_.size() != descriptor_.dimension()) {
    throw DomainError("element of " + descriptor_.name() + " needs " +
                      std::to_string(descriptor_.dimension()) +
                      " coordinates, got " + std::to_string(coords_.size()));
  }
}

Element Element::zero(const AlgebraDescriptor& descriptor) {
  return Element(descriptor, Eigen::VectorXd::Zero(descriptor.dimension()));
}

Element Element::identity(const AlgebraDescriptor& descriptor) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(descriptor.dimension());
  switch (descriptor.kind()) {
    case AlgebraKind::RealSymmetric:
    case AlgebraKind::ComplexHermitian: {
      const int n = descriptor.order();
      int idx = 0;
      for (int i = 0; i < n; ++i) {
        c[idx] = 1.0;
        idx += n - i;
      }
      break;
    }
    case AlgebraKind::SpinFactor:
      c[0] = 1.0;
      break;
    case AlgebraKind::Albert:
      c[0] = c[1] = c[2] = 1.0;
      break;
  }
  return Element(descriptor, std::move(c));
}

Element& Element::operator+=(const Element& other) {
  require_same_algebra(*this, other, "+");
  coords_ += other.coords_;
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_algebra(*this, other, "-");
  coords_ -= other.coords_;
  return *this;
}

void require_same_algebra(const Element& a, const Element& b,
                          std::string_view op) {
  if (!(a.descriptor() == b.descriptor())) {
    throw DomainError(std::string(op) + ": operands live in " +
                      a.descriptor().name() + " and " + b.descriptor().name());
  }
}

Eigen::MatrixXd to_real_matrix(const Element& a) {
  if (a.descriptor().kind() != AlgebraKind::RealSymmetric) {
    throw DomainError("to_real_matrix: not a RealSymmetric element");
  }
  const int n = a.descriptor().order();
  Eigen::MatrixXd m(n, n);
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    m(i, i) = a.coord(idx++);
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = m(j, i) = a.coord(idx++) / kSqrt2;
    }
  }
  return m;
}

Element from_real_matrix(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  const auto desc = AlgebraDescriptor::real_symmetric(n);
  Eigen::VectorXd c(desc.dimension());
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    c[idx++] = m(i, i);
    for (int j = i + 1; j < n; ++j) c[idx++] = 0.5 * (m(i, j) + m(j, i)) * kSqrt2;
  }
  return Element(desc, std::move(c));
}

Eigen::MatrixXcd to_complex_matrix(const Element& a) {
  if (a.descriptor().kind() != AlgebraKind::ComplexHermitian) {
    throw DomainError("to_complex_matrix: not a ComplexHermitian element");
  }
  const int n = a.descriptor().order();
  Eigen::MatrixXcd m(n, n);
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    m(i, i) = a.coord(idx++);
    for (int j = i + 1; j < n; ++j) m(i, j) = a.coord(idx++) / kSqrt2;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      m(i, j).imag(a.coord(idx++) / kSqrt2);
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

Element from_complex_matrix(const Eigen::MatrixXcd& m) {
  const int n = static_cast<int>(m.rows());
  const auto desc = AlgebraDescriptor::complex_hermitian(n);
  Eigen::VectorXd c(desc.dimension());
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    c[idx++] = m(i, i).real();
    for (int j = i + 1; j < n; ++j) {
      c[idx++] = 0.5 * (m(i, j).real() + m(j, i).real()) * kSqrt2;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      c[idx++] = 0.5 * (m(i, j).imag() - m(j, i).imag()) * kSqrt2;
    }
  }
  return Element(desc, std::move(c));
}

Octonion AlbertMatrix::entry(int i, int j) const {
  if (i == j) return Octonion(diag[i]);
  if (i < j) return upper[albert_slot(i, j)];
  return oct_conj(upper[albert_slot(j, i)]);
}

AlbertMatrix to_albert_matrix(const Element& a) {
  if (a.descriptor().kind() != AlgebraKind::Albert) {
    throw DomainError("to_albert_matrix: not an Albert element");
  }
  AlbertMatrix m;
  for (int i = 0; i < 3; ++i) m.diag[i] = a.coord(i);
  for (int s = 0; s < 3; ++s) m.upper[s] = albert_offdiag(a.coords(), s);
  return m;
}

Element from_albert_matrix(const AlbertMatrix& m) {
  Eigen::VectorXd c(27);
  for (int i = 0; i < 3; ++i) c[i] = m.diag[i];
  for (int s = 0; s < 3; ++s) {
    for (int k = 0; k < 8; ++k) c[3 + 8 * s + k] = m.upper[s][k];
  }
  return Element(AlgebraDescriptor::albert(), std::move(c));
}

namespace {

Element albert_jordan(const Element& a, const Element& b) {
  const AlbertMatrix x = to_albert_matrix(a);
  const AlbertMatrix y = to_albert_matrix(b);
  // (XY + YX)_ij / 2 for the entries that determine a Hermitian result.
  auto sym_entry = [&](int i, int j) {
    Octonion s;
    for (int k = 0; k < 3; ++k) {
      s += x.entry(i, k) * y.entry(k, j);
      s += y.entry(i, k) * x.entry(k, j);
    }
    return s * 0.5;
  };
  AlbertMatrix z;
  for (int i = 0; i < 3; ++i) z.diag[i] = sym_entry(i, i).real();
  z.upper[0] = sym_entry(0, 1);
  z.upper[1] = sym_entry(0, 2);
  z.upper[2] = sym_entry(1, 2);
  return from_albert_matrix(z);
}

Element spin_jordan(const Element& a, const Element& b) {
  const Eigen::VectorXd& x = a.coords();
  const Eigen::VectorXd& y = b.coords();
  const int d = a.descriptor().order();
  Eigen::VectorXd z(d + 1);
  z[0] = x[0] * y[0] + x.tail(d).dot(y.tail(d));
  z.tail(d) = x[0] * y.tail(d) + y[0] * x.tail(d);
  return Element(a.descriptor(), std::move(z));
}

}  // namespace

Element jordan_product(const Element& a, const Element& b) {
  require_same_algebra(a, b, "jordan_product");
  switch (a.descriptor().kind()) {
    case AlgebraKind::RealSymmetric: {
      const Eigen::MatrixXd x = to_real_matrix(a);
      const Eigen::MatrixXd y = to_real_matrix(b);
      return from_real_matrix(0.5 * (x * y + y * x));
    }
    case AlgebraKind::ComplexHermitian: {
      const Eigen::MatrixXcd x = to_complex_matrix(a);
      const Eigen::MatrixXcd y = to_complex_matrix(b);
      return from_complex_matrix(0.5 * (x * y + y * x));
    }
    case AlgebraKind::SpinFactor:
      return spin_jordan(a, b);
    case AlgebraKind::Albert:
      return albert_jordan(a, b);
  }
  throw DomainError("jordan_product: unsupported kind");
}

Element jordan_square(const Element& a) { return jordan_product(a, a); }

Element jordan_power(const Element& a, int k) {
  if (k < 0) throw DomainError("jordan_power: negative exponent");
  Element result = Element::identity(a.descriptor());
  for (int i = 0; i < k; ++i) result = jordan_product(result, a);
  return result;
}

Element quadratic_map(const Element& a, const Element& b) {
  require_same_algebra(a, b, "quadratic_map");
  return 2.0 * jordan_product(jordan_product(a, b), a) -
         jordan_product(jordan_square(a), b);
}

Element associative_triple(const Element& a, const Element& b) {
  require_same_algebra(a, b, "associative_triple");
  switch (a.descriptor().kind()) {
    case AlgebraKind::RealSymmetric: {
      const Eigen::MatrixXd x = to_real_matrix(a);
      return from_real_matrix(x * to_real_matrix(b) * x);
    }
    case AlgebraKind::ComplexHermitian: {
      const Eigen::MatrixXcd x = to_complex_matrix(a);
      return from_complex_matrix(x * to_complex_matrix(b) * x);
    }
    default:
      throw DomainError("associative_triple: " + a.descriptor().name() +
                        " is not a special (matrix) algebra");
  }
}

double generic_trace(const Element& a) {
  const auto& desc = a.descriptor();
  switch (desc.kind()) {
    case AlgebraKind::RealSymmetric:
    case AlgebraKind::ComplexHermitian: {
      const int n = desc.order();
      double t = 0.0;
      int idx = 0;
      for (int i = 0; i < n; ++i) {
        t += a.coord(idx);
        idx += n - i;
      }
      return t;
    }
    case AlgebraKind::SpinFactor:
      return 2.0 * a.coord(0);
    case AlgebraKind::Albert:
      return a.coord(0) + a.coord(1) + a.coord(2);
  }
  return 0.0;
}

double trace_inner(const Element& a, const Element& b) {
  return generic_trace(jordan_product(a, b));
}

double albert_determinant(const Element& a) {
  const AlbertMatrix m = to_albert_matrix(a);
  const double d0 = m.diag[0], d1 = m.diag[1], d2 = m.diag[2];
  const Octonion& x01 = m.upper[0];
  const Octonion& x02 = m.upper[1];
  const Octonion& x12 = m.upper[2];
  const double re_triple = ((x01 * x12) * oct_conj(x02)).real();
  return d0 * d1 * d2 + 2.0 * re_triple - d0 * oct_norm_squared(x12) -
         d1 * oct_norm_squared(x02) - d2 * oct_norm_squared(x01);
}

}  // namespace jbmeans
