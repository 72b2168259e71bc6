#pragma once

#include <Eigen/Core>
#include <array>
#include <string>
#include <string_view>

#include "jbmeans/octonion.hpp"

namespace jbmeans {

enum class AlgebraKind { RealSymmetric, ComplexHermitian, SpinFactor, Albert };

/// Which Euclidean Jordan algebra an element lives in.
///
/// `order` is n for the matrix kinds, d for the spin factor R + R^d and 3 for
/// the Albert algebra.
class AlgebraDescriptor {
 public:
  static AlgebraDescriptor real_symmetric(int n);
  static AlgebraDescriptor complex_hermitian(int n);
  static AlgebraDescriptor spin_factor(int d);
  static AlgebraDescriptor albert();

  /// Parses the short names produced by `name()`: "sym3", "herm4", "spin5",
  /// "albert".
  static AlgebraDescriptor parse(std::string_view text);

  AlgebraKind kind() const { return kind_; }
  int order() const { return order_; }
  int dimension() const;
  int rank() const;
  /// True for the matrix kinds, where {ABA} = ABA literally.
  bool is_special() const {
    return kind_ == AlgebraKind::RealSymmetric ||
           kind_ == AlgebraKind::ComplexHermitian;
  }
  std::string name() const;

  friend bool operator==(const AlgebraDescriptor&,
                         const AlgebraDescriptor&) = default;

 private:
  AlgebraDescriptor(AlgebraKind kind, int order) : kind_(kind), order_(order) {}

  AlgebraKind kind_;
  int order_;
};

std::string kind_name(AlgebraKind kind);
AlgebraKind parse_kind_name(std::string_view name);

/// An element of a Euclidean Jordan algebra, stored as coordinates in a fixed
/// basis.
///
/// Bases:
///  - RealSymmetric(n): upper triangle, row-major; diagonal entries as is,
///    off-diagonal entries scaled by sqrt(2) (orthonormal for tr(XY)).
///  - ComplexHermitian(n): the n(n+1)/2 real-part coordinates as above, then
///    sqrt(2) * Im(a_ij) for i < j, row-major.
///  - SpinFactor(d): (s, u_1, ..., u_d).
///  - Albert: d0, d1, d2, then the octonions x01, x02, x12 (8 each) of the
///    upper triangle; the lower triangle is the conjugate.
class Element {
 public:
  Element(AlgebraDescriptor descriptor, Eigen::VectorXd coords);

  static Element zero(const AlgebraDescriptor& descriptor);
  static Element identity(const AlgebraDescriptor& descriptor);
  static Element scalar(const AlgebraDescriptor& descriptor, double value) {
    return identity(descriptor) * value;
  }

  const AlgebraDescriptor& descriptor() const { return descriptor_; }
  const Eigen::VectorXd& coords() const { return coords_; }
  double coord(int i) const { return coords_[i]; }
  int size() const { return static_cast<int>(coords_.size()); }

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(double s) {
    coords_ *= s;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= -1.0; }
  friend Element operator*(Element a, double s) { return a *= s; }
  friend Element operator*(double s, Element a) { return a *= s; }

 private:
  AlgebraDescriptor descriptor_;
  Eigen::VectorXd coords_;
};

/// Throws DomainError unless both elements share a descriptor.
void require_same_algebra(const Element& a, const Element& b,
                          std::string_view op);

/// Commutative Jordan product a o b.
Element jordan_product(const Element& a, const Element& b);
Element jordan_square(const Element& a);
/// a^k via repeated Jordan products (power associativity makes the grouping
/// irrelevant). k >= 0.
Element jordan_power(const Element& a, int k);

/// U_A(B) = {ABA} = 2 (A o B) o A - A^2 o B.
Element quadratic_map(const Element& a, const Element& b);

/// Literal matrix product A * B * A; only for the special (matrix) kinds.
Element associative_triple(const Element& a, const Element& b);

/// Generic trace: sum of eigenvalues counted with multiplicity.
double generic_trace(const Element& a);

/// Trace form tr(a o b).
double trace_inner(const Element& a, const Element& b);

// Matrix views of the special kinds.
Eigen::MatrixXd to_real_matrix(const Element& a);
Element from_real_matrix(const Eigen::MatrixXd& m);
Eigen::MatrixXcd to_complex_matrix(const Element& a);
Element from_complex_matrix(const Eigen::MatrixXcd& m);

/// 3x3 Hermitian octonion matrix with real diagonal.
struct AlbertMatrix {
  std::array<double, 3> diag{};
  /// Upper-triangle entries x01, x02, x12.
  std::array<Octonion, 3> upper{};

  Octonion entry(int i, int j) const;
};

AlbertMatrix to_albert_matrix(const Element& a);
Element from_albert_matrix(const AlbertMatrix& m);

/// Freudenthal determinant
///   d0 d1 d2 + 2 Re((x01 x12) conj(x02)) - d0|x12|^2 - d1|x02|^2 - d2|x01|^2.
double albert_determinant(const Element& a);

}  // namespace jbmeans
