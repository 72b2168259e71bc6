#include "doctest.h"
#include "jbmeans/errors.hpp"
#include "support.hpp"

using namespace jbmeans;
using testing::rel_residual;

namespace {

std::vector<AlgebraDescriptor> all_kinds() {
  std::vector<AlgebraDescriptor> kinds;
  for (int n = 1; n <= 5; ++n) kinds.push_back(AlgebraDescriptor::real_symmetric(n));
  for (int n = 1; n <= 4; ++n) kinds.push_back(AlgebraDescriptor::complex_hermitian(n));
  for (int d = 1; d <= 8; ++d) kinds.push_back(AlgebraDescriptor::spin_factor(d));
  kinds.push_back(AlgebraDescriptor::albert());
  return kinds;
}

// Independent product for every kind.
Element product_oracle(const Element& a, const Element& b) {
  const auto& desc = a.descriptor();
  switch (desc.kind()) {
    case AlgebraKind::RealSymmetric: {
      const Eigen::MatrixXd x = to_real_matrix(a), y = to_real_matrix(b);
      return from_real_matrix(0.5 * (x * y + y * x));
    }
    case AlgebraKind::ComplexHermitian: {
      const Eigen::MatrixXcd x = to_complex_matrix(a), y = to_complex_matrix(b);
      return from_complex_matrix(0.5 * (x * y + y * x));
    }
    case AlgebraKind::SpinFactor: {
      const int d = desc.order();
      const double s = a.coord(0), t = b.coord(0);
      const Eigen::VectorXd u = a.coords().tail(d), v = b.coords().tail(d);
      Eigen::VectorXd c(d + 1);
      c[0] = s * t + u.dot(v);
      c.tail(d) = s * v + t * u;
      return Element(desc, c);
    }
    case AlgebraKind::Albert:
      return testing::albert_product_oracle(a, b);
  }
  return a;
}

}  // namespace

TEST_CASE("dimensions and ranks") {
  CHECK(AlgebraDescriptor::real_symmetric(4).dimension() == 10);
  CHECK(AlgebraDescriptor::complex_hermitian(3).dimension() == 9);
  CHECK(AlgebraDescriptor::spin_factor(5).dimension() == 6);
  CHECK(AlgebraDescriptor::albert().dimension() == 27);
  CHECK(AlgebraDescriptor::real_symmetric(4).rank() == 4);
  CHECK(AlgebraDescriptor::spin_factor(5).rank() == 2);
  CHECK(AlgebraDescriptor::albert().rank() == 3);
  for (const auto& d : all_kinds()) {
    CHECK(AlgebraDescriptor::parse(d.name()) == d);
    CHECK(generic_trace(Element::identity(d)) == doctest::Approx(d.rank()));
  }
  CHECK_THROWS_AS(AlgebraDescriptor::parse("octonion7"), DomainError);
  CHECK_THROWS_AS(AlgebraDescriptor::real_symmetric(0), DomainError);
}

TEST_CASE("element construction validates") {
  CHECK_THROWS_AS(Element(AlgebraDescriptor::albert(), Eigen::VectorXd::Zero(26)), DomainError);
  const Element a = Element::identity(AlgebraDescriptor::real_symmetric(2));
  const Element b = Element::identity(AlgebraDescriptor::spin_factor(2));
  CHECK_THROWS_AS(jordan_product(a, b), DomainError);
  CHECK_THROWS_AS(a + b, DomainError);
}

TEST_CASE("identity is the unit") {
  Rng rng(10);
  for (const auto& d : all_kinds()) {
    const Element b = random_element(d, rng);
    CHECK(testing::max_coord_diff(jordan_product(Element::identity(d), b), b) <= 1e-15);
  }
}

TEST_CASE("commuting diagonals multiply entrywise") {
  const Element p = jordan_product(testing::real_diag({1, 2}), testing::real_diag({3, 4}));
  CHECK(testing::max_coord_diff(p, testing::real_diag({3, 8})) == 0.0);
}

TEST_CASE("product agrees with independent evaluation") {
  Rng rng(11);
  for (const auto& d : all_kinds()) {
    for (int t = 0; t < 20; ++t) {
      const Element a = random_element(d, rng), b = random_element(d, rng);
      CAPTURE(d.name());
      CHECK(testing::max_coord_diff(jordan_product(a, b), product_oracle(a, b)) <= 1e-13);
    }
  }
}

TEST_CASE("commutative, Jordan identity, power associative") {
  Rng rng(12);
  for (const auto& d : all_kinds()) {
    for (int t = 0; t < 50; ++t) {
      const Element a = random_element(d, rng), b = random_element(d, rng);
      CAPTURE(d.name());
      CHECK(testing::max_coord_diff(jordan_product(a, b), jordan_product(b, a)) <=
            1e-15 * (1 + spectral_norm(a) * spectral_norm(b)));
      const Element a2 = jordan_square(a);
      const double scale = std::pow(spectral_norm(a), 3) * spectral_norm(b);
      CHECK(spectral_norm(jordan_product(jordan_product(a2, b), a) -
                          jordan_product(a2, jordan_product(b, a))) <= 1e-12 * scale);
      const double s4 = std::pow(spectral_norm(a), 4);
      CHECK(spectral_norm(jordan_product(a2, a2) -
                          jordan_product(jordan_product(a2, a), a)) <= 1e-12 * s4);
      CHECK(rel_residual(jordan_power(a, 4), jordan_product(a2, a2)) <= 1e-12);
    }
  }
}

TEST_CASE("quadratic map") {
  Rng rng(13);
  for (const auto& d : all_kinds()) {
    const Element b = random_element(d, rng);
    CHECK(testing::max_coord_diff(quadratic_map(Element::identity(d), b), b) <= 1e-14);
  }
  const auto sym2 = AlgebraDescriptor::real_symmetric(2);
  for (int t = 0; t < 100; ++t) {
    const Element a = random_element(sym2, rng), b = random_element(sym2, rng);
    const Eigen::MatrixXd x = to_real_matrix(a), y = to_real_matrix(b);
    const Element expected = from_real_matrix(x * y * x);
    CHECK(spectral_norm(quadratic_map(a, b) - expected) <=
          1e-12 * spectral_norm(a) * spectral_norm(a) * spectral_norm(b));
  }
  // Positive B stays positive under U_A, in every kind.
  for (const auto& d : testing::sample_kinds()) {
    for (int t = 0; t < 50; ++t) {
      const Element a = random_element(d, rng);
      const Element p = random_positive(d, 0.1, 10.0, rng);
      const Element u = quadratic_map(a, p);
      CHECK(min_eigenvalue(u) >= -1e-12 * spectral_norm(u));
    }
  }
}

TEST_CASE("associative triple on matrix kinds") {
  const auto sym2 = AlgebraDescriptor::real_symmetric(2);
  const Element b = testing::real_diag({1.5, -2.0});
  CHECK(testing::max_coord_diff(associative_triple(Element::identity(sym2), b), b) == 0.0);
  CHECK(testing::max_coord_diff(
            associative_triple(testing::real_diag({2, 3}), testing::real_diag({1, 1})),
            testing::real_diag({4, 9})) == 0.0);
  Rng rng(14);
  for (const auto& d : {AlgebraDescriptor::real_symmetric(4), AlgebraDescriptor::complex_hermitian(3)}) {
    for (int t = 0; t < 100; ++t) {
      const Element x = random_element(d, rng), y = random_element(d, rng);
      CHECK(spectral_norm(quadratic_map(x, y) - associative_triple(x, y)) <=
            1e-12 * spectral_norm(x) * spectral_norm(x) * spectral_norm(y));
    }
  }
  const auto alb = AlgebraDescriptor::albert();
  CHECK_THROWS_AS(associative_triple(Element::identity(alb), Element::identity(alb)),
                  DomainError);
}

TEST_CASE("Albert determinant satisfies Cayley-Hamilton") {
  Rng rng(15);
  const auto alb = AlgebraDescriptor::albert();
  for (int t = 0; t < 100; ++t) {
    const Element a = random_element(alb, rng);
    const Element a2 = jordan_square(a);
    const Element a3 = jordan_product(a2, a);
    const double tr = generic_trace(a);
    const double s = 0.5 * (tr * tr - generic_trace(a2));
    const double n = albert_determinant(a);
    const Element ch = a3 - tr * a2 + s * a - n * Element::identity(alb);
    CHECK(spectral_norm(ch) <= 1e-12 * std::pow(spectral_norm(a), 3));
  }
  CHECK(albert_determinant(Element::identity(alb)) == 1.0);
}

TEST_CASE("matrix round trips") {
  Rng rng(16);
  const Element s = random_element(AlgebraDescriptor::real_symmetric(5), rng);
  CHECK(testing::max_coord_diff(from_real_matrix(to_real_matrix(s)), s) <= 1e-15);
  const Element h = random_element(AlgebraDescriptor::complex_hermitian(4), rng);
  CHECK(testing::max_coord_diff(from_complex_matrix(to_complex_matrix(h)), h) <= 1e-15);
  const Element o = random_element(AlgebraDescriptor::albert(), rng);
  CHECK(testing::max_coord_diff(from_albert_matrix(to_albert_matrix(o)), o) == 0.0);
  // The trace form is the Frobenius inner product.
  const Element s2 = random_element(AlgebraDescriptor::real_symmetric(5), rng);
  CHECK(trace_inner(s, s2) ==
        doctest::Approx((to_real_matrix(s) * to_real_matrix(s2)).trace()).epsilon(1e-13));
}

TEST_CASE("random positive generation") {
  for (const auto& d : testing::sample_kinds()) {
    CHECK(testing::max_coord_diff(random_positive(d, PositiveGenSpec{1.0, 1.0, 3}),
                                  Element::identity(d)) <= 1e-14);
    Rng rng(17);
    for (int t = 0; t < 50; ++t) {
      const Element p = random_positive(d, 0.5, 4.0, rng);
      CHECK(is_positive(p, 0.0));
      const auto sd = spectral_decompose(p);
      CHECK(sd.min_eigenvalue() >= 0.5 - 1e-10);
      CHECK(sd.max_eigenvalue() <= 4.0 + 1e-10);
    }
  }
  CHECK_THROWS_AS((PositiveGenSpec{2.0, 1.0, 0}.validate()), DomainError);
  CHECK_THROWS_AS((PositiveGenSpec{0.0, 1.0, 0}.validate()), DomainError);
}
