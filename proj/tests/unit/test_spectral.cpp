#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "jbmeans/errors.hpp"
#include "support.hpp"

using namespace jbmeans;
using testing::max_coord_diff;
using testing::rel_residual;

namespace {

Element from_frame(const std::vector<Element>& frame, const std::vector<double>& values) {
  Element sum = Element::zero(frame.front().descriptor());
  for (std::size_t i = 0; i < frame.size(); ++i) sum += values[i] * frame[i];
  return sum;
}

void check_frame(const SpectralDecomposition& sd, double tol) {
  const auto& desc = sd.idempotents.front().descriptor();
  Element sum = Element::zero(desc);
  for (std::size_t i = 0; i < sd.idempotents.size(); ++i) {
    const Element& e = sd.idempotents[i];
    sum += e;
    CHECK(max_coord_diff(jordan_square(e), e) <= tol);
    CHECK(generic_trace(e) == doctest::Approx(sd.multiplicities[i]).epsilon(tol));
    for (std::size_t j = i + 1; j < sd.idempotents.size(); ++j) {
      CHECK(jordan_product(e, sd.idempotents[j]).coords().cwiseAbs().maxCoeff() <= tol);
    }
  }
  CHECK(max_coord_diff(sum, Element::identity(desc)) <= tol);
  for (std::size_t i = 1; i < sd.eigenvalues.size(); ++i) {
    CHECK(sd.eigenvalues[i - 1] > sd.eigenvalues[i]);
  }
}

}  // namespace

TEST_CASE("scalar multiple of the identity is one cluster") {
  const auto alb = AlgebraDescriptor::albert();
  const auto sd = spectral_decompose(Element::scalar(alb, 5.0));
  REQUIRE(sd.eigenvalues.size() == 1);
  CHECK(sd.eigenvalues[0] == 5.0);
  CHECK(sd.multiplicities[0] == 3);
  CHECK(max_coord_diff(sd.idempotents[0], Element::identity(alb)) == 0.0);
  for (const auto& d : testing::sample_kinds()) {
    const auto s = spectral_decompose(Element::identity(d));
    CHECK(s.eigenvalues.size() == 1);
    CHECK(s.multiplicities[0] == d.rank());
  }
}

TEST_CASE("spin factor closed form") {
  const auto spin3 = AlgebraDescriptor::spin_factor(3);
  Eigen::VectorXd c(4);
  c << 2, 1, 0, 0;
  const auto sd = spectral_decompose(Element(spin3, c));
  REQUIRE(sd.eigenvalues.size() == 2);
  CHECK(sd.eigenvalues[0] == 3.0);
  CHECK(sd.eigenvalues[1] == 1.0);
  Eigen::VectorXd e_plus(4), e_minus(4);
  e_plus << 0.5, 0.5, 0, 0;
  e_minus << 0.5, -0.5, 0, 0;
  CHECK(max_coord_diff(sd.idempotents[0], Element(spin3, e_plus)) == 0.0);
  CHECK(max_coord_diff(sd.idempotents[1], Element(spin3, e_minus)) == 0.0);
}

TEST_CASE("reconstruction and frame properties") {
  Rng rng(20);
  for (const auto& d : testing::sample_kinds()) {
    for (int t = 0; t < 50; ++t) {
      const Element a = random_element(d, rng);
      const auto sd = spectral_decompose(a);
      CAPTURE(d.name());
      CHECK(rel_residual(sd.reconstruct(), a) <= 1e-10);
      check_frame(sd, 1e-10);
    }
  }
}

TEST_CASE("Albert eigenvalues agree with a complex Hermitian eigensolver") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g;
  for (int t = 0; t < 100; ++t) {
    Eigen::Matrix3cd h;
    for (int i = 0; i < 3; ++i) {
      h(i, i) = g(rng);
      for (int j = i + 1; j < 3; ++j) {
        h(i, j) = {g(rng), g(rng)};
        h(j, i) = std::conj(h(i, j));
      }
    }
    const Eigen::Vector3d expected = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd>(h).eigenvalues();
    const auto sd = spectral_decompose(testing::complex_albert(h));
    REQUIRE(sd.eigenvalues.size() == 3);
    const double scale = expected.cwiseAbs().maxCoeff();
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(sd.eigenvalues[i] - expected[2 - i]) <= 1e-13 * scale);
    }
  }
}

TEST_CASE("Albert nearly repeated eigenvalues keep full accuracy") {
  Rng rng(22);
  const auto alb = AlgebraDescriptor::albert();
  for (double gap : {1e-3, 1e-6, 1e-7}) {
    for (int t = 0; t < 20; ++t) {
      const auto frame = random_frame(alb, rng);
      const std::vector<double> values{2.0, 1.0 + gap, 1.0};
      const Element a = from_frame(frame, values);
      const auto sd = spectral_decompose(a);
      REQUIRE(sd.eigenvalues.size() == 3);
      for (int i = 0; i < 3; ++i) CHECK(std::abs(sd.eigenvalues[i] - values[i]) <= 1e-13);
      CHECK(rel_residual(sd.reconstruct(), a) <= 1e-12);
    }
  }
  // Below the clustering tolerance the pair merges.
  const auto frame = random_frame(alb, rng);
  const auto sd = spectral_decompose(from_frame(frame, {2.0, 1.0 + 1e-12, 1.0}));
  REQUIRE(sd.eigenvalues.size() == 2);
  CHECK(sd.multiplicities[1] == 2);
  check_frame(sd, 1e-10);
}

TEST_CASE("large and tiny scales") {
  Rng rng(23);
  for (const auto& d : testing::sample_kinds()) {
    const Element a = random_positive(d, 0.5, 2.0, rng);
    for (double s : {1e-200, 1e200}) {
      const auto sd = spectral_decompose(s * a);
      CHECK(rel_residual(sd.reconstruct(), s * a, 0.0) <= 1e-12);
    }
  }
}

TEST_CASE("functional calculus") {
  Rng rng(24);
  for (const auto& d : testing::sample_kinds()) {
    const Element a = random_element(d, rng);
    CHECK(rel_residual(apply_function(a, ScalarFunction::power(1.0)), a) <= 1e-12);
    CHECK(rel_residual(apply_function(a, ScalarFunction::power(2.0)), jordan_square(a)) <= 1e-12);
  }
  CHECK(max_coord_diff(apply_function(testing::real_diag({2, 4}), ScalarFunction::inverse()),
                       testing::real_diag({0.5, 0.25})) == 0.0);
  const auto alb = AlgebraDescriptor::albert();
  for (int t = 0; t < 20; ++t) {
    const Element p = random_positive(alb, 0.1, 10.0, rng);
    CHECK(rel_residual(jordan_square(apply_function(p, ScalarFunction::sqrt())), p) <= 1e-10);
    CHECK(rel_residual(jordan_product(inverse(p), p), Element::identity(alb)) <= 1e-12);
    CHECK(rel_residual(apply_function(apply_function(p, ScalarFunction::log()),
                                      ScalarFunction::custom("exp", [](double x) {
                                        return std::exp(x);
                                      }, ScalarFunction::Domain::AllReals)),
                       p) <= 1e-12);
  }
}

TEST_CASE("domain violations name the eigenvalue") {
  const Element a = testing::real_diag({2.0, -3.0});
  try {
    apply_function(a, ScalarFunction::power(0.5));
    FAIL("expected SpectrumDomainError");
  } catch (const SpectrumDomainError& e) {
    CHECK(e.eigenvalue() == -3.0);
  }
  CHECK_THROWS_AS(apply_function(a, ScalarFunction::log()), SpectrumDomainError);
  CHECK_THROWS_AS(inverse(testing::real_diag({1.0, 0.0})), SpectrumDomainError);
  CHECK_NOTHROW(apply_function(a, ScalarFunction::power(3.0)));
  CHECK(max_coord_diff(jordan_inverse(testing::real_diag({2.0, -4.0})),
                       testing::real_diag({0.5, -0.25})) == 0.0);
  CHECK_THROWS_AS(jordan_inverse(testing::real_diag({1.0, 0.0})), SpectrumDomainError);
  Rng rng(27);
  for (const auto& d : testing::sample_kinds()) {
    const Element x = random_invertible(d, 0.5, 2.0, rng);
    const Element xi = jordan_inverse(x);
    // x o x^-1 = I and x^2 o x^-1 = x
    CHECK(rel_residual(jordan_product(x, xi), Element::identity(d)) <= 1e-12);
    CHECK(rel_residual(jordan_product(jordan_square(x), xi), x) <= 1e-12);
  }
}

TEST_CASE("positivity") {
  const auto alb = AlgebraDescriptor::albert();
  CHECK(is_positive(Element::identity(alb), 0.0));
  CHECK_FALSE(is_positive(-Element::identity(alb), 0.0));
  Rng rng(25);
  for (const auto& d : testing::sample_kinds()) {
    for (int t = 0; t < 20; ++t) {
      const Element c = random_element(d, rng);
      const Element p = random_positive(d, 0.1, 10.0, rng);
      CHECK(is_positive(quadratic_map(c, p), 1e-12));
    }
  }
}

TEST_CASE("Loewner comparison") {
  Rng rng(26);
  const Element a = random_positive(AlgebraDescriptor::albert(), 0.1, 10.0, rng);
  const auto same = loewner_leq(a, a, 1e-9);
  CHECK(same.verdict == LoewnerVerdict::Holds);
  CHECK(same.min_eig_of_difference == 0.0);
  CHECK(same.margin() == 0.0);

  const auto diag = loewner_leq(testing::real_diag({1, 1}), testing::real_diag({2, 3}), 1e-9);
  CHECK(diag.verdict == LoewnerVerdict::Holds);
  CHECK(diag.min_eig_of_difference == 1.0);
  CHECK(diag.holds());

  const auto tiny = loewner_leq(testing::real_diag({1, 1 + 1e-12}), testing::real_diag({1, 1}), 1e-9);
  CHECK(tiny.verdict == LoewnerVerdict::Marginal);
  CHECK(tiny.holds());
  const auto bad = loewner_leq(testing::real_diag({2, 1}), testing::real_diag({1, 1}), 1e-9);
  CHECK(bad.verdict == LoewnerVerdict::Fails);
  CHECK_FALSE(bad.holds());

  for (const auto& d : testing::sample_kinds()) {
    for (int t = 0; t < 20; ++t) {
      const Element x = random_positive(d, 0.1, 10.0, rng);
      const Element y = x + random_positive(d, 0.1, 10.0, rng);
      REQUIRE(loewner_leq(x, y, 1e-9).holds());
      CHECK(loewner_leq(apply_function(x, ScalarFunction::sqrt()),
                        apply_function(y, ScalarFunction::sqrt()), 1e-9)
                .holds());
    }
  }
}
