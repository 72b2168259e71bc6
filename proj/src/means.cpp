#include "jbmeans/means.hpp"

#include <cmath>
#include <numbers>

#include "jbmeans/errors.hpp"

namespace jbmeans {

namespace {

void require_weight(double w, const char* op) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw DomainError(std::string(op) + ": weight must lie in [0, 1]");
  }
}

}  // namespace

std::string mean_kind_name(MeanKind kind) {
  switch (kind) {
    case MeanKind::Harmonic:
      return "harmonic";
    case MeanKind::Geometric:
      return "geometric";
    case MeanKind::Arithmetic:
      return "arithmetic";
  }
  return {};
}

MeanKind parse_mean_kind(const std::string& name) {
  if (name == "harmonic") return MeanKind::Harmonic;
  if (name == "geometric") return MeanKind::Geometric;
  if (name == "arithmetic") return MeanKind::Arithmetic;
  throw DomainError("unknown mean '" + name + "'");
}

Element harmonic_mean(const Element& a, const Element& b, double weight) {
  require_same_algebra(a, b, "harmonic_mean");
  require_weight(weight, "harmonic_mean");
  const Element a_inv = inverse(a);
  const Element b_inv = inverse(b);
  if (weight == 0.0) return a;
  if (weight == 1.0) return b;
  return inverse((1.0 - weight) * a_inv + weight * b_inv);
}

Element geometric_mean(const Element& a, const Element& b, double weight) {
  require_same_algebra(a, b, "geometric_mean");
  require_weight(weight, "geometric_mean");
  const SpectralDecomposition sd_a = spectral_decompose(a);
  const Element a_inv_half = apply_function(sd_a, ScalarFunction::power(-0.5));
  if (weight == 0.0) {
    // Still insist that B is positive invertible.
    apply_function(b, ScalarFunction::inverse());
    return a;
  }
  if (weight == 1.0) {
    apply_function(b, ScalarFunction::inverse());
    return b;
  }
  const Element a_half = apply_function(sd_a, ScalarFunction::sqrt());
  const Element inner = quadratic_map(a_inv_half, b);
  return quadratic_map(a_half, apply_function(inner, ScalarFunction::power(weight)));
}

Element arithmetic_mean(const Element& a, const Element& b, double weight) {
  require_same_algebra(a, b, "arithmetic_mean");
  require_weight(weight, "arithmetic_mean");
  return (1.0 - weight) * a + weight * b;
}

Element mean(MeanKind kind, const Element& a, const Element& b, double weight) {
  switch (kind) {
    case MeanKind::Harmonic:
      return harmonic_mean(a, b, weight);
    case MeanKind::Geometric:
      return geometric_mean(a, b, weight);
    case MeanKind::Arithmetic:
      return arithmetic_mean(a, b, weight);
  }
  throw DomainError("mean: unsupported kind");
}

Element perspective(const PerspectiveSpec& spec, const Element& a, const Element& b) {
  require_same_algebra(a, b, "perspective");
  Element hb = Element::zero(b.descriptor());
  try {
    hb = apply_function(b, spec.h);
  } catch (const SpectrumDomainError& e) {
    throw SpectrumDomainError(
        std::string("perspective: spectrum of B outside the domain of h: ") + e.what(),
        e.eigenvalue());
  }
  const SpectralDecomposition sd_h = spectral_decompose(hb);
  if (!(sd_h.min_eigenvalue() > kSingularSpectrumTol * sd_h.norm())) {
    throw SpectrumDomainError("perspective: h(B) is not strictly positive",
                              sd_h.min_eigenvalue());
  }
  const Element h_half = apply_function(sd_h, ScalarFunction::sqrt());
  const Element h_inv_half = apply_function(sd_h, ScalarFunction::power(-0.5));
  const Element inner = quadratic_map(h_inv_half, a);
  Element f_inner = Element::zero(a.descriptor());
  try {
    f_inner = apply_function(inner, spec.f);
  } catch (const SpectrumDomainError& e) {
    throw SpectrumDomainError(
        std::string("perspective: spectrum of {h(B)^-1/2 A h(B)^-1/2} outside the "
                    "domain of f: ") + e.what(),
        e.eigenvalue());
  }
  return quadratic_map(h_half, f_inner);
}

double specht_ratio(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw DomainError("specht_ratio: argument must be positive and finite");
  }
  if (h == 1.0) return 1.0;
  // u = log(h^(1/(h-1))) = log(h) / (h - 1), evaluated stably near h = 1.
  const double u = std::log1p(h - 1.0) / (h - 1.0);
  return std::exp(u - 1.0) / u;
}

}  // namespace jbmeans
