#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jbmeans/algebra.hpp"

namespace jbmeans {

/// Relative cluster tolerance: eigenvalues closer than this times ||A|| are
/// merged into one spectral value.
inline constexpr double kDefaultClusterTol = 1e-8;

/// Spectral values below this times ||A|| are treated as zero by functions
/// that need a strictly positive spectrum.
inline constexpr double kSingularSpectrumTol = 1e-13;

/// A = sum_i eigenvalues[i] * idempotents[i], eigenvalues strictly
/// descending, idempotents a complete orthogonal system.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<Element> idempotents;
  /// Rank of each idempotent (multiplicity of the eigenvalue).
  std::vector<int> multiplicities;

  double max_eigenvalue() const { return eigenvalues.front(); }
  double min_eigenvalue() const { return eigenvalues.back(); }
  /// Spectral norm max |lambda|, the JB norm.
  double norm() const;
  Element reconstruct() const;
};

SpectralDecomposition spectral_decompose(const Element& a,
                                         double cluster_tol = kDefaultClusterTol);

/// Real function applied to the spectrum of an element.
class ScalarFunction {
 public:
  enum class Kind { Power, Log, Inverse, Sqrt, Affine, HarmonicProfile, Custom };
  enum class Domain { AllReals, NonNegative, Positive };

  /// x^p. Non-negative integer exponents are defined on all of R, every
  /// other exponent needs a strictly positive spectrum.
  static ScalarFunction power(double exponent);
  static ScalarFunction log();
  static ScalarFunction inverse();
  static ScalarFunction sqrt();
  /// a + b x.
  static ScalarFunction affine(double a, double b);
  /// ((1 - w) + w / x)^-1.
  static ScalarFunction harmonic_profile(double weight);
  static ScalarFunction custom(std::string name, std::function<double(double)> fn,
                               Domain domain);

  double operator()(double x) const;

  Kind kind() const { return kind_; }
  Domain domain() const { return domain_; }
  double param(int i) const { return params_[i]; }
  std::string name() const;

 private:
  ScalarFunction(Kind kind, Domain domain, double p0 = 0.0, double p1 = 0.0)
      : kind_(kind), domain_(domain), params_{p0, p1} {}

  Kind kind_;
  Domain domain_;
  double params_[2];
  std::string custom_name_;
  std::function<double(double)> custom_;
};

/// f(A) = sum f(lambda_i) e_i. Throws SpectrumDomainError naming the first
/// eigenvalue outside the domain of f.
Element apply_function(const Element& a, const ScalarFunction& f,
                       double cluster_tol = kDefaultClusterTol);
Element apply_function(const SpectralDecomposition& sd, const ScalarFunction& f);

/// Inverse of a positive element (the Inverse function, positive domain).
Element inverse(const Element& a);
/// Inverse of any invertible element: sum lambda_i^-1 e_i, for spectra
/// bounded away from 0 on either side.
Element jordan_inverse(const Element& a);
double spectral_norm(const Element& a);
double min_eigenvalue(const Element& a);

/// Sp(A) within [-tol * max(1, ||A||), inf).
bool is_positive(const Element& a, double tol);

enum class LoewnerVerdict { Holds, Marginal, Fails };

/// Outcome of testing A <= B through the spectrum of B - A.
///
/// Holds: min eigenvalue >= 0. Marginal: negative, but within
/// tolerance * scale. Fails: below -tolerance * scale.
struct LoewnerReport {
  double min_eig_of_difference = 0.0;
  /// ||A|| + ||B||.
  double scale = 0.0;
  double tolerance = 0.0;
  LoewnerVerdict verdict = LoewnerVerdict::Holds;

  bool holds() const { return verdict != LoewnerVerdict::Fails; }
  /// min eigenvalue divided by the scale.
  double margin() const;
};

LoewnerReport loewner_leq(const Element& a, const Element& b, double tol);

std::string verdict_name(LoewnerVerdict v);

}  // namespace jbmeans
