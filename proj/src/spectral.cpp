#include "jbmeans/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "jbmeans/errors.hpp"

namespace jbmeans {

namespace {

// Groups descending eigenvalues whose consecutive gaps are <= abs_tol.
std::vector<std::pair<int, int>> cluster_ranges(const std::vector<double>& desc,
                                                double abs_tol) {
  std::vector<std::pair<int, int>> ranges;
  int start = 0;
  for (int i = 1; i <= static_cast<int>(desc.size()); ++i) {
    if (i == static_cast<int>(desc.size()) || desc[i - 1] - desc[i] > abs_tol) {
      ranges.emplace_back(start, i);
      start = i;
    }
  }
  return ranges;
}

template <typename Matrix, typename FromMatrix>
SpectralDecomposition decompose_matrix(const Matrix& m, double cluster_tol,
                                       FromMatrix from_matrix) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  const int n = static_cast<int>(values.size());

  std::vector<double> desc(n);
  for (int i = 0; i < n; ++i) desc[i] = values[n - 1 - i];
  const double norm = std::max(std::abs(desc.front()), std::abs(desc.back()));

  SpectralDecomposition sd;
  for (auto [lo, hi] : cluster_ranges(desc, cluster_tol * norm)) {
    double sum = 0.0;
    Matrix projector = Matrix::Zero(n, n);
    for (int i = lo; i < hi; ++i) {
      sum += desc[i];
      const auto v = vectors.col(n - 1 - i);
      projector += v * v.adjoint();
    }
    sd.eigenvalues.push_back(sum / (hi - lo));
    sd.idempotents.push_back(from_matrix(projector));
    sd.multiplicities.push_back(hi - lo);
  }
  return sd;
}

SpectralDecomposition decompose_spin(const Element& a, double cluster_tol) {
  const int d = a.descriptor().order();
  const double t = a.coord(0);
  const Eigen::VectorXd u = a.coords().tail(d);
  const double r = u.norm();
  const double norm = std::abs(t) + r;

  SpectralDecomposition sd;
  if (2.0 * r <= cluster_tol * norm || r == 0.0) {
    sd.eigenvalues = {t};
    sd.idempotents = {Element::identity(a.descriptor())};
    sd.multiplicities = {2};
    return sd;
  }
  for (double sign : {1.0, -1.0}) {
    Eigen::VectorXd c(d + 1);
    c[0] = 0.5;
    c.tail(d) = (0.5 * sign / r) * u;
    sd.eigenvalues.push_back(t + sign * r);
    sd.idempotents.emplace_back(a.descriptor(), std::move(c));
    sd.multiplicities.push_back(1);
  }
  return sd;
}

// tr(X o X) for an Albert element, computed as a weighted sum of squares.
double albert_trace_square(const Eigen::VectorXd& c) {
  return c.head(3).squaredNorm() + 2.0 * c.tail(24).squaredNorm();
}

// The characteristic cubic gives the eigenvalues, but its roots lose half the
// digits when two eigenvalues nearly coincide. Only the best-separated root is
// taken from it; the remaining pair lives in a rank-2 (spin factor) Peirce
// subalgebra where it is resolved from a sum of squares.
SpectralDecomposition decompose_albert_scaled(const Element& a, double cluster_tol);

// Rescales by a power of two so the squared sums below neither overflow nor
// underflow; the idempotents are scale free.
SpectralDecomposition decompose_albert(const Element& a, double cluster_tol) {
  const double largest = a.coords().cwiseAbs().maxCoeff();
  if (largest == 0.0 || !std::isfinite(largest)) {
    return decompose_albert_scaled(a, cluster_tol);
  }
  const int exponent = std::ilogb(largest);
  SpectralDecomposition sd =
      decompose_albert_scaled(std::ldexp(1.0, -exponent) * a, cluster_tol);
  for (double& v : sd.eigenvalues) v = std::ldexp(v, exponent);
  return sd;
}

SpectralDecomposition decompose_albert_scaled(const Element& a, double cluster_tol) {
  const auto& desc = a.descriptor();
  const Element one = Element::identity(desc);
  const double center = generic_trace(a) / 3.0;
  const Element a0 = a - center * one;
  const double sumsq = albert_trace_square(a0.coords());

  SpectralDecomposition sd;
  auto single_cluster = [&] {
    sd.eigenvalues = {center};
    sd.idempotents = {one};
    sd.multiplicities = {3};
    return sd;
  };
  if (sumsq == 0.0) return single_cluster();

  // Trigonometric solution of the depressed cubic mu^3 - (sumsq/2) mu - N = 0.
  const double p = std::sqrt(sumsq / 6.0);
  const double half_det = albert_determinant(a0) / (2.0 * p * p * p);
  const double phi = std::acos(std::clamp(half_det, -1.0, 1.0)) / 3.0;
  const double mu1 = 2.0 * p * std::cos(phi);
  const double mu3 = 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  const double mu2 = -mu1 - mu3;

  const double norm = std::max(std::abs(center + mu1), std::abs(center + mu3));
  const double abs_tol = cluster_tol * norm;
  const double gap_hi = mu1 - mu2;
  const double gap_lo = mu2 - mu3;
  if (std::max(gap_hi, gap_lo) <= abs_tol) return single_cluster();

  const double mu_k = gap_hi >= gap_lo ? mu1 : mu3;
  // (A0 - mu_i)(A0 - mu_j) with mu_i + mu_j = -mu_k and
  // mu_i mu_j = mu_k^2 - sumsq / 2.
  const double pair_product = mu_k * mu_k - 0.5 * sumsq;
  const double denom = 3.0 * mu_k * mu_k - 0.5 * sumsq;
  Element e_k = (jordan_square(a0) + mu_k * a0 + pair_product * one) * (1.0 / denom);
  const double lambda_k = trace_inner(a0, e_k) / generic_trace(e_k);

  const Element rest = one - e_k;
  const Element b = a0 - lambda_k * e_k;
  const double t = 0.5 * generic_trace(b);
  const Element b0 = b - t * rest;
  const double half_gap = std::sqrt(0.5 * albert_trace_square(b0.coords()));

  struct Piece {
    double value;
    Element idempotent;
    int multiplicity;
  };
  std::vector<Piece> pieces;
  pieces.push_back({center + lambda_k, e_k, 1});
  if (2.0 * half_gap <= abs_tol) {
    pieces.push_back({center + t, rest, 2});
  } else {
    const Element scaled = b0 * (0.5 / half_gap);
    pieces.push_back({center + t + half_gap, 0.5 * rest + scaled, 1});
    pieces.push_back({center + t - half_gap, 0.5 * rest - scaled, 1});
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& x, const Piece& y) { return x.value > y.value; });
  for (auto& piece : pieces) {
    sd.eigenvalues.push_back(piece.value);
    sd.idempotents.push_back(std::move(piece.idempotent));
    sd.multiplicities.push_back(piece.multiplicity);
  }
  return sd;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

double SpectralDecomposition::norm() const {
  return std::max(std::abs(eigenvalues.front()), std::abs(eigenvalues.back()));
}

Element SpectralDecomposition::reconstruct() const {
  Element sum = Element::zero(idempotents.front().descriptor());
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    sum += eigenvalues[i] * idempotents[i];
  }
  return sum;
}

SpectralDecomposition spectral_decompose(const Element& a, double cluster_tol) {
  switch (a.descriptor().kind()) {
    case AlgebraKind::RealSymmetric:
      return decompose_matrix(to_real_matrix(a), cluster_tol,
                              [](const Eigen::MatrixXd& m) { return from_real_matrix(m); });
    case AlgebraKind::ComplexHermitian:
      return decompose_matrix(to_complex_matrix(a), cluster_tol,
                              [](const Eigen::MatrixXcd& m) { return from_complex_matrix(m); });
    case AlgebraKind::SpinFactor:
      return decompose_spin(a, cluster_tol);
    case AlgebraKind::Albert:
      return decompose_albert(a, cluster_tol);
  }
  throw DomainError("spectral_decompose: unsupported kind");
}

ScalarFunction ScalarFunction::power(double exponent) {
  const bool integral = exponent >= 0.0 && exponent == std::floor(exponent);
  return {Kind::Power, integral ? Domain::AllReals : Domain::Positive, exponent};
}

ScalarFunction ScalarFunction::log() { return {Kind::Log, Domain::Positive}; }

ScalarFunction ScalarFunction::inverse() {
  return {Kind::Inverse, Domain::Positive};
}

ScalarFunction ScalarFunction::sqrt() {
  return {Kind::Sqrt, Domain::NonNegative};
}

ScalarFunction ScalarFunction::affine(double a, double b) {
  return {Kind::Affine, Domain::AllReals, a, b};
}

ScalarFunction ScalarFunction::harmonic_profile(double weight) {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw DomainError("harmonic_profile: weight must lie in [0, 1]");
  }
  return {Kind::HarmonicProfile, Domain::Positive, weight};
}

ScalarFunction ScalarFunction::custom(std::string name,
                                      std::function<double(double)> fn,
                                      Domain domain) {
  ScalarFunction f(Kind::Custom, domain);
  f.custom_name_ = std::move(name);
  f.custom_ = std::move(fn);
  return f;
}

double ScalarFunction::operator()(double x) const {
  switch (kind_) {
    case Kind::Power:
      if (params_[0] == 0.0) return 1.0;
      if (params_[0] == 1.0) return x;
      return std::pow(x, params_[0]);
    case Kind::Log:
      return std::log(x);
    case Kind::Inverse:
      return 1.0 / x;
    case Kind::Sqrt:
      return std::sqrt(x);
    case Kind::Affine:
      return params_[0] + params_[1] * x;
    case Kind::HarmonicProfile:
      return x / ((1.0 - params_[0]) * x + params_[0]);
    case Kind::Custom:
      return custom_(x);
  }
  return 0.0;
}

std::string ScalarFunction::name() const {
  switch (kind_) {
    case Kind::Power:
      return "power(" + format_double(params_[0]) + ")";
    case Kind::Log:
      return "log";
    case Kind::Inverse:
      return "inverse";
    case Kind::Sqrt:
      return "sqrt";
    case Kind::Affine:
      return "affine(" + format_double(params_[0]) + "," + format_double(params_[1]) + ")";
    case Kind::HarmonicProfile:
      return "harmonic_profile(" + format_double(params_[0]) + ")";
    case Kind::Custom:
      return custom_name_;
  }
  return {};
}

Element apply_function(const SpectralDecomposition& sd, const ScalarFunction& f) {
  const double floor_tol = kSingularSpectrumTol * sd.norm();
  Element result = Element::zero(sd.idempotents.front().descriptor());
  for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
    double x = sd.eigenvalues[i];
    switch (f.domain()) {
      case ScalarFunction::Domain::AllReals:
        break;
      case ScalarFunction::Domain::Positive:
        if (!(x >= floor_tol) || x <= 0.0) {
          throw SpectrumDomainError(
              f.name() + " needs a strictly positive spectrum; found eigenvalue " +
                  format_double(x),
              x);
        }
        break;
      case ScalarFunction::Domain::NonNegative:
        if (!(x >= -floor_tol)) {
          throw SpectrumDomainError(
              f.name() + " needs a non-negative spectrum; found eigenvalue " +
                  format_double(x),
              x);
        }
        x = std::max(x, 0.0);
        break;
    }
    result += f(x) * sd.idempotents[i];
  }
  return result;
}

Element apply_function(const Element& a, const ScalarFunction& f,
                       double cluster_tol) {
  return apply_function(spectral_decompose(a, cluster_tol), f);
}

Element inverse(const Element& a) {
  return apply_function(a, ScalarFunction::inverse());
}

Element jordan_inverse(const Element& a) {
  const SpectralDecomposition sd = spectral_decompose(a);
  const double floor_tol = kSingularSpectrumTol * sd.norm();
  Element result = Element::zero(a.descriptor());
  for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
    const double x = sd.eigenvalues[i];
    if (!(std::abs(x) >= floor_tol) || x == 0.0) {
      throw SpectrumDomainError(
          "jordan_inverse: element is singular; found eigenvalue " + format_double(x), x);
    }
    result += (1.0 / x) * sd.idempotents[i];
  }
  return result;
}

double spectral_norm(const Element& a) { return spectral_decompose(a).norm(); }

double min_eigenvalue(const Element& a) {
  return spectral_decompose(a).min_eigenvalue();
}

bool is_positive(const Element& a, double tol) {
  const SpectralDecomposition sd = spectral_decompose(a);
  return sd.min_eigenvalue() >= -tol * std::max(1.0, sd.norm());
}

double LoewnerReport::margin() const {
  return scale > 0.0 ? min_eig_of_difference / scale : min_eig_of_difference;
}

LoewnerReport loewner_leq(const Element& a, const Element& b, double tol) {
  require_same_algebra(a, b, "loewner_leq");
  LoewnerReport report;
  report.min_eig_of_difference = min_eigenvalue(b - a);
  report.scale = spectral_norm(a) + spectral_norm(b);
  report.tolerance = tol;
  if (report.min_eig_of_difference >= 0.0) {
    report.verdict = LoewnerVerdict::Holds;
  } else if (report.min_eig_of_difference >= -tol * report.scale) {
    report.verdict = LoewnerVerdict::Marginal;
  } else {
    report.verdict = LoewnerVerdict::Fails;
  }
  return report;
}

std::string verdict_name(LoewnerVerdict v) {
  switch (v) {
    case LoewnerVerdict::Holds:
      return "holds";
    case LoewnerVerdict::Marginal:
      return "marginal";
    case LoewnerVerdict::Fails:
      return "fails";
  }
  return {};
}

}  // namespace jbmeans
