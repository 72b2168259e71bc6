#include "jbmeans/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "jbmeans/errors.hpp"
#include "jbmeans/spectral.hpp"

namespace jbmeans {

namespace {

// Nodes stop where the distance to the nearer endpoint drops below this.
constexpr double kMinEndpointDistance = 1e-150;
constexpr int kMinLevels = 3;
constexpr int kGaussOrder = 10;
constexpr int kGaussBasePanels = 16;

template <typename V>
struct ValueOps;

template <>
struct ValueOps<double> {
  static double max_abs_diff(double a, double b) { return std::abs(a - b); }
  static std::vector<double> to_vector(double v) { return {v}; }
};

template <>
struct ValueOps<Eigen::VectorXd> {
  static double max_abs_diff(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return (a - b).lpNorm<Eigen::Infinity>();
  }
  static std::vector<double> to_vector(const Eigen::VectorXd& v) {
    return {v.data(), v.data() + v.size()};
  }
};

template <typename V>
struct Estimate {
  V value;
  double error = 0.0;
  int levels = 0;
  int evaluations = 0;
  bool converged = false;
};

// Double-exponential rule on (0, 1): s = (1 + tanh(pi/2 sinh t)) / 2. The
// distance a to the nearer endpoint is formed directly as 1 / (1 + e^{2u}),
// so both s and 1 - s keep full relative precision.
template <typename V, typename F, typename Tol>
Estimate<V> tanh_sinh(const F& f, V zero, const Tol& tolerance,
                      const QuadratureConfig& cfg) {
  const double u_max = 0.5 * std::log(1.0 / kMinEndpointDistance);
  const double t_max = std::asinh(u_max * 2.0 / std::numbers::pi);

  Estimate<V> est{zero};
  V acc = zero;
  auto add_pair = [&](double t) {
    const double u = 0.5 * std::numbers::pi * std::sinh(t);
    const double a = 1.0 / (1.0 + std::exp(2.0 * u));
    const double w = std::numbers::pi * std::cosh(t) * a * (1.0 - a);
    acc += w * f(a, 1.0 - a);
    acc += w * f(1.0 - a, a);
    est.evaluations += 2;
  };

  acc += 0.25 * std::numbers::pi * f(0.5, 0.5);
  est.evaluations = 1;
  for (int k = 1; k <= static_cast<int>(t_max); ++k) add_pair(k);
  V previous = acc;

  for (int level = 1; level <= cfg.max_refinement_levels; ++level) {
    const double h = std::ldexp(1.0, -level);
    for (int j = 1; j * h <= t_max; j += 2) add_pair(j * h);
    V current = h * acc;
    est.error = ValueOps<V>::max_abs_diff(current, previous);
    est.value = current;
    est.levels = level;
    if (level >= kMinLevels && est.error <= tolerance(current)) {
      est.converged = true;
      return est;
    }
    previous = std::move(current);
  }
  return est;
}

const std::array<std::array<double, kGaussOrder>, 2>& gauss_legendre_rule() {
  static const auto rule = [] {
    std::array<std::array<double, kGaussOrder>, 2> r{};
    const int n = kGaussOrder;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      r[0][i] = x;
      r[1][i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

// Composite Gauss-Legendre on panels graded geometrically (ratio 1/2) toward
// both endpoints; each level doubles the number of panels per side.
template <typename V, typename F, typename Tol>
Estimate<V> gauss_legendre_composite(const F& f, V zero, const Tol& tolerance,
                                     const QuadratureConfig& cfg) {
  const auto& rule = gauss_legendre_rule();
  Estimate<V> est{zero};
  V previous = zero;
  for (int level = 0; level <= cfg.max_refinement_levels; ++level) {
    const int panels = kGaussBasePanels << level;
    V acc = zero;
    for (int p = 0; p <= panels; ++p) {
      const double hi = std::ldexp(0.5, -p);
      const double lo = p == panels ? 0.0 : 0.5 * hi;
      const double half = 0.5 * (hi - lo);
      for (int i = 0; i < kGaussOrder; ++i) {
        const double near = lo + half * (1.0 + rule[0][i]);
        const double w = half * rule[1][i];
        acc += w * f(near, 1.0 - near);
        acc += w * f(1.0 - near, near);
        est.evaluations += 2;
      }
      if (hi <= kMinEndpointDistance) break;
    }
    if (level > 0) {
      est.error = ValueOps<V>::max_abs_diff(acc, previous);
      est.value = acc;
      est.levels = level;
      if (level >= kMinLevels - 1 && est.error <= tolerance(acc)) {
        est.converged = true;
        return est;
      }
    }
    previous = std::move(acc);
  }
  return est;
}

template <typename V, typename F, typename Tol>
Estimate<V> integrate(const F& f, V zero, const Tol& tolerance,
                      const QuadratureConfig& cfg) {
  cfg.validate();
  switch (cfg.scheme) {
    case QuadratureScheme::TanhSinh:
      return tanh_sinh<V>(f, std::move(zero), tolerance, cfg);
    case QuadratureScheme::GaussLegendreComposite:
      return gauss_legendre_composite<V>(f, std::move(zero), tolerance, cfg);
  }
  throw DomainError("unknown quadrature scheme");
}

QuadratureResult scalar_result(const Estimate<double>& est, const char* what) {
  if (!est.converged) {
    throw QuadratureError(std::string(what) + ": no convergence within the allowed levels",
                          {est.value}, est.error);
  }
  return {est.value, est.error, est.levels, est.evaluations};
}

QuadratureResult integrate_scalar(const UnitIntegrand& f, const QuadratureConfig& cfg,
                                  const char* what) {
  const auto tol = [&](double v) { return std::max(cfg.rel_tol * std::abs(v), cfg.abs_tol); };
  return scalar_result(integrate<double>(f, 0.0, tol, cfg), what);
}

void require_open_weight(double weight, const char* what) {
  if (!(weight > 0.0 && weight < 1.0)) {
    throw DomainError(std::string(what) + ": weight must lie in (0, 1)");
  }
}

template <typename F>
ElementQuadratureResult integrate_element(const F& f, const Element& a, const Element& b,
                                          double prefactor, const QuadratureConfig& cfg,
                                          const char* what) {
  const double scale = spectral_norm(a) + spectral_norm(b);
  const auto tol = [&](const Eigen::VectorXd&) {
    return std::max(cfg.rel_tol * scale, cfg.abs_tol);
  };
  const Estimate<Eigen::VectorXd> est = integrate<Eigen::VectorXd>(
      f, Eigen::VectorXd::Zero(a.size()), tol, cfg);
  Eigen::VectorXd value = prefactor * est.value;
  if (!est.converged) {
    throw QuadratureError(std::string(what) + ": no convergence within the allowed levels",
                          ValueOps<Eigen::VectorXd>::to_vector(value),
                          prefactor * est.error);
  }
  return {Element(a.descriptor(), std::move(value)), prefactor * est.error, est.levels,
          est.evaluations};
}

}  // namespace

std::string scheme_name(QuadratureScheme scheme) {
  return scheme == QuadratureScheme::TanhSinh ? "tanh_sinh" : "gauss_legendre_composite";
}

QuadratureScheme parse_scheme(const std::string& name) {
  if (name == "tanh_sinh") return QuadratureScheme::TanhSinh;
  if (name == "gauss_legendre_composite") return QuadratureScheme::GaussLegendreComposite;
  throw DomainError("unknown quadrature scheme '" + name + "'");
}

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw DomainError("QuadratureConfig: tolerances must be positive");
  }
  if (max_refinement_levels < 1) {
    throw DomainError("QuadratureConfig: max_refinement_levels must be >= 1");
  }
  if (!(tail_cutoff_growth > 1.0)) {
    throw DomainError("QuadratureConfig: tail_cutoff_growth must exceed 1");
  }
}

QuadratureResult integrate_unit(const UnitIntegrand& f, const QuadratureConfig& cfg) {
  return integrate_scalar(f, cfg, "integrate_unit");
}

QuadratureResult integrate_interval(const std::function<double(double)>& f, double a,
                                    double b, const QuadratureConfig& cfg) {
  const double width = b - a;
  QuadratureResult r = integrate_scalar(
      [&](double s, double c) { return f(s <= 0.5 ? a + width * s : b - width * c); },
      cfg, "integrate_interval");
  r.value *= width;
  r.error_estimate *= std::abs(width);
  return r;
}

QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     const QuadratureConfig& cfg) {
  return integrate_scalar(
      [&](double s, double c) { return f(s / c) / (c * c); }, cfg, "integrate_half_line");
}

QuadratureResult integrate_tail(const std::function<double(double)>& f, double cutoff,
                                const QuadratureConfig& cfg) {
  // alpha = N / s, d alpha = (alpha / s) ds.
  return integrate_scalar(
      [&](double s, double) {
        const double alpha = cutoff / s;
        return (f(alpha) * alpha) / s;
      },
      cfg, "integrate_tail");
}

QuadratureResult power_integral_scalar(double x, double weight,
                                       const QuadratureConfig& cfg) {
  if (!(x > 0.0)) throw DomainError("power_integral_scalar: x must be positive");
  require_open_weight(weight, "power_integral_scalar");
  QuadratureResult r = integrate_half_line(
      [&](double t) { return std::pow(t, weight - 1.0) / (1.0 + t / x); }, cfg);
  const double prefactor = std::sin(weight * std::numbers::pi) / std::numbers::pi;
  r.value *= prefactor;
  r.error_estimate *= prefactor;
  return r;
}

QuadratureResult log_integral_scalar(double x, const QuadratureConfig& cfg) {
  if (!(x > 0.0)) throw DomainError("log_integral_scalar: x must be positive");
  const FunctionFamily g = FunctionFamily::log_kernel();
  return integrate_half_line([&](double alpha) { return g(alpha, x); }, cfg);
}

ElementQuadratureResult geometric_mean_integral(const Element& a, const Element& b,
                                                double weight,
                                                const QuadratureConfig& cfg) {
  require_same_algebra(a, b, "geometric_mean_integral");
  require_open_weight(weight, "geometric_mean_integral");
  const Element a_inv = inverse(a);
  const Element b_inv = inverse(b);
  auto integrand = [&](double s, double c) -> Eigen::VectorXd {
    const double t = s / c;
    const Element resolvent = inverse(a_inv + t * b_inv);
    return (std::pow(t, weight - 1.0) / (c * c)) * resolvent.coords();
  };
  return integrate_element(integrand, a, b,
                           std::sin(weight * std::numbers::pi) / std::numbers::pi, cfg,
                           "geometric_mean_integral");
}

ElementQuadratureResult geometric_mean_harmonic_integral(const Element& a,
                                                         const Element& b,
                                                         double weight,
                                                         const QuadratureConfig& cfg) {
  require_same_algebra(a, b, "geometric_mean_harmonic_integral");
  require_open_weight(weight, "geometric_mean_harmonic_integral");
  const Element a_inv = inverse(a);
  const Element b_inv = inverse(b);
  auto integrand = [&](double s, double c) -> Eigen::VectorXd {
    // A !_s B with the complementary weight c = 1 - s.
    const Element harmonic = inverse(c * a_inv + s * b_inv);
    return (std::pow(s, weight - 1.0) * std::pow(c, -weight)) * harmonic.coords();
  };
  return integrate_element(integrand, a, b,
                           std::sin(weight * std::numbers::pi) / std::numbers::pi, cfg,
                           "geometric_mean_harmonic_integral");
}

FunctionFamily FunctionFamily::power_kernel(double weight) {
  require_open_weight(weight, "power_kernel");
  return {Kind::PowerKernel, weight};
}

FunctionFamily FunctionFamily::log_kernel() { return {Kind::LogKernel, 0.0}; }

double FunctionFamily::operator()(double alpha, double x) const {
  if (kind == Kind::PowerKernel) {
    return x * std::pow(alpha, -weight) / (1.0 + alpha * x);
  }
  // (alpha + 1)^-1 - (alpha + x)^-1 over a common denominator.
  return (x - 1.0) / ((alpha + 1.0) * (alpha + x));
}

std::string FunctionFamily::name() const {
  return kind == Kind::PowerKernel ? "power" : "log";
}

bool UniformityReport::decays_monotonically() const {
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const auto& prev = levels[i - 1];
    const auto& cur = levels[i];
    if (!(cur.head < prev.head) || !(cur.tail < prev.tail) ||
        !(cur.mesh_discrepancy < prev.mesh_discrepancy)) {
      return false;
    }
  }
  return true;
}

UniformityReport uniformity_probe(const FunctionFamily& family, double bound,
                                  const QuadratureConfig& cfg, int levels) {
  if (!(bound > 0.0)) throw DomainError("uniformity_probe: M must be positive");
  if (levels < 1) throw DomainError("uniformity_probe: levels must be >= 1");
  cfg.validate();

  constexpr int kGridPoints = 32;
  constexpr int kBasePanels = 64;

  UniformityReport report;
  report.family = family.name();
  report.weight = family.weight;
  report.bound = bound;
  report.interior_low = 0.5;
  report.interior_high = 2.0;
  // x = 0 is left out: the log kernel is not integrable there.
  for (int j = 1; j <= kGridPoints; ++j) report.grid.push_back(bound * j / kGridPoints);

  auto midpoint_sum = [&](double x, int panels) {
    const double width = (report.interior_high - report.interior_low) / panels;
    double sum = 0.0;
    for (int k = 0; k < panels; ++k) {
      sum += family(report.interior_low + (k + 0.5) * width, x);
    }
    return sum * width;
  };

  for (int level = 1; level <= levels; ++level) {
    UniformityLevel row;
    row.level = level;
    row.cutoff = std::pow(cfg.tail_cutoff_growth, level);
    row.delta = 1.0 / row.cutoff;
    row.mesh_panels = kBasePanels << (level - 1);
    for (double x : report.grid) {
      auto f = [&](double alpha) { return family(alpha, x); };
      row.head = std::max(row.head,
                          std::abs(integrate_interval(f, 0.0, row.delta, cfg).value));
      row.tail = std::max(row.tail, std::abs(integrate_tail(f, row.cutoff, cfg).value));
      row.mesh_discrepancy =
          std::max(row.mesh_discrepancy,
                   std::abs(midpoint_sum(x, row.mesh_panels) -
                            midpoint_sum(x, 2 * row.mesh_panels)));
    }
    report.levels.push_back(row);
  }
  return report;
}

}  // namespace jbmeans
