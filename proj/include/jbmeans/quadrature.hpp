#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jbmeans/algebra.hpp"

namespace jbmeans {

enum class QuadratureScheme { TanhSinh, GaussLegendreComposite };

std::string scheme_name(QuadratureScheme scheme);
QuadratureScheme parse_scheme(const std::string& name);

/// Accuracy controls shared by every integral in this module.
///
/// Refinement stops once two successive levels differ by at most
/// max(rel_tol * scale, abs_tol). `tail_cutoff_growth` is the factor by which
/// the tail cutoff N grows (and the head cutoff delta shrinks) per level of
/// the uniformity probe.
struct QuadratureConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-15;
  int max_refinement_levels = 12;
  double tail_cutoff_growth = 1e4;
  QuadratureScheme scheme = QuadratureScheme::TanhSinh;

  static QuadratureConfig scalar_defaults() { return {}; }
  static QuadratureConfig element_defaults() {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-6;
    return cfg;
  }

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int levels = 0;
  int evaluations = 0;
};

struct ElementQuadratureResult {
  Element value;
  double error_estimate = 0.0;
  int levels = 0;
  int evaluations = 0;
};

/// Integrand on (0, 1) receiving both s and 1 - s, each to full relative
/// precision, so endpoint singularities at either end can be evaluated
/// accurately.
using UnitIntegrand = std::function<double(double s, double one_minus_s)>;

QuadratureResult integrate_unit(const UnitIntegrand& f, const QuadratureConfig& cfg);
/// Integral over [a, b] by the affine map onto (0, 1).
QuadratureResult integrate_interval(const std::function<double(double)>& f, double a,
                                    double b, const QuadratureConfig& cfg);
/// Integral over [0, inf) through t = s / (1 - s).
QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     const QuadratureConfig& cfg);
/// Integral over [cutoff, inf) through alpha = cutoff / s.
QuadratureResult integrate_tail(const std::function<double(double)>& f, double cutoff,
                                const QuadratureConfig& cfg);

/// x^w = sin(w pi)/pi * int_0^inf t^(w-1) (1 + t/x)^-1 dt, 0 < w < 1, x > 0.
QuadratureResult power_integral_scalar(double x, double weight,
                                       const QuadratureConfig& cfg);

/// log x = int_0^inf [(a+1)^-1 - (a+x)^-1] da, x > 0.
QuadratureResult log_integral_scalar(double x, const QuadratureConfig& cfg);

/// A #_w B = sin(w pi)/pi * int_0^inf t^(w-1) (A^-1 + t B^-1)^-1 dt.
ElementQuadratureResult geometric_mean_integral(const Element& a, const Element& b,
                                                double weight,
                                                const QuadratureConfig& cfg);

/// A #_w B = sin(w pi)/pi * int_0^1 t^(w-1) (1-t)^-w (A !_t B) dt.
ElementQuadratureResult geometric_mean_harmonic_integral(const Element& a,
                                                         const Element& b,
                                                         double weight,
                                                         const QuadratureConfig& cfg);

/// Kernels whose alpha-integrals represent x^w and log x.
struct FunctionFamily {
  enum class Kind { PowerKernel, LogKernel };

  Kind kind = Kind::PowerKernel;
  double weight = 0.5;

  /// f_alpha(x) = (1 + alpha x)^-1 x alpha^-w, 0 < w < 1.
  static FunctionFamily power_kernel(double weight);
  /// g_alpha(x) = (alpha + 1)^-1 - (alpha + x)^-1.
  static FunctionFamily log_kernel();

  double operator()(double alpha, double x) const;
  std::string name() const;
};

struct UniformityLevel {
  int level = 0;
  double delta = 0.0;
  double cutoff = 0.0;
  int mesh_panels = 0;
  /// sup_x |int_0^delta f_alpha(x) d alpha|
  double head = 0.0;
  /// sup_x |int_N^inf f_alpha(x) d alpha|
  double tail = 0.0;
  /// sup_x of the gap between midpoint Riemann sums with mesh_panels and
  /// 2 * mesh_panels panels over the interior interval.
  double mesh_discrepancy = 0.0;
};

struct UniformityReport {
  std::string family;
  double weight = 0.0;
  double bound = 0.0;
  double interior_low = 0.0;
  double interior_high = 0.0;
  std::vector<double> grid;
  std::vector<UniformityLevel> levels;

  /// Every residual column strictly decreases level over level.
  bool decays_monotonically() const;
  const UniformityLevel& finest() const { return levels.back(); }
};

/// Numerical diagnostics for uniform Riemann integrability of a kernel family
/// on x in (0, M]: head, tail and mesh residuals over `levels` refinements.
UniformityReport uniformity_probe(const FunctionFamily& family, double bound,
                                  const QuadratureConfig& cfg, int levels = 4);

}  // namespace jbmeans
