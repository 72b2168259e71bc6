#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jbmeans/algebra.hpp"
#include "jbmeans/means.hpp"
#include "jbmeans/quadrature.hpp"
#include "jbmeans/random.hpp"

namespace jbmeans {

enum class TrialVerdict { Pass, Fail, Skipped };

std::string trial_verdict_name(TrialVerdict v);

/// One inequality or identity evaluated on one set of inputs.
///
/// Each margin is the least eigenvalue of (right side - left side) of one
/// asserted order relation, divided by ||left|| + ||right||. The trial passes
/// iff every margin is >= -tolerance. Identities contribute two margins, one
/// per direction.
struct TrialRecord {
  explicit TrialRecord(std::string id, AlgebraDescriptor desc, double w = 0.0)
      : check_id(std::move(id)), descriptor(desc), weight(w) {}

  std::string check_id;
  AlgebraDescriptor descriptor;
  std::uint64_t seed = 0;
  double weight = 0.0;
  std::map<std::string, double> aux;
  std::vector<double> margins;
  double tolerance = 0.0;
  TrialVerdict verdict = TrialVerdict::Pass;
  /// Why the trial was skipped, when it was.
  std::string note;

  double worst_margin() const;
};

// Single-trial checks. None of them throw on a failed inequality; the
// outcome is in the record.

/// A !_w B <= A #_w B <= A v_w B.
TrialRecord check_young(const Element& a, const Element& b, double weight, double tol);

/// The four-link refined Young chain with delta = min(w, 1 - w).
TrialRecord check_refined_young(const Element& a, const Element& b, double weight,
                                double tol);

/// delta A #_w B + (1 - delta) A v_w B >= A !_w B, 0 <= delta <= 1, 0 < w < 1.
TrialRecord check_kubo_ando_lower(const Element& a, const Element& b, double weight,
                                  double delta, double tol);

/// delta A #_w B + (1 - delta) A v_w B <= A !_w B for delta >= 2, provided
/// A <= B when w <= 1/2 or B <= A when w >= 1/2; Skipped otherwise.
TrialRecord check_kubo_ando_upper(const Element& a, const Element& b, double weight,
                                  double delta, double tol);

/// A #_w B <= A v_w B <= S(beta/alpha) A #_w B for alpha <= A, B <= beta, plus
/// (alpha/beta) I <= {A^-1/2 B A^-1/2} <= (beta/alpha) I.
TrialRecord check_specht_sandwich(const Element& a, const Element& b, double alpha,
                                  double beta, double weight, double tol);
/// Same, with A and B drawn from `spec` in the given algebra.
TrialRecord check_specht_sandwich(const AlgebraDescriptor& desc,
                                  const PositiveGenSpec& spec, double weight, double tol);

/// (sA + (1-s)B)^-1 <= s A^-1 + (1-s) B^-1.
TrialRecord check_inverse_convexity(const Element& a, const Element& b, double s,
                                    double tol);

/// f(A) <= f(B) for A <= B.
TrialRecord check_operator_monotone(const ScalarFunction& f, const Element& a,
                                    const Element& b, double tol);
/// f(tA + (1-t)B) >= t f(A) + (1-t) f(B).
TrialRecord check_operator_concave(const ScalarFunction& f, const Element& a,
                                   const Element& b, double t, double tol);

/// Monotone trials (A <= B generated as B = A + P) and concavity trials for
/// f = x^w (0 <= w <= 1) or log.
std::vector<TrialRecord> check_power_log_monotone_concave(const ScalarFunction& f,
                                                          const AlgebraDescriptor& desc,
                                                          int trials, double tol,
                                                          std::uint64_t seed);

/// P(A, C) <= P(B, C) for A <= B.
TrialRecord check_perspective_monotone(const PerspectiveSpec& spec, const Element& a,
                                       const Element& b, const Element& c, double tol);
/// P(tA1 + (1-t)A2, B) <= t P(A1, B) + (1-t) P(A2, B).
TrialRecord check_perspective_convex(const PerspectiveSpec& spec, const Element& a1,
                                     const Element& a2, const Element& b, double t,
                                     double tol);
/// P_{r,h}(A, B) <= P_{q,h}(A, B) for r <= q pointwise.
TrialRecord check_perspective_order(const ScalarFunction& r, const ScalarFunction& q,
                                    const ScalarFunction& h, const Element& a,
                                    const Element& b, double tol);

/// Which perspective laws to exercise for one (f, h).
struct PerspectiveLawSpec {
  PerspectiveSpec spec;
  /// f is operator monotone: run the first-argument monotonicity suite.
  bool monotone = false;
  /// f is operator convex: run the convexity suite.
  bool convex = false;
  /// q with f <= q pointwise: run the order suite P_f <= P_q.
  std::optional<ScalarFunction> dominating;
};

std::vector<TrialRecord> check_perspective_laws(const PerspectiveLawSpec& laws,
                                                const AlgebraDescriptor& desc, int trials,
                                                double tol, std::uint64_t seed);

/// Symmetry, scaling, monotonicity, per-slot concavity, congruence and
/// inversion of the weighted geometric mean; `trials` records per identity.
std::vector<TrialRecord> check_geometric_identities(const AlgebraDescriptor& desc,
                                                    double weight, int trials,
                                                    double tol, std::uint64_t seed);

/// Everything a registered check needs besides its inputs.
struct TrialContext {
  double tol = 1e-9;
  double spectrum_low = 0.1;
  double spectrum_high = 10.0;
  QuadratureConfig quadrature = QuadratureConfig::element_defaults();
};

/// Identifiers of every registered check, in report order.
const std::vector<std::string>& check_ids();

/// Regenerates one trial of a registered check from its seed.
TrialRecord run_trial(const std::string& check_id, const AlgebraDescriptor& desc,
                      double weight, std::uint64_t seed, const TrialContext& ctx);

std::uint64_t trial_seed(std::uint64_t base_seed, const std::string& check_id,
                         const AlgebraDescriptor& desc, double weight,
                         std::uint64_t index);

std::vector<AlgebraDescriptor> default_kinds();

struct SuiteConfig {
  std::vector<AlgebraDescriptor> kinds = default_kinds();
  int trials_per_check = 200;
  /// Trials for the (much costlier) integral-representation check.
  int integral_trials = 10;
  std::vector<double> lambda_grid{0.1, 0.25, 0.5, 0.75, 0.9};
  double tol = 1e-9;
  std::uint64_t base_seed = 0x5eed;
  double spectrum_low = 0.1;
  double spectrum_high = 10.0;
  QuadratureConfig quadrature = QuadratureConfig::element_defaults();
  /// Subset of check_ids() to run; empty runs all of them.
  std::vector<std::string> checks;
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 0;

  void validate() const;
};

struct CheckSummary {
  std::string check_id;
  AlgebraDescriptor descriptor;
  double weight = 0.0;
  int pass = 0;
  int fail = 0;
  int skip = 0;
  /// Least margin over non-skipped trials (NaN when all were skipped).
  double worst_margin = 0.0;
  std::uint64_t worst_seed = 0;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckSummary> checks;

  int total_pass() const;
  int total_fail() const;
  int total_skip() const;
};

/// Runs every selected check over kinds x lambda_grid x trials. The report
/// depends only on the configuration (not on thread count or timing).
SuiteReport run_suite(const SuiteConfig& cfg,
                      const std::function<void(const TrialRecord&)>& on_trial = {});

}  // namespace jbmeans
