#include "jbmeans/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>
#include <unordered_map>

#include "jbmeans/errors.hpp"
#include "jbmeans/spectral.hpp"

namespace jbmeans {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Least eigenvalue of rhs - lhs over ||lhs|| + ||rhs||.
double order_margin(const Element& lhs, const Element& rhs) {
  return loewner_leq(lhs, rhs, 0.0).margin();
}

void add_order(TrialRecord& r, const Element& lhs, const Element& rhs) {
  r.margins.push_back(order_margin(lhs, rhs));
}

// x = y as x <= y and y <= x, from one decomposition of y - x.
void add_equal(TrialRecord& r, const Element& x, const Element& y) {
  const SpectralDecomposition diff = spectral_decompose(y - x);
  double scale = spectral_norm(x) + spectral_norm(y);
  if (!(scale > 0.0)) scale = 1.0;
  r.margins.push_back(diff.min_eigenvalue() / scale);
  r.margins.push_back(-diff.max_eigenvalue() / scale);
}

TrialRecord finish(TrialRecord r, double tol) {
  r.tolerance = tol;
  if (r.verdict == TrialVerdict::Skipped) return r;
  const bool ok = std::all_of(r.margins.begin(), r.margins.end(),
                              [&](double m) { return m >= -tol; });
  r.verdict = ok ? TrialVerdict::Pass : TrialVerdict::Fail;
  return r;
}

TrialRecord skipped(TrialRecord r, double tol, std::string why) {
  r.verdict = TrialVerdict::Skipped;
  r.note = std::move(why);
  r.tolerance = tol;
  return r;
}

bool leq_within(const Element& a, const Element& b, double tol) {
  return loewner_leq(a, b, tol).holds();
}

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

double log_uniform(double low, double high, Rng& rng) {
  return std::exp(std::log(low) + uniform01(rng) * (std::log(high) - std::log(low)));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Geometric-mean identities on explicit inputs.

TrialRecord geo_symmetry(const Element& a, const Element& b, double w, double tol) {
  TrialRecord r("geo_symmetry", a.descriptor(), w);
  add_equal(r, geometric_mean(a, b, w), geometric_mean(b, a, 1.0 - w));
  return finish(std::move(r), tol);
}

TrialRecord geo_scaling(const Element& a, const Element& b, double alpha, double beta,
                        double w, double tol) {
  TrialRecord r("geo_scaling", a.descriptor(), w);
  r.aux = {{"alpha", alpha}, {"beta", beta}};
  add_equal(r, geometric_mean(alpha * a, beta * b, w),
            std::pow(alpha, 1.0 - w) * std::pow(beta, w) * geometric_mean(a, b, w));
  return finish(std::move(r), tol);
}

TrialRecord geo_monotone(const Element& a, const Element& b, const Element& c,
                         const Element& d, double w, double tol) {
  TrialRecord r("geo_monotone", a.descriptor(), w);
  if (!leq_within(a, c, tol) || !leq_within(b, d, tol)) {
    return skipped(std::move(r), tol, "hypothesis A <= C, B <= D not met");
  }
  add_order(r, geometric_mean(a, b, w), geometric_mean(c, d, w));
  return finish(std::move(r), tol);
}

TrialRecord geo_concave(const Element& a1, const Element& a2, const Element& b1,
                        const Element& b2, double t, double w, double tol) {
  TrialRecord r("geo_concave", a1.descriptor(), w);
  r.aux = {{"t", t}};
  // Second slot with A = a1 fixed, then first slot with B = b1 fixed.
  add_order(r, (1.0 - t) * geometric_mean(a1, b1, w) + t * geometric_mean(a1, b2, w),
            geometric_mean(a1, (1.0 - t) * b1 + t * b2, w));
  add_order(r, (1.0 - t) * geometric_mean(a1, b1, w) + t * geometric_mean(a2, b1, w),
            geometric_mean((1.0 - t) * a1 + t * a2, b1, w));
  return finish(std::move(r), tol);
}

TrialRecord geo_congruence(const Element& a, const Element& b, const Element& c,
                           double w, double tol) {
  TrialRecord r("geo_congruence", a.descriptor(), w);
  add_equal(r, quadratic_map(c, geometric_mean(a, b, w)),
            geometric_mean(quadratic_map(c, a), quadratic_map(c, b), w));
  return finish(std::move(r), tol);
}

TrialRecord geo_inversion(const Element& a, const Element& b, double w, double tol) {
  TrialRecord r("geo_inversion", a.descriptor(), w);
  add_equal(r, inverse(geometric_mean(a, b, w)),
            geometric_mean(inverse(a), inverse(b), w));
  return finish(std::move(r), tol);
}

TrialRecord geo_integral(const Element& a, const Element& b, double w,
                         const QuadratureConfig& cfg) {
  TrialRecord r("geo_integral", a.descriptor(), w);
  const double tol = cfg.rel_tol;
  if (!(w > 0.0 && w < 1.0)) {
    return skipped(std::move(r), tol, "integral representation needs 0 < lambda < 1");
  }
  const Element direct = geometric_mean(a, b, w);
  try {
    const auto half_line = geometric_mean_integral(a, b, w, cfg);
    const auto unit = geometric_mean_harmonic_integral(a, b, w, cfg);
    add_equal(r, half_line.value, direct);
    add_equal(r, unit.value, direct);
    r.aux = {{"levels_half_line", half_line.levels}, {"levels_unit", unit.levels}};
  } catch (const QuadratureError& e) {
    r = finish(std::move(r), tol);
    r.verdict = TrialVerdict::Fail;
    r.note = e.what();
    return r;
  }
  return finish(std::move(r), tol);
}

using TrialFn = std::function<TrialRecord(const AlgebraDescriptor&, double, Rng&,
                                          std::uint64_t, const TrialContext&)>;

struct CheckDef {
  std::string id;
  TrialFn run;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> d;
    auto pos = [](const AlgebraDescriptor& desc, Rng& rng, const TrialContext& ctx) {
      return random_positive(desc, ctx.spectrum_low, ctx.spectrum_high, rng);
    };

    d.push_back({"young", [=](const AlgebraDescriptor& desc, double w, Rng& rng,
                              std::uint64_t, const TrialContext& ctx) {
                   const Element a = pos(desc, rng, ctx), b = pos(desc, rng, ctx);
                   return check_young(a, b, w, ctx.tol);
                 }});
    d.push_back({"refined_young", [=](const AlgebraDescriptor& desc, double w, Rng& rng,
                                      std::uint64_t, const TrialContext& ctx) {
                   const Element a = pos(desc, rng, ctx), b = pos(desc, rng, ctx);
                   return check_refined_young(a, b, w, ctx.tol);
                 }});
    d.push_back({"kubo_ando_lower", [=](const AlgebraDescriptor& desc, double w,
                                        Rng& rng, std::uint64_t seed,
                                        const TrialContext& ctx) {
                   static constexpr double kDeltas[] = {0.0, 0.25, 0.5, 0.75, 1.0};
                   const Element a = pos(desc, rng, ctx), b = pos(desc, rng, ctx);
                   return check_kubo_ando_lower(a, b, w, kDeltas[seed % 5], ctx.tol);
                 }});
    d.push_back({"kubo_ando_upper", [=](const AlgebraDescriptor& desc, double w,
                                        Rng& rng, std::uint64_t seed,
                                        const TrialContext& ctx) {
                   static constexpr double kDeltas[] = {2.0, 2.5, 3.0};
                   // Constrained generation: the smaller element is drawn
                   // first and a positive gap added.
                   const Element low = pos(desc, rng, ctx);
                   const Element high = low + pos(desc, rng, ctx);
                   const bool a_below = w <= 0.5;
                   return check_kubo_ando_upper(a_below ? low : high, a_below ? high : low,
                                                w, kDeltas[seed % 3], ctx.tol);
                 }});
    d.push_back({"kubo_ando_upper_free", [=](const AlgebraDescriptor& desc, double w,
                                             Rng& rng, std::uint64_t seed,
                                             const TrialContext& ctx) {
                   static constexpr double kDeltas[] = {2.0, 2.5, 3.0};
                   const Element a = pos(desc, rng, ctx), b = pos(desc, rng, ctx);
                   TrialRecord r =
                       check_kubo_ando_upper(a, b, w, kDeltas[seed % 3], ctx.tol);
                   r.check_id = "kubo_ando_upper_free";
                   return r;
                 }});
    d.push_back({"specht_sandwich", [=](const AlgebraDescriptor& desc, double w,
                                        Rng& rng, std::uint64_t seed,
                                        const TrialContext& ctx) {
                   static constexpr double kBetas[] = {2.0, 4.0, 10.0};
                   const double beta = kBetas[seed % 3];
                   const Element a = random_positive(desc, 1.0, beta, rng);
                   const Element b = random_positive(desc, 1.0, beta, rng);
                   return check_specht_sandwich(a, b, 1.0, beta, w, ctx.tol);
                 }});
    d.push_back({"inverse_convexity", [=](const AlgebraDescriptor& desc, double w,
                                          Rng& rng, std::uint64_t,
                                          const TrialContext& ctx) {
                   const Element a = pos(desc, rng, ctx), b = pos(desc, rng, ctx);
                   return check_inverse_convexity(a, b, w, ctx.tol);
                 }});

    auto monotone = [=](std::string id, bool use_log) {
      return CheckDef{id, [=](const AlgebraDescriptor& desc, double w, Rng& rng,
                              std::uint64_t, const TrialContext& ctx) {
                        const ScalarFunction f =
                            use_log ? ScalarFunction::log() : ScalarFunction::power(w);
                        const Element a = pos(desc, rng, ctx);
                        const Element b = a + pos(desc, rng, ctx);
                        TrialRecord r = check_operator_monotone(f, a, b, ctx.tol);
                        r.check_id = id;
                        r.weight = w;
                        return r;
                      }};
    };
    auto concave = [=](std::string id, bool use_log) {
      return CheckDef{id, [=](const AlgebraDescriptor& desc, double w, Rng& rng,
                              std::uint64_t, const TrialContext& ctx) {
                        const ScalarFunction f =
                            use_log ? ScalarFunction::log() : ScalarFunction::power(w);
                        const Element a = pos(desc, rng, ctx), b = pos(desc, rng, ctx);
                        TrialRecord r =
                            check_operator_concave(f, a, b, uniform01(rng), ctx.tol);
                        r.check_id = id;
                        r.weight = w;
                        return r;
                      }};
    };
    d.push_back(monotone("power_monotone", false));
    d.push_back(concave("power_concave", false));
    d.push_back(monotone("log_monotone", true));
    d.push_back(concave("log_concave", true));

    d.push_back({"perspective_monotone", [=](const AlgebraDescriptor& desc, double w,
                                             Rng& rng, std::uint64_t,
                                             const TrialContext& ctx) {
                   const PerspectiveSpec spec{ScalarFunction::power(w),
                                              ScalarFunction::affine(1.0, 1.0)};
                   const Element a = pos(desc, rng, ctx);
                   const Element b = a + pos(desc, rng, ctx);
                   const Element c = pos(desc, rng, ctx);
                   TrialRecord r = check_perspective_monotone(spec, a, b, c, ctx.tol);
                   r.weight = w;
                   return r;
                 }});
    d.push_back({"perspective_convex", [=](const AlgebraDescriptor& desc, double w,
                                           Rng& rng, std::uint64_t,
                                           const TrialContext& ctx) {
                   const PerspectiveSpec spec{ScalarFunction::inverse(),
                                              ScalarFunction::affine(1.0, 1.0)};
                   const Element a1 = pos(desc, rng, ctx), a2 = pos(desc, rng, ctx);
                   const Element b = pos(desc, rng, ctx);
                   TrialRecord r = check_perspective_convex(spec, a1, a2, b, w, ctx.tol);
                   r.weight = w;
                   return r;
                 }});
    d.push_back({"perspective_order", [=](const AlgebraDescriptor& desc, double w,
                                          Rng& rng, std::uint64_t,
                                          const TrialContext& ctx) {
                   const Element a = pos(desc, rng, ctx), b = pos(desc, rng, ctx);
                   const ScalarFunction id = ScalarFunction::affine(0.0, 1.0);
                   // harmonic profile <= x^w <= (1 - w) + w x
                   TrialRecord low = check_perspective_order(
                       ScalarFunction::harmonic_profile(w), ScalarFunction::power(w), id,
                       a, b, ctx.tol);
                   const TrialRecord high = check_perspective_order(
                       ScalarFunction::power(w), ScalarFunction::affine(1.0 - w, w), id,
                       a, b, ctx.tol);
                   low.margins.insert(low.margins.end(), high.margins.begin(),
                                      high.margins.end());
                   if (high.verdict == TrialVerdict::Skipped) {
                     return skipped(std::move(low), ctx.tol, high.note);
                   }
                   low.weight = w;
                   return finish(std::move(low), ctx.tol);
                 }});

    d.push_back({"geo_symmetry", [=](const AlgebraDescriptor& desc, double w, Rng& rng,
                                     std::uint64_t, const TrialContext& ctx) {
                   const Element a = pos(desc, rng, ctx), b = pos(desc, rng, ctx);
                   return geo_symmetry(a, b, w, ctx.tol);
                 }});
    d.push_back({"geo_scaling", [=](const AlgebraDescriptor& desc, double w, Rng& rng,
                                    std::uint64_t, const TrialContext& ctx) {
                   const Element a = pos(desc, rng, ctx), b = pos(desc, rng, ctx);
                   const double alpha = log_uniform(0.1, 10.0, rng);
                   const double beta = log_uniform(0.1, 10.0, rng);
                   return geo_scaling(a, b, alpha, beta, w, ctx.tol);
                 }});
    d.push_back({"geo_monotone", [=](const AlgebraDescriptor& desc, double w, Rng& rng,
                                     std::uint64_t, const TrialContext& ctx) {
                   const Element a = pos(desc, rng, ctx), b = pos(desc, rng, ctx);
                   const Element c = a + pos(desc, rng, ctx);
                   const Element dd = b + pos(desc, rng, ctx);
                   return geo_monotone(a, b, c, dd, w, ctx.tol);
                 }});
    d.push_back({"geo_concave", [=](const AlgebraDescriptor& desc, double w, Rng& rng,
                                    std::uint64_t, const TrialContext& ctx) {
                   const Element a1 = pos(desc, rng, ctx), a2 = pos(desc, rng, ctx);
                   const Element b1 = pos(desc, rng, ctx), b2 = pos(desc, rng, ctx);
                   return geo_concave(a1, a2, b1, b2, uniform01(rng), w, ctx.tol);
                 }});
    d.push_back({"geo_congruence", [=](const AlgebraDescriptor& desc, double w,
                                       Rng& rng, std::uint64_t,
                                       const TrialContext& ctx) {
                   const Element a = pos(desc, rng, ctx), b = pos(desc, rng, ctx);
                   const Element c = random_invertible(desc, 0.5, 2.0, rng);
                   return geo_congruence(a, b, c, w, ctx.tol);
                 }});
    d.push_back({"geo_inversion", [=](const AlgebraDescriptor& desc, double w, Rng& rng,
                                      std::uint64_t, const TrialContext& ctx) {
                   const Element a = pos(desc, rng, ctx), b = pos(desc, rng, ctx);
                   return geo_inversion(a, b, w, ctx.tol);
                 }});
    d.push_back({"geo_integral", [=](const AlgebraDescriptor& desc, double w, Rng& rng,
                                     std::uint64_t, const TrialContext& ctx) {
                   const Element a = pos(desc, rng, ctx), b = pos(desc, rng, ctx);
                   return geo_integral(a, b, w, ctx.quadrature);
                 }});
    return d;
  }();
  return defs;
}

const CheckDef& find_check(const std::string& id) {
  for (const auto& def : registry()) {
    if (def.id == id) return def;
  }
  throw DomainError("unknown check '" + id + "'");
}

}  // namespace

std::string trial_verdict_name(TrialVerdict v) {
  switch (v) {
    case TrialVerdict::Pass:
      return "pass";
    case TrialVerdict::Fail:
      return "fail";
    case TrialVerdict::Skipped:
      return "skipped";
  }
  return {};
}

double TrialRecord::worst_margin() const {
  if (margins.empty()) return kNaN;
  return *std::min_element(margins.begin(), margins.end());
}

TrialRecord check_young(const Element& a, const Element& b, double weight, double tol) {
  TrialRecord r("young", a.descriptor(), weight);
  const Element g = geometric_mean(a, b, weight);
  add_order(r, harmonic_mean(a, b, weight), g);
  add_order(r, g, arithmetic_mean(a, b, weight));
  return finish(std::move(r), tol);
}

TrialRecord check_refined_young(const Element& a, const Element& b, double weight,
                                double tol) {
  TrialRecord r("refined_young", a.descriptor(), weight);
  const double delta = std::min(weight, 1.0 - weight);
  r.aux = {{"delta", delta}};

  const Element a_inv = inverse(a);
  const Element b_inv = inverse(b);
  const Element lower_bound =
      inverse(geometric_mean(a_inv, b_inv, weight) +
              2.0 * delta * (0.5 * (a_inv + b_inv) - geometric_mean(a_inv, b_inv, 0.5)));
  const Element g = geometric_mean(a, b, weight);
  const Element upper_bound =
      g + 2.0 * delta * (0.5 * (a + b) - geometric_mean(a, b, 0.5));

  add_order(r, harmonic_mean(a, b, weight), lower_bound);
  add_order(r, lower_bound, g);
  add_order(r, g, upper_bound);
  add_order(r, upper_bound, arithmetic_mean(a, b, weight));
  return finish(std::move(r), tol);
}

TrialRecord check_kubo_ando_lower(const Element& a, const Element& b, double weight,
                                  double delta, double tol) {
  TrialRecord r("kubo_ando_lower", a.descriptor(), weight);
  r.aux = {{"delta", delta}};
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw DomainError("check_kubo_ando_lower: delta must lie in [0, 1]");
  }
  if (!(weight > 0.0 && weight < 1.0)) {
    return skipped(std::move(r), tol, "requires 0 < lambda < 1");
  }
  const Element mix = delta * geometric_mean(a, b, weight) +
                      (1.0 - delta) * arithmetic_mean(a, b, weight);
  add_order(r, harmonic_mean(a, b, weight), mix);
  return finish(std::move(r), tol);
}

TrialRecord check_kubo_ando_upper(const Element& a, const Element& b, double weight,
                                  double delta, double tol) {
  TrialRecord r("kubo_ando_upper", a.descriptor(), weight);
  r.aux = {{"delta", delta}};
  if (!(delta >= 2.0)) throw DomainError("check_kubo_ando_upper: delta must be >= 2");
  const bool hypothesis = (weight <= 0.5 && leq_within(a, b, tol)) ||
                          (weight >= 0.5 && leq_within(b, a, tol));
  if (!hypothesis) {
    return skipped(std::move(r), tol,
                   "needs A <= B for lambda <= 1/2 or B <= A for lambda >= 1/2");
  }
  const Element mix = delta * geometric_mean(a, b, weight) +
                      (1.0 - delta) * arithmetic_mean(a, b, weight);
  add_order(r, mix, harmonic_mean(a, b, weight));
  return finish(std::move(r), tol);
}

TrialRecord check_specht_sandwich(const Element& a, const Element& b, double alpha,
                                  double beta, double weight, double tol) {
  TrialRecord r("specht_sandwich", a.descriptor(), weight);
  r.aux = {{"alpha", alpha}, {"beta", beta}};
  const SpectralDecomposition sa = spectral_decompose(a);
  const SpectralDecomposition sb = spectral_decompose(b);
  const double slack = 1e-12 * beta;
  if (sa.min_eigenvalue() < alpha - slack || sb.min_eigenvalue() < alpha - slack ||
      sa.max_eigenvalue() > beta + slack || sb.max_eigenvalue() > beta + slack) {
    return skipped(std::move(r), tol, "spectra not inside [alpha, beta]");
  }
  const AlgebraDescriptor& desc = a.descriptor();
  const Element ratio = quadratic_map(apply_function(sa, ScalarFunction::power(-0.5)), b);
  add_order(r, Element::scalar(desc, alpha / beta), ratio);
  add_order(r, ratio, Element::scalar(desc, beta / alpha));

  const Element g = geometric_mean(a, b, weight);
  const Element m = arithmetic_mean(a, b, weight);
  add_order(r, g, m);
  add_order(r, m, specht_ratio(beta / alpha) * g);
  return finish(std::move(r), tol);
}

TrialRecord check_specht_sandwich(const AlgebraDescriptor& desc,
                                  const PositiveGenSpec& spec, double weight, double tol) {
  spec.validate();
  Rng rng(spec.seed);
  const Element a = random_positive(desc, spec.spectrum_low, spec.spectrum_high, rng);
  const Element b = random_positive(desc, spec.spectrum_low, spec.spectrum_high, rng);
  TrialRecord r =
      check_specht_sandwich(a, b, spec.spectrum_low, spec.spectrum_high, weight, tol);
  r.seed = spec.seed;
  return r;
}

TrialRecord check_inverse_convexity(const Element& a, const Element& b, double s,
                                    double tol) {
  TrialRecord r("inverse_convexity", a.descriptor(), s);
  r.aux = {{"s", s}};
  add_order(r, inverse(s * a + (1.0 - s) * b), s * inverse(a) + (1.0 - s) * inverse(b));
  return finish(std::move(r), tol);
}

TrialRecord check_operator_monotone(const ScalarFunction& f, const Element& a,
                                    const Element& b, double tol) {
  TrialRecord r(f.name() + "_monotone", a.descriptor());
  if (!leq_within(a, b, tol)) return skipped(std::move(r), tol, "A <= B not met");
  add_order(r, apply_function(a, f), apply_function(b, f));
  return finish(std::move(r), tol);
}

TrialRecord check_operator_concave(const ScalarFunction& f, const Element& a,
                                   const Element& b, double t, double tol) {
  TrialRecord r(f.name() + "_concave", a.descriptor());
  r.aux = {{"t", t}};
  add_order(r, t * apply_function(a, f) + (1.0 - t) * apply_function(b, f),
            apply_function(t * a + (1.0 - t) * b, f));
  return finish(std::move(r), tol);
}

std::vector<TrialRecord> check_power_log_monotone_concave(const ScalarFunction& f,
                                                          const AlgebraDescriptor& desc,
                                                          int trials, double tol,
                                                          std::uint64_t seed) {
  const bool is_log = f.kind() == ScalarFunction::Kind::Log;
  const bool is_power = f.kind() == ScalarFunction::Kind::Power && f.param(0) >= 0.0 &&
                        f.param(0) <= 1.0;
  if (!is_log && !is_power) {
    throw DomainError("check_power_log_monotone_concave: f must be x^w (0<=w<=1) or log");
  }
  const TrialContext ctx;
  std::vector<TrialRecord> out;
  for (int i = 0; i < trials; ++i) {
    Rng rng(splitmix64(seed ^ static_cast<std::uint64_t>(i)));
    const Element a = random_positive(desc, ctx.spectrum_low, ctx.spectrum_high, rng);
    const Element p = random_positive(desc, ctx.spectrum_low, ctx.spectrum_high, rng);
    const Element b = random_positive(desc, ctx.spectrum_low, ctx.spectrum_high, rng);
    out.push_back(check_operator_monotone(f, a, a + p, tol));
    out.push_back(check_operator_concave(f, a, b, uniform01(rng), tol));
  }
  return out;
}

TrialRecord check_perspective_monotone(const PerspectiveSpec& spec, const Element& a,
                                       const Element& b, const Element& c, double tol) {
  TrialRecord r("perspective_monotone", a.descriptor());
  if (!leq_within(a, b, tol)) return skipped(std::move(r), tol, "A <= B not met");
  try {
    add_order(r, perspective(spec, a, c), perspective(spec, b, c));
  } catch (const SpectrumDomainError& e) {
    return skipped(std::move(r), tol, e.what());
  }
  return finish(std::move(r), tol);
}

TrialRecord check_perspective_convex(const PerspectiveSpec& spec, const Element& a1,
                                     const Element& a2, const Element& b, double t,
                                     double tol) {
  TrialRecord r("perspective_convex", a1.descriptor());
  r.aux = {{"t", t}};
  try {
    add_order(r, perspective(spec, t * a1 + (1.0 - t) * a2, b),
              t * perspective(spec, a1, b) + (1.0 - t) * perspective(spec, a2, b));
  } catch (const SpectrumDomainError& e) {
    return skipped(std::move(r), tol, e.what());
  }
  return finish(std::move(r), tol);
}

TrialRecord check_perspective_order(const ScalarFunction& r_fn, const ScalarFunction& q_fn,
                                    const ScalarFunction& h, const Element& a,
                                    const Element& b, double tol) {
  TrialRecord r("perspective_order", a.descriptor());
  try {
    add_order(r, perspective({r_fn, h}, a, b), perspective({q_fn, h}, a, b));
  } catch (const SpectrumDomainError& e) {
    return skipped(std::move(r), tol, e.what());
  }
  return finish(std::move(r), tol);
}

std::vector<TrialRecord> check_perspective_laws(const PerspectiveLawSpec& laws,
                                                const AlgebraDescriptor& desc, int trials,
                                                double tol, std::uint64_t seed) {
  const TrialContext ctx;
  auto pos = [&](Rng& rng) {
    return random_positive(desc, ctx.spectrum_low, ctx.spectrum_high, rng);
  };
  std::vector<TrialRecord> out;
  for (int i = 0; i < trials; ++i) {
    Rng rng(splitmix64(seed ^ static_cast<std::uint64_t>(i)));
    const Element a = pos(rng), b = pos(rng), c = pos(rng);
    if (laws.monotone) {
      out.push_back(check_perspective_monotone(laws.spec, a, a + b, c, tol));
    }
    if (laws.convex) {
      out.push_back(check_perspective_convex(laws.spec, a, b, c, uniform01(rng), tol));
    }
    if (laws.dominating) {
      out.push_back(
          check_perspective_order(laws.spec.f, *laws.dominating, laws.spec.h, a, b, tol));
    }
  }
  return out;
}

std::vector<TrialRecord> check_geometric_identities(const AlgebraDescriptor& desc,
                                                    double weight, int trials,
                                                    double tol, std::uint64_t seed) {
  TrialContext ctx;
  ctx.tol = tol;
  std::vector<TrialRecord> out;
  for (const char* id : {"geo_symmetry", "geo_scaling", "geo_monotone", "geo_concave",
                         "geo_congruence", "geo_inversion"}) {
    for (int i = 0; i < trials; ++i) {
      out.push_back(run_trial(id, desc, weight, trial_seed(seed, id, desc, weight, i), ctx));
    }
  }
  return out;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& def : registry()) v.push_back(def.id);
    return v;
  }();
  return ids;
}

TrialRecord run_trial(const std::string& check_id, const AlgebraDescriptor& desc,
                      double weight, std::uint64_t seed, const TrialContext& ctx) {
  const CheckDef& def = find_check(check_id);
  Rng rng(seed);
  TrialRecord r(check_id, desc, weight);
  try {
    r = def.run(desc, weight, rng, seed, ctx);
  } catch (const std::exception& e) {
    r.verdict = TrialVerdict::Fail;
    r.tolerance = ctx.tol;
    r.note = std::string("exception: ") + e.what();
  }
  r.check_id = check_id;
  r.seed = seed;
  r.weight = weight;
  return r;
}

std::uint64_t trial_seed(std::uint64_t base_seed, const std::string& check_id,
                         const AlgebraDescriptor& desc, double weight,
                         std::uint64_t index) {
  std::uint64_t h = splitmix64(base_seed ^ fnv1a(check_id));
  h = splitmix64(h ^ fnv1a(desc.name()));
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(weight));
  return splitmix64(h ^ index);
}

std::vector<AlgebraDescriptor> default_kinds() {
  return {AlgebraDescriptor::real_symmetric(3), AlgebraDescriptor::complex_hermitian(3),
          AlgebraDescriptor::spin_factor(4), AlgebraDescriptor::albert()};
}

void SuiteConfig::validate() const {
  if (kinds.empty()) throw DomainError("SuiteConfig: kinds must not be empty");
  if (trials_per_check < 1) throw DomainError("SuiteConfig: trials_per_check must be >= 1");
  if (integral_trials < 1) throw DomainError("SuiteConfig: integral_trials must be >= 1");
  if (lambda_grid.empty()) throw DomainError("SuiteConfig: lambda_grid must not be empty");
  for (double w : lambda_grid) {
    if (!(w >= 0.0 && w <= 1.0)) throw DomainError("SuiteConfig: lambda_grid must lie in [0, 1]");
  }
  if (!(tol >= 0.0)) throw DomainError("SuiteConfig: tol must be >= 0");
  PositiveGenSpec{spectrum_low, spectrum_high, 0}.validate();
  quadrature.validate();
  for (const auto& id : checks) find_check(id);
}

int SuiteReport::total_pass() const {
  int n = 0;
  for (const auto& c : checks) n += c.pass;
  return n;
}

int SuiteReport::total_fail() const {
  int n = 0;
  for (const auto& c : checks) n += c.fail;
  return n;
}

int SuiteReport::total_skip() const {
  int n = 0;
  for (const auto& c : checks) n += c.skip;
  return n;
}

SuiteReport run_suite(const SuiteConfig& cfg,
                      const std::function<void(const TrialRecord&)>& on_trial) {
  cfg.validate();
  const std::vector<std::string>& ids = cfg.checks.empty() ? check_ids() : cfg.checks;
  TrialContext ctx;
  ctx.tol = cfg.tol;
  ctx.spectrum_low = cfg.spectrum_low;
  ctx.spectrum_high = cfg.spectrum_high;
  ctx.quadrature = cfg.quadrature;

  struct Task {
    std::size_t group;
    std::uint64_t seed;
  };
  SuiteReport report;
  report.config = cfg;
  std::vector<Task> tasks;
  for (const auto& id : ids) {
    const int trials = id == "geo_integral" ? cfg.integral_trials : cfg.trials_per_check;
    for (const auto& desc : cfg.kinds) {
      for (double w : cfg.lambda_grid) {
        const std::size_t group = report.checks.size();
        report.checks.push_back({id, desc, w});
        for (int i = 0; i < trials; ++i) {
          tasks.push_back({group, trial_seed(cfg.base_seed, id, desc, w, i)});
        }
      }
    }
  }

  std::vector<std::optional<TrialRecord>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      const CheckSummary& g = report.checks[tasks[k].group];
      results[k] = run_trial(g.check_id, g.descriptor, g.weight, tasks[k].seed, ctx);
    }
  };
  unsigned threads = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<bool> seen(report.checks.size(), false);
  for (auto& c : report.checks) c.worst_margin = kNaN;
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    const TrialRecord& r = *results[k];
    if (on_trial) on_trial(r);
    CheckSummary& g = report.checks[tasks[k].group];
    switch (r.verdict) {
      case TrialVerdict::Pass:
        ++g.pass;
        break;
      case TrialVerdict::Fail:
        ++g.fail;
        break;
      case TrialVerdict::Skipped:
        ++g.skip;
        continue;
    }
    double m = r.worst_margin();
    if (std::isnan(m)) m = -std::numeric_limits<double>::infinity();
    if (!seen[tasks[k].group] || m < g.worst_margin) {
      g.worst_margin = m;
      g.worst_seed = r.seed;
      seen[tasks[k].group] = true;
    }
  }
  return report;
}

}  // namespace jbmeans
