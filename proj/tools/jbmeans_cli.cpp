#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jbmeans/errors.hpp"
#include "jbmeans/harness.hpp"
#include "jbmeans/means.hpp"
#include "jbmeans/quadrature.hpp"
#include "jbmeans/serialize.hpp"
#include "jbmeans/spectral.hpp"

using namespace jbmeans;

namespace {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3, kDomain = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text(out_path, text);
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

struct VerifyArgs {
  std::string config;
  std::optional<double> tol;
  std::optional<int> trials;
  std::optional<int> integral_trials;
  std::optional<std::string> kinds;
  std::optional<std::string> checks;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::string out;
  std::string format = "json";
};

SuiteConfig build_suite_config(const VerifyArgs& args) {
  SuiteConfig cfg;
  try {
    if (!args.config.empty()) cfg = suite_config_from_json(read_json(args.config));
    if (args.tol) cfg.tol = *args.tol;
    if (args.trials) cfg.trials_per_check = *args.trials;
    if (args.integral_trials) cfg.integral_trials = *args.integral_trials;
    if (args.seed) cfg.base_seed = *args.seed;
    if (args.threads) cfg.threads = *args.threads;
    if (args.kinds) {
      cfg.kinds.clear();
      for (const auto& name : split_list(*args.kinds)) {
        cfg.kinds.push_back(AlgebraDescriptor::parse(name));
      }
    }
    if (args.checks) cfg.checks = split_list(*args.checks);
    cfg.validate();
  } catch (const std::exception& e) {
    // Any problem with the configuration itself, including an unreadable
    // config file, is a usage error.
    throw UsageError(std::string("config: ") + e.what());
  }
  return cfg;
}

int cmd_verify(const VerifyArgs& args) {
  const SuiteConfig cfg = build_suite_config(args);
  const SuiteReport report = run_suite(cfg);
  emit(args.format == "csv" ? report_to_csv(report) : dump(report_to_json(report)) + "\n",
       args.out);
  std::cerr << "verify: " << report.total_pass() << " pass, " << report.total_fail()
            << " fail, " << report.total_skip() << " skipped\n";
  int listed = 0, unlisted = 0;
  for (const auto& c : report.checks) {
    if (c.fail > 0 && listed == 10) ++unlisted;
    if (c.fail > 0 && listed < 10) {
      ++listed;
      std::cerr << "  FAIL " << c.check_id << " " << c.descriptor.name()
                << " lambda=" << c.weight << ": " << c.fail << " trial(s), worst margin "
                << c.worst_margin << " (seed " << c.worst_seed << ")\n";
    }
  }
  if (unlisted > 0) std::cerr << "  ... and " << unlisted << " more failing groups\n";
  return report.total_fail() == 0 ? kOk : kVerifyFailed;
}

struct MeanArgs {
  std::string kind;
  double weight = 0.5;
  std::string a, b;
  std::string via = "direct";
  double rel_tol = QuadratureConfig::element_defaults().rel_tol;
  std::string out;
};

int cmd_mean(const MeanArgs& args) {
  const MeanKind kind = parse_mean_kind(args.kind);
  if (args.via == "integral" && kind != MeanKind::Geometric) {
    throw UsageError("--via integral is only available for the geometric mean");
  }
  const Element a = read_element(args.a);
  const Element b = read_element(args.b);
  Element result = a;
  if (args.via == "integral") {
    QuadratureConfig qc = QuadratureConfig::element_defaults();
    qc.rel_tol = args.rel_tol;
    result = geometric_mean_integral(a, b, args.weight, qc).value;
  } else {
    result = mean(kind, a, b, args.weight);
  }
  emit(dump(element_to_json(result)) + "\n", args.out);
  return kOk;
}

int cmd_spectrum(const std::string& path, const std::string& out) {
  const Element a = read_element(path);
  Json j;
  j["algebra"] = a.descriptor().name();
  const Json spectrum = spectrum_to_json(spectral_decompose(a));
  for (const auto& item : spectrum.items()) {
    j[item.key()] = item.value();
  }
  emit(dump(j) + "\n", out);
  return kOk;
}

struct IntegralArgs {
  std::string rep;
  double x = 1.0;
  double weight = 0.5;
  double rel_tol = QuadratureConfig::scalar_defaults().rel_tol;
  std::string out;
};

int cmd_integral(const IntegralArgs& args) {
  QuadratureConfig qc = QuadratureConfig::scalar_defaults();
  qc.rel_tol = args.rel_tol;
  qc.validate();
  const bool power = args.rep == "power";
  const QuadratureResult r = power ? power_integral_scalar(args.x, args.weight, qc)
                                   : log_integral_scalar(args.x, qc);
  Json j;
  j["rep"] = args.rep;
  j["x"] = args.x;
  if (power) j["lambda"] = args.weight;
  j["value"] = r.value;
  j["error_estimate"] = r.error_estimate;
  j["closed_form"] = power ? std::pow(args.x, args.weight) : std::log(args.x);
  j["levels"] = r.levels;
  j["evaluations"] = r.evaluations;
  emit(dump(j) + "\n", args.out);
  return kOk;
}

struct ProbeArgs {
  std::string family;
  double bound = 1.0;
  double weight = 0.5;
  int levels = 4;
  double growth = QuadratureConfig::scalar_defaults().tail_cutoff_growth;
  std::string format = "table";
  std::string out;
};

std::string probe_table(const UniformityReport& r) {
  std::ostringstream os;
  char line[160];
  os << "family " << r.family;
  if (r.family == "power") os << " lambda=" << r.weight;
  os << "  M=" << r.bound << "  grid=" << r.grid.size() << " points\n";
  std::snprintf(line, sizeof line, "%5s %12s %12s %8s %14s %14s %14s\n", "level", "delta",
                "N", "panels", "head", "tail", "mesh");
  os << line;
  for (const auto& l : r.levels) {
    std::snprintf(line, sizeof line, "%5d %12.3e %12.3e %8d %14.6e %14.6e %14.6e\n", l.level,
                  l.delta, l.cutoff, l.mesh_panels, l.head, l.tail, l.mesh_discrepancy);
    os << line;
  }
  os << "monotone decay: " << (r.decays_monotonically() ? "yes" : "no") << "\n";
  return os.str();
}

int cmd_probe(const ProbeArgs& args) {
  QuadratureConfig qc = QuadratureConfig::scalar_defaults();
  qc.tail_cutoff_growth = args.growth;
  qc.validate();
  const FunctionFamily family = args.family == "power"
                                    ? FunctionFamily::power_kernel(args.weight)
                                    : FunctionFamily::log_kernel();
  const UniformityReport r = uniformity_probe(family, args.bound, qc, args.levels);
  emit(args.format == "json" ? dump(uniformity_to_json(r)) + "\n" : probe_table(r),
       args.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Means, spectra and inequality verification in Euclidean Jordan algebras"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the inequality and identity suite");
  v->add_option("--config", verify.config, "JSON suite configuration");
  v->add_option("--tol", verify.tol, "Margin tolerance");
  v->add_option("--trials", verify.trials, "Trials per check, kind and lambda");
  v->add_option("--integral-trials", verify.integral_trials,
                "Trials for the integral-representation check");
  v->add_option("--kinds", verify.kinds, "Comma-separated algebras, e.g. sym3,spin4,albert");
  v->add_option("--checks", verify.checks, "Comma-separated subset of checks");
  v->add_option("--seed", verify.seed, "Base seed");
  v->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");
  v->add_option("--out", verify.out, "Report path (default stdout)");
  v->add_option("--format", verify.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));

  MeanArgs mean_args;
  auto* m = app.add_subcommand("mean", "Weighted mean of two elements");
  m->add_option("--kind", mean_args.kind, "harmonic, geometric or arithmetic")
      ->required()
      ->check(CLI::IsMember({"harmonic", "geometric", "arithmetic"}));
  m->add_option("--lambda", mean_args.weight, "Weight in [0, 1]")->required();
  m->add_option("--a", mean_args.a, "First element file")->required();
  m->add_option("--b", mean_args.b, "Second element file")->required();
  m->add_option("--via", mean_args.via, "direct or integral")
      ->check(CLI::IsMember({"direct", "integral"}));
  m->add_option("--rel-tol", mean_args.rel_tol, "Quadrature tolerance for --via integral");
  m->add_option("--out", mean_args.out, "Output element file (default stdout)");

  std::string spectrum_path, spectrum_out;
  auto* s = app.add_subcommand("spectrum", "Eigenvalues and multiplicities of an element");
  s->add_option("--a", spectrum_path, "Element file")->required();
  s->add_option("--out", spectrum_out, "Output file (default stdout)");

  IntegralArgs integral;
  auto* in = app.add_subcommand("integral", "Scalar integral representation of x^lambda or log x");
  in->add_option("--rep", integral.rep, "power or log")
      ->required()
      ->check(CLI::IsMember({"power", "log"}));
  in->add_option("--x", integral.x, "Argument x > 0")->required();
  in->add_option("--lambda", integral.weight, "Exponent in (0, 1) for --rep power");
  in->add_option("--rel-tol", integral.rel_tol, "Quadrature tolerance");
  in->add_option("--out", integral.out, "Output file (default stdout)");

  ProbeArgs probe;
  auto* p = app.add_subcommand("probe", "Uniform integrability diagnostics of a kernel family");
  p->add_option("--family", probe.family, "power or log")
      ->required()
      ->check(CLI::IsMember({"power", "log"}));
  p->add_option("--M", probe.bound, "Upper end of the x range (0, M]")->required();
  p->add_option("--lambda", probe.weight, "Exponent for the power family");
  p->add_option("--levels", probe.levels, "Refinement levels");
  p->add_option("--growth", probe.growth, "Cutoff growth factor per level");
  p->add_option("--format", probe.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  p->add_option("--out", probe.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (v->parsed()) return cmd_verify(verify);
    if (m->parsed()) return cmd_mean(mean_args);
    if (s->parsed()) return cmd_spectrum(spectrum_path, spectrum_out);
    if (in->parsed()) return cmd_integral(integral);
    if (p->parsed()) return cmd_probe(probe);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const SpectrumDomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n"
              << "offending eigenvalue: " << Json(e.eigenvalue()).dump() << "\n";
    return kDomain;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const QuadratureError& e) {
    std::cerr << "quadrature did not converge: " << e.what() << " (error bound "
              << e.error_bound() << ")\n";
    return kVerifyFailed;
  }
  return kUsage;
}
