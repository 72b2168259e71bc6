#include "jbmeans/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "jbmeans/errors.hpp"

namespace jbmeans {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
void read_optional(const Json& j, const char* key, T& out) {
  if (j.contains(key)) out = get_field<T>(j, key);
}

void reject_unknown(const Json& j, std::initializer_list<const char*> known,
                    const char* what) {
  for (const auto& item : j.items()) {
    bool found = false;
    for (const char* k : known) found = found || item.key() == k;
    if (!found) throw ParseError(std::string(what) + ": unknown key '" + item.key() + "'");
  }
}

AlgebraDescriptor descriptor_for(AlgebraKind kind, int order) {
  switch (kind) {
    case AlgebraKind::RealSymmetric:
      return AlgebraDescriptor::real_symmetric(order);
    case AlgebraKind::ComplexHermitian:
      return AlgebraDescriptor::complex_hermitian(order);
    case AlgebraKind::SpinFactor:
      return AlgebraDescriptor::spin_factor(order);
    case AlgebraKind::Albert:
      if (order != 3) throw ParseError("albert elements have n_or_d = 3");
      return AlgebraDescriptor::albert();
  }
  throw ParseError("unknown algebra kind");
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json element_to_json(const Element& e) {
  Json j;
  j["kind"] = kind_name(e.descriptor().kind());
  j["n_or_d"] = e.descriptor().order();
  Json coords = Json::array();
  for (int i = 0; i < e.size(); ++i) coords.push_back(e.coord(i));
  j["coords"] = std::move(coords);
  return j;
}

Element element_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("element: expected a JSON object");
  reject_unknown(j, {"kind", "n_or_d", "coords"}, "element");
  AlgebraKind kind;
  try {
    kind = parse_kind_name(get_field<std::string>(j, "kind"));
  } catch (const DomainError& e) {
    throw ParseError(std::string("element: ") + e.what());
  }
  const int order = get_field<int>(j, "n_or_d");
  AlgebraDescriptor desc = AlgebraDescriptor::albert();
  try {
    desc = descriptor_for(kind, order);
  } catch (const DomainError& e) {
    throw ParseError(std::string("element: ") + e.what());
  }
  const auto coords = get_field<std::vector<double>>(j, "coords");
  if (static_cast<int>(coords.size()) != desc.dimension()) {
    throw ParseError("element: " + desc.name() + " needs " +
                     std::to_string(desc.dimension()) + " coordinates, got " +
                     std::to_string(coords.size()));
  }
  return Element(desc, Eigen::Map<const Eigen::VectorXd>(coords.data(),
                                                         static_cast<Eigen::Index>(coords.size())));
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("error writing '" + path + "'");
}

Json read_json(const std::string& path) {
  const std::string text = read_text(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

Element read_element(const std::string& path) {
  try {
    return element_from_json(read_json(path));
  } catch (const ParseError& e) {
    const std::string what = e.what();
    if (what.rfind("'" + path + "'", 0) == 0) throw;
    throw ParseError("'" + path + "': " + what);
  }
}

void write_element(const std::string& path, const Element& e) {
  write_text(path, dump(element_to_json(e)) + "\n");
}

std::string dump(const Json& j) { return j.dump(2); }

Json quadrature_config_to_json(const QuadratureConfig& cfg) {
  Json j;
  j["rel_tol"] = cfg.rel_tol;
  j["abs_tol"] = cfg.abs_tol;
  j["max_refinement_levels"] = cfg.max_refinement_levels;
  j["tail_cutoff_growth"] = cfg.tail_cutoff_growth;
  j["scheme"] = scheme_name(cfg.scheme);
  return j;
}

QuadratureConfig quadrature_config_from_json(const Json& j, QuadratureConfig base) {
  if (!j.is_object()) throw ParseError("quadrature: expected a JSON object");
  reject_unknown(j,
                 {"rel_tol", "abs_tol", "max_refinement_levels", "tail_cutoff_growth",
                  "scheme"},
                 "quadrature");
  read_optional(j, "rel_tol", base.rel_tol);
  read_optional(j, "abs_tol", base.abs_tol);
  read_optional(j, "max_refinement_levels", base.max_refinement_levels);
  read_optional(j, "tail_cutoff_growth", base.tail_cutoff_growth);
  if (j.contains("scheme")) {
    try {
      base.scheme = parse_scheme(get_field<std::string>(j, "scheme"));
    } catch (const DomainError& e) {
      throw ParseError(std::string("quadrature: ") + e.what());
    }
  }
  return base;
}

Json suite_config_to_json(const SuiteConfig& cfg) {
  Json j;
  Json kinds = Json::array();
  for (const auto& d : cfg.kinds) kinds.push_back(d.name());
  j["kinds"] = std::move(kinds);
  j["trials_per_check"] = cfg.trials_per_check;
  j["integral_trials"] = cfg.integral_trials;
  j["lambda_grid"] = cfg.lambda_grid;
  j["tol"] = cfg.tol;
  j["seed"] = cfg.base_seed;
  j["spectrum_low"] = cfg.spectrum_low;
  j["spectrum_high"] = cfg.spectrum_high;
  j["checks"] = cfg.checks;
  j["quadrature"] = quadrature_config_to_json(cfg.quadrature);
  return j;
}

SuiteConfig suite_config_from_json(const Json& j, SuiteConfig base) {
  if (!j.is_object()) throw ParseError("config: expected a JSON object");
  reject_unknown(j,
                 {"kinds", "trials_per_check", "integral_trials", "lambda_grid", "tol",
                  "seed", "spectrum_low", "spectrum_high", "checks", "threads",
                  "quadrature"},
                 "config");
  if (j.contains("kinds")) {
    base.kinds.clear();
    for (const auto& name : get_field<std::vector<std::string>>(j, "kinds")) {
      try {
        base.kinds.push_back(AlgebraDescriptor::parse(name));
      } catch (const DomainError& e) {
        throw ParseError(std::string("config: ") + e.what());
      }
    }
  }
  read_optional(j, "trials_per_check", base.trials_per_check);
  read_optional(j, "integral_trials", base.integral_trials);
  read_optional(j, "lambda_grid", base.lambda_grid);
  read_optional(j, "tol", base.tol);
  read_optional(j, "seed", base.base_seed);
  read_optional(j, "spectrum_low", base.spectrum_low);
  read_optional(j, "spectrum_high", base.spectrum_high);
  read_optional(j, "checks", base.checks);
  read_optional(j, "threads", base.threads);
  if (j.contains("quadrature")) {
    base.quadrature = quadrature_config_from_json(j.at("quadrature"), base.quadrature);
  }
  return base;
}

Json report_to_json(const SuiteReport& report) {
  Json j;
  j["config"] = suite_config_to_json(report.config);
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json row;
    row["check_id"] = c.check_id;
    row["kind"] = c.descriptor.name();
    row["lambda"] = c.weight;
    row["pass"] = c.pass;
    row["fail"] = c.fail;
    row["skip"] = c.skip;
    row["worst_margin"] = finite_or_null(c.worst_margin);
    row["worst_seed"] = c.worst_seed;
    checks.push_back(std::move(row));
  }
  j["checks"] = std::move(checks);
  Json totals;
  totals["pass"] = report.total_pass();
  totals["fail"] = report.total_fail();
  totals["skip"] = report.total_skip();
  j["totals"] = std::move(totals);
  return j;
}

std::string report_to_csv(const SuiteReport& report) {
  std::ostringstream out;
  out << "check_id,kind,lambda,pass,fail,skip,worst_margin,worst_seed\n";
  for (const auto& c : report.checks) {
    out << c.check_id << ',' << c.descriptor.name() << ',' << Json(c.weight).dump() << ','
        << c.pass << ',' << c.fail << ',' << c.skip << ','
        << (std::isfinite(c.worst_margin) ? Json(c.worst_margin).dump() : std::string())
        << ',' << c.worst_seed << '\n';
  }
  return out.str();
}

Json spectrum_to_json(const SpectralDecomposition& sd) {
  Json j;
  j["eigenvalues"] = sd.eigenvalues;
  j["multiplicities"] = sd.multiplicities;
  j["norm"] = sd.norm();
  return j;
}

Json uniformity_to_json(const UniformityReport& report) {
  Json j;
  j["family"] = report.family;
  if (report.family == "power") j["lambda"] = report.weight;
  j["M"] = report.bound;
  j["grid"] = report.grid;
  Json head = Json::array(), tail = Json::array(), mesh = Json::array();
  Json levels = Json::array();
  for (const auto& l : report.levels) {
    head.push_back(l.head);
    tail.push_back(l.tail);
    mesh.push_back(l.mesh_discrepancy);
    Json row;
    row["level"] = l.level;
    row["delta"] = l.delta;
    row["cutoff"] = l.cutoff;
    row["mesh_panels"] = l.mesh_panels;
    levels.push_back(std::move(row));
  }
  j["head"] = std::move(head);
  j["tail"] = std::move(tail);
  j["mesh_discrepancy"] = std::move(mesh);
  j["levels"] = std::move(levels);
  j["interior"] = {report.interior_low, report.interior_high};
  j["decays_monotonically"] = report.decays_monotonically();
  return j;
}

}  // namespace jbmeans
