#pragma once

#include <string>

#include "jbmeans/algebra.hpp"
#include "jbmeans/harness.hpp"
#include "jbmeans/quadrature.hpp"
#include "jbmeans/spectral.hpp"
#include "json.hpp"

namespace jbmeans {

/// Insertion-ordered, so documents dump identically run to run.
using Json = nlohmann::ordered_json;

/// {kind, n_or_d, coords}. Scalars are RealSymmetric(1) elements.
Json element_to_json(const Element& e);
/// Throws ParseError on missing fields, an unknown kind or a wrong number of
/// coordinates.
Element element_from_json(const Json& j);

/// Whole-file helpers. IoError when the file cannot be opened, ParseError
/// when it is not valid JSON.
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);
Json read_json(const std::string& path);
Element read_element(const std::string& path);
void write_element(const std::string& path, const Element& e);

/// Doubles are printed in shortest round-trip form.
std::string dump(const Json& j);

Json quadrature_config_to_json(const QuadratureConfig& cfg);
/// Fields absent from `j` keep their value in `base`; unknown keys are
/// rejected.
QuadratureConfig quadrature_config_from_json(const Json& j, QuadratureConfig base = {});

Json suite_config_to_json(const SuiteConfig& cfg);
SuiteConfig suite_config_from_json(const Json& j, SuiteConfig base = {});

Json report_to_json(const SuiteReport& report);
/// check_id,kind,lambda,pass,fail,skip,worst_margin,worst_seed
std::string report_to_csv(const SuiteReport& report);

Json spectrum_to_json(const SpectralDecomposition& sd);
Json uniformity_to_json(const UniformityReport& report);

}  // namespace jbmeans
