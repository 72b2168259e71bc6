#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "jbmeans/errors.hpp"
#include "jbmeans/serialize.hpp"
#include "support.hpp"

using namespace jbmeans;

TEST_CASE("element JSON round trip is exact") {
  Rng rng(60);
  const auto dir = std::filesystem::temp_directory_path();
  for (const auto& d : testing::sample_kinds()) {
    const Element e = random_element(d, rng) * (1.0 / 3.0);
    const Element back = element_from_json(Json::parse(dump(element_to_json(e))));
    CHECK(back.descriptor() == d);
    CHECK(back.coords() == e.coords());
    const auto path = (dir / ("jbmeans_rt_" + d.name() + ".json")).string();
    write_element(path, e);
    CHECK(read_element(path).coords() == e.coords());
    std::remove(path.c_str());
  }
  const Json j = element_to_json(Element::identity(AlgebraDescriptor::spin_factor(2)));
  CHECK(j["kind"] == "spin_factor");
  CHECK(j["n_or_d"] == 2);
  CHECK(j["coords"].size() == 3);
}

TEST_CASE("malformed elements") {
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"kind":"real_symmetric","n_or_d":2,"coords":[1,2]})")),
                  ParseError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"kind":"quaternion","n_or_d":2,"coords":[]})")),
                  ParseError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"kind":"albert","n_or_d":3})")), ParseError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"kind":"albert","n_or_d":4,"coords":[]})")),
                  ParseError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"([1,2,3])")), ParseError);
  CHECK_THROWS_AS(read_element("/nonexistent/element.json"), IoError);
}

TEST_CASE("suite config JSON") {
  SuiteConfig cfg;
  cfg.kinds = {AlgebraDescriptor::albert(), AlgebraDescriptor::complex_hermitian(2)};
  cfg.tol = 1e-7;
  cfg.base_seed = 42;
  cfg.quadrature.rel_tol = 1e-5;
  const SuiteConfig back = suite_config_from_json(suite_config_to_json(cfg));
  CHECK(back.kinds == cfg.kinds);
  CHECK(back.tol == cfg.tol);
  CHECK(back.base_seed == 42);
  CHECK(back.quadrature.rel_tol == 1e-5);
  CHECK(back.lambda_grid == cfg.lambda_grid);

  const SuiteConfig partial = suite_config_from_json(Json::parse(R"({"trials_per_check": 3})"));
  CHECK(partial.trials_per_check == 3);
  CHECK(partial.tol == SuiteConfig{}.tol);
  CHECK_THROWS_AS(suite_config_from_json(Json::parse(R"({"trails": 3})")), ParseError);
  CHECK_THROWS_AS(suite_config_from_json(Json::parse(R"({"kinds": ["sym0"]})")), ParseError);
  CHECK_THROWS_AS(suite_config_from_json(Json::parse(R"({"tol": "small"})")), ParseError);
}

TEST_CASE("report formats") {
  SuiteConfig cfg;
  cfg.kinds = {AlgebraDescriptor::spin_factor(2)};
  cfg.trials_per_check = 2;
  cfg.integral_trials = 1;
  cfg.checks = {"young", "kubo_ando_upper_free"};
  cfg.lambda_grid = {0.5};
  const SuiteReport report = run_suite(cfg);
  const Json j = report_to_json(report);
  REQUIRE(j["checks"].size() == 2);
  const auto& row = j["checks"][0];
  for (const char* key : {"check_id", "kind", "lambda", "pass", "fail", "skip", "worst_margin",
                          "worst_seed"}) {
    CHECK(row.contains(key));
  }
  CHECK(row["kind"] == "spin2");
  const std::string csv = report_to_csv(report);
  CHECK(csv.rfind("check_id,kind,lambda,pass,fail,skip,worst_margin,worst_seed\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("uniformity JSON") {
  const auto r = uniformity_probe(FunctionFamily::log_kernel(), 1.0, QuadratureConfig{});
  const Json j = uniformity_to_json(r);
  for (const char* key : {"family", "M", "grid", "head", "tail", "mesh_discrepancy", "levels"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["head"].size() == 4);
  CHECK(j["family"] == "log");
}
