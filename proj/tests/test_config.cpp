#include <catch2/catch_amalgamated.hpp>

#include "gifpsi/config.hpp"
#include "gifpsi/runner.hpp"

using namespace gifpsi;

namespace {

Json minimal_config() {
  return Json::parse(R"({
    "schema_version": 1,
    "space": {"dimension": 2, "crisp_norm": {"kind": "p-norm", "p": 2.0}},
    "connectives": {"tnorm": "minimum", "tconorm": "maximum", "circle": "add", "psi": "abs"},
    "norm": {"kind": "standard", "k": 1.0},
    "sampler": {"seed": 42, "samples": 500, "tolerance": 1e-9},
    "tasks": []
  })");
}

std::string field_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const config_error& e) {
    return e.field;
  }
  return "";
}

}  // namespace

TEST_CASE("config diagnostics name the offending field") {
  SECTION("missing seed") {
    Json j = minimal_config();
    j["sampler"].erase("seed");
    CHECK(field_of([&] { validate_config(j); }) == "sampler.seed");
  }

  SECTION("negative k") {
    Json j = minimal_config();
    j["norm"]["k"] = -1.0;
    std::string field;
    std::string message;
    try {
      validate_config(j);
    } catch (const config_error& e) {
      field = e.field;
      message = e.what();
    }
    CHECK(field == "norm.k");
    CHECK(message == "norm.k: must be > 0");
  }

  SECTION("alpha = 1.0 in an alpha-norm task") {
    Json j = minimal_config();
    j["tasks"] = Json::array({Json{{"type", "alpha-norm"},
                                   {"vector", Json::array({3.0, 4.0})},
                                   {"alpha_grid", Json::array({0.5, 1.0})}}});
    std::string message;
    try {
      validate_config(j);
    } catch (const config_error& e) {
      message = e.what();
    }
    CHECK(message.find("must lie in open (0,1)") != std::string::npos);
  }

  SECTION("unknown references are rejected") {
    Json j = minimal_config();
    j["tasks"] = Json::array({Json{{"type", "analyze-sequence"}, {"sequence", "ghost"}}});
    CHECK_THROWS_AS(validate_config(j), config_error);
  }

  SECTION("dimension mismatches inside entities are rejected") {
    Json j = minimal_config();
    j["sequences"] = Json::array({Json{{"id", "bad"},
                                       {"kind", "affine-decay"},
                                       {"base", Json::array({0.0, 0.0, 0.0})},
                                       {"direction", Json::array({1.0, 0.0, 0.0})}}});
    std::string field = field_of([&] { validate_config(j); });
    CHECK(field.find("sequences[0]") != std::string::npos);
  }

  SECTION("duplicate ids are rejected") {
    Json j = minimal_config();
    Json seq = Json{{"id", "s"},
                    {"kind", "affine-decay"},
                    {"base", Json::array({0.0, 0.0})},
                    {"direction", Json::array({1.0, 0.0})}};
    j["sequences"] = Json::array({seq, seq});
    CHECK(field_of([&] { validate_config(j); }) == "sequences[1].id");
  }

  SECTION("invalid JSON text") {
    CHECK_THROWS_AS(validate_config_text("{ not json"), config_error);
  }
}

TEST_CASE("defaults are resolved and echoed") {
  Json j = minimal_config();
  j["sampler"].erase("samples");
  j["sampler"].erase("tolerance");
  j["tasks"] = Json::array({Json{{"type", "validate-axioms"}}});
  RunConfig rc = validate_config(j);
  CHECK(rc.sampler.samples == 10000);
  CHECK(rc.sampler.tolerance == 1e-9);
  CHECK(rc.echo["sampler"]["samples"] == 10000);
  CHECK(rc.echo["tasks"][0].contains("t_grid"));
  CHECK(rc.echo["tasks"][0]["t_infinity"] == 1e6);
}

TEST_CASE("empty task lists run cleanly") {
  RunConfig rc = validate_config(minimal_config());
  auto report = run(rc);
  CHECK(report.tasks.empty());
  CHECK(report.violations == 0);
}

TEST_CASE("runner executes tasks and flags violations") {
  Json j = minimal_config();
  j["tasks"] = Json::array({Json{{"type", "validate-axioms"}}});

  SECTION("the standard space validates cleanly") {
    auto report = run(validate_config(j));
    REQUIRE(report.tasks.size() == 1);
    CHECK_FALSE(report.tasks[0].violation);
    CHECK(report.violations == 0);
  }

  SECTION("circle=max raises a violation") {
    j["connectives"]["circle"] = "max";
    auto report = run(validate_config(j));
    CHECK(report.violations == 1);
    CHECK(report.tasks[0].violation);
  }
}

TEST_CASE("report payloads are deterministic and self-describing") {
  Json j = minimal_config();
  j["sequences"] = Json::array({Json{{"id", "harmonic"},
                                     {"kind", "affine-decay"},
                                     {"base", Json::array({0.0, 0.0})},
                                     {"direction", Json::array({1.0, 0.0})}}});
  j["tasks"] = Json::array({Json{{"type", "analyze-sequence"},
                                 {"sequence", "harmonic"},
                                 {"limit", Json::array({0.0, 0.0})},
                                 {"horizon", 200}}});
  RunConfig rc = validate_config(j);
  auto a = run(rc, false);
  auto b = run(rc, true);
  CHECK(a.payload_json().dump() == b.payload_json().dump());
  // the full report carries timing outside the payload
  Json full = a.full_json();
  CHECK(full.contains("timing"));
  CHECK(full["config"]["sampler"]["seed"] == 42);
  // detector cells serialize with stable names
  const Json& cells = full["tasks"][0]["result"]["convergence"]["cells"];
  REQUIRE(cells.is_array());
  CHECK(cells[0].contains("r"));
  CHECK(cells[0].contains("t"));
  CHECK(cells[0].contains("n0"));
}

TEST_CASE("norm kinds other than standard are rejected in config") {
  Json j = minimal_config();
  j["norm"]["kind"] = "custom";
  CHECK(field_of([&] { validate_config(j); }) == "norm.kind");
}
