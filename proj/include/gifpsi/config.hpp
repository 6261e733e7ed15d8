#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gifpsi/connectives.hpp"
#include "gifpsi/errors.hpp"
#include "gifpsi/map_spec.hpp"
#include "gifpsi/membership.hpp"
#include "gifpsi/point_set.hpp"
#include "gifpsi/random.hpp"
#include "gifpsi/sequence.hpp"

namespace gifpsi {

using Json = nlohmann::ordered_json;

namespace cfg {

inline const Json& require(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw config_error(path.empty() ? key : path + "." + key, "required");
  return j.at(key);
}

inline std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

inline double number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw config_error(path, "must be a number");
  return j.get<double>();
}

inline long integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw config_error(path, "must be an integer");
  return j.get<long>();
}

inline std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) throw config_error(path, "must be a string");
  return j.get<std::string>();
}

inline Vector vector(const Json& j, const std::string& path, int dim = -1) {
  if (!j.is_array()) throw config_error(path, "must be an array of numbers");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  if (dim >= 0 && static_cast<int>(v.size()) != dim)
    throw config_error(path, "must have dimension " + std::to_string(dim));
  return v;
}

inline std::vector<double> grid(const Json& j, const std::string& path) {
  Vector v = vector(j, path);
  if (v.empty()) throw config_error(path, "must be nonempty");
  return v;
}

}  // namespace cfg

/// One entry of the task list; parameters are kept as validated JSON with
/// defaults resolved, so the echoed config is complete.
struct TaskConfig {
  enum class Type { ValidateAxioms, AlphaNorm, AnalyzeSequence, CheckContinuity, CheckCompact };
  Type type = Type::ValidateAxioms;
  Json params;
};

inline const char* to_string(TaskConfig::Type t) {
  switch (t) {
    case TaskConfig::Type::ValidateAxioms: return "validate-axioms";
    case TaskConfig::Type::AlphaNorm: return "alpha-norm";
    case TaskConfig::Type::AnalyzeSequence: return "analyze-sequence";
    case TaskConfig::Type::CheckContinuity: return "check-continuity";
    case TaskConfig::Type::CheckCompact: return "check-compact";
  }
  return "?";
}

/// Fully validated run configuration. Every referenced entity resolves,
/// every tolerance is positive and the seed is explicit.
struct RunConfig {
  int schema_version = 1;
  VectorSpaceConfig space;
  FuzzyConnectives connectives;
  double norm_k = 1.0;
  SamplerConfig sampler;
  std::vector<std::pair<std::string, SequenceSpec>> sequences;
  std::vector<std::pair<std::string, MapSpec>> maps;
  std::vector<std::pair<std::string, PointSetSpec>> sets;
  std::vector<TaskConfig> tasks;
  std::string output;
  bool compat_def51 = false;
  Json echo;  // input with resolved defaults

  GifPsiNorm build_norm() const {
    return GifPsiNorm::standard(space, norm_k, connectives);
  }

  const SequenceSpec& sequence(const std::string& id, const std::string& path) const {
    for (const auto& [k, v] : sequences)
      if (k == id) return v;
    throw config_error(path, "unknown sequence id '" + id + "'");
  }
  const MapSpec& map(const std::string& id, const std::string& path) const {
    for (const auto& [k, v] : maps)
      if (k == id) return v;
    throw config_error(path, "unknown map id '" + id + "'");
  }
  const PointSetSpec& set(const std::string& id, const std::string& path) const {
    for (const auto& [k, v] : sets)
      if (k == id) return v;
    throw config_error(path, "unknown set id '" + id + "'");
  }
};

namespace cfg {

inline CrispNorm parse_crisp_norm(const Json& j, const std::string& path) {
  std::string kind = text(require(j, path, "kind"), join(path, "kind"));
  if (kind == "p-norm") {
    double p = number(require(j, path, "p"), join(path, "p"));
    if (!(p >= 1.0)) throw config_error(join(path, "p"), "must be >= 1");
    return CrispNorm::p_norm(p);
  }
  if (kind == "max-norm") return CrispNorm::max_norm();
  throw config_error(join(path, "kind"), "must be one of: p-norm, max-norm");
}

inline Json norm_kind_object(const Json& j, const std::string& path) {
  // accepts "minimum" shorthand or {"kind": "minimum", ...}
  if (j.is_string()) return Json{{"kind", j.get<std::string>()}};
  if (j.is_object()) return j;
  throw config_error(path, "must be a kind string or an object with a kind field");
}

inline TNorm parse_tnorm(const Json& raw, const std::string& path) {
  Json j = norm_kind_object(raw, path);
  std::string kind = text(require(j, path, "kind"), join(path, "kind"));
  if (kind == "minimum") return TNorm::minimum();
  if (kind == "product") return TNorm::product();
  if (kind == "lukasiewicz") return TNorm::lukasiewicz();
  throw config_error(join(path, "kind"), "must be one of: minimum, product, lukasiewicz");
}

inline TConorm parse_tconorm(const Json& raw, const std::string& path) {
  Json j = norm_kind_object(raw, path);
  std::string kind = text(require(j, path, "kind"), join(path, "kind"));
  if (kind == "maximum") return TConorm::maximum();
  if (kind == "probabilistic-sum") return TConorm::probabilistic_sum();
  if (kind == "bounded-sum") return TConorm::bounded_sum();
  throw config_error(join(path, "kind"),
                     "must be one of: maximum, probabilistic-sum, bounded-sum");
}

inline CircleOp parse_circle(const Json& raw, const std::string& path) {
  Json j = norm_kind_object(raw, path);
  std::string kind = text(require(j, path, "kind"), join(path, "kind"));
  if (kind == "add") return CircleOp::add();
  if (kind == "max") return CircleOp::max();
  if (kind == "power-mean") {
    long n = integer(require(j, path, "n"), join(path, "n"));
    if (n < 1) throw config_error(join(path, "n"), "must be a positive integer");
    return CircleOp::power_mean(static_cast<int>(n));
  }
  throw config_error(join(path, "kind"), "must be one of: add, max, power-mean");
}

inline PsiFunction parse_psi(const Json& raw, const std::string& path) {
  Json j = norm_kind_object(raw, path);
  std::string kind = text(require(j, path, "kind"), join(path, "kind"));
  if (kind == "abs") return PsiFunction::abs();
  if (kind == "abs-power") {
    double p = number(require(j, path, "p"), join(path, "p"));
    if (!(p > 0.0)) throw config_error(join(path, "p"), "must be > 0");
    return PsiFunction::abs_power(p);
  }
  if (kind == "rational-example") {
    long n = integer(require(j, path, "n"), join(path, "n"));
    if (n < 1) throw config_error(join(path, "n"), "must be a positive integer");
    return PsiFunction::rational_example(static_cast<int>(n));
  }
  throw config_error(join(path, "kind"),
                     "must be one of: abs, abs-power, rational-example");
}

inline SequenceSpec parse_sequence(const Json& j, const std::string& path, int dim) {
  std::string kind = text(require(j, path, "kind"), join(path, "kind"));
  if (kind == "affine-decay")
    return SequenceSpec::affine_decay(
        vector(require(j, path, "base"), join(path, "base"), dim),
        vector(require(j, path, "direction"), join(path, "direction"), dim));
  if (kind == "geometric")
    return SequenceSpec::geometric(
        vector(require(j, path, "base"), join(path, "base"), dim),
        vector(require(j, path, "direction"), join(path, "direction"), dim),
        number(require(j, path, "ratio"), join(path, "ratio")));
  if (kind == "oscillating")
    return SequenceSpec::oscillating(
        vector(require(j, path, "base_even"), join(path, "base_even"), dim),
        vector(require(j, path, "dir_even"), join(path, "dir_even"), dim),
        vector(require(j, path, "base_odd"), join(path, "base_odd"), dim),
        vector(require(j, path, "dir_odd"), join(path, "dir_odd"), dim));
  if (kind == "explicit") {
    const Json& vals = require(j, path, "values");
    if (!vals.is_array() || vals.empty())
      throw config_error(join(path, "values"), "must be a nonempty array of vectors");
    std::vector<Vector> values;
    for (std::size_t i = 0; i < vals.size(); ++i)
      values.push_back(vector(vals[i], join(path, "values[" + std::to_string(i) + "]"), dim));
    return SequenceSpec::explicit_list(std::move(values));
  }
  throw config_error(join(path, "kind"),
                     "must be one of: affine-decay, geometric, oscillating, explicit");
}

inline MapSpec parse_map(const Json& j, const std::string& path, int dim) {
  std::string kind = text(require(j, path, "kind"), join(path, "kind"));
  auto rows = [&](const char* key) {
    const Json& m = require(j, path, key);
    if (!m.is_array() || m.empty())
      throw config_error(join(path, key), "must be a nonempty array of rows");
    std::vector<Vector> r;
    for (std::size_t i = 0; i < m.size(); ++i)
      r.push_back(vector(m[i], join(path, std::string(key) + "[" + std::to_string(i) + "]"),
                         dim));
    return r;
  };
  if (kind == "linear") return MapSpec::linear(rows("matrix"));
  if (kind == "affine")
    return MapSpec::affine(rows("matrix"),
                           vector(require(j, path, "offset"), join(path, "offset"), dim));
  if (kind == "componentwise") {
    std::string fn = text(require(j, path, "fn"), join(path, "fn"));
    if (fn == "scale")
      return MapSpec::componentwise_scale(dim, number(require(j, path, "c"), join(path, "c")));
    if (fn == "square") return MapSpec::componentwise_square(dim);
    if (fn == "sign-discontinuous") return MapSpec::componentwise_sign(dim);
    if (fn == "radial-normalize") return MapSpec::radial_normalize(dim);
    throw config_error(join(path, "fn"),
                       "must be one of: scale, square, sign-discontinuous, radial-normalize");
  }
  throw config_error(join(path, "kind"), "must be one of: linear, affine, componentwise");
}

inline PointSetSpec parse_set(const Json& j, const std::string& path, int dim) {
  std::string kind = text(require(j, path, "kind"), join(path, "kind"));
  if (kind == "finite-list") {
    const Json& pts = require(j, path, "points");
    if (!pts.is_array() || pts.empty())
      throw config_error(join(path, "points"), "must be a nonempty array of vectors");
    std::vector<Vector> points;
    for (std::size_t i = 0; i < pts.size(); ++i)
      points.push_back(vector(pts[i], join(path, "points[" + std::to_string(i) + "]"), dim));
    return PointSetSpec::finite_list(std::move(points));
  }
  if (kind == "closed-ball" || kind == "open-ball") {
    Vector c = vector(require(j, path, "center"), join(path, "center"), dim);
    double rho = number(require(j, path, "radius"), join(path, "radius"));
    if (!(rho > 0.0)) throw config_error(join(path, "radius"), "must be > 0");
    return kind == "closed-ball" ? PointSetSpec::closed_ball(std::move(c), rho)
                                 : PointSetSpec::open_ball(std::move(c), rho);
  }
  throw config_error(join(path, "kind"),
                     "must be one of: finite-list, closed-ball, open-ball");
}

inline Json resolve_task_defaults(const Json& t, TaskConfig::Type type) {
  Json p = t;
  auto def = [&](const char* key, const Json& v) {
    if (!p.contains(key)) p[key] = v;
  };
  switch (type) {
    case TaskConfig::Type::ValidateAxioms:
      def("t_grid", Json::array({0.1, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0}));
      def("t_infinity", 1e6);
      def("eps_infinity", 1e-3);
      def("extra_conditions", true);
      break;
    case TaskConfig::Type::AlphaNorm:
      def("variant", "mu");
      def("alpha_grid", Json::array({0.1, 0.25, 0.5, 0.75, 0.9}));
      break;
    case TaskConfig::Type::AnalyzeSequence:
      def("r_grid", Json::array({0.1}));
      def("t_grid", Json::array({1.0}));
      def("horizon", 1000);
      def("p_max", 0);
      def("t_search_grid", Json::array({1.0, 10.0, 100.0, 1000.0}));
      def("r_search_grid", Json::array({0.1, 0.25, 0.5}));
      def("extract_subsequence", false);
      def("reconstruct", false);
      break;
    case TaskConfig::Type::CheckContinuity:
      def("eps_grid", Json::array({0.5, 1.0}));
      def("alpha_grid", Json::array({0.4, 0.6}));
      def("r_grid", Json::array({0.1}));
      def("t_grid", Json::array({1.0}));
      def("horizon", 1000);
      def("samples", 2000);
      break;
    case TaskConfig::Type::CheckCompact:
      def("r_grid", Json::array({0.1}));
      def("t_grid", Json::array({1.0}));
      def("horizon", 1000);
      def("membership_tol", 1e-3);
      break;
  }
  return p;
}

inline void validate_task(const Json& p, TaskConfig::Type type, const std::string& path,
                          const RunConfig& rc) {
  const int dim = rc.space.dimension;
  auto check_grid = [&](const char* key, bool unit_interval) {
    auto g = grid(require(p, path, key), join(path, key));
    for (double v : g) {
      if (unit_interval && !(v > 0.0 && v < 1.0))
        throw config_error(join(path, key), "entries must lie in open (0,1)");
      if (!unit_interval && !(v > 0.0))
        throw config_error(join(path, key), "entries must be > 0");
    }
  };
  switch (type) {
    case TaskConfig::Type::ValidateAxioms: {
      check_grid("t_grid", false);
      if (!(number(p.at("t_infinity"), join(path, "t_infinity")) > 0.0))
        throw config_error(join(path, "t_infinity"), "must be > 0");
      if (!(number(p.at("eps_infinity"), join(path, "eps_infinity")) > 0.0))
        throw config_error(join(path, "eps_infinity"), "must be > 0");
      break;
    }
    case TaskConfig::Type::AlphaNorm: {
      cfg::vector(require(p, path, "vector"), join(path, "vector"), dim);
      auto alphas = grid(require(p, path, "alpha_grid"), join(path, "alpha_grid"));
      for (double a : alphas)
        if (!(a > 0.0 && a < 1.0))
          throw config_error(join(path, "alpha_grid"), "must lie in open (0,1)");
      std::string variant = text(p.at("variant"), join(path, "variant"));
      if (variant != "mu" && variant != "nu")
        throw config_error(join(path, "variant"), "must be mu or nu");
      if (p.contains("crisp_axioms_alpha")) {
        double a = number(p.at("crisp_axioms_alpha"), join(path, "crisp_axioms_alpha"));
        if (!(a > 0.0 && a < 1.0))
          throw config_error(join(path, "crisp_axioms_alpha"), "must lie in open (0,1)");
      }
      if (p.contains("collinearity")) {
        const Json& c = p.at("collinearity");
        std::string cpath = join(path, "collinearity");
        const Json& vecs = require(c, cpath, "vectors");
        if (!vecs.is_array() || vecs.empty())
          throw config_error(join(cpath, "vectors"), "must be a nonempty array of vectors");
        for (std::size_t i = 0; i < vecs.size(); ++i)
          cfg::vector(vecs[i], join(cpath, "vectors[" + std::to_string(i) + "]"), dim);
        double a = number(require(c, cpath, "alpha"), join(cpath, "alpha"));
        if (!(a > 0.0 && a < 1.0))
          throw config_error(join(cpath, "alpha"), "must lie in open (0,1)");
      }
      break;
    }
    case TaskConfig::Type::AnalyzeSequence: {
      rc.sequence(text(require(p, path, "sequence"), join(path, "sequence")),
                  join(path, "sequence"));
      if (p.contains("limit")) cfg::vector(p.at("limit"), join(path, "limit"), dim);
      check_grid("r_grid", true);
      check_grid("t_grid", false);
      check_grid("t_search_grid", false);
      check_grid("r_search_grid", true);
      if (integer(p.at("horizon"), join(path, "horizon")) < 10)
        throw config_error(join(path, "horizon"), "must be >= 10");
      break;
    }
    case TaskConfig::Type::CheckContinuity: {
      rc.map(text(require(p, path, "map"), join(path, "map")), join(path, "map"));
      cfg::vector(require(p, path, "x0"), join(path, "x0"), dim);
      const Json& fam = require(p, path, "family");
      if (!fam.is_array() || fam.empty())
        throw config_error(join(path, "family"), "must be a nonempty array of sequence ids");
      for (const auto& f : fam)
        rc.sequence(text(f, join(path, "family")), join(path, "family"));
      check_grid("eps_grid", false);
      check_grid("alpha_grid", true);
      check_grid("r_grid", true);
      check_grid("t_grid", false);
      break;
    }
    case TaskConfig::Type::CheckCompact: {
      rc.set(text(require(p, path, "set"), join(path, "set")), join(path, "set"));
      const Json& probes = require(p, path, "probes");
      if (!probes.is_array() || probes.empty())
        throw config_error(join(path, "probes"), "must be a nonempty array of sequence ids");
      for (const auto& pr : probes)
        rc.sequence(text(pr, join(path, "probes")), join(path, "probes"));
      check_grid("r_grid", true);
      check_grid("t_grid", false);
      if (p.contains("image_map"))
        rc.map(text(p.at("image_map"), join(path, "image_map")), join(path, "image_map"));
      break;
    }
  }
}

}  // namespace cfg

/// Full schema + referential-integrity validation; defaults resolved and
/// echoed. Every diagnostic names the offending field path.
inline RunConfig validate_config(const Json& j) {
  if (!j.is_object()) throw config_error("", "config must be a JSON object");
  RunConfig rc;

  if (j.contains("schema_version")) {
    rc.schema_version =
        static_cast<int>(cfg::integer(j.at("schema_version"), "schema_version"));
    if (rc.schema_version != 1) throw config_error("schema_version", "must be 1");
  }

  const Json& space = cfg::require(j, "", "space");
  long dim = cfg::integer(cfg::require(space, "space", "dimension"), "space.dimension");
  if (dim < 1) throw config_error("space.dimension", "must be >= 1");
  rc.space.dimension = static_cast<int>(dim);
  if (space.contains("crisp_norm"))
    rc.space.crisp_norm = cfg::parse_crisp_norm(space.at("crisp_norm"), "space.crisp_norm");

  if (j.contains("connectives")) {
    const Json& conn = j.at("connectives");
    if (conn.contains("tnorm"))
      rc.connectives.tnorm = cfg::parse_tnorm(conn.at("tnorm"), "connectives.tnorm");
    if (conn.contains("tconorm"))
      rc.connectives.tconorm = cfg::parse_tconorm(conn.at("tconorm"), "connectives.tconorm");
    if (conn.contains("circle"))
      rc.connectives.circle = cfg::parse_circle(conn.at("circle"), "connectives.circle");
    if (conn.contains("psi"))
      rc.connectives.psi = cfg::parse_psi(conn.at("psi"), "connectives.psi");
  }

  const Json& norm = cfg::require(j, "", "norm");
  std::string norm_kind = cfg::text(cfg::require(norm, "norm", "kind"), "norm.kind");
  if (norm_kind != "standard")
    throw config_error("norm.kind", "must be standard (custom norms are API-only)");
  rc.norm_k = cfg::number(cfg::require(norm, "norm", "k"), "norm.k");
  if (!(rc.norm_k > 0.0)) throw config_error("norm.k", "must be > 0");

  const Json& sampler = cfg::require(j, "", "sampler");
  rc.sampler.seed =
      static_cast<std::uint64_t>(cfg::integer(cfg::require(sampler, "sampler", "seed"),
                                              "sampler.seed"));
  rc.sampler.samples = sampler.contains("samples")
                           ? static_cast<int>(cfg::integer(sampler.at("samples"),
                                                           "sampler.samples"))
                           : 10000;
  if (rc.sampler.samples <= 0) throw config_error("sampler.samples", "must be > 0");
  rc.sampler.tolerance =
      sampler.contains("tolerance") ? cfg::number(sampler.at("tolerance"), "sampler.tolerance")
                                    : 1e-9;
  if (!(rc.sampler.tolerance > 0.0)) throw config_error("sampler.tolerance", "must be > 0");

  auto parse_entities = [&](const char* key, auto parser, auto& target) {
    if (!j.contains(key)) return;
    const Json& arr = j.at(key);
    if (!arr.is_array()) throw config_error(key, "must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string path = std::string(key) + "[" + std::to_string(i) + "]";
      std::string id = cfg::text(cfg::require(arr[i], path, "id"), path + ".id");
      for (const auto& [existing, _] : target)
        if (existing == id) throw config_error(path + ".id", "duplicate id '" + id + "'");
      target.emplace_back(id, parser(arr[i], path, rc.space.dimension));
    }
  };
  parse_entities("sequences", [](const Json& e, const std::string& p, int d) {
    return cfg::parse_sequence(e, p, d);
  }, rc.sequences);
  parse_entities("maps", [](const Json& e, const std::string& p, int d) {
    return cfg::parse_map(e, p, d);
  }, rc.maps);
  parse_entities("sets", [](const Json& e, const std::string& p, int d) {
    return cfg::parse_set(e, p, d);
  }, rc.sets);

  if (j.contains("tasks")) {
    const Json& tasks = j.at("tasks");
    if (!tasks.is_array()) throw config_error("tasks", "must be an array");
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      std::string path = "tasks[" + std::to_string(i) + "]";
      std::string type_str = cfg::text(cfg::require(tasks[i], path, "type"), path + ".type");
      TaskConfig tc;
      if (type_str == "validate-axioms")
        tc.type = TaskConfig::Type::ValidateAxioms;
      else if (type_str == "alpha-norm")
        tc.type = TaskConfig::Type::AlphaNorm;
      else if (type_str == "analyze-sequence")
        tc.type = TaskConfig::Type::AnalyzeSequence;
      else if (type_str == "check-continuity")
        tc.type = TaskConfig::Type::CheckContinuity;
      else if (type_str == "check-compact")
        tc.type = TaskConfig::Type::CheckCompact;
      else
        throw config_error(path + ".type",
                           "must be one of: validate-axioms, alpha-norm, analyze-sequence, "
                           "check-continuity, check-compact");
      tc.params = cfg::resolve_task_defaults(tasks[i], tc.type);
      cfg::validate_task(tc.params, tc.type, path, rc);
      rc.tasks.push_back(std::move(tc));
    }
  }

  if (j.contains("output")) rc.output = cfg::text(j.at("output"), "output");
  if (j.contains("compat_def51")) {
    if (!j.at("compat_def51").is_boolean())
      throw config_error("compat_def51", "must be a boolean");
    rc.compat_def51 = j.at("compat_def51").get<bool>();
  }

  // echoed config with resolved defaults
  Json echo = j;
  echo["schema_version"] = rc.schema_version;
  echo["sampler"] = Json{{"seed", rc.sampler.seed},
                         {"samples", rc.sampler.samples},
                         {"tolerance", rc.sampler.tolerance}};
  if (!echo.contains("connectives")) echo["connectives"] = Json::object();
  Json tasks_echo = Json::array();
  for (const auto& t : rc.tasks) {
    Json te = t.params;
    te["type"] = to_string(t.type);
    tasks_echo.push_back(te);
  }
  echo["tasks"] = tasks_echo;
  echo["compat_def51"] = rc.compat_def51;
  rc.echo = echo;
  return rc;
}

inline RunConfig validate_config_text(const std::string& raw) {
  Json j = Json::parse(raw, nullptr, false);
  if (j.is_discarded()) throw config_error("", "not valid JSON");
  return validate_config(j);
}

}  // namespace gifpsi
