#pragma once

#include <chrono>
#include <future>
#include <string>
#include <utility>
#include <vector>

#include "gifpsi/config.hpp"
#include "gifpsi/corpus.hpp"
#include "gifpsi/json_io.hpp"
#include "gifpsi/version.hpp"

namespace gifpsi {

struct TaskResult {
  std::string type;
  Json result;
  bool violation = false;
  bool errored = false;
  double wall_ms = 0.0;
};

/// Full run output. The payload is deterministic for a fixed config
/// (timings are kept outside it).
struct RunReport {
  Json config_echo;
  std::vector<TaskResult> tasks;
  int violations = 0;

  Json payload_json() const {
    Json j;
    j["artifact_version"] = version;
    j["config"] = config_echo;
    j["tasks"] = Json::array();
    for (const auto& t : tasks) {
      Json e;
      e["type"] = t.type;
      e["result"] = t.result;
      e["violation"] = t.violation;
      j["tasks"].push_back(e);
    }
    j["violations"] = violations;
    return j;
  }

  Json full_json() const {
    Json j = payload_json();
    Json timing = Json::array();
    for (const auto& t : tasks) timing.push_back(t.wall_ms);
    j["timing"] = Json{{"wall_time_ms", timing}};
    return j;
  }
};

namespace detail {

inline std::vector<double> json_grid(const Json& p, const char* key) {
  std::vector<double> g;
  for (const auto& v : p.at(key)) g.push_back(v.get<double>());
  return g;
}

inline TaskResult run_validate_axioms(const RunConfig& rc, const Json& p) {
  TaskResult out;
  GifPsiNorm nrm = rc.build_norm();
  ValidatorOptions opt;
  opt.sampler = rc.sampler;
  opt.t_grid = json_grid(p, "t_grid");
  opt.t_infinity = p.at("t_infinity").get<double>();
  opt.eps_infinity = p.at("eps_infinity").get<double>();

  AxiomReport main = validate_axioms(nrm, opt);
  out.result["axioms"] = to_json(main);
  bool ok = main.all_passed();
  if (p.at("extra_conditions").get<bool>()) {
    AxiomReport extra = check_extra_conditions(nrm, opt);
    out.result["extra_conditions"] = to_json(extra);
    ok = ok && extra.all_passed();
  }
  out.violation = !ok;
  return out;
}

inline TaskResult run_alpha_norm(const RunConfig& rc, const Json& p) {
  TaskResult out;
  AlphaNormFamily family{rc.build_norm(),
                         p.at("variant").get<std::string>() == "nu"
                             ? AlphaNormFamily::Variant::Nu
                             : AlphaNormFamily::Variant::Mu};

  Vector x;
  for (const auto& v : p.at("vector")) x.push_back(v.get<double>());
  auto ascending = check_ascending_family(family, x, json_grid(p, "alpha_grid"));
  out.result["profile"] = to_json(ascending);
  bool ok = ascending.nondecreasing;

  if (p.contains("crisp_axioms_alpha")) {
    auto axioms =
        check_crisp_norm_axioms(family, p.at("crisp_axioms_alpha").get<double>(), rc.sampler);
    out.result["crisp_axioms"] = to_json(axioms);
    ok = ok && axioms.all_passed();
  }
  if (p.contains("collinearity")) {
    const Json& c = p.at("collinearity");
    std::vector<Vector> vectors;
    for (const auto& row : c.at("vectors")) {
      Vector v;
      for (const auto& e : row) v.push_back(e.get<double>());
      vectors.push_back(std::move(v));
    }
    auto est = estimate_collinearity_constant(family, vectors, c.at("alpha").get<double>(),
                                              rc.sampler);
    out.result["collinearity"] = to_json(est);
  }
  out.violation = !ok;
  return out;
}

inline TaskResult run_analyze_sequence(const RunConfig& rc, const Json& p) {
  TaskResult out;
  GifPsiNorm nrm = rc.build_norm();
  const SequenceSpec& seq = rc.sequence(p.at("sequence").get<std::string>(), "task.sequence");
  auto r_grid = json_grid(p, "r_grid");
  auto t_grid = json_grid(p, "t_grid");
  const long N = p.at("horizon").get<long>();
  const long p_max = p.at("p_max").get<long>();

  bool violation = false;
  auto cauchy = check_cauchy(nrm, seq, r_grid, t_grid, N, p_max);
  out.result["cauchy"] = to_json(cauchy);

  if (p.contains("limit")) {
    Vector x;
    for (const auto& v : p.at("limit")) x.push_back(v.get<double>());
    auto conv = check_convergence(nrm, seq, x, r_grid, t_grid, N);
    out.result["convergence"] = to_json(conv);
    bool th38_flag = conv.positive() && cauchy.verdict == Verdict::Negative;
    out.result["convergent_implies_cauchy_violation"] = th38_flag;
    violation = violation || th38_flag;
  }

  auto cert = check_bounded(nrm, seq, N, json_grid(p, "t_search_grid"),
                            json_grid(p, "r_search_grid"));
  out.result["boundedness"] = to_json(cert);
  bool th319_flag = cauchy.positive() && !cert.found;
  out.result["cauchy_implies_bounded_violation"] = th319_flag;
  violation = violation || th319_flag;

  std::vector<Vector> basis;
  for (int i = 0; i < nrm.dimension(); ++i) basis.push_back(nrm.space().basis_vector(i));
  if (p.at("extract_subsequence").get<bool>()) {
    auto sub = extract_convergent_subsequence(nrm, seq, N, basis);
    out.result["subsequence"] = to_json(sub);
    auto reverify = check_convergence(nrm, subsequence_as_spec(seq, sub.indices), sub.limit,
                                      r_grid, t_grid, N);
    out.result["subsequence_reverified"] = reverify.positive();
    violation = violation || !reverify.positive();
  }
  if (p.at("reconstruct").get<bool>()) {
    auto rec = coordinate_limit_reconstruction(nrm, seq, basis, N);
    out.result["reconstruction"] = to_json(rec);
    auto conv = check_convergence(nrm, seq, rec.limit, r_grid, t_grid, N);
    out.result["reconstruction_converges"] = conv.positive();
    violation = violation || !conv.positive();
  }
  out.violation = violation;
  return out;
}

inline TaskResult run_check_continuity(const RunConfig& rc, const Json& p) {
  TaskResult out;
  GifPsiNorm nrm = rc.build_norm();
  const MapSpec& f = rc.map(p.at("map").get<std::string>(), "task.map");
  Vector x0;
  for (const auto& v : p.at("x0")) x0.push_back(v.get<double>());
  std::vector<SequenceSpec> family;
  for (const auto& id : p.at("family"))
    family.push_back(rc.sequence(id.get<std::string>(), "task.family"));

  auto eps_grid = json_grid(p, "eps_grid");
  auto alpha_grid = json_grid(p, "alpha_grid");
  auto r_grid = json_grid(p, "r_grid");
  auto t_grid = json_grid(p, "t_grid");
  const long N = p.at("horizon").get<long>();

  ContinuitySearchOptions opt;
  opt.seed = rc.sampler.seed;
  opt.samples_per_candidate = p.at("samples").get<int>();
  opt.section2_form = rc.compat_def51;

  auto iff = check_ifc_iff_sequential(f, x0, nrm, nrm, family, eps_grid, alpha_grid, r_grid,
                                      t_grid, N, opt);
  out.result["ifc_iff_sequential"] = to_json(iff);
  auto strong = check_strong_implies_sequential(f, x0, nrm, nrm, family, eps_grid, r_grid,
                                                t_grid, N, opt);
  out.result["strong_implies_sequential"] = to_json(strong);
  out.violation = iff.violation || strong.violation;
  return out;
}

inline TaskResult run_check_compact(const RunConfig& rc, const Json& p) {
  TaskResult out;
  GifPsiNorm nrm = rc.build_norm();
  const PointSetSpec& set = rc.set(p.at("set").get<std::string>(), "task.set");
  std::vector<SequenceSpec> probes;
  for (const auto& id : p.at("probes"))
    probes.push_back(rc.sequence(id.get<std::string>(), "task.probes"));
  auto r_grid = json_grid(p, "r_grid");
  auto t_grid = json_grid(p, "t_grid");
  const long N = p.at("horizon").get<long>();
  const double tol = p.at("membership_tol").get<double>();

  auto rep = check_compact(nrm, set, probes, N, r_grid, t_grid, tol);
  out.result["compactness"] = to_json(rep);
  out.violation = rep.theorem_violation;

  if (p.contains("image_map")) {
    const MapSpec& f = rc.map(p.at("image_map").get<std::string>(), "task.image_map");
    auto image = check_compact_image(f, nrm, nrm, set, probes, N, r_grid, t_grid, tol);
    out.result["compact_image"] = to_json(image);
    bool image_violation =
        rep.set_closed && rep.set_bounded && rep.compatible && !image.compatible;
    out.result["compact_image_violation"] = image_violation;
    out.violation = out.violation || image_violation;
  }
  return out;
}

inline TaskResult run_task(const RunConfig& rc, const TaskConfig& t) {
  auto start = std::chrono::steady_clock::now();
  TaskResult out;
  try {
    switch (t.type) {
      case TaskConfig::Type::ValidateAxioms: out = run_validate_axioms(rc, t.params); break;
      case TaskConfig::Type::AlphaNorm: out = run_alpha_norm(rc, t.params); break;
      case TaskConfig::Type::AnalyzeSequence: out = run_analyze_sequence(rc, t.params); break;
      case TaskConfig::Type::CheckContinuity: out = run_check_continuity(rc, t.params); break;
      case TaskConfig::Type::CheckCompact: out = run_check_compact(rc, t.params); break;
    }
  } catch (const std::exception& e) {
    out.result = Json{{"error", e.what()}};
    out.errored = true;
    out.violation = true;
  }
  out.type = to_string(t.type);
  out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
  return out;
}

}  // namespace detail

/// Executes the config's tasks (sequentially, or concurrently with
/// identical payloads when parallel is set) and aggregates the report.
inline RunReport run(const RunConfig& rc, bool parallel = false) {
  RunReport report;
  report.config_echo = rc.echo;
  if (parallel) {
    std::vector<std::future<TaskResult>> futures;
    futures.reserve(rc.tasks.size());
    for (const auto& t : rc.tasks)
      futures.push_back(std::async(std::launch::async,
                                   [&rc, &t] { return detail::run_task(rc, t); }));
    for (auto& f : futures) report.tasks.push_back(f.get());
  } else {
    for (const auto& t : rc.tasks) report.tasks.push_back(detail::run_task(rc, t));
  }
  for (const auto& t : report.tasks)
    if (t.violation) ++report.violations;
  return report;
}

}  // namespace gifpsi
