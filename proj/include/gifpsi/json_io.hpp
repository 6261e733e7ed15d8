#pragma once

#include <json.hpp>

#include "gifpsi/alpha_norm.hpp"
#include "gifpsi/continuity.hpp"
#include "gifpsi/point_set.hpp"
#include "gifpsi/report.hpp"
#include "gifpsi/sequence_checks.hpp"
#include "gifpsi/subsequence.hpp"

namespace gifpsi {

using Json = nlohmann::ordered_json;

inline Json to_json(const Witness& w) {
  Json j = Json::object();
  for (const auto& [name, values] : w.entries) {
    if (values.size() == 1)
      j[name] = values[0];
    else
      j[name] = values;
  }
  return j;
}

inline Json to_json(const AxiomCheck& c) {
  Json j;
  j["axiom"] = c.axiom;
  j["status"] = to_string(c.status);
  j["witness"] = to_json(c.witness);
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["tolerance"] = c.tolerance;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline Json to_json(const AxiomReport& r) {
  Json j;
  j["all_passed"] = r.all_passed();
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  return j;
}

inline const char* verdict_label(const ConvergenceReport& r) {
  if (r.check == "cauchy") {
    switch (r.verdict) {
      case Verdict::Positive: return "cauchy";
      case Verdict::Negative: return "not-cauchy";
      case Verdict::Inconclusive: return "inconclusive";
    }
  }
  switch (r.verdict) {
    case Verdict::Positive: return "converges";
    case Verdict::Negative: return "diverges";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

inline Json to_json(const ConvergenceReport& r) {
  Json j;
  j["check"] = r.check;
  j["verdict"] = verdict_label(r);
  if (!r.candidate_limit.empty()) j["candidate_limit"] = r.candidate_limit;
  j["horizon"] = r.horizon;
  j["cells"] = Json::array();
  for (const auto& c : r.cells) {
    Json cell;
    cell["r"] = c.r;
    cell["t"] = c.t;
    cell["verdict"] = c.pass ? "pass" : "fail";
    if (c.pass)
      cell["n0"] = c.n0;
    else
      cell["violation"] = c.violation;
    j["cells"].push_back(cell);
  }
  if (!r.trajectory_t.empty()) {
    j["trajectories"] = Json::array();
    for (std::size_t ti = 0; ti < r.trajectory_t.size(); ++ti) {
      Json traj;
      traj["t"] = r.trajectory_t[ti];
      traj["points"] = Json::array();
      for (const auto& p : r.trajectories[ti])
        traj["points"].push_back(Json{{"n", p.n}, {"mu", p.mu}, {"nu", p.nu}});
      j["trajectories"].push_back(traj);
    }
  }
  j["limit_form_holds"] = r.limit_form_holds;
  j["limit_form_eps"] = r.limit_form_eps;
  j["note"] = r.note;
  return j;
}

inline Json to_json(const ConvergentCauchyReport& r) {
  Json j;
  j["convergence"] = to_json(r.convergence);
  j["cauchy"] = to_json(r.cauchy);
  j["violation"] = r.violation;
  return j;
}

inline Json to_json(const LimitArithmeticReport& r) {
  Json j;
  j["sum_check"] = to_json(r.sum_check);
  j["scaled_check"] = to_json(r.scaled_check);
  j["scalar"] = r.scalar;
  j["violation"] = r.violation;
  return j;
}

inline Json to_json(const UniquenessReport& r) {
  Json j;
  j["to_x"] = to_json(r.to_x);
  j["to_y"] = to_json(r.to_y);
  j["violation"] = r.violation;
  return j;
}

inline Json to_json(const BoundednessCertificate& c) {
  Json j;
  j["found"] = c.found;
  if (c.found) {
    j["t"] = c.t;
    j["r"] = c.r;
  } else {
    j["first_violating_index"] = c.first_violating_index;
  }
  j["horizon"] = c.horizon;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline Json to_json(const CauchyBoundedReport& r) {
  Json j;
  j["cauchy"] = to_json(r.cauchy);
  j["certificate"] = to_json(r.certificate);
  j["violation"] = r.violation;
  return j;
}

inline Json to_json(const SubsequenceResult& r) {
  Json j;
  j["indices"] = r.indices;
  j["limit"] = r.limit;
  j["coordinate_limits"] = r.expansion.coordinate_limits;
  j["halving_steps"] = r.halving_steps;
  j["final_spread"] = r.final_spread;
  return j;
}

inline Json to_json(const ReconstructionResult& r) {
  Json j;
  j["limit"] = r.limit;
  j["coordinate_limits"] = r.coordinate_limits;
  j["max_tail_gap"] = r.max_tail_gap;
  j["tail_start"] = r.tail_start;
  j["horizon"] = r.horizon;
  return j;
}

inline Json to_json(const ClosedPointReport& r) {
  Json j;
  j["closure_point"] = r.closure_point;
  j["in_set"] = r.in_set;
  j["closedness_consistent"] = r.closedness_consistent;
  j["constructed_target"] = r.constructed_target;
  j["convergence"] = to_json(r.convergence);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json to_json(const CompactnessReport& r) {
  Json j;
  j["compatible"] = r.compatible;
  j["set_closed"] = r.set_closed;
  j["set_bounded"] = r.set_bounded;
  j["theorem_violation"] = r.theorem_violation;
  j["probes"] = Json::array();
  for (const auto& p : r.probes) {
    Json e;
    e["subsequence"] = to_json(p.subsequence);
    e["limit_in_set"] = p.limit_in_set;
    e["limit_closure"] = to_json(p.limit_closure);
    j["probes"].push_back(e);
  }
  j["note"] = r.note;
  return j;
}

inline Json to_json(const AscendingFamilyReport& r) {
  Json j;
  j["x"] = r.x;
  j["profile"] = Json::array();
  for (std::size_t i = 0; i < r.alphas.size(); ++i)
    j["profile"].push_back(Json{{"alpha", r.alphas[i]}, {"value", r.values[i]}});
  j["nondecreasing"] = r.nondecreasing;
  j["violations"] = r.violations;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json to_json(const CollinearityEstimate& e) {
  Json j;
  j["alpha"] = e.alpha;
  j["vectors"] = e.vectors;
  j["c_alpha_estimate"] = e.c_alpha_estimate;
  j["argmin_coefficients"] = e.argmin_coefficients;
  j["note"] = e.note;
  return j;
}

inline Json to_json(const SequentialContinuityReport& r) {
  Json j;
  j["positive"] = r.positive;
  j["x0"] = r.x0;
  j["members"] = Json::array();
  for (const auto& m : r.members) {
    Json e;
    e["input_check"] = to_json(m.input_check);
    e["image_check"] = to_json(m.image_check);
    j["members"].push_back(e);
  }
  return j;
}

inline Json to_json(const StrongContinuityReport& r) {
  Json j;
  j["positive"] = r.positive;
  j["x0"] = r.x0;
  j["delta_table"] = Json::array();
  for (const auto& e : r.entries) {
    Json row;
    row["eps"] = e.eps;
    row["found"] = e.found;
    if (e.found)
      row["delta"] = e.delta;
    else {
      row["witness"] = to_json(e.witness);
      row["failed_condition"] = e.failed_condition;
    }
    j["delta_table"].push_back(row);
  }
  return j;
}

inline Json to_json(const IfcSearchResult& r) {
  Json j;
  j["positive"] = r.positive;
  j["eps"] = r.eps;
  j["alpha"] = r.alpha;
  if (r.positive) {
    j["delta"] = r.delta;
    j["beta"] = r.beta;
  } else {
    j["counterexample"] = to_json(r.counterexample);
    j["counterexample_universal"] = r.counterexample_universal;
  }
  j["note"] = r.note;
  return j;
}

inline Json to_json(const IfcSequentialConsistency& r) {
  Json j;
  j["ifc_positive"] = r.ifc_positive;
  j["sequential_positive"] = r.sequential_positive;
  j["violation"] = r.violation;
  j["ifc_results"] = Json::array();
  for (const auto& e : r.ifc_results) j["ifc_results"].push_back(to_json(e));
  j["sequential"] = to_json(r.sequential);
  return j;
}

inline Json to_json(const StrongSequentialConsistency& r) {
  Json j;
  j["strong_positive"] = r.strong_positive;
  j["sequential_positive"] = r.sequential_positive;
  j["violation"] = r.violation;
  j["strong"] = to_json(r.strong);
  j["sequential"] = to_json(r.sequential);
  return j;
}

inline Json to_json(const CompactImageReport& r) {
  Json j;
  j["compatible"] = r.compatible;
  j["set_closed"] = r.set_closed;
  j["set_bounded"] = r.set_bounded;
  j["probes"] = Json::array();
  for (const auto& p : r.probes) {
    Json e;
    e["image_subsequence"] = to_json(p.image_subsequence);
    e["image_limit_in_set"] = p.image_limit_in_set;
    j["probes"].push_back(e);
  }
  j["note"] = r.note;
  return j;
}

}  // namespace gifpsi
