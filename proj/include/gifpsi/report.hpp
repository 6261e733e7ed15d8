#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "gifpsi/space.hpp"

namespace gifpsi {

/// Concrete point at which a check failed. Stored as ordered (name, values)
/// pairs so reports serialize with stable field order; scalars are
/// single-element vectors.
struct Witness {
  std::vector<std::pair<std::string, Vector>> entries;

  Witness& set(const std::string& name, double v) {
    entries.emplace_back(name, Vector{v});
    return *this;
  }
  Witness& set(const std::string& name, const Vector& v) {
    entries.emplace_back(name, v);
    return *this;
  }
  bool empty() const { return entries.empty(); }

  const Vector* find(const std::string& name) const {
    for (const auto& [k, v] : entries)
      if (k == name) return &v;
    return nullptr;
  }
  double scalar(const std::string& name) const {
    const Vector* v = find(name);
    if (!v || v->empty()) throw domain_error("witness has no scalar entry '" + name + "'");
    return (*v)[0];
  }
};

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

/// Result of checking one axiom on sampled points. On failure the witness
/// re-evaluates to the recorded lhs/rhs beyond tolerance.
struct AxiomCheck {
  std::string axiom;
  CheckStatus status = CheckStatus::Pass;
  Witness witness;
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  std::string note;

  static AxiomCheck pass(std::string id, double tol, std::string note = {}) {
    AxiomCheck c;
    c.axiom = std::move(id);
    c.tolerance = tol;
    c.note = std::move(note);
    return c;
  }
  static AxiomCheck fail(std::string id, Witness w, double lhs, double rhs, double tol,
                         std::string note = {}) {
    AxiomCheck c;
    c.axiom = std::move(id);
    c.status = CheckStatus::Fail;
    c.witness = std::move(w);
    c.lhs = lhs;
    c.rhs = rhs;
    c.tolerance = tol;
    c.note = std::move(note);
    return c;
  }
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AxiomCheck& c) { return c.status != CheckStatus::Fail; });
  }

  const AxiomCheck* find(const std::string& axiom) const {
    for (const auto& c : checks)
      if (c.axiom == axiom) return &c;
    return nullptr;
  }
};

}  // namespace gifpsi
