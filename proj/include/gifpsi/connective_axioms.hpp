#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "gifpsi/connectives.hpp"
#include "gifpsi/random.hpp"
#include "gifpsi/report.hpp"

namespace gifpsi {

namespace detail {

/// Samples in [0,1] with the corner cases pinned to the front so that a
/// violating operation fails on the same (lowest) index for every seed.
inline std::vector<double> unit_samples(Rng& rng, int count) {
  std::vector<double> v{0.0, 1.0, 0.5, 0.25, 0.75};
  while (static_cast<int>(v.size()) < count) v.push_back(rng.uniform01());
  v.resize(static_cast<std::size_t>(count));
  return v;
}

inline std::vector<double> nonneg_samples(Rng& rng, int count) {
  std::vector<double> v{0.0, 1.0, 0.5, 2.5, 10.0};
  while (static_cast<int>(v.size()) < count) v.push_back(rng.uniform(0.0, 100.0));
  v.resize(static_cast<std::size_t>(count));
  return v;
}

template <typename Op>
AxiomReport check_binary_op_axioms(const Op& op, const SamplerConfig& cfg,
                                   double identity, double lo_clip, bool unit_range,
                                   const std::vector<double>& pool) {
  const double tol = cfg.tolerance;
  AxiomReport report;
  Rng root(cfg.seed);

  {  // result stays in range
    Rng rng = root.fork(0);
    AxiomCheck c = AxiomCheck::pass("range", tol);
    for (int i = 0; i < cfg.samples; ++i) {
      double a = pool[rng.index(pool.size())];
      double b = pool[rng.index(pool.size())];
      double r = op(a, b);
      bool ok = unit_range ? (r >= lo_clip - tol && r <= 1.0 + tol) : (r >= lo_clip - tol);
      if (!ok) {
        c = AxiomCheck::fail("range", Witness().set("a", a).set("b", b), r,
                             unit_range ? 1.0 : lo_clip, tol);
        break;
      }
    }
    report.checks.push_back(c);
  }
  {  // identity element
    Rng rng = root.fork(1);
    AxiomCheck c = AxiomCheck::pass("identity", tol);
    for (int i = 0; i < cfg.samples; ++i) {
      double a = pool[rng.index(pool.size())];
      double r = op(a, identity);
      if (std::abs(r - a) > tol) {
        c = AxiomCheck::fail("identity", Witness().set("a", a).set("e", identity), r, a, tol);
        break;
      }
    }
    report.checks.push_back(c);
  }
  {  // commutativity
    Rng rng = root.fork(2);
    AxiomCheck c = AxiomCheck::pass("commutativity", tol);
    for (int i = 0; i < cfg.samples; ++i) {
      double a = pool[rng.index(pool.size())];
      double b = pool[rng.index(pool.size())];
      double l = op(a, b), r = op(b, a);
      if (std::abs(l - r) > tol) {
        c = AxiomCheck::fail("commutativity", Witness().set("a", a).set("b", b), l, r, tol);
        break;
      }
    }
    report.checks.push_back(c);
  }
  {  // associativity
    Rng rng = root.fork(3);
    AxiomCheck c = AxiomCheck::pass("associativity", tol);
    for (int i = 0; i < cfg.samples; ++i) {
      double a = pool[rng.index(pool.size())];
      double b = pool[rng.index(pool.size())];
      double d = pool[rng.index(pool.size())];
      double l = op(a, op(b, d)), r = op(op(a, b), d);
      if (std::abs(l - r) > tol) {
        c = AxiomCheck::fail("associativity",
                             Witness().set("a", a).set("b", b).set("c", d), l, r, tol);
        break;
      }
    }
    report.checks.push_back(c);
  }
  {  // monotone in each place
    Rng rng = root.fork(4);
    AxiomCheck c = AxiomCheck::pass("monotonicity", tol);
    for (int i = 0; i < cfg.samples; ++i) {
      double a = pool[rng.index(pool.size())];
      double b = pool[rng.index(pool.size())];
      double x = pool[rng.index(pool.size())];
      double y = pool[rng.index(pool.size())];
      double a1 = std::min(a, x), a2 = std::max(a, x);
      double b1 = std::min(b, y), b2 = std::max(b, y);
      double l = op(a1, b1), r = op(a2, b2);
      if (l > r + tol) {
        c = AxiomCheck::fail("monotonicity",
                             Witness().set("a", a1).set("b", b1).set("c", a2).set("d", b2),
                             l, r, tol);
        break;
      }
    }
    report.checks.push_back(c);
  }
  return report;
}

}  // namespace detail

inline AxiomReport check_connective_axioms(const TNorm& t, const SamplerConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  auto pool = detail::unit_samples(rng, std::max(64, cfg.samples / 8));
  return detail::check_binary_op_axioms(t, cfg, 1.0, 0.0, true, pool);
}

inline AxiomReport check_connective_axioms(const TConorm& s, const SamplerConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  auto pool = detail::unit_samples(rng, std::max(64, cfg.samples / 8));
  return detail::check_binary_op_axioms(s, cfg, 0.0, 0.0, true, pool);
}

inline AxiomReport check_connective_axioms(const CircleOp& c, const SamplerConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  auto pool = detail::nonneg_samples(rng, std::max(64, cfg.samples / 8));
  return detail::check_binary_op_axioms(c, cfg, 0.0, 0.0, false, pool);
}

/// Checks evenness, normalization, strict monotonicity on a fine grid and
/// the two limit conditions at fixed horizons. The limits are undecidable
/// numerically; the horizon surrogates are recorded in the check notes.
inline AxiomReport check_connective_axioms(const PsiFunction& psi, const SamplerConfig& cfg) {
  cfg.validate();
  const double tol = cfg.tolerance;
  AxiomReport report;
  Rng root(cfg.seed);

  {  // psi(-t) = psi(t)
    Rng rng = root.fork(0);
    AxiomCheck c = AxiomCheck::pass("evenness", tol);
    for (int i = 0; i < cfg.samples; ++i) {
      double t = (i == 0) ? 1.0 : rng.log_uniform(1e-6, 1e6);
      double l = psi(-t), r = psi(t);
      if (std::abs(l - r) > tol) {
        c = AxiomCheck::fail("evenness", Witness().set("t", t), l, r, tol);
        break;
      }
    }
    report.checks.push_back(c);
  }
  {  // psi(1) = 1
    double v = psi(1.0);
    report.checks.push_back(std::abs(v - 1.0) <= tol
                                ? AxiomCheck::pass("normalization", tol)
                                : AxiomCheck::fail("normalization", Witness().set("t", 1.0),
                                                   v, 1.0, tol));
  }
  {  // strictly increasing on grid neighbours over (0, 100]
    const double h = 1e-3, hi = 100.0;
    AxiomCheck c = AxiomCheck::pass("strict-monotonicity", 0.0,
                                    "grid spacing 1e-3 over (0, 100]");
    double prev_t = h, prev_v = psi(h);
    for (double t = 2 * h; t <= hi; t += h) {
      double v = psi(t);
      if (!(v > prev_v)) {
        c = AxiomCheck::fail("strict-monotonicity",
                             Witness().set("t1", prev_t).set("t2", t), prev_v, v, 0.0,
                             "grid spacing 1e-3 over (0, 100]");
        break;
      }
      prev_t = t;
      prev_v = v;
    }
    report.checks.push_back(c);
  }
  {  // limit at 0+, horizon surrogate
    const double t0 = 1e-12, threshold = 0.5;
    double v = psi(t0);
    std::string note = "surrogate: psi(1e-12) < 0.5";
    report.checks.push_back(v < threshold
                                ? AxiomCheck::pass("limit-zero", 0.0, note)
                                : AxiomCheck::fail("limit-zero", Witness().set("t", t0), v,
                                                   threshold, 0.0, note));
  }
  {  // limit at infinity, horizon surrogate
    const double tinf = 1e12, threshold = 2.0;
    double v = psi(tinf);
    std::string note = "surrogate: psi(1e12) > 2";
    report.checks.push_back(v > threshold
                                ? AxiomCheck::pass("limit-infinity", 0.0, note)
                                : AxiomCheck::fail("limit-infinity", Witness().set("t", tinf),
                                                   v, threshold, 0.0, note));
  }
  return report;
}

/// Convenience: run every member of a bundle through its own checker.
inline AxiomReport check_connective_axioms(const FuzzyConnectives& conn,
                                           const SamplerConfig& cfg) {
  AxiomReport all;
  auto absorb = [&](const AxiomReport& r, const std::string& prefix) {
    for (AxiomCheck c : r.checks) {
      c.axiom = prefix + "." + c.axiom;
      all.checks.push_back(std::move(c));
    }
  };
  absorb(check_connective_axioms(conn.tnorm, cfg), "tnorm");
  absorb(check_connective_axioms(conn.tconorm, cfg), "tconorm");
  absorb(check_connective_axioms(conn.circle, cfg), "circle");
  absorb(check_connective_axioms(conn.psi, cfg), "psi");
  return all;
}

}  // namespace gifpsi
