#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "gifpsi/map_spec.hpp"
#include "gifpsi/membership.hpp"
#include "gifpsi/point_set.hpp"
#include "gifpsi/random.hpp"
#include "gifpsi/report.hpp"
#include "gifpsi/sequence_checks.hpp"

namespace gifpsi {

/// Search configuration for the epsilon-delta style continuity checks.
/// Candidates are verified on a fresh resample with a different seed; a
/// pair that only fits the search sample is never reported.
struct ContinuitySearchOptions {
  std::vector<double> delta_grid = log_spaced(1e-6, 1e3, 32);
  std::vector<double> beta_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  int samples_per_candidate = 2000;
  std::uint64_t seed = 42;
  double strict_margin = 1e-12;
  bool section2_form = false;  // compatibility switch for the (1-alpha, 1-beta) variant

  static std::vector<double> log_spaced(double lo, double hi, int count) {
    std::vector<double> g;
    for (int i = 0; i < count; ++i)
      g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
    return g;
  }
};

namespace detail {

/// Offsets around x0 with log-uniform magnitudes plus deterministic probes
/// at fixed fractions of a reference scale (so that maps discontinuous at
/// x0 are caught regardless of the random draw).
inline std::vector<Vector> continuity_probes(const VectorSpaceConfig& space, const Vector& x0,
                                             double ref_scale, Rng& rng, int count) {
  std::vector<Vector> pts;
  for (int i = 0; i < space.dimension; ++i) {
    for (double m : {1e-3, 1e-1, 1.0, 1e1}) {
      pts.push_back(add(x0, scale(m * ref_scale, space.basis_vector(i))));
      pts.push_back(add(x0, scale(-m * ref_scale, space.basis_vector(i))));
    }
  }
  while (static_cast<int>(pts.size()) < count) {
    Vector dir(static_cast<std::size_t>(space.dimension));
    double norm2 = 0.0;
    for (auto& c : dir) {
      c = rng.gaussian();
      norm2 += c * c;
    }
    if (norm2 == 0.0) continue;
    double mag = rng.log_uniform(1e-8, 1e2) / std::sqrt(norm2);
    pts.push_back(add(x0, scale(mag, dir)));
  }
  pts.resize(static_cast<std::size_t>(count));
  return pts;
}

}  // namespace detail

/// Sequential continuity: every family member converging to x0 must have
/// its image converge to f(x0).
struct SequentialContinuityReport {
  struct Member {
    ConvergenceReport input_check;
    ConvergenceReport image_check;
  };

  bool positive = false;
  Vector x0;
  std::vector<Member> members;
};

inline SequentialContinuityReport check_sequentially_ifc(
    const MapSpec& f, const Vector& x0, const GifPsiNorm& U, const GifPsiNorm& V,
    const std::vector<SequenceSpec>& family, const std::vector<double>& r_grid,
    const std::vector<double>& t_grid, long N) {
  if (f.in_dim() != U.dimension() || f.out_dim() != V.dimension())
    throw shape_error("map dimensions do not match the spaces");
  SequentialContinuityReport rep;
  rep.x0 = x0;
  Vector fx0 = f(x0);
  bool all = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    SequentialContinuityReport::Member m;
    m.input_check = check_convergence(U, family[i], x0, r_grid, t_grid, N);
    if (!m.input_check.positive())
      throw precondition_error("family member " + std::to_string(i) +
                               " does not converge to x0 in the source space");
    const long horizon = family[i].horizon_or(N);
    std::vector<Vector> image;
    image.reserve(static_cast<std::size_t>(horizon));
    for (long n = 1; n <= horizon; ++n) image.push_back(f(family[i].eval(n)));
    m.image_check = check_convergence(V, SequenceSpec::explicit_list(std::move(image)), fx0,
                                      r_grid, t_grid, N);
    all = all && m.image_check.positive();
    rep.members.push_back(std::move(m));
  }
  rep.positive = all;
  return rep;
}

/// Strong continuity: for each eps a single delta must dominate pointwise,
/// mu_V(f(x)-f(x0), eps) >= mu_U(x-x0, delta) and nu_V <= nu_U. The delta
/// grid is scanned descending so the reported delta is the largest working
/// grid point.
struct StrongContinuityReport {
  struct EpsEntry {
    double eps = 0.0;
    bool found = false;
    double delta = 0.0;
    Witness witness;  // a violating x for the last candidate delta when not found
    std::string failed_condition;
  };

  bool positive = false;
  Vector x0;
  std::vector<EpsEntry> entries;
};

inline StrongContinuityReport check_strongly_ifc(const MapSpec& f, const Vector& x0,
                                                 const GifPsiNorm& U, const GifPsiNorm& V,
                                                 const std::vector<double>& eps_grid,
                                                 const ContinuitySearchOptions& opt = {}) {
  if (f.in_dim() != U.dimension() || f.out_dim() != V.dimension())
    throw shape_error("map dimensions do not match the spaces");
  if (eps_grid.empty()) throw domain_error("eps grid must be nonempty");
  U.space().check_shape(x0);

  StrongContinuityReport rep;
  rep.x0 = x0;
  const Vector fx0 = f(x0);
  Rng root(opt.seed);

  std::vector<double> deltas = opt.delta_grid;
  std::sort(deltas.begin(), deltas.end(), std::greater<>());

  for (double eps : eps_grid) {
    StrongContinuityReport::EpsEntry entry;
    entry.eps = eps;
    // returns a violating x, or nullopt if the candidate holds on the sample
    auto violation = [&](double delta, Rng rng) -> std::optional<std::pair<Vector, const char*>> {
      auto pts = detail::continuity_probes(U.space(), x0, delta, rng,
                                           opt.samples_per_candidate);
      for (const auto& x : pts) {
        auto mU = U.eval(sub(x, x0), delta);
        auto mV = V.eval(sub(f(x), fx0), eps);
        if (mV.mu < mU.mu - opt.strict_margin) return std::make_pair(x, "mu");
        if (mV.nu > mU.nu + opt.strict_margin) return std::make_pair(x, "nu");
      }
      return std::nullopt;
    };
    for (std::size_t di = 0; di < deltas.size(); ++di) {
      double delta = deltas[di];
      auto bad = violation(delta, root.fork(2 * di));
      if (!bad) {
        auto confirm = violation(delta, root.fork(2 * di + 1));  // fresh resample
        if (!confirm) {
          entry.found = true;
          entry.delta = delta;
          break;
        }
        bad = confirm;
      }
      entry.witness = Witness().set("x", bad->first).set("delta", delta);
      entry.failed_condition = bad->second;
    }
    rep.entries.push_back(std::move(entry));
  }
  rep.positive = std::all_of(rep.entries.begin(), rep.entries.end(),
                             [](const auto& e) { return e.found; });
  return rep;
}

/// Epsilon-level continuity: search for (delta, beta) such that sampled x
/// with mu_U(x-x0, delta) > beta have mu_V(f(x)-f(x0), eps) > alpha, and
/// dually for nu with bounds 1-beta, 1-alpha. The section-2 compatibility
/// form swaps (alpha, beta) for (1-alpha, 1-beta) in the mu implication and
/// (1-beta, 1-alpha) for (beta, alpha) in the nu implication.
struct IfcSearchResult {
  bool positive = false;
  double eps = 0.0;
  double alpha = 0.0;
  double delta = 0.0;  // verified pair when positive
  double beta = 0.0;
  Witness counterexample;  // when negative: an x defeating every candidate (if one exists)
  bool counterexample_universal = false;
  std::string note;
};

inline IfcSearchResult check_ifc(const MapSpec& f, const Vector& x0, const GifPsiNorm& U,
                                 const GifPsiNorm& V, double eps, double alpha,
                                 const ContinuitySearchOptions& opt = {}) {
  if (f.in_dim() != U.dimension() || f.out_dim() != V.dimension())
    throw shape_error("map dimensions do not match the spaces");
  if (!(eps > 0.0)) throw domain_error("eps must be > 0");
  if (!(alpha > 0.0 && alpha < 1.0)) throw domain_error("alpha must lie in (0,1)");
  U.space().check_shape(x0);

  IfcSearchResult res;
  res.eps = eps;
  res.alpha = alpha;
  res.note = opt.section2_form ? "section-2 form: mu > 1-beta => mu_V > 1-alpha"
                               : "mu > beta => mu_V > alpha";

  const Vector fx0 = f(x0);
  Rng root(opt.seed);

  // premise holds only beyond the strictness margin; conclusions are plain
  auto implication_violated = [&](const Vector& x, double delta, double beta) -> bool {
    auto mU = U.eval(sub(x, x0), delta);
    auto mV = V.eval(sub(f(x), fx0), eps);
    if (opt.section2_form) {
      if (mU.mu >= (1.0 - beta) + opt.strict_margin && !(mV.mu > 1.0 - alpha)) return true;
      if (mU.nu <= beta - opt.strict_margin && !(mV.nu < alpha)) return true;
      return false;
    }
    if (mU.mu >= beta + opt.strict_margin && !(mV.mu > alpha)) return true;
    if (mU.nu <= (1.0 - beta) - opt.strict_margin && !(mV.nu < 1.0 - alpha)) return true;
    return false;
  };

  std::vector<double> deltas = opt.delta_grid;
  std::sort(deltas.begin(), deltas.end(), std::greater<>());
  std::vector<double> betas = opt.beta_grid;
  std::sort(betas.begin(), betas.end(), std::greater<>());

  std::vector<Vector> collected_witnesses;
  std::size_t candidate_id = 0;
  for (double delta : deltas) {
    for (double beta : betas) {
      Rng search_rng = root.fork(2 * candidate_id);
      auto pts = detail::continuity_probes(U.space(), x0, delta, search_rng,
                                           opt.samples_per_candidate);
      const Vector* bad = nullptr;
      for (const auto& x : pts) {
        if (implication_violated(x, delta, beta)) {
          bad = &x;
          break;
        }
      }
      if (!bad) {
        Rng verify_rng = root.fork(2 * candidate_id + 1);
        auto fresh = detail::continuity_probes(U.space(), x0, delta, verify_rng,
                                               opt.samples_per_candidate);
        bool verified = true;
        for (const auto& x : fresh) {
          if (implication_violated(x, delta, beta)) {
            collected_witnesses.push_back(x);
            verified = false;
            break;
          }
        }
        if (verified) {
          res.positive = true;
          res.delta = delta;
          res.beta = beta;
          return res;
        }
      } else {
        collected_witnesses.push_back(*bad);
      }
      ++candidate_id;
    }
  }

  // prefer a single witness that defeats every candidate simultaneously
  for (const auto& w : collected_witnesses) {
    bool universal = true;
    for (double delta : deltas) {
      for (double beta : betas) {
        if (!implication_violated(w, delta, beta)) {
          universal = false;
          break;
        }
      }
      if (!universal) break;
    }
    if (universal) {
      res.counterexample = Witness().set("x", w);
      res.counterexample_universal = true;
      return res;
    }
  }
  if (!collected_witnesses.empty())
    res.counterexample = Witness().set("x", collected_witnesses.back());
  return res;
}

/// Theorem-level cross check: epsilon-level continuity over an
/// (eps, alpha) grid against sequential continuity; the two verdicts must
/// agree in both directions.
struct IfcSequentialConsistency {
  bool ifc_positive = false;
  bool sequential_positive = false;
  bool violation = false;
  std::vector<IfcSearchResult> ifc_results;
  SequentialContinuityReport sequential;
};

inline IfcSequentialConsistency check_ifc_iff_sequential(
    const MapSpec& f, const Vector& x0, const GifPsiNorm& U, const GifPsiNorm& V,
    const std::vector<SequenceSpec>& family, const std::vector<double>& eps_grid,
    const std::vector<double>& alpha_grid, const std::vector<double>& r_grid,
    const std::vector<double>& t_grid, long N, const ContinuitySearchOptions& opt = {}) {
  IfcSequentialConsistency rep;
  bool all = true;
  for (double eps : eps_grid)
    for (double alpha : alpha_grid) {
      rep.ifc_results.push_back(check_ifc(f, x0, U, V, eps, alpha, opt));
      all = all && rep.ifc_results.back().positive;
    }
  rep.ifc_positive = all;
  rep.sequential = check_sequentially_ifc(f, x0, U, V, family, r_grid, t_grid, N);
  rep.sequential_positive = rep.sequential.positive;
  rep.violation = rep.ifc_positive != rep.sequential_positive;
  return rep;
}

/// Theorem-level cross check: strong continuity must imply sequential
/// continuity.
struct StrongSequentialConsistency {
  bool strong_positive = false;
  bool sequential_positive = false;
  bool violation = false;
  StrongContinuityReport strong;
  SequentialContinuityReport sequential;
};

inline StrongSequentialConsistency check_strong_implies_sequential(
    const MapSpec& f, const Vector& x0, const GifPsiNorm& U, const GifPsiNorm& V,
    const std::vector<SequenceSpec>& family, const std::vector<double>& eps_grid,
    const std::vector<double>& r_grid, const std::vector<double>& t_grid, long N,
    const ContinuitySearchOptions& opt = {}) {
  StrongSequentialConsistency rep;
  rep.strong = check_strongly_ifc(f, x0, U, V, eps_grid, opt);
  rep.strong_positive = rep.strong.positive;
  rep.sequential = check_sequentially_ifc(f, x0, U, V, family, r_grid, t_grid, N);
  rep.sequential_positive = rep.sequential.positive;
  rep.violation = rep.strong_positive && !rep.sequential_positive;
  return rep;
}

/// Image compactness battery: maps each probe through f, extracts a
/// convergent subsequence of the image, and tests the image limit against
/// the image set. Image membership is supported for finite lists and for
/// ball images under invertible linear/affine maps (pulled back through the
/// inverse); anything else is reported as unsupported.
struct CompactImageReport {
  struct ProbeEntry {
    SubsequenceResult image_subsequence;
    bool image_limit_in_set = false;
  };

  bool compatible = false;
  bool set_closed = false;
  bool set_bounded = false;
  std::vector<ProbeEntry> probes;
  std::string note;
};

inline CompactImageReport check_compact_image(const MapSpec& f, const GifPsiNorm& U,
                                              const GifPsiNorm& V, const PointSetSpec& set,
                                              const std::vector<SequenceSpec>& probes, long N,
                                              const std::vector<double>& r_grid,
                                              const std::vector<double>& t_grid,
                                              double limit_membership_tol = 1e-3,
                                              const ExtractionOptions& extraction = {}) {
  if (f.in_dim() != U.dimension() || f.out_dim() != V.dimension())
    throw shape_error("map dimensions do not match the spaces");
  const auto& u_norm = U.space().crisp_norm;
  const auto& v_norm = V.space().crisp_norm;

  // image-set membership test
  std::function<bool(const Vector&, double)> image_contains;
  if (set.kind == PointSetSpec::Kind::FiniteList) {
    std::vector<Vector> mapped;
    for (const auto& p : set.points) mapped.push_back(f(p));
    image_contains = [mapped, &v_norm](const Vector& y, double tol) {
      return std::any_of(mapped.begin(), mapped.end(), [&](const Vector& q) {
        return v_norm(sub(y, q)) <= tol;
      });
    };
  } else {
    auto A = f.matrix();
    if (!A || A->rows() != A->cols())
      throw unsupported_error("image membership for a ball is only supported under "
                              "linear/affine maps with a square matrix");
    Eigen::FullPivLU<Eigen::MatrixXd> lu(*A);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible())
      throw unsupported_error("image membership requires an invertible matrix");
    Eigen::MatrixXd inv = lu.inverse();
    Vector b = f.offset_or_zero();
    PointSetSpec pre = set;
    image_contains = [inv, b, pre, &u_norm](const Vector& y, double tol) {
      Eigen::VectorXd z(static_cast<long>(y.size()));
      for (std::size_t i = 0; i < y.size(); ++i)
        z(static_cast<long>(i)) = y[i] - b[i];
      Eigen::VectorXd w = inv * z;
      Vector x(w.data(), w.data() + w.size());
      return pre.contains(x, u_norm, tol);
    };
  }

  std::vector<Vector> u_basis, v_basis;
  for (int i = 0; i < U.dimension(); ++i) u_basis.push_back(U.space().basis_vector(i));
  for (int i = 0; i < V.dimension(); ++i) v_basis.push_back(V.space().basis_vector(i));

  CompactImageReport rep;
  rep.set_closed = set.is_closed();
  rep.set_bounded = set.is_bounded();

  bool all_in = true;
  for (std::size_t pi = 0; pi < probes.size(); ++pi) {
    const auto& probe = probes[pi];
    const long horizon = probe.horizon_or(N);
    for (long n = 1; n <= horizon; ++n) {
      if (!set.contains(probe.eval(n), u_norm, 1e-12))
        throw precondition_error("probe " + std::to_string(pi) +
                                 " leaves the set at index " + std::to_string(n));
    }

    // sequential continuity verified at the probe's own limit point
    auto pre_sub = extract_convergent_subsequence(U, probe, N, u_basis, extraction);
    auto in_seq = subsequence_as_spec(probe, pre_sub.indices);
    std::vector<Vector> mapped;
    for (long n : pre_sub.indices) mapped.push_back(f(probe.eval(n)));
    auto image_at_limit =
        check_convergence(V, SequenceSpec::explicit_list(mapped), f(pre_sub.limit), r_grid,
                          t_grid, N);
    if (!image_at_limit.positive())
      throw precondition_error("map is not sequentially continuous at the limit of probe " +
                               std::to_string(pi));
    (void)in_seq;

    std::vector<Vector> image;
    image.reserve(static_cast<std::size_t>(horizon));
    for (long n = 1; n <= horizon; ++n) image.push_back(f(probe.eval(n)));
    CompactImageReport::ProbeEntry entry;
    entry.image_subsequence = extract_convergent_subsequence(
        V, SequenceSpec::explicit_list(std::move(image)), N, v_basis, extraction);
    entry.image_limit_in_set =
        image_contains(entry.image_subsequence.limit, limit_membership_tol);
    all_in = all_in && entry.image_limit_in_set;
    rep.probes.push_back(std::move(entry));
  }
  rep.compatible = all_in;
  rep.note = "image limits tested with membership tolerance " +
             std::to_string(limit_membership_tol);
  return rep;
}

}  // namespace gifpsi
