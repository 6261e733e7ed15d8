#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "gifpsi/sequence_checks.hpp"
#include "gifpsi/subsequence.hpp"

namespace gifpsi {

/// Supported point-set specifications: finite lists and crisp-norm balls
/// (closed, or open as the surrogate for a non-closed set). Membership of
/// numerically estimated points takes an explicit tolerance: closed sets
/// admit points within +tol of the boundary, open sets demand points
/// decisively inside by tol.
struct PointSetSpec {
  enum class Kind { FiniteList, ClosedBall, OpenBall };

  Kind kind = Kind::ClosedBall;
  std::vector<Vector> points;  // FiniteList
  Vector center;               // balls
  double radius = 1.0;

  static PointSetSpec finite_list(std::vector<Vector> pts) {
    if (pts.empty()) throw domain_error("finite point set must be nonempty");
    PointSetSpec s;
    s.kind = Kind::FiniteList;
    s.points = std::move(pts);
    return s;
  }
  static PointSetSpec closed_ball(Vector c, double rho) {
    if (!(rho > 0.0)) throw domain_error("ball radius must be > 0");
    PointSetSpec s;
    s.kind = Kind::ClosedBall;
    s.center = std::move(c);
    s.radius = rho;
    return s;
  }
  static PointSetSpec open_ball(Vector c, double rho) {
    PointSetSpec s = closed_ball(std::move(c), rho);
    s.kind = Kind::OpenBall;
    return s;
  }

  bool is_closed() const { return kind != Kind::OpenBall; }
  bool is_bounded() const { return true; }  // every supported spec is bounded

  bool contains(const Vector& x, const CrispNorm& norm, double tol) const {
    switch (kind) {
      case Kind::FiniteList: {
        for (const auto& p : points)
          if (norm(sub(x, p)) <= tol) return true;
        return false;
      }
      case Kind::ClosedBall: return norm(sub(x, center)) <= radius + tol;
      case Kind::OpenBall: return norm(sub(x, center)) < radius - tol;
    }
    return false;
  }

  /// Distance from x to the nearest set point (balls: to the set itself).
  double distance(const Vector& x, const CrispNorm& norm) const {
    switch (kind) {
      case Kind::FiniteList: {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& p : points) best = std::min(best, norm(sub(x, p)));
        return best;
      }
      case Kind::ClosedBall:
      case Kind::OpenBall: return std::max(0.0, norm(sub(x, center)) - radius);
    }
    return 0.0;
  }
};

/// Closure-point probe: constructs an in-set sequence aimed at x (the
/// clipped segment from a ball's center, or the constant nearest point of a
/// finite list) and runs the convergence detector on it.
struct ClosedPointReport {
  bool closure_point = false;
  bool in_set = false;
  bool closedness_consistent = true;  // no closure point found outside a closed set
  ConvergenceReport convergence;
  Vector constructed_target;  // the point the candidate sequence actually aims at
  std::string note;
};

inline ClosedPointReport check_closed_point(const GifPsiNorm& nrm, const PointSetSpec& set,
                                            const Vector& x,
                                            const std::vector<double>& r_grid,
                                            const std::vector<double>& t_grid, long N,
                                            double membership_tol = 1e-12) {
  nrm.space().check_shape(x);
  const auto& norm = nrm.space().crisp_norm;

  SequenceSpec candidate = SequenceSpec::constant(x);
  Vector target = x;
  switch (set.kind) {
    case PointSetSpec::Kind::FiniteList: {
      double best = std::numeric_limits<double>::infinity();
      Vector nearest = set.points.front();
      for (const auto& p : set.points) {
        double d = norm(sub(x, p));
        if (d < best) {
          best = d;
          nearest = p;
        }
      }
      candidate = SequenceSpec::constant(nearest);
      target = nearest;
      break;
    }
    case PointSetSpec::Kind::ClosedBall:
    case PointSetSpec::Kind::OpenBall: {
      Vector offset = sub(x, set.center);
      double d = norm(offset);
      double clip = (d <= set.radius || d == 0.0) ? 1.0 : set.radius / d;
      // y_n = c + (1 - 1/n) * clip * (x - c): stays strictly inside the ball
      Vector dir = scale(clip, offset);
      candidate = SequenceSpec::affine_decay(add(set.center, dir), scale(-1.0, dir));
      target = add(set.center, dir);
      break;
    }
  }

  ClosedPointReport rep;
  rep.constructed_target = target;
  rep.convergence = check_convergence(nrm, candidate, x, r_grid, t_grid, N);
  rep.closure_point = rep.convergence.positive();
  rep.in_set = set.contains(x, norm, membership_tol);
  if (set.is_closed() && rep.closure_point && !rep.in_set) rep.closedness_consistent = false;
  if (!rep.closure_point)
    rep.note = "constructed in-set family converges to the clipped target, not to x";
  return rep;
}

/// Sequential compactness battery: extracts a convergent subsequence from
/// every probe and checks the limit's membership. Estimated limits are
/// tested with limit_membership_tol. An inconsistency is flagged only when
/// the set itself is closed and bounded (the direction the finite-dimension
/// theorem guarantees).
struct CompactnessReport {
  struct ProbeEntry {
    SubsequenceResult subsequence;
    ClosedPointReport limit_closure;
    bool limit_in_set = false;
  };

  bool compatible = false;
  bool set_closed = false;
  bool set_bounded = false;
  bool theorem_violation = false;
  std::vector<ProbeEntry> probes;
  std::string note;
};

inline CompactnessReport check_compact(const GifPsiNorm& nrm, const PointSetSpec& set,
                                       const std::vector<SequenceSpec>& probes, long N,
                                       const std::vector<double>& r_grid,
                                       const std::vector<double>& t_grid,
                                       double limit_membership_tol = 1e-3,
                                       const ExtractionOptions& extraction = {}) {
  const auto& norm = nrm.space().crisp_norm;
  CompactnessReport rep;
  rep.set_closed = set.is_closed();
  rep.set_bounded = set.is_bounded();

  std::vector<Vector> basis;
  for (int i = 0; i < nrm.dimension(); ++i) basis.push_back(nrm.space().basis_vector(i));

  bool all_in = true;
  for (std::size_t pi = 0; pi < probes.size(); ++pi) {
    const auto& probe = probes[pi];
    const long horizon = probe.horizon_or(N);
    for (long n = 1; n <= horizon; ++n) {
      if (!set.contains(probe.eval(n), norm, 1e-12))
        throw precondition_error("probe " + std::to_string(pi) + " leaves the set at index " +
                                 std::to_string(n));
    }
    CompactnessReport::ProbeEntry entry;
    entry.subsequence = extract_convergent_subsequence(nrm, probe, N, basis, extraction);
    entry.limit_in_set = set.contains(entry.subsequence.limit, norm, limit_membership_tol);
    entry.limit_closure =
        check_closed_point(nrm, set, entry.subsequence.limit, r_grid, t_grid, N);
    all_in = all_in && entry.limit_in_set;
    rep.probes.push_back(std::move(entry));
  }
  rep.compatible = all_in;
  rep.theorem_violation = rep.set_closed && rep.set_bounded && !rep.compatible;
  rep.note = "finite probe battery at horizon N=" + std::to_string(N) +
             "; limits tested with membership tolerance " +
             std::to_string(limit_membership_tol);
  return rep;
}

}  // namespace gifpsi
