#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "gifpsi/membership.hpp"
#include "gifpsi/sequence.hpp"

namespace gifpsi {

enum class Verdict { Positive, Negative, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Positive: return "positive";
    case Verdict::Negative: return "negative";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// One (r, t) cell of a convergence/Cauchy scan. `n0` is the first index
/// from which the defining inequalities hold through the whole tested
/// window; `violation` is the size of the worst violation at the cell's
/// last failing index (0 when the cell passes).
struct GridCell {
  double r = 0.0;
  double t = 0.0;
  bool pass = false;
  long n0 = 0;
  double violation = 0.0;
};

struct TrajectoryPoint {
  long n = 0;
  double mu = 0.0;
  double nu = 0.0;
};

/// Detector outcome over a finite window [1, N]. All "for all n >= n0"
/// claims are horizon-bounded; the note records that.
struct ConvergenceReport {
  std::string check;  // "convergence" or "cauchy"
  Verdict verdict = Verdict::Inconclusive;
  Vector candidate_limit;  // empty for the Cauchy check
  long horizon = 0;
  std::vector<GridCell> cells;
  std::vector<double> trajectory_t;
  std::vector<std::vector<TrajectoryPoint>> trajectories;  // per trajectory_t entry
  bool limit_form_holds = false;  // mu >= 1-eps and nu <= eps at the horizon
  double limit_form_eps = 1e-3;
  std::string note;

  bool positive() const { return verdict == Verdict::Positive; }
};

namespace detail {

inline void check_grids(const std::vector<double>& r_grid, const std::vector<double>& t_grid) {
  if (r_grid.empty() || t_grid.empty()) throw domain_error("r/t grids must be nonempty");
  for (double r : r_grid)
    if (!(r > 0.0 && r < 1.0)) throw domain_error("r values must lie in (0,1)");
  for (double t : t_grid)
    if (!(t > 0.0)) throw domain_error("t values must be > 0");
}

/// Margin below which a failing cell counts as borderline rather than a
/// decisive counterexample.
inline constexpr double kDecisiveMargin = 1e-9;

inline Verdict combine_cells(const std::vector<GridCell>& cells) {
  bool any_fail = false, any_decisive = false;
  for (const auto& c : cells) {
    if (!c.pass) {
      any_fail = true;
      if (c.violation > kDecisiveMargin) any_decisive = true;
    }
  }
  if (!any_fail) return Verdict::Positive;
  return any_decisive ? Verdict::Negative : Verdict::Inconclusive;
}

inline std::vector<long> trajectory_indices(long horizon) {
  std::vector<long> idx;
  long n = 1;
  while (n < horizon) {
    idx.push_back(n);
    long next = static_cast<long>(std::ceil(static_cast<double>(n) * 1.5));
    n = std::max(n + 1, next);
  }
  idx.push_back(horizon);
  return idx;
}

}  // namespace detail

/// Scans [1, N] for the smallest n0 with mu(x_n - x, t) > 1-r and
/// nu(x_n - x, t) < r for every n in [n0, N], per grid cell. Converges iff
/// every cell admits such an n0 inside the window.
inline ConvergenceReport check_convergence(const GifPsiNorm& nrm, const SequenceSpec& s,
                                           const Vector& x,
                                           const std::vector<double>& r_grid,
                                           const std::vector<double>& t_grid, long N,
                                           double limit_form_eps = 1e-3) {
  if (N < 10) throw domain_error("horizon N must be >= 10");
  detail::check_grids(r_grid, t_grid);
  nrm.space().check_shape(x);
  if (s.dimension() != nrm.dimension())
    throw shape_error("sequence dimension does not match the space");

  const long horizon = s.horizon_or(N);
  ConvergenceReport rep;
  rep.check = "convergence";
  rep.candidate_limit = x;
  rep.horizon = horizon;
  rep.note = "verdict holds up to horizon N=" + std::to_string(horizon);
  rep.limit_form_eps = limit_form_eps;
  rep.trajectory_t = t_grid;

  const auto traj_idx = detail::trajectory_indices(horizon);
  rep.trajectories.resize(t_grid.size());

  bool limit_ok = true;
  for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
    const double t = t_grid[ti];
    std::vector<long> last_fail(r_grid.size(), 0);
    std::vector<double> fail_violation(r_grid.size(), 0.0);
    std::size_t next_traj = 0;
    for (long n = 1; n <= horizon; ++n) {
      auto m = nrm.eval(sub(s.eval(n), x), t);
      if (next_traj < traj_idx.size() && traj_idx[next_traj] == n) {
        rep.trajectories[ti].push_back({n, m.mu, m.nu});
        ++next_traj;
      }
      for (std::size_t ri = 0; ri < r_grid.size(); ++ri) {
        const double r = r_grid[ri];
        double viol = std::max((1.0 - r) - m.mu, m.nu - r);
        if (!(m.mu > 1.0 - r && m.nu < r)) {
          last_fail[ri] = n;
          fail_violation[ri] = std::max(viol, 0.0);
        }
      }
      if (n == horizon && (m.mu < 1.0 - limit_form_eps || m.nu > limit_form_eps))
        limit_ok = false;
    }
    for (std::size_t ri = 0; ri < r_grid.size(); ++ri) {
      GridCell cell;
      cell.r = r_grid[ri];
      cell.t = t;
      cell.pass = last_fail[ri] < horizon;
      cell.n0 = cell.pass ? last_fail[ri] + 1 : 0;
      cell.violation = cell.pass ? 0.0 : fail_violation[ri];
      rep.cells.push_back(cell);
    }
  }
  rep.limit_form_holds = limit_ok;
  rep.verdict = detail::combine_cells(rep.cells);
  return rep;
}

/// Cauchy scan via index offsets: checks mu(x_{n+p} - x_n, t) > 1-r and
/// nu < r for offsets p in [1, p_max]. When the full pair set exceeds the
/// evaluation budget the offsets are subsampled deterministically (noted in
/// the report).
inline ConvergenceReport check_cauchy(const GifPsiNorm& nrm, const SequenceSpec& s,
                                      const std::vector<double>& r_grid,
                                      const std::vector<double>& t_grid, long N,
                                      long p_max = 0) {
  if (N < 10) throw domain_error("horizon N must be >= 10");
  detail::check_grids(r_grid, t_grid);
  if (s.dimension() != nrm.dimension())
    throw shape_error("sequence dimension does not match the space");

  const long horizon = s.horizon_or(N);
  if (p_max <= 0) p_max = horizon - 1;
  if (p_max < 1) throw domain_error("p_max must be >= 1");

  ConvergenceReport rep;
  rep.check = "cauchy";
  rep.horizon = horizon;
  rep.note = "verdict holds up to horizon N=" + std::to_string(horizon);

  // offset schedule: exhaustive within budget, else dense head + log tail
  constexpr long kPairBudget = 1u << 22;
  std::vector<long> offsets;
  bool subsampled = false;
  if (horizon * p_max <= kPairBudget) {
    for (long p = 1; p <= p_max; ++p) offsets.push_back(p);
  } else {
    subsampled = true;
    long p = 1;
    while (p <= p_max && p <= 32) offsets.push_back(p++);
    double g = static_cast<double>(p);
    while (g <= static_cast<double>(p_max)) {
      long v = static_cast<long>(g);
      if (offsets.empty() || v > offsets.back()) offsets.push_back(v);
      g *= 1.25;
    }
    if (offsets.back() != p_max) offsets.push_back(p_max);
    rep.note += "; offsets subsampled (" + std::to_string(offsets.size()) + " per index)";
  }
  (void)subsampled;

  for (double t : t_grid) {
    std::vector<long> last_fail(r_grid.size(), 0);
    std::vector<double> fail_violation(r_grid.size(), 0.0);
    for (long n = 1; n < horizon; ++n) {
      Vector xn = s.eval(n);
      for (long p : offsets) {
        if (n + p > horizon) break;
        auto m = nrm.eval(sub(s.eval(n + p), xn), t);
        for (std::size_t ri = 0; ri < r_grid.size(); ++ri) {
          const double r = r_grid[ri];
          if (!(m.mu > 1.0 - r && m.nu < r)) {
            double viol = std::max((1.0 - r) - m.mu, m.nu - r);
            if (n > last_fail[ri]) {
              last_fail[ri] = n;
              fail_violation[ri] = std::max(viol, 0.0);
            }
          }
        }
      }
    }
    for (std::size_t ri = 0; ri < r_grid.size(); ++ri) {
      GridCell cell;
      cell.r = r_grid[ri];
      cell.t = t;
      // n0 = horizon would leave no checkable pair, so it does not count
      cell.pass = last_fail[ri] + 1 <= horizon - 1;
      cell.n0 = cell.pass ? last_fail[ri] + 1 : 0;
      cell.violation = cell.pass ? 0.0 : fail_violation[ri];
      rep.cells.push_back(cell);
    }
  }
  rep.verdict = detail::combine_cells(rep.cells);
  return rep;
}

/// Cross-detector statement "every convergent sequence is Cauchy".
struct ConvergentCauchyReport {
  ConvergenceReport convergence;
  ConvergenceReport cauchy;
  bool violation = false;  // convergent but not Cauchy
};

inline ConvergentCauchyReport check_convergent_implies_cauchy(
    const GifPsiNorm& nrm, const SequenceSpec& s, const Vector& x,
    const std::vector<double>& r_grid, const std::vector<double>& t_grid, long N,
    long p_max = 0) {
  ConvergentCauchyReport rep;
  rep.convergence = check_convergence(nrm, s, x, r_grid, t_grid, N);
  rep.cauchy = check_cauchy(nrm, s, r_grid, t_grid, N, p_max);
  rep.violation = rep.convergence.positive() && rep.cauchy.verdict == Verdict::Negative;
  return rep;
}

/// Limit arithmetic: x_n -> x and y_n -> y imply x_n + y_n -> x + y and
/// c x_n -> c x. Both input convergences are verified first.
struct LimitArithmeticReport {
  ConvergenceReport sum_check;
  ConvergenceReport scaled_check;
  double scalar = 1.0;
  bool violation = false;
};

inline LimitArithmeticReport check_limit_arithmetic(const GifPsiNorm& nrm,
                                                    const SequenceSpec& s1,
                                                    const SequenceSpec& s2, const Vector& x,
                                                    const Vector& y, double c,
                                                    const std::vector<double>& r_grid,
                                                    const std::vector<double>& t_grid,
                                                    long N) {
  if (c == 0.0) throw domain_error("scalar must be nonzero");
  auto pre1 = check_convergence(nrm, s1, x, r_grid, t_grid, N);
  if (!pre1.positive())
    throw precondition_error("first sequence does not converge to its announced limit");
  auto pre2 = check_convergence(nrm, s2, y, r_grid, t_grid, N);
  if (!pre2.positive())
    throw precondition_error("second sequence does not converge to its announced limit");

  long horizon = std::min(s1.horizon_or(N), s2.horizon_or(N));
  LimitArithmeticReport rep;
  rep.scalar = c;
  rep.sum_check =
      check_convergence(nrm, pointwise_sum(s1, s2, horizon), add(x, y), r_grid, t_grid, N);
  rep.scaled_check =
      check_convergence(nrm, pointwise_scale(c, s1, horizon), scale(c, x), r_grid, t_grid, N);
  rep.violation = !rep.sum_check.positive() || !rep.scaled_check.positive();
  return rep;
}

/// Limit uniqueness probe: a sequence must not converge to two distinct
/// candidates.
struct UniquenessReport {
  ConvergenceReport to_x;
  ConvergenceReport to_y;
  bool violation = false;  // both candidates accepted
};

inline UniquenessReport check_limit_uniqueness(const GifPsiNorm& nrm, const SequenceSpec& s,
                                               const Vector& x, const Vector& y,
                                               const std::vector<double>& r_grid,
                                               const std::vector<double>& t_grid, long N) {
  if (x == y) throw domain_error("uniqueness check requires two distinct candidates");
  UniquenessReport rep;
  rep.to_x = check_convergence(nrm, s, x, r_grid, t_grid, N);
  rep.to_y = check_convergence(nrm, s, y, r_grid, t_grid, N);
  rep.violation = rep.to_x.positive() && rep.to_y.positive();
  return rep;
}

/// Single (t, r) witnessing boundedness of the whole window: mu(x_n, t) > 1-r
/// and nu(x_n, t) < r for every n <= N.
struct BoundednessCertificate {
  bool found = false;
  double t = 0.0;
  double r = 0.0;
  long horizon = 0;
  long first_violating_index = 0;  // for the last candidate tried when not found
  std::string note;
};

inline BoundednessCertificate check_bounded(const GifPsiNorm& nrm, const SequenceSpec& s,
                                            long N, const std::vector<double>& t_search_grid,
                                            const std::vector<double>& r_search_grid) {
  detail::check_grids(r_search_grid, t_search_grid);
  if (s.dimension() != nrm.dimension())
    throw shape_error("sequence dimension does not match the space");
  const long horizon = s.horizon_or(N);

  BoundednessCertificate cert;
  cert.horizon = horizon;

  std::vector<double> rs = r_search_grid, ts = t_search_grid;
  std::sort(rs.begin(), rs.end());
  std::sort(ts.begin(), ts.end());
  for (double r : rs) {
    for (double t : ts) {
      bool ok = true;
      for (long n = 1; n <= horizon; ++n) {
        auto m = nrm.eval(s.eval(n), t);
        if (!(m.mu > 1.0 - r && m.nu < r)) {
          ok = false;
          cert.first_violating_index = n;
          break;
        }
      }
      if (ok) {
        cert.found = true;
        cert.t = t;
        cert.r = r;
        return cert;
      }
    }
  }
  cert.note = "no certificate on the search grid up to horizon N=" + std::to_string(horizon);
  return cert;
}

/// Cross-detector statement "every Cauchy sequence is bounded".
struct CauchyBoundedReport {
  ConvergenceReport cauchy;
  BoundednessCertificate certificate;
  bool violation = false;  // Cauchy but no certificate found
};

inline CauchyBoundedReport check_cauchy_implies_bounded(
    const GifPsiNorm& nrm, const SequenceSpec& s, const std::vector<double>& r_grid,
    const std::vector<double>& t_grid, long N, long p_max,
    const std::vector<double>& t_search_grid, const std::vector<double>& r_search_grid) {
  CauchyBoundedReport rep;
  rep.cauchy = check_cauchy(nrm, s, r_grid, t_grid, N, p_max);
  rep.certificate = check_bounded(nrm, s, N, t_search_grid, r_search_grid);
  rep.violation = rep.cauchy.positive() && !rep.certificate.found;
  return rep;
}

}  // namespace gifpsi
