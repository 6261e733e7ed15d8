#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "gifpsi/membership.hpp"
#include "gifpsi/random.hpp"
#include "gifpsi/report.hpp"
#include "gifpsi/validate.hpp"

namespace gifpsi {

/// Crisp alpha-norm family extracted from a fuzzy norm.
///
/// The mu variant evaluates inf{t > 0 : mu(x,t) >= alpha}. The nu variant
/// evaluates inf{t > 0 : nu(x,t) <= 1 - alpha}: the sup over the ray
/// {t : nu <= alpha} is unbounded because nu(x,.) is nonincreasing, so only
/// the infimum form yields a finite ascending family. Reports carry this
/// convention note.
struct AlphaNormFamily {
  enum class Variant { Mu, Nu };

  GifPsiNorm source;
  Variant variant = Variant::Mu;
  double bracket_cap = 1e12;
  double tolerance = 1e-9;

  static constexpr const char* convention_note =
      "nu-variant computes inf{t : nu(x,t) <= 1-alpha}; the sup form over "
      "{t : nu <= alpha} is unbounded and cannot define a norm";
};

namespace detail {

/// Bisection for the smallest t with pred(t) true, where pred is monotone
/// (false then true) in t. Brackets by doubling from [0, 1], then refines
/// to the absolute tolerance and, within the iteration budget, to ~1e-12
/// relative so that ratios of results keep full precision.
template <typename Pred>
double monotone_bisection(const Pred& pred, double bracket_cap, double abs_tol,
                          const char* what) {
  constexpr int kMaxIter = 200;
  constexpr double kRelTol = 1e-12;

  double hi = 1.0;
  double lo = 0.0;
  if (!pred(hi)) {
    while (true) {
      lo = hi;
      hi *= 2.0;
      if (hi > bracket_cap)
        throw unreachable_level_error(std::string(what) +
                                      ": level not reached below bracket cap " +
                                      std::to_string(bracket_cap));
      if (pred(hi)) break;
    }
  }
  for (int it = 0; it < kMaxIter; ++it) {
    double width = hi - lo;
    if (width <= abs_tol && width <= kRelTol * hi) break;
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // no representable midpoint left
    if (pred(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace detail

/// Evaluate the alpha-norm of x at level alpha in (0,1). Returns 0 exactly
/// for the null vector.
inline double alpha_norm(const AlphaNormFamily& f, const Vector& x, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw domain_error("alpha must lie in the open interval (0,1), got " +
                       std::to_string(alpha));
  f.source.space().check_shape(x);
  if (is_zero_vector(x)) return 0.0;

  if (f.variant == AlphaNormFamily::Variant::Mu) {
    auto pred = [&](double t) { return f.source.mu(x, t) >= alpha; };
    return detail::monotone_bisection(pred, f.bracket_cap, f.tolerance, "alpha_norm(mu)");
  }
  auto pred = [&](double t) { return f.source.nu(x, t) <= 1.0 - alpha; };
  return detail::monotone_bisection(pred, f.bracket_cap, f.tolerance, "alpha_norm(nu)");
}

/// Crisp-norm axioms of the extracted alpha-norm on sampled vectors:
/// nonnegativity, definiteness, psi-homogeneity and the triangle
/// inequality. The triangle is checked numerically rather than assumed;
/// circle operations other than addition may genuinely violate it.
inline AxiomReport check_crisp_norm_axioms(const AlphaNormFamily& f, double alpha,
                                           const SamplerConfig& cfg) {
  cfg.validate();
  if (!(alpha > 0.0 && alpha < 1.0))
    throw domain_error("alpha must lie in the open interval (0,1)");
  const auto& space = f.source.space();
  Rng root(cfg.seed);
  AxiomReport report;

  {  // nonnegativity
    Rng rng = root.fork(1);
    AxiomCheck c = AxiomCheck::pass("nonnegativity", 0.0);
    for (int s = 0; s < cfg.samples; ++s) {
      Vector x = space.sample_vector(rng);
      double v = alpha_norm(f, x, alpha);
      if (!(v >= 0.0)) {
        c = AxiomCheck::fail("nonnegativity", Witness().set("x", x), v, 0.0, 0.0);
        break;
      }
    }
    report.checks.push_back(c);
  }
  {  // definiteness: zero exactly at theta, positive elsewhere
    Rng rng = root.fork(2);
    AxiomCheck c = AxiomCheck::pass("definiteness", 0.0);
    double at_zero = alpha_norm(f, space.zero(), alpha);
    if (at_zero != 0.0) {
      c = AxiomCheck::fail("definiteness", Witness().set("x", space.zero()), at_zero, 0.0,
                           0.0, "norm of the null vector");
    } else {
      for (int s = 0; s < cfg.samples; ++s) {
        Vector x = detail::nonzero_vector(space, rng);
        double v = alpha_norm(f, x, alpha);
        if (!(v > 0.0)) {
          c = AxiomCheck::fail("definiteness", Witness().set("x", x), v, 0.0, 0.0,
                               "norm must be positive off the null vector");
          break;
        }
      }
    }
    report.checks.push_back(c);
  }
  {  // ||c x|| = psi(c) ||x||, relative comparison
    Rng rng = root.fork(3);
    const double rel_tol = 1e-9;
    AxiomCheck c = AxiomCheck::pass("psi-homogeneity", rel_tol);
    for (int s = 0; s < cfg.samples; ++s) {
      Vector x = detail::nonzero_vector(space, rng);
      double coef = detail::sample_alpha(rng);
      double lhs = alpha_norm(f, scale(coef, x), alpha);
      double rhs = f.source.connectives().psi(coef) * alpha_norm(f, x, alpha);
      if (std::abs(lhs - rhs) > rel_tol * std::abs(rhs) + 1e-15) {
        c = AxiomCheck::fail("psi-homogeneity", Witness().set("x", x).set("c", coef), lhs,
                             rhs, rel_tol);
        break;
      }
    }
    report.checks.push_back(c);
  }
  {  // triangle inequality
    Rng rng = root.fork(4);
    AxiomCheck c = AxiomCheck::pass("triangle", f.tolerance);
    for (int s = 0; s < cfg.samples; ++s) {
      Vector x = space.sample_vector(rng);
      Vector y = space.sample_vector(rng);
      double lhs = alpha_norm(f, add(x, y), alpha);
      double rhs = alpha_norm(f, x, alpha) + alpha_norm(f, y, alpha);
      double slack = f.tolerance + 1e-12 * std::abs(rhs);
      if (lhs > rhs + slack) {
        c = AxiomCheck::fail("triangle", Witness().set("x", x).set("y", y), lhs, rhs,
                             f.tolerance);
        break;
      }
    }
    report.checks.push_back(c);
  }
  return report;
}

/// Value profile of ||x||_alpha along an ascending grid of levels.
struct AscendingFamilyReport {
  Vector x;
  std::vector<double> alphas;
  std::vector<double> values;
  bool nondecreasing = true;
  std::vector<std::size_t> violations;  // i where values[i+1] < values[i] - slack
  std::string note;
};

inline AscendingFamilyReport check_ascending_family(const AlphaNormFamily& f, const Vector& x,
                                                    const std::vector<double>& alpha_grid) {
  if (alpha_grid.empty()) throw domain_error("alpha grid must be nonempty");
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    if (!(alpha_grid[i] > 0.0 && alpha_grid[i] < 1.0))
      throw domain_error("alpha grid entries must lie in (0,1)");
    if (i > 0 && !(alpha_grid[i] > alpha_grid[i - 1]))
      throw domain_error("alpha grid must be strictly increasing");
  }
  AscendingFamilyReport rep;
  rep.x = x;
  rep.alphas = alpha_grid;
  if (f.variant == AlphaNormFamily::Variant::Nu) rep.note = AlphaNormFamily::convention_note;
  for (double a : alpha_grid) rep.values.push_back(alpha_norm(f, x, a));
  for (std::size_t i = 0; i + 1 < rep.values.size(); ++i) {
    double slack = f.tolerance + 1e-12 * std::max(std::abs(rep.values[i]),
                                                  std::abs(rep.values[i + 1]));
    if (rep.values[i + 1] < rep.values[i] - slack) {
      rep.nondecreasing = false;
      rep.violations.push_back(i);
    }
  }
  return rep;
}

/// Numerical estimate of the collinearity constant: the minimum of
/// ||sum a_i x_i||_alpha over coefficient vectors normalized to
/// sum |a_i| = 1. Random simplex sampling with signs plus coordinate
/// descent; the result is an upper bound on the true constant.
struct CollinearityEstimate {
  double alpha = 0.0;
  std::vector<Vector> vectors;
  double c_alpha_estimate = 0.0;
  std::vector<double> argmin_coefficients;
  std::string note = "upper bound: minimum over sampled coefficient vectors";
};

inline CollinearityEstimate estimate_collinearity_constant(const AlphaNormFamily& f,
                                                           const std::vector<Vector>& vectors,
                                                           double alpha,
                                                           const SamplerConfig& cfg) {
  cfg.validate();
  if (vectors.empty()) throw domain_error("need at least one vector");
  const auto& space = f.source.space();
  for (const auto& v : vectors) space.check_shape(v);

  const int m = static_cast<int>(vectors.size());
  const int dim = space.dimension;
  Eigen::MatrixXd M(dim, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < dim; ++i) M(i, j) = vectors[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  lu.setThreshold(1e-10);
  if (lu.rank() < m)
    throw rank_error("input vectors are linearly dependent at tolerance 1e-10");

  auto combine = [&](const std::vector<double>& a) {
    Vector v = space.zero();
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < dim; ++i)
        v[static_cast<std::size_t>(i)] +=
            a[static_cast<std::size_t>(j)] * vectors[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    return v;
  };
  auto objective = [&](const std::vector<double>& a) {
    return alpha_norm(f, combine(a), alpha);
  };
  auto renorm = [&](std::vector<double> a) {
    double s = 0.0;
    for (double c : a) s += std::abs(c);
    if (s == 0.0) return std::vector<double>();
    for (double& c : a) c /= s;
    return a;
  };

  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_a;
  auto consider = [&](const std::vector<double>& a) {
    if (a.empty()) return;
    double v = objective(a);
    if (v < best) {
      best = v;
      best_a = a;
    }
  };

  // one-hot coefficients first: they cap the estimate by min_i ||x_i||_alpha
  for (int j = 0; j < m; ++j) {
    std::vector<double> a(static_cast<std::size_t>(m), 0.0);
    a[static_cast<std::size_t>(j)] = 1.0;
    consider(a);
  }

  Rng rng(cfg.seed);
  for (int s = 0; s < cfg.samples; ++s) {
    std::vector<double> a(static_cast<std::size_t>(m));
    for (auto& c : a) {
      double u = rng.uniform01();
      while (u <= 0.0) u = rng.uniform01();
      c = -std::log(u);
      if (rng.coin()) c = -c;
    }
    consider(renorm(std::move(a)));
  }

  // local coordinate descent around the sampled minimum
  double h = 0.25;
  for (int step = 0; step < 100; ++step) {
    bool improved = false;
    for (int j = 0; j < m; ++j) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> a = best_a;
        a[static_cast<std::size_t>(j)] += sign * h;
        a = renorm(std::move(a));
        if (a.empty()) continue;
        double v = objective(a);
        if (v < best) {
          best = v;
          best_a = std::move(a);
          improved = true;
        }
      }
    }
    if (!improved) h *= 0.5;
    if (h < 1e-12) break;
  }

  CollinearityEstimate est;
  est.alpha = alpha;
  est.vectors = vectors;
  est.c_alpha_estimate = best;
  est.argmin_coefficients = best_a;
  return est;
}

}  // namespace gifpsi
