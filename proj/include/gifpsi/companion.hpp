#pragma once

#include <functional>
#include <string>
#include <utility>

#include "gifpsi/connectives.hpp"
#include "gifpsi/errors.hpp"

namespace gifpsi {

namespace detail {

inline constexpr int kCompanionGridPoints = 1024;

/// Smallest grid/refined point in (0,1) satisfying a predicate whose
/// satisfying set is an upper interval (b, 1). Scans an ascending grid,
/// then runs one bisection refinement pass inside the bracketing cell.
inline double upper_interval_witness(const std::function<bool(double)>& pred,
                                     const char* what) {
  const int g = kCompanionGridPoints;
  double prev = 0.0;
  for (int i = 1; i <= g; ++i) {
    double r = static_cast<double>(i) / (g + 1);
    if (pred(r)) {
      double lo = prev, hi = r;  // pred(hi) holds
      for (int it = 0; it < 40; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (pred(mid))
          hi = mid;
        else
          lo = mid;
      }
      return hi;
    }
    prev = r;
  }
  // region may hide between the last grid point and 1
  double base = static_cast<double>(g) / (g + 1);
  for (int k = 1; k <= 60; ++k) {
    double r = 1.0 - (1.0 - base) * std::pow(0.5, k);
    if (r >= 1.0) break;
    if (pred(r)) return r;
  }
  throw search_exhausted_error(std::string(what) +
                               ": no witness found at grid resolution (operation "
                               "likely violates its axioms)");
}

/// Largest grid/refined point in (0,1) satisfying a predicate whose
/// satisfying set is a lower interval (0, b).
inline double lower_interval_witness(const std::function<bool(double)>& pred,
                                     const char* what) {
  const int g = kCompanionGridPoints;
  double last_true = -1.0;
  double first_false = -1.0;
  for (int i = 1; i <= g; ++i) {
    double r = static_cast<double>(i) / (g + 1);
    if (pred(r)) {
      last_true = r;
    } else {
      first_false = r;
      break;
    }
  }
  if (last_true > 0.0) {
    if (first_false < 0.0) return last_true;  // satisfied through the whole grid
    double lo = last_true, hi = first_false;  // pred(lo) holds
    for (int it = 0; it < 40; ++it) {
      double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (pred(mid))
        lo = mid;
      else
        hi = mid;
    }
    return lo;
  }
  // region may hide below the first grid point
  double base = 1.0 / (g + 1);
  for (int k = 1; k <= 60; ++k) {
    double r = base * std::pow(0.5, k);
    if (r <= 0.0) break;
    if (pred(r)) return r;
  }
  throw search_exhausted_error(std::string(what) +
                               ": no witness found at grid resolution (operation "
                               "likely violates its axioms)");
}

inline void require_companion_pre(double r1, double r2) {
  if (!(0.0 < r2 && r2 < r1 && r1 < 1.0))
    throw domain_error("companion solver requires 0 < r2 < r1 < 1, got r1=" +
                       std::to_string(r1) + ", r2=" + std::to_string(r2));
}

}  // namespace detail

/// r3 in (0,1) with tnorm(r1, r3) > r2, for 0 < r2 < r1 < 1. The returned
/// value is re-verified before return.
inline double find_companion_r3(double r1, double r2, const TNorm& t) {
  detail::require_companion_pre(r1, r2);
  auto pred = [&](double r) { return t(r1, r) > r2; };
  double r3 = detail::upper_interval_witness(pred, "find_companion_r3");
  if (!pred(r3)) throw search_exhausted_error("find_companion_r3: verification failed");
  return r3;
}

/// r4 in (0,1) with tconorm(r4, r2) < r1, for 0 < r2 < r1 < 1.
inline double find_companion_r4(double r1, double r2, const TConorm& s) {
  detail::require_companion_pre(r1, r2);
  auto pred = [&](double r) { return s(r, r2) < r1; };
  double r4 = detail::lower_interval_witness(pred, "find_companion_r4");
  if (!pred(r4)) throw search_exhausted_error("find_companion_r4: verification failed");
  return r4;
}

/// (r6, r7) with tnorm(r6, r6) >= r5 and tconorm(r7, r7) <= r5, for
/// r5 in (0,1). Both values are re-verified before return.
inline std::pair<double, double> find_idempotent_pair(double r5, const TNorm& t,
                                                      const TConorm& s) {
  if (!(0.0 < r5 && r5 < 1.0))
    throw domain_error("find_idempotent_pair requires r5 in (0,1), got " +
                       std::to_string(r5));
  auto pred6 = [&](double r) { return t(r, r) >= r5; };
  auto pred7 = [&](double r) { return s(r, r) <= r5; };
  double r6 = detail::upper_interval_witness(pred6, "find_idempotent_pair(r6)");
  double r7 = detail::lower_interval_witness(pred7, "find_idempotent_pair(r7)");
  if (!pred6(r6) || !pred7(r7))
    throw search_exhausted_error("find_idempotent_pair: verification failed");
  return {r6, r7};
}

}  // namespace gifpsi
