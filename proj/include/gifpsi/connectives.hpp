#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "gifpsi/errors.hpp"

namespace gifpsi {

namespace detail {

inline void require_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0))
    throw domain_error(std::string(what) + " argument " + std::to_string(v) +
                       " outside [0,1]");
}

inline void require_nonneg(double v, const char* what) {
  if (!(v >= 0.0))
    throw domain_error(std::string(what) + " argument " + std::to_string(v) +
                       " must be >= 0");
}

}  // namespace detail

/// Binary conjunction operator on [0,1] with identity 1. Builtins: minimum,
/// product, Lukasiewicz max(a+b-1, 0). Custom kinds carry an opaque
/// function and are validated by sampling, not assumed correct.
struct TNorm {
  enum class Kind { Minimum, Product, Lukasiewicz, Custom };

  Kind kind = Kind::Minimum;
  std::function<double(double, double)> fn;  // Custom only
  std::string name = "minimum";

  static TNorm minimum() { return {Kind::Minimum, nullptr, "minimum"}; }
  static TNorm product() { return {Kind::Product, nullptr, "product"}; }
  static TNorm lukasiewicz() { return {Kind::Lukasiewicz, nullptr, "lukasiewicz"}; }
  static TNorm custom(std::function<double(double, double)> f, std::string label = "custom") {
    return {Kind::Custom, std::move(f), std::move(label)};
  }

  double operator()(double a, double b) const {
    detail::require_unit(a, "t-norm");
    detail::require_unit(b, "t-norm");
    switch (kind) {
      case Kind::Minimum: return a < b ? a : b;
      case Kind::Product: return a * b;
      case Kind::Lukasiewicz: return std::max(a + b - 1.0, 0.0);
      case Kind::Custom: return fn(a, b);
    }
    return 0.0;
  }
};

/// Dual disjunction operator on [0,1] with identity 0. Builtins: maximum,
/// probabilistic sum a+b-ab, bounded sum min(a+b, 1).
struct TConorm {
  enum class Kind { Maximum, ProbabilisticSum, BoundedSum, Custom };

  Kind kind = Kind::Maximum;
  std::function<double(double, double)> fn;
  std::string name = "maximum";

  static TConorm maximum() { return {Kind::Maximum, nullptr, "maximum"}; }
  static TConorm probabilistic_sum() {
    return {Kind::ProbabilisticSum, nullptr, "probabilistic-sum"};
  }
  static TConorm bounded_sum() { return {Kind::BoundedSum, nullptr, "bounded-sum"}; }
  static TConorm custom(std::function<double(double, double)> f, std::string label = "custom") {
    return {Kind::Custom, std::move(f), std::move(label)};
  }

  double operator()(double a, double b) const {
    detail::require_unit(a, "t-conorm");
    detail::require_unit(b, "t-conorm");
    switch (kind) {
      case Kind::Maximum: return a > b ? a : b;
      case Kind::ProbabilisticSum: return a + b - a * b;
      case Kind::BoundedSum: return std::min(a + b, 1.0);
      case Kind::Custom: return fn(a, b);
    }
    return 0.0;
  }
};

/// Commutative, associative, monotone operation on [0, inf) with identity 0;
/// combines the time parameters in the triangle axioms. power_mean(n) is
/// (s^n + t^n)^(1/n); power_mean(1) coincides with add.
struct CircleOp {
  enum class Kind { Add, Max, PowerMean };

  Kind kind = Kind::Add;
  int n = 1;  // PowerMean exponent
  std::string name = "add";

  static CircleOp add() { return {Kind::Add, 1, "add"}; }
  static CircleOp max() { return {Kind::Max, 1, "max"}; }
  static CircleOp power_mean(int n) {
    if (n < 1) throw domain_error("power-mean exponent must be a positive integer");
    return {Kind::PowerMean, n, "power-mean(" + std::to_string(n) + ")"};
  }

  double operator()(double s, double t) const {
    detail::require_nonneg(s, "circle operation");
    detail::require_nonneg(t, "circle operation");
    switch (kind) {
      case Kind::Add: return s + t;
      case Kind::Max: return s > t ? s : t;
      case Kind::PowerMean: {
        if (n == 1) return s + t;
        if (s == 0.0) return t;
        if (t == 0.0) return s;
        // factor out the larger argument to avoid overflow for big n
        double hi = std::max(s, t), lo = std::min(s, t);
        double r = lo / hi;
        return hi * std::pow(1.0 + std::pow(r, n), 1.0 / n);
      }
    }
    return 0.0;
  }
};

/// Even, normalized (psi(1) = 1), strictly increasing scaling function that
/// generalizes |.| in the homogeneity axioms. rational_example(n) is
/// 2 a^(2n) / (|a| + 1).
struct PsiFunction {
  enum class Kind { Abs, AbsPower, RationalExample, Custom };

  Kind kind = Kind::Abs;
  double p = 1.0;  // AbsPower exponent
  int n = 1;       // RationalExample exponent
  std::function<double(double)> fn;
  std::string name = "abs";

  static PsiFunction abs() { return {Kind::Abs, 1.0, 1, nullptr, "abs"}; }
  static PsiFunction abs_power(double p) {
    if (!(p > 0.0)) throw domain_error("abs-power exponent must be > 0");
    return {Kind::AbsPower, p, 1, nullptr, "abs-power(" + std::to_string(p) + ")"};
  }
  static PsiFunction rational_example(int n) {
    if (n < 1) throw domain_error("rational-example exponent must be a positive integer");
    return {Kind::RationalExample, 1.0, n, nullptr,
            "rational-example(" + std::to_string(n) + ")"};
  }
  static PsiFunction custom(std::function<double(double)> f, std::string label = "custom") {
    return {Kind::Custom, 1.0, 1, std::move(f), std::move(label)};
  }

  double operator()(double a) const {
    switch (kind) {
      case Kind::Abs: return std::abs(a);
      case Kind::AbsPower: return std::pow(std::abs(a), p);
      case Kind::RationalExample: {
        double m = std::abs(a);
        return 2.0 * std::pow(m, 2 * n) / (m + 1.0);
      }
      case Kind::Custom: return fn(a);
    }
    return 0.0;
  }
};

/// The algebraic environment a fuzzy norm lives in: (t-norm, t-conorm,
/// circle operation, psi) as one bundle.
struct FuzzyConnectives {
  TNorm tnorm = TNorm::minimum();
  TConorm tconorm = TConorm::maximum();
  CircleOp circle = CircleOp::add();
  PsiFunction psi = PsiFunction::abs();

  /// min/max/add/abs: the environment every standard construction works in.
  static FuzzyConnectives standard() { return {}; }
};

inline double apply_tnorm(const TNorm& t, double a, double b) { return t(a, b); }
inline double apply_tconorm(const TConorm& s, double a, double b) { return s(a, b); }
inline double apply_circle(const CircleOp& c, double s, double t) { return c(s, t); }

}  // namespace gifpsi
