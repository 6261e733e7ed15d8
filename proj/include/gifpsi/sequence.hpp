#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gifpsi/errors.hpp"
#include "gifpsi/space.hpp"

namespace gifpsi {

/// Finitely evaluable vector sequence (1-indexed). Closed-form generators
/// evaluate at any index; explicit lists up to their length.
class SequenceSpec {
 public:
  enum class Kind { AffineDecay, Geometric, Oscillating, Explicit };

  /// x_n = base + direction / n
  static SequenceSpec affine_decay(Vector base, Vector direction) {
    check_same_dim(base, direction);
    SequenceSpec s;
    s.kind_ = Kind::AffineDecay;
    s.dimension_ = static_cast<int>(base.size());
    s.base_ = std::move(base);
    s.dir_ = std::move(direction);
    return s;
  }

  /// x_n = base + direction * q^n
  static SequenceSpec geometric(Vector base, Vector direction, double ratio) {
    check_same_dim(base, direction);
    SequenceSpec s;
    s.kind_ = Kind::Geometric;
    s.dimension_ = static_cast<int>(base.size());
    s.base_ = std::move(base);
    s.dir_ = std::move(direction);
    s.ratio_ = ratio;
    return s;
  }

  /// Alternates between two affine-decay tails: even n follows
  /// base_even + dir_even / n, odd n follows base_odd + dir_odd / n.
  static SequenceSpec oscillating(Vector base_even, Vector dir_even, Vector base_odd,
                                  Vector dir_odd) {
    check_same_dim(base_even, dir_even);
    check_same_dim(base_even, base_odd);
    check_same_dim(base_even, dir_odd);
    SequenceSpec s;
    s.kind_ = Kind::Oscillating;
    s.dimension_ = static_cast<int>(base_even.size());
    s.base_ = std::move(base_even);
    s.dir_ = std::move(dir_even);
    s.base_odd_ = std::move(base_odd);
    s.dir_odd_ = std::move(dir_odd);
    return s;
  }

  static SequenceSpec explicit_list(std::vector<Vector> values) {
    if (values.empty()) throw domain_error("explicit sequence must be nonempty");
    for (const auto& v : values)
      if (v.size() != values.front().size())
        throw shape_error("explicit sequence entries must share one dimension");
    SequenceSpec s;
    s.kind_ = Kind::Explicit;
    s.dimension_ = static_cast<int>(values.front().size());
    s.values_ = std::move(values);
    return s;
  }

  static SequenceSpec constant(const Vector& value) {
    return affine_decay(value, zero_vector(value.size()));
  }

  Vector eval(long n) const {
    if (n < 1) throw domain_error("sequence index must be >= 1");
    switch (kind_) {
      case Kind::AffineDecay: {
        Vector x(base_);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += dir_[i] / static_cast<double>(n);
        return x;
      }
      case Kind::Geometric: {
        double q = std::pow(ratio_, static_cast<double>(n));
        Vector x(base_);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += dir_[i] * q;
        return x;
      }
      case Kind::Oscillating: {
        const Vector& b = (n % 2 == 0) ? base_ : base_odd_;
        const Vector& d = (n % 2 == 0) ? dir_ : dir_odd_;
        Vector x(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += d[i] / static_cast<double>(n);
        return x;
      }
      case Kind::Explicit: {
        if (n > static_cast<long>(values_.size()))
          throw domain_error("explicit sequence has only " +
                             std::to_string(values_.size()) + " entries, index " +
                             std::to_string(n) + " requested");
        return values_[static_cast<std::size_t>(n - 1)];
      }
    }
    return {};
  }

  Kind kind() const { return kind_; }
  int dimension() const { return dimension_; }

  /// Largest evaluable index (LONG_MAX for generators).
  long max_horizon() const {
    return kind_ == Kind::Explicit ? static_cast<long>(values_.size())
                                   : std::numeric_limits<long>::max();
  }

  /// Clamp a requested horizon to what the sequence can evaluate.
  long horizon_or(long requested) const { return std::min(requested, max_horizon()); }

 private:
  static void check_same_dim(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw shape_error("sequence parameters: dimension mismatch");
    if (a.empty()) throw shape_error("sequence dimension must be >= 1");
  }

  Kind kind_ = Kind::AffineDecay;
  int dimension_ = 0;
  Vector base_, dir_;          // AffineDecay / Geometric / Oscillating(even)
  Vector base_odd_, dir_odd_;  // Oscillating(odd)
  double ratio_ = 0.5;         // Geometric
  std::vector<Vector> values_; // Explicit
};

/// Materialize a window [1, n] of any sequence as an explicit list.
inline SequenceSpec materialize(const SequenceSpec& s, long n) {
  std::vector<Vector> values;
  values.reserve(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) values.push_back(s.eval(i));
  return SequenceSpec::explicit_list(std::move(values));
}

/// Pointwise sum of two sequences over a shared window.
inline SequenceSpec pointwise_sum(const SequenceSpec& a, const SequenceSpec& b, long n) {
  if (a.dimension() != b.dimension())
    throw shape_error("pointwise sum: sequence dimensions differ");
  std::vector<Vector> values;
  values.reserve(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) values.push_back(add(a.eval(i), b.eval(i)));
  return SequenceSpec::explicit_list(std::move(values));
}

/// Pointwise scaling of a sequence over a window.
inline SequenceSpec pointwise_scale(double c, const SequenceSpec& s, long n) {
  std::vector<Vector> values;
  values.reserve(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) values.push_back(scale(c, s.eval(i)));
  return SequenceSpec::explicit_list(std::move(values));
}

}  // namespace gifpsi
