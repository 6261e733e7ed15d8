#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gifpsi/errors.hpp"
#include "gifpsi/random.hpp"

namespace gifpsi {

using Vector = std::vector<double>;

inline Vector zero_vector(std::size_t dim) { return Vector(dim, 0.0); }

inline bool is_zero_vector(const Vector& x) {
  return std::all_of(x.begin(), x.end(), [](double c) { return c == 0.0; });
}

inline Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw shape_error("vector addition: dimension mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw shape_error("vector subtraction: dimension mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vector scale(double c, const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

/// Crisp norm choice for the underlying linear space: a p-norm with p >= 1
/// or the max norm.
struct CrispNorm {
  enum class Kind { PNorm, MaxNorm };

  Kind kind = Kind::PNorm;
  double p = 2.0;

  static CrispNorm p_norm(double p) {
    if (!(p >= 1.0)) throw domain_error("crisp norm: p must be >= 1");
    return CrispNorm{Kind::PNorm, p};
  }
  static CrispNorm max_norm() { return CrispNorm{Kind::MaxNorm, 0.0}; }
  static CrispNorm euclidean() { return p_norm(2.0); }

  double operator()(const Vector& x) const {
    switch (kind) {
      case Kind::MaxNorm: {
        double m = 0.0;
        for (double c : x) m = std::max(m, std::abs(c));
        return m;
      }
      case Kind::PNorm: {
        if (p == 2.0) {
          double s = 0.0;
          for (double c : x) s += c * c;
          return std::sqrt(s);
        }
        if (p == 1.0) {
          double s = 0.0;
          for (double c : x) s += std::abs(c);
          return s;
        }
        double s = 0.0;
        for (double c : x) s += std::pow(std::abs(c), p);
        return std::pow(s, 1.0 / p);
      }
    }
    return 0.0;
  }
};

/// Finite-dimensional real linear space with a designated crisp norm.
struct VectorSpaceConfig {
  int dimension = 2;
  CrispNorm crisp_norm = CrispNorm::euclidean();

  void validate() const {
    if (dimension < 1) throw domain_error("space dimension must be >= 1");
  }

  void check_shape(const Vector& x) const {
    if (static_cast<int>(x.size()) != dimension)
      throw shape_error("vector has dimension " + std::to_string(x.size()) +
                        ", space expects " + std::to_string(dimension));
  }

  Vector zero() const { return zero_vector(static_cast<std::size_t>(dimension)); }

  Vector basis_vector(int i) const {
    Vector e = zero();
    e[static_cast<std::size_t>(i)] = 1.0;
    return e;
  }

  /// Component-wise uniform draw from [-10, 10].
  Vector sample_vector(Rng& rng) const {
    Vector x(static_cast<std::size_t>(dimension));
    for (auto& c : x) c = rng.uniform(-10.0, 10.0);
    return x;
  }
};

}  // namespace gifpsi
