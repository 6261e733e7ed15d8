#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "gifpsi/connectives.hpp"
#include "gifpsi/errors.hpp"
#include "gifpsi/space.hpp"

namespace gifpsi {

/// Degrees of membership and non-membership at one (vector, t) point.
struct MembershipPair {
  double mu = 0.0;
  double nu = 0.0;
};

/// A generalized intuitionistic fuzzy psi-norm: an evaluatable (mu, nu)
/// pair over V x (0, inf), together with the connectives it is meant to
/// satisfy the axioms against. Immutable and freely shareable.
class GifPsiNorm {
 public:
  using MembershipFn = std::function<double(const Vector&, double)>;

  enum class Kind { Standard, Custom };

  /// mu(x,t) = t / (t + k||x||), nu(x,t) = k||x|| / (t + k||x||), k > 0.
  static GifPsiNorm standard(VectorSpaceConfig space, double k,
                             FuzzyConnectives connectives = FuzzyConnectives::standard()) {
    space.validate();
    if (!(k > 0.0)) throw domain_error("standard construction requires k > 0, got " +
                                       std::to_string(k));
    GifPsiNorm n;
    n.space_ = std::move(space);
    n.connectives_ = std::move(connectives);
    n.kind_ = Kind::Standard;
    n.k_ = k;
    return n;
  }

  static GifPsiNorm custom(VectorSpaceConfig space, FuzzyConnectives connectives,
                           MembershipFn mu, MembershipFn nu) {
    space.validate();
    if (!mu || !nu) throw domain_error("custom norm requires both mu and nu functions");
    GifPsiNorm n;
    n.space_ = std::move(space);
    n.connectives_ = std::move(connectives);
    n.kind_ = Kind::Custom;
    n.mu_fn_ = std::move(mu);
    n.nu_fn_ = std::move(nu);
    return n;
  }

  MembershipPair eval(const Vector& x, double t) const {
    space_.check_shape(x);
    if (!(t > 0.0))
      throw domain_error("membership requires t > 0, got " + std::to_string(t));
    if (kind_ == Kind::Standard) {
      double r = k_ * space_.crisp_norm(x);
      double denom = t + r;
      return {t / denom, r / denom};
    }
    return {mu_fn_(x, t), nu_fn_(x, t)};
  }

  double mu(const Vector& x, double t) const { return eval(x, t).mu; }
  double nu(const Vector& x, double t) const { return eval(x, t).nu; }

  const VectorSpaceConfig& space() const { return space_; }
  const FuzzyConnectives& connectives() const { return connectives_; }
  Kind kind() const { return kind_; }
  bool is_standard() const { return kind_ == Kind::Standard; }
  double k() const { return k_; }
  int dimension() const { return space_.dimension; }

 private:
  GifPsiNorm() = default;

  VectorSpaceConfig space_;
  FuzzyConnectives connectives_;
  Kind kind_ = Kind::Standard;
  double k_ = 1.0;
  MembershipFn mu_fn_, nu_fn_;
};

inline GifPsiNorm standard_construction(const VectorSpaceConfig& space, double k,
                                        const FuzzyConnectives& connectives =
                                            FuzzyConnectives::standard()) {
  return GifPsiNorm::standard(space, k, connectives);
}

inline MembershipPair eval_membership(const GifPsiNorm& n, const Vector& x, double t) {
  return n.eval(x, t);
}

}  // namespace gifpsi
