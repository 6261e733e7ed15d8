#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "gifpsi/map_spec.hpp"
#include "gifpsi/sequence.hpp"

namespace gifpsi {

/// Built-in dim-2 sequence corpus with crisp-norm ground truth, used by the
/// detector-consistency checks. Labels state the behavior of the underlying
/// infinite sequence.
struct CorpusSequence {
  std::string id;
  SequenceSpec spec;
  bool convergent = false;
  Vector limit;  // meaningful when convergent
  bool cauchy = false;
  bool bounded = false;
};

inline std::vector<CorpusSequence> builtin_sequence_corpus(long explicit_horizon = 1000) {
  std::vector<CorpusSequence> corpus;
  const Vector theta{0.0, 0.0};

  corpus.push_back({"harmonic-to-zero",
                    SequenceSpec::affine_decay(theta, {1.0, 0.0}), true, theta, true, true});
  corpus.push_back({"constant-3-4", SequenceSpec::constant({3.0, 4.0}), true,
                    Vector{3.0, 4.0}, true, true});
  corpus.push_back({"affine-to-1-2",
                    SequenceSpec::affine_decay({1.0, 2.0}, {1.0, -1.0}), true,
                    Vector{1.0, 2.0}, true, true});
  corpus.push_back({"geometric-half",
                    SequenceSpec::geometric(theta, {1.0, 1.0}, 0.5), true, theta, true, true});
  corpus.push_back({"geometric-09-to-2-m1",
                    SequenceSpec::geometric({2.0, -1.0}, {1.0, 0.0}, 0.9), true,
                    Vector{2.0, -1.0}, true, true});
  corpus.push_back({"oscillating-sign-harmonic",
                    SequenceSpec::oscillating({1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, 1.0}),
                    false, theta, false, true});
  corpus.push_back({"alternating-unit",
                    SequenceSpec::oscillating({1.0, 0.0}, theta, {-1.0, 0.0}, theta), false,
                    theta, false, true});
  {
    std::vector<Vector> values;
    for (long n = 1; n <= explicit_horizon; ++n)
      values.push_back({std::sin(static_cast<double>(n)), 0.0});
    corpus.push_back({"sin-samples", SequenceSpec::explicit_list(std::move(values)), false,
                      theta, false, true});
  }
  {
    std::vector<Vector> values;
    for (long n = 1; n <= explicit_horizon; ++n)
      values.push_back({static_cast<double>(n), 0.0});
    corpus.push_back({"linear-growth", SequenceSpec::explicit_list(std::move(values)), false,
                      theta, false, false});
  }
  corpus.push_back({"geometric-growing",
                    SequenceSpec::geometric(theta, {1.0, 0.0}, 1.5), false, theta, false,
                    false});
  return corpus;
}

/// Crisp-norm reference verdicts at desk scale: the tail window of the
/// finite window decides.
inline bool crisp_converges(const SequenceSpec& s, const Vector& x, const CrispNorm& norm,
                            long N, double eps = 1e-2) {
  const long horizon = s.horizon_or(N);
  const long tail = std::max<long>(1, horizon / 10);
  for (long n = horizon - tail + 1; n <= horizon; ++n)
    if (norm(sub(s.eval(n), x)) > eps) return false;
  return true;
}

inline bool crisp_cauchy(const SequenceSpec& s, const CrispNorm& norm, long N,
                         double eps = 1e-2) {
  const long horizon = s.horizon_or(N);
  const long tail = std::max<long>(2, horizon / 10);
  const long start = horizon - tail + 1;
  for (long n = start; n < horizon; ++n)
    for (long m = n + 1; m <= std::min(horizon, n + 64); ++m)
      if (norm(sub(s.eval(m), s.eval(n))) > eps) return false;
  // also compare window ends, which catches slow drift
  return norm(sub(s.eval(horizon), s.eval(start))) <= eps;
}

inline bool crisp_bounded(const SequenceSpec& s, const CrispNorm& norm, long N,
                          double cap = 1e2) {
  const long horizon = s.horizon_or(N);
  for (long n = 1; n <= horizon; ++n)
    if (norm(s.eval(n)) > cap) return false;
  return true;
}

/// Built-in dim-2 map corpus for the continuity checks, with ground truth
/// at the null vector.
struct CorpusMap {
  std::string id;
  MapSpec map;
  bool continuous_at_theta = true;
};

inline std::vector<CorpusMap> builtin_map_corpus() {
  std::vector<CorpusMap> corpus;
  corpus.push_back({"double", MapSpec::componentwise_scale(2, 2.0), true});
  corpus.push_back({"identity", MapSpec::identity(2), true});
  corpus.push_back({"radial-normalize", MapSpec::radial_normalize(2), false});
  corpus.push_back({"square", MapSpec::componentwise_square(2), true});
  corpus.push_back({"sign", MapSpec::componentwise_sign(2), false});
  corpus.push_back(
      {"rotate90-shift",
       MapSpec::affine({{0.0, -1.0}, {1.0, 0.0}}, {1.0, 0.0}), true});
  corpus.push_back({"shear", MapSpec::linear({{1.0, 2.0}, {0.0, 1.0}}), true});
  return corpus;
}

/// Sequence family converging to a given point, for the sequential
/// continuity checks.
inline std::vector<SequenceSpec> converging_family(const Vector& x0) {
  std::vector<SequenceSpec> family;
  Vector e1(x0.size(), 0.0), diag(x0.size(), 1.0);
  e1[0] = 1.0;
  family.push_back(SequenceSpec::affine_decay(x0, e1));
  family.push_back(SequenceSpec::affine_decay(x0, diag));
  family.push_back(SequenceSpec::geometric(x0, diag, 0.5));
  return family;
}

}  // namespace gifpsi
