#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gifpsi/sequence.hpp"
#include "gifpsi/sequence_checks.hpp"

namespace gifpsi {

/// Coordinates of a sequence window against a basis, used by the
/// subsequence extractor. Reconstruction of any row against the basis
/// matches the original vector within solver tolerance.
struct BasisExpansion {
  std::vector<Vector> basis;
  std::vector<std::vector<double>> coordinates;  // [window index][basis index]
  Vector coordinate_limits;                      // filled by the extractor
};

struct SubsequenceResult {
  std::vector<long> indices;  // ascending original indices
  Vector limit;
  BasisExpansion expansion;
  long halving_steps = 0;
  double final_spread = 0.0;
};

struct ExtractionOptions {
  double spread_tol = 1e-6;
  double unbounded_cap = 1e3;
  long min_survivors = 4;
};

namespace detail {

inline Eigen::PartialPivLU<Eigen::MatrixXd> basis_factorization(
    const std::vector<Vector>& basis, int dim) {
  if (static_cast<int>(basis.size()) != dim)
    throw rank_error("basis must contain exactly dim vectors");
  Eigen::MatrixXd E(dim, dim);
  for (int j = 0; j < dim; ++j) {
    if (static_cast<int>(basis[static_cast<std::size_t>(j)].size()) != dim)
      throw shape_error("basis vector dimension mismatch");
    for (int i = 0; i < dim; ++i)
      E(i, j) = basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  Eigen::FullPivLU<Eigen::MatrixXd> check(E);
  check.setThreshold(1e-10);
  if (check.rank() < dim) throw rank_error("basis vectors are linearly dependent");
  return Eigen::PartialPivLU<Eigen::MatrixXd>(E);
}

inline std::vector<double> expand_in_basis(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu,
                                           const Vector& x) {
  Eigen::VectorXd b(static_cast<long>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) b(static_cast<long>(i)) = x[i];
  Eigen::VectorXd c = lu.solve(b);
  return std::vector<double>(c.data(), c.data() + c.size());
}

}  // namespace detail

/// Coordinate-wise Bolzano-Weierstrass: repeatedly halves the range of the
/// coordinate with the largest spread, keeping the half containing at least
/// as many surviving indices, until every coordinate spread falls below
/// spread_tol or only min_survivors indices remain. The returned
/// subsequence re-verifies against the returned limit by construction of
/// the nested cells.
inline SubsequenceResult extract_convergent_subsequence(const GifPsiNorm& nrm,
                                                        const SequenceSpec& s, long N,
                                                        const std::vector<Vector>& basis,
                                                        const ExtractionOptions& opt = {}) {
  const int dim = nrm.dimension();
  if (s.dimension() != dim) throw shape_error("sequence dimension does not match the space");
  auto lu = detail::basis_factorization(basis, dim);
  const long horizon = s.horizon_or(N);

  SubsequenceResult res;
  res.expansion.basis = basis;
  res.expansion.coordinates.reserve(static_cast<std::size_t>(horizon));
  for (long n = 1; n <= horizon; ++n) {
    auto coords = detail::expand_in_basis(lu, s.eval(n));
    for (double c : coords) {
      if (!std::isfinite(c) || std::abs(c) > opt.unbounded_cap)
        throw unbounded_error("coordinate " + std::to_string(c) + " at index " +
                              std::to_string(n) + " exceeds cap " +
                              std::to_string(opt.unbounded_cap));
    }
    res.expansion.coordinates.push_back(std::move(coords));
  }

  std::vector<long> survivors(static_cast<std::size_t>(horizon));
  for (long n = 1; n <= horizon; ++n) survivors[static_cast<std::size_t>(n - 1)] = n;

  auto coord = [&](long n, int i) {
    return res.expansion.coordinates[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)];
  };

  double worst_spread = 0.0;
  for (;;) {
    int widest = -1;
    worst_spread = 0.0;
    for (int i = 0; i < dim; ++i) {
      double lo = coord(survivors.front(), i), hi = lo;
      for (long n : survivors) {
        lo = std::min(lo, coord(n, i));
        hi = std::max(hi, coord(n, i));
      }
      if (hi - lo > worst_spread) {
        worst_spread = hi - lo;
        widest = i;
      }
    }
    if (widest < 0 || worst_spread < opt.spread_tol) break;
    if (static_cast<long>(survivors.size()) <= opt.min_survivors) break;

    double lo = coord(survivors.front(), widest), hi = lo;
    for (long n : survivors) {
      lo = std::min(lo, coord(n, widest));
      hi = std::max(hi, coord(n, widest));
    }
    const double mid = 0.5 * (lo + hi);
    std::vector<long> lower, upper;
    for (long n : survivors) {
      if (coord(n, widest) <= mid)
        lower.push_back(n);
      else
        upper.push_back(n);
    }
    // majority side; on a tie prefer the side holding the latest index, so
    // the kept cell stays anchored to the window tail
    bool keep_upper;
    if (upper.size() != lower.size())
      keep_upper = upper.size() > lower.size();
    else
      keep_upper = upper.back() > lower.back();
    survivors = keep_upper ? std::move(upper) : std::move(lower);
    ++res.halving_steps;
  }

  res.indices = survivors;
  res.final_spread = worst_spread;
  res.expansion.coordinate_limits.assign(static_cast<std::size_t>(dim), 0.0);
  for (int i = 0; i < dim; ++i) {
    double sum = 0.0;
    for (long n : survivors) sum += coord(n, i);
    res.expansion.coordinate_limits[static_cast<std::size_t>(i)] =
        sum / static_cast<double>(survivors.size());
  }
  res.limit = nrm.space().zero();
  for (int i = 0; i < dim; ++i)
    res.limit = add(res.limit, scale(res.expansion.coordinate_limits[static_cast<std::size_t>(i)],
                                     basis[static_cast<std::size_t>(i)]));
  return res;
}

/// The extracted subsequence as an explicit sequence (for re-verification).
inline SequenceSpec subsequence_as_spec(const SequenceSpec& s, const std::vector<long>& indices) {
  std::vector<Vector> values;
  values.reserve(indices.size());
  for (long n : indices) values.push_back(s.eval(n));
  return SequenceSpec::explicit_list(std::move(values));
}

/// Limit reconstruction from coordinate tails: expands the window tail in
/// the basis, verifies the successive coordinate gaps stay below gap_tol,
/// and averages the tail. A failed gap control signals the input was not
/// Cauchy at that tolerance.
struct ReconstructionResult {
  Vector limit;
  Vector coordinate_limits;
  double max_tail_gap = 0.0;
  long tail_start = 0;
  long horizon = 0;
};

inline ReconstructionResult coordinate_limit_reconstruction(const GifPsiNorm& nrm,
                                                            const SequenceSpec& s,
                                                            const std::vector<Vector>& basis,
                                                            long N, double tail_fraction = 0.1,
                                                            double gap_tol = 1e-8) {
  const int dim = nrm.dimension();
  if (s.dimension() != dim) throw shape_error("sequence dimension does not match the space");
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
    throw domain_error("tail_fraction must lie in (0, 1]");
  auto lu = detail::basis_factorization(basis, dim);
  const long horizon = s.horizon_or(N);
  const long tail_len = std::max<long>(2, static_cast<long>(std::floor(
                                              static_cast<double>(horizon) * tail_fraction)));
  const long tail_start = horizon - tail_len + 1;

  ReconstructionResult res;
  res.tail_start = tail_start;
  res.horizon = horizon;

  std::vector<double> prev, sums(static_cast<std::size_t>(dim), 0.0);
  double max_gap = 0.0;
  for (long n = tail_start; n <= horizon; ++n) {
    auto c = detail::expand_in_basis(lu, s.eval(n));
    if (!prev.empty()) {
      for (int i = 0; i < dim; ++i)
        max_gap = std::max(max_gap,
                           std::abs(c[static_cast<std::size_t>(i)] - prev[static_cast<std::size_t>(i)]));
    }
    for (int i = 0; i < dim; ++i) sums[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i)];
    prev = std::move(c);
  }
  res.max_tail_gap = max_gap;
  if (max_gap > gap_tol)
    throw reconstruction_error("coordinate tail gap " + std::to_string(max_gap) +
                               " exceeds tolerance " + std::to_string(gap_tol) +
                               "; the sequence does not look Cauchy at this horizon");

  res.coordinate_limits.assign(static_cast<std::size_t>(dim), 0.0);
  for (int i = 0; i < dim; ++i)
    res.coordinate_limits[static_cast<std::size_t>(i)] =
        sums[static_cast<std::size_t>(i)] / static_cast<double>(tail_len);
  res.limit = nrm.space().zero();
  for (int i = 0; i < dim; ++i)
    res.limit = add(res.limit, scale(res.coordinate_limits[static_cast<std::size_t>(i)],
                                     basis[static_cast<std::size_t>(i)]));
  return res;
}

}  // namespace gifpsi
