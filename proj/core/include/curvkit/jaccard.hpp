#pragma once

#include "curvkit/neighborhood.hpp"
#include "curvkit/rational.hpp"

namespace curvkit {

/// Coefficients of the affine gJC family. The canonical instance satisfies
/// alpha + beta = 1 (complete graphs -> 1), alpha + gamma = 0 (grids -> 0),
/// alpha + zeta = -2 (trees -> -2) and gamma > delta > zeta.
struct GjcParams {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = -1.0;
  double delta = -2.0;
  double zeta = -3.0;

  static constexpr GjcParams canonical() { return {}; }
  /// The instance that collapses the family onto JC = -2 + 3 C / N.
  static constexpr GjcParams jaccard() { return {-2.0, 3.0, 0.0, 0.0, 0.0}; }
};

/// Jaccard coefficient C / N.
Rational jaccard_coefficient(const NeighborhoodPartition& p);

/// JC = -2 + 3 C / N, in [-2, 1].
Rational jc_exact(const NeighborhoodPartition& p);
double jc(const NeighborhoodPartition& p);

/// gJC = 1 - (S1 + 2)/N - 2 S2/N - 3 S3/N.
Rational gjc_exact(const NeighborhoodPartition& p);
double gjc(const NeighborhoodPartition& p);

double gjc_parametric(const GjcParams& params, const NeighborhoodPartition& p);

/// Optimal cost of the relaxed mass exchange: every node of N(i,j) holds 1/N,
/// exclusive neighbours ship to the nearest node of the opposite neighbourhood
/// (cost r for bucket r), common nodes stay put, and i and j swap at cost 1.
Rational exchange_cost(const NeighborhoodPartition& p);

}  // namespace curvkit
