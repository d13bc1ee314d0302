#pragma once

#include "curvkit/curvature_table.hpp"
#include "curvkit/generators.hpp"
#include "curvkit/rational.hpp"
#include "curvkit/statistics.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace curvkit {

// =============================================================================
// Comparison of OR against the cheaper proxies
// =============================================================================

struct PairCorrelation {
  Correlation pearson;
  Correlation kendall;
};

struct ComparisonReport {
  std::string graph;
  double mean_or = 0.0;
  double mean_jc = 0.0;
  double mean_gjc = 0.0;
  double mean_forman = 0.0;
  PairCorrelation or_jc;
  PairCorrelation or_gjc;
  PairCorrelation or_forman;
  std::size_t replicates = 1;
};

ComparisonReport compare_table(const CurvatureTable& table, std::string name = {});

/// All four metrics, their means, and both correlations of OR against each proxy.
/// Throws std::invalid_argument when g has no edges.
ComparisonReport compare(const Graph& g, const Rational& idle = Rational(0),
                         std::size_t workers = 1, std::string name = {});

/// Averages per-replicate reports over seeds base_seed, base_seed+1, ...
/// Undefined correlations are skipped; a pair stays undefined only if it is
/// undefined in every replicate.
ComparisonReport compare_model(GenSpec spec, std::size_t seeds, const Rational& idle = Rational(0),
                               std::size_t workers = 1);

/// Table-style header and row; undefined correlations print as N/A.
std::string comparison_header();
std::string format_comparison(const ComparisonReport& report);

// =============================================================================
// Asymptotic regimes of ER graphs
// =============================================================================

enum class Regime {
  kFixedP,       // p constant
  kSparseTree,   // n p -> 0
  kIntermediate, // n p -> inf, n^2 p^3 -> 0
  kDenseSparse,  // n^2 p^3 -> inf, n p^2 -> 0
  kDense,        // n p^2 -> inf
};

/// Accepts fixed-p, sparse-tree, intermediate, dense-sparse, dense.
Regime parse_regime(std::string_view text);
std::string_view regime_name(Regime r);

struct RegimePrediction {
  Regime regime = Regime::kFixedP;
  double jc = 0.0;
  double gjc = 0.0;
  double ollivier = 0.0;
};

/// Limits of E[JC], E[gJC], E[OR]. `p` only matters for kFixedP.
RegimePrediction predict(Regime regime, double p);

/// Throws std::invalid_argument when log p / log n lies outside the regime's scaling window.
void check_regime(Regime regime, std::size_t n, double p);

struct AsymptoticReport {
  RegimePrediction prediction;
  std::size_t n = 0;
  double p = 0.0;
  std::vector<double> trial_mean_jc;
  std::vector<double> trial_mean_gjc;
  double mean_jc = 0.0;
  double mean_gjc = 0.0;
  std::size_t edges_total = 0;
};

/// One ER(n, p) graph per trial (seeds base_seed + t); JC and gJC averaged over
/// edges, then over trials with at least one edge.
AsymptoticReport asymptotic_experiment(Regime regime, std::size_t n, double p, std::size_t trials,
                                       std::uint64_t base_seed = 1, std::size_t workers = 1);

// =============================================================================
// Moment check for the neighbourhood counts of an ER edge
// =============================================================================

struct MomentEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  double target = 0.0;

  double z() const;
  bool within(double sigmas) const;
};

struct MomentReport {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t trials = 0;
  MomentEstimate common;         // E[C], target (n-2) p^2
  MomentEstimate separate;       // E[S], target 2 (n-2) p (1-p) + 2
  MomentEstimate union_variance; // Var(N), target 2 n p
  /// Exact finite-n Var(N) = (n-2) (1-p)^2 (2p - p^2), for reference.
  double union_variance_exact = 0.0;
};

/// Monte Carlo over the edges incident to an endpoint pair conditioned on that
/// pair being adjacent; every other pair is irrelevant to C, S and N.
MomentReport moment_check(std::size_t n, double p, std::size_t trials, std::uint64_t seed = 1);

// =============================================================================
// Runtime of each metric
// =============================================================================

struct MetricTiming {
  double seconds = 0.0;
  double per_edge_seconds = 0.0;
};

struct BenchReport {
  GraphSummary summary;
  MetricTiming forman;
  MetricTiming jc;
  MetricTiming gjc;
  MetricTiming ollivier;
};

/// Single-threaded wall time over all edges per metric. gJC and OR timings
/// include building the two-hop index.
BenchReport bench(const Graph& g, const Rational& idle = Rational(0));

std::string format_bench(const BenchReport& report);

}  // namespace curvkit
