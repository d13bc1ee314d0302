#pragma once

#include "curvkit/forman.hpp"
#include "curvkit/graph.hpp"
#include "curvkit/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace curvkit {

enum class Metric : std::uint8_t {
  kOllivier = 1 << 0,
  kJaccard = 1 << 1,
  kGeneralizedJaccard = 1 << 2,
  kForman = 1 << 3,
};

class MetricSet {
 public:
  constexpr MetricSet() = default;
  constexpr MetricSet(std::initializer_list<Metric> metrics) {
    for (Metric m : metrics) bits_ |= static_cast<std::uint8_t>(m);
  }
  static constexpr MetricSet all() {
    return {Metric::kOllivier, Metric::kJaccard, Metric::kGeneralizedJaccard, Metric::kForman};
  }
  /// Comma separated subset of "or,jc,gjc,forman". Throws std::invalid_argument.
  static MetricSet parse(std::string_view text);

  constexpr bool contains(Metric m) const { return (bits_ & static_cast<std::uint8_t>(m)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }

 private:
  std::uint8_t bits_ = 0;
};

struct EdgeCurvature {
  Label u = 0;  // u < v in original labels
  Label v = 0;
  std::optional<Rational> ollivier;
  std::optional<Rational> jaccard;
  std::optional<Rational> generalized_jaccard;
  std::optional<double> forman;
};

struct GraphSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  double average_degree = 0.0;
};

GraphSummary summarize(const Graph& g);

struct CurvatureTable {
  MetricSet metrics;
  GraphSummary summary;
  /// One record per edge, sorted by (u, v) in original labels.
  std::vector<EdgeCurvature> rows;

  /// Column of a present metric as doubles, in row order.
  std::vector<double> column(Metric m) const;
};

struct ComputeOptions {
  MetricSet metrics = MetricSet::all();
  Rational idle{0};
  std::size_t workers = 1;
  FormanWeighting forman_weighting = FormanWeighting::kUnit;
};

/// Evaluates every requested metric on every edge. Edges are split into
/// contiguous chunks over `workers` threads; each result lands in its own slot,
/// so the table is identical for any worker count.
/// Throws std::invalid_argument when the metric set is empty.
CurvatureTable compute_all(const Graph& g, const ComputeOptions& options);

}  // namespace curvkit
