#pragma once

#include "curvkit/graph.hpp"
#include "curvkit/rational.hpp"

#include <cstdint>
#include <vector>

namespace curvkit {

struct Supply {
  NodeId node;
  std::int64_t amount;
};

/// Integer-scaled transport problem between two neighbour measures.
/// supplies/demands are masses multiplied by `scale`; cost[s][t] is the hop
/// distance between sources[s] and sinks[t].
struct TransportInstance {
  std::vector<Supply> sources;
  std::vector<Supply> sinks;
  std::vector<std::vector<std::int64_t>> cost;
  std::int64_t scale = 1;

  std::int64_t total_supply() const;
  std::int64_t total_demand() const;
};

struct FlowEntry {
  NodeId source;
  NodeId sink;
  std::int64_t amount;
};

struct TransportResult {
  /// Integer cost of the optimal flow; optimal_cost = flow_cost / scale.
  std::int64_t flow_cost = 0;
  Rational optimal_cost;
  std::vector<FlowEntry> flow;
};

/// Exact min-cost flow (primal-dual successive shortest paths with blocking
/// flows on the admissible subgraph). Throws std::invalid_argument when the
/// instance is unbalanced or malformed.
TransportResult min_cost_transport(const TransportInstance& t);

/// Independent exact optimum: northwest-corner start, then negative-cycle
/// cancelling on the residual graph. Throws std::length_error when the total
/// supply exceeds kOracleMaxUnits.
inline constexpr std::int64_t kOracleMaxUnits = 10'000;
Rational transport_oracle(const TransportInstance& t);

}  // namespace curvkit
