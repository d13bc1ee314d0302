#pragma once

#include "curvkit/graph.hpp"
#include "curvkit/rational.hpp"
#include "curvkit/transport.hpp"
#include "curvkit/two_hop_index.hpp"

#include <vector>

namespace curvkit {

/// Probability measure: `idle` on the owner, (1 - idle) / d spread over its neighbours.
struct NeighborMeasure {
  struct Mass {
    NodeId node;
    Rational mass;
  };
  NodeId owner = 0;
  Rational idle;
  std::vector<Mass> support;
};

/// Throws std::invalid_argument when idle is outside [0, 1) or the owner is isolated.
NeighborMeasure neighbor_measure(const Graph& g, NodeId owner, const Rational& idle);

/// Builds the transport instance between the measures of i and j. The scale is the
/// lcm of all mass denominators so supplies are exact integers. Costs come from
/// truncated_distance with cap 3. Throws std::invalid_argument on a non-edge.
TransportInstance build_instance(const Graph& g, NodeId i, NodeId j, const Rational& idle);

/// Same instance, with costs read from the two-hop index (3 when beyond it).
TransportInstance build_instance(const Graph& g, const TwoHopIndex& index, NodeId i, NodeId j,
                                 const Rational& idle);

/// Wasserstein distance W(m_i, m_j), exact.
Rational wasserstein(const Graph& g, const TwoHopIndex& index, NodeId i, NodeId j,
                     const Rational& idle);

/// kappa(i, j) = 1 - W(m_i, m_j).
Rational or_curvature_exact(const Graph& g, const TwoHopIndex& index, NodeId i, NodeId j,
                            const Rational& idle = Rational(0));
double or_curvature(const Graph& g, const TwoHopIndex& index, NodeId i, NodeId j,
                    const Rational& idle = Rational(0));

}  // namespace curvkit
