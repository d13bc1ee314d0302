#pragma once

#include "curvkit/graph.hpp"

#include <span>

namespace curvkit {

enum class FormanWeighting {
  kUnit,    // all node and edge weights 1
  kDegree,  // node weight = degree, edge weight 1
};

/// F(e) = 4 - d_i - d_j. Throws std::invalid_argument for a non-edge.
double forman_unit(const Graph& g, NodeId i, NodeId j);

/// Weighted Forman curvature of edge {i, j}:
///   w_e (w_i/w_e + w_j/w_e - sum_{e' ~ i, e' != e} w_i / sqrt(w_e w_e')
///                         - sum_{e' ~ j, e' != e} w_j / sqrt(w_e w_e'))
/// `node_weights` is indexed by node id, `edge_weights` by edge id.
/// Throws std::invalid_argument on a non-edge or a nonpositive weight.
double forman_weighted(const Graph& g, std::span<const double> node_weights,
                       std::span<const double> edge_weights, NodeId i, NodeId j);

double forman(const Graph& g, NodeId i, NodeId j, FormanWeighting weighting);

}  // namespace curvkit
