#include "curvkit/forman.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvkit {
namespace {

void require_edge(const Graph& g, NodeId i, NodeId j) {
  if (!g.has_edge(i, j)) {
    throw std::invalid_argument("forman: (" + std::to_string(g.label(i)) + "," +
                                std::to_string(g.label(j)) + ") is not an edge");
  }
}

}  // namespace

double forman_unit(const Graph& g, NodeId i, NodeId j) {
  require_edge(g, i, j);
  return 4.0 - static_cast<double>(g.degree(i)) - static_cast<double>(g.degree(j));
}

double forman_weighted(const Graph& g, std::span<const double> node_weights,
                       std::span<const double> edge_weights, NodeId i, NodeId j) {
  require_edge(g, i, j);
  if (node_weights.size() != g.node_count() || edge_weights.size() != g.edge_count()) {
    throw std::invalid_argument("forman: weight vectors do not match the graph");
  }
  const std::uint32_t e = g.edge_id(i, j);
  const double we = edge_weights[e];
  const double wi = node_weights[i];
  const double wj = node_weights[j];
  if (!(we > 0.0) || !(wi > 0.0) || !(wj > 0.0)) {
    throw std::invalid_argument("forman: weights must be positive");
  }

  auto incident_sum = [&](NodeId x, double wx) {
    double sum = 0.0;
    for (std::uint32_t other : g.incident_edges(x)) {
      if (other == e) continue;
      const double wl = edge_weights[other];
      if (!(wl > 0.0)) throw std::invalid_argument("forman: weights must be positive");
      sum += wx / std::sqrt(we * wl);
    }
    return sum;
  };
  return we * (wi / we + wj / we - incident_sum(i, wi) - incident_sum(j, wj));
}

double forman(const Graph& g, NodeId i, NodeId j, FormanWeighting weighting) {
  if (weighting == FormanWeighting::kUnit) return forman_unit(g, i, j);
  // Degree weighting evaluated in closed form: w_e = 1, w_x = d_x.
  require_edge(g, i, j);
  const double di = static_cast<double>(g.degree(i));
  const double dj = static_cast<double>(g.degree(j));
  return di + dj - di * (di - 1.0) - dj * (dj - 1.0);
}

}  // namespace curvkit
