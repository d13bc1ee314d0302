#include "curvkit/ollivier.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace curvkit {
namespace {

void require_edge(const Graph& g, NodeId i, NodeId j) {
  if (!g.has_edge(i, j)) {
    throw std::invalid_argument("ollivier: (" + std::to_string(g.label(i)) + "," +
                                std::to_string(g.label(j)) + ") is not an edge");
  }
}

template <typename Distance>
TransportInstance assemble(const Graph& g, NodeId i, NodeId j, const Rational& idle,
                           Distance&& distance) {
  require_edge(g, i, j);
  const NeighborMeasure from = neighbor_measure(g, i, idle);
  const NeighborMeasure to = neighbor_measure(g, j, idle);

  std::int64_t scale = 1;
  for (const auto* m : {&from, &to}) {
    for (const auto& [node, mass] : m->support) scale = std::lcm(scale, mass.denominator());
  }

  TransportInstance t;
  t.scale = scale;
  for (const auto& [node, mass] : from.support) {
    t.sources.push_back({node, (mass * scale).numerator()});
  }
  for (const auto& [node, mass] : to.support) {
    t.sinks.push_back({node, (mass * scale).numerator()});
  }
  t.cost.assign(t.sources.size(), std::vector<std::int64_t>(t.sinks.size(), 0));
  for (std::size_t s = 0; s < t.sources.size(); ++s) {
    for (std::size_t k = 0; k < t.sinks.size(); ++k) {
      t.cost[s][k] = distance(t.sources[s].node, t.sinks[k].node);
    }
  }
  return t;
}

}  // namespace

NeighborMeasure neighbor_measure(const Graph& g, NodeId owner, const Rational& idle) {
  g.check_node(owner);
  if (idle < Rational(0) || idle >= Rational(1)) {
    throw std::invalid_argument("idle mass must lie in [0, 1)");
  }
  const auto degree = static_cast<std::int64_t>(g.degree(owner));
  if (degree == 0) throw std::invalid_argument("neighbour measure of an isolated node");

  NeighborMeasure m;
  m.owner = owner;
  m.idle = idle;
  const Rational each = (Rational(1) - idle) / degree;
  bool owner_placed = idle == Rational(0);
  for (NodeId v : g.neighbors(owner)) {
    if (!owner_placed && owner < v) {
      m.support.push_back({owner, idle});
      owner_placed = true;
    }
    m.support.push_back({v, each});
  }
  if (!owner_placed) m.support.push_back({owner, idle});
  return m;
}

TransportInstance build_instance(const Graph& g, NodeId i, NodeId j, const Rational& idle) {
  return assemble(g, i, j, idle, [&g](NodeId x, NodeId y) -> std::int64_t {
    const HopDistance d = truncated_distance(g, x, y, 3);
    if (d.is_beyond_cap()) throw std::logic_error("ollivier: support nodes more than 3 hops apart");
    return d.value;
  });
}

TransportInstance build_instance(const Graph& g, const TwoHopIndex& index, NodeId i, NodeId j,
                                 const Rational& idle) {
  // Any x ~ i and y ~ j are joined by x-i-j-y, so "beyond two" means exactly three.
  return assemble(g, i, j, idle, [&index](NodeId x, NodeId y) -> std::int64_t {
    const HopDistance d = index.lookup(x, y);
    return d.is_beyond_cap() ? 3 : d.value;
  });
}

Rational wasserstein(const Graph& g, const TwoHopIndex& index, NodeId i, NodeId j,
                     const Rational& idle) {
  return min_cost_transport(build_instance(g, index, i, j, idle)).optimal_cost;
}

Rational or_curvature_exact(const Graph& g, const TwoHopIndex& index, NodeId i, NodeId j,
                            const Rational& idle) {
  return Rational(1) - wasserstein(g, index, i, j, idle);
}

double or_curvature(const Graph& g, const TwoHopIndex& index, NodeId i, NodeId j,
                    const Rational& idle) {
  return to_double(or_curvature_exact(g, index, i, j, idle));
}

}  // namespace curvkit
