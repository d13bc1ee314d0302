#include "curvkit/ollivier.hpp"
#include "curvkit/transport.hpp"
#include "curvkit/two_hop_index.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace curvkit {
namespace {

Rational kappa(const Graph& g, NodeId i, NodeId j, Rational idle = Rational(0)) {
  const TwoHopIndex index(g);
  return or_curvature_exact(g, index, i, j, idle);
}

TEST(NeighborMeasure, MassesSumToOne) {
  const Graph g = testing::worked_example();
  for (const Rational idle : {Rational(0), Rational(1, 2), Rational(1, 3)}) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const NeighborMeasure m = neighbor_measure(g, v, idle);
      Rational total(0);
      for (const auto& [node, mass] : m.support) {
        total += mass;
        if (node == v) {
          EXPECT_EQ(mass, idle);
        } else {
          EXPECT_EQ(mass, (Rational(1) - idle) / static_cast<std::int64_t>(g.degree(v)));
        }
      }
      EXPECT_EQ(total, Rational(1));
    }
  }
  EXPECT_THROW(neighbor_measure(g, 0, Rational(1)), std::invalid_argument);
  EXPECT_THROW(neighbor_measure(g, 0, Rational(-1, 2)), std::invalid_argument);
  const std::vector<Edge> one = {{0, 1}};
  EXPECT_THROW(neighbor_measure(Graph::from_dense_edges(3, one), 2, Rational(0)),
               std::invalid_argument);
}

TEST(BuildInstance, WorkedExample) {
  const TransportInstance t = build_instance(testing::worked_example(), 0, 1, Rational(0));
  EXPECT_EQ(t.scale, 12);
  ASSERT_EQ(t.sources.size(), 4u);
  ASSERT_EQ(t.sinks.size(), 3u);
  for (const Supply& s : t.sources) EXPECT_EQ(s.amount, 3);
  for (const Supply& s : t.sinks) EXPECT_EQ(s.amount, 4);
  EXPECT_EQ(t.total_supply(), 12);
  EXPECT_EQ(t.total_demand(), 12);
}

TEST(BuildInstance, IdleScale) {
  const TransportInstance t = build_instance(testing::complete(2), 0, 1, Rational(1, 2));
  EXPECT_EQ(t.scale, 2);
  EXPECT_EQ(t.total_supply(), 2);
  EXPECT_THROW(build_instance(testing::path(3), 0, 2, Rational(0)), std::invalid_argument);
}

TEST(BuildInstance, IndexCostsMatchBfs) {
  for (const auto& [name, g] : testing::random_mix(20, 30, 51, true)) {
    const TwoHopIndex index(g);
    const auto dist = testing::all_pairs_bfs(g);
    for (const Edge& e : g.edges()) {
      const TransportInstance a = build_instance(g, e.u, e.v, Rational(1, 3));
      const TransportInstance b = build_instance(g, index, e.u, e.v, Rational(1, 3));
      EXPECT_EQ(a.cost, b.cost) << name;
      for (std::size_t s = 0; s < a.sources.size(); ++s) {
        for (std::size_t k = 0; k < a.sinks.size(); ++k) {
          EXPECT_EQ(a.cost[s][k], dist[a.sources[s].node][a.sinks[k].node]) << name;
          EXPECT_LE(a.cost[s][k], 3) << name;
        }
      }
    }
  }
}

TEST(Ollivier, NamedValues) {
  EXPECT_EQ(kappa(testing::worked_example(), 0, 1), Rational(1, 4));
  EXPECT_EQ(kappa(testing::complete(3), 0, 1), Rational(1, 2));
  EXPECT_EQ(kappa(testing::complete(4), 0, 1), Rational(2, 3));
  EXPECT_EQ(kappa(testing::complete(2), 0, 1), Rational(0));
  EXPECT_EQ(kappa(testing::complete(2), 0, 1, Rational(1, 2)), Rational(1));
  EXPECT_EQ(kappa(testing::path(3), 0, 1), Rational(0));
  EXPECT_EQ(kappa(testing::cycle(8), 2, 3), Rational(0));
  EXPECT_EQ(kappa(testing::cycle(8), 2, 3, Rational(1, 2)), Rational(0));
  EXPECT_EQ(kappa(testing::star(5), 0, 4), Rational(0));
  EXPECT_EQ(kappa(testing::torus(5, 5), 0, 1), Rational(0));
  EXPECT_DOUBLE_EQ(or_curvature(testing::worked_example(), TwoHopIndex(testing::worked_example()), 0, 1), 0.25);
}

TEST(Transport, FlowIsFeasibleAndPriced) {
  const Graph g = testing::worked_example();
  const TwoHopIndex index(g);
  const TransportInstance t = build_instance(g, index, 0, 1, Rational(0));
  const TransportResult r = min_cost_transport(t);
  EXPECT_EQ(r.optimal_cost, Rational(3, 4));
  EXPECT_EQ(r.flow_cost, 9);
  std::int64_t priced = 0;
  std::vector<std::int64_t> out(t.sources.size(), 0), in(t.sinks.size(), 0);
  for (const FlowEntry& f : r.flow) {
    std::size_t s = 0, k = 0;
    while (t.sources[s].node != f.source) ++s;
    while (t.sinks[k].node != f.sink) ++k;
    EXPECT_GT(f.amount, 0);
    out[s] += f.amount;
    in[k] += f.amount;
    priced += f.amount * t.cost[s][k];
  }
  EXPECT_EQ(priced, r.flow_cost);
  for (std::size_t s = 0; s < t.sources.size(); ++s) EXPECT_EQ(out[s], t.sources[s].amount);
  for (std::size_t k = 0; k < t.sinks.size(); ++k) EXPECT_EQ(in[k], t.sinks[k].amount);
}

TEST(Transport, HandInstances) {
  TransportInstance t;
  t.sources = {{0, 2}, {1, 1}};
  t.sinks = {{2, 1}, {3, 2}};
  t.cost = {{1, 3}, {1, 1}};
  // 0->2, 0->3, 1->3 costs 5; the only other vertex, 0->3 twice plus 1->2, costs 7.
  EXPECT_EQ(min_cost_transport(t).flow_cost, 5);
  EXPECT_EQ(transport_oracle(t), Rational(5));
  t.scale = 5;
  EXPECT_EQ(min_cost_transport(t).optimal_cost, Rational(1));
}

TEST(Transport, Errors) {
  TransportInstance t;
  t.sources = {{0, 2}};
  t.sinks = {{1, 3}};
  t.cost = {{1}};
  EXPECT_THROW(min_cost_transport(t), std::invalid_argument);
  EXPECT_THROW(transport_oracle(t), std::invalid_argument);

  TransportInstance big;
  big.sources = {{0, kOracleMaxUnits + 1}};
  big.sinks = {{1, kOracleMaxUnits + 1}};
  big.cost = {{1}};
  EXPECT_THROW(transport_oracle(big), std::length_error);
  EXPECT_EQ(min_cost_transport(big).flow_cost, kOracleMaxUnits + 1);

  TransportInstance ragged;
  ragged.sources = {{0, 1}};
  ragged.sinks = {{1, 1}};
  ragged.cost = {{1, 2}};
  EXPECT_THROW(min_cost_transport(ragged), std::invalid_argument);
}

TEST(Ollivier, MatchesOracleAndBounds) {
  for (const auto& [name, g] : testing::random_mix(40, 25, 61, true)) {
    const TwoHopIndex index(g);
    for (const Rational idle : {Rational(0), Rational(1, 2)}) {
      for (const Edge& e : g.edges()) {
        const TransportInstance t = build_instance(g, index, e.u, e.v, idle);
        const Rational w = min_cost_transport(t).optimal_cost;
        EXPECT_EQ(w, transport_oracle(t)) << name;
        EXPECT_EQ(t.scale % w.denominator(), 0) << name;
        EXPECT_LT(w, Rational(3)) << name;
        if (idle == Rational(0)) {
          EXPECT_GT(w, Rational(0)) << name;
        } else {
          EXPECT_GE(w, Rational(0)) << name;
        }
        EXPECT_EQ(wasserstein(g, index, e.v, e.u, idle), w) << name;
      }
    }
  }
}

}  // namespace
}  // namespace curvkit
