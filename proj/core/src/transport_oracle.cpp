#include "curvkit/transport.hpp"

#include "transport_internal.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace curvkit {

// Cycle cancelling on the aggregated transportation tableau. Residual nodes are
// sources 0..S-1 and sinks S..S+T-1; a forward arc s -> t always exists with cost
// c(s,t) and unbounded capacity, a backward arc t -> s with cost -c(s,t) exists
// while x(s,t) > 0. Optimal iff no negative cycle remains.
Rational transport_oracle(const TransportInstance& t) {
  detail::validate(t);
  const std::int64_t total = t.total_supply();
  if (total > kOracleMaxUnits) {
    throw std::length_error("transport_oracle: " + std::to_string(total) +
                            " units exceed the oracle bound of " + std::to_string(kOracleMaxUnits));
  }
  const std::size_t ns = t.sources.size();
  const std::size_t nt = t.sinks.size();
  std::vector<std::vector<std::int64_t>> x(ns, std::vector<std::int64_t>(nt, 0));

  // Northwest corner start.
  {
    std::vector<std::int64_t> supply(ns), demand(nt);
    for (std::size_t s = 0; s < ns; ++s) supply[s] = t.sources[s].amount;
    for (std::size_t k = 0; k < nt; ++k) demand[k] = t.sinks[k].amount;
    std::size_t s = 0, k = 0;
    while (s < ns && k < nt) {
      const std::int64_t q = std::min(supply[s], demand[k]);
      x[s][k] += q;
      supply[s] -= q;
      demand[k] -= q;
      if (supply[s] == 0) {
        ++s;
      } else {
        ++k;
      }
    }
  }

  struct ResidualArc {
    std::size_t from, to;
    std::int64_t cost;
    std::size_t s, k;  // tableau cell
    bool backward;
  };
  const std::size_t n = ns + nt;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  while (true) {
    std::vector<ResidualArc> arcs;
    for (std::size_t s = 0; s < ns; ++s) {
      for (std::size_t k = 0; k < nt; ++k) {
        arcs.push_back({s, ns + k, t.cost[s][k], s, k, false});
        if (x[s][k] > 0) arcs.push_back({ns + k, s, -t.cost[s][k], s, k, true});
      }
    }
    // Bellman-Ford from a virtual root joined to every node at cost 0.
    std::vector<std::int64_t> dist(n, 0);
    std::vector<std::size_t> pred(n, kNone);
    std::size_t touched = kNone;
    for (std::size_t round = 0; round < n; ++round) {
      touched = kNone;
      for (std::size_t a = 0; a < arcs.size(); ++a) {
        const auto& arc = arcs[a];
        if (dist[arc.from] + arc.cost < dist[arc.to]) {
          dist[arc.to] = dist[arc.from] + arc.cost;
          pred[arc.to] = a;
          touched = arc.to;
        }
      }
      if (touched == kNone) break;
    }
    if (touched == kNone) break;

    // Step back n times to land on the cycle, then collect it.
    std::size_t v = touched;
    for (std::size_t step = 0; step < n; ++step) v = arcs[pred[v]].from;
    std::vector<std::size_t> cycle;
    std::size_t u = v;
    do {
      cycle.push_back(pred[u]);
      u = arcs[pred[u]].from;
    } while (u != v);

    std::int64_t delta = std::numeric_limits<std::int64_t>::max();
    for (std::size_t a : cycle) {
      if (arcs[a].backward) delta = std::min(delta, x[arcs[a].s][arcs[a].k]);
    }
    for (std::size_t a : cycle) {
      x[arcs[a].s][arcs[a].k] += arcs[a].backward ? -delta : delta;
    }
  }

  std::int64_t cost = 0;
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t k = 0; k < nt; ++k) cost += x[s][k] * t.cost[s][k];
  }
  return {cost, t.scale};
}

}  // namespace curvkit
