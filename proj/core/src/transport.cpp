#include "curvkit/transport.hpp"

#include "transport_internal.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace curvkit {

std::int64_t TransportInstance::total_supply() const {
  return std::accumulate(sources.begin(), sources.end(), std::int64_t{0},
                         [](std::int64_t acc, const Supply& s) { return acc + s.amount; });
}

std::int64_t TransportInstance::total_demand() const {
  return std::accumulate(sinks.begin(), sinks.end(), std::int64_t{0},
                         [](std::int64_t acc, const Supply& s) { return acc + s.amount; });
}

namespace detail {

void validate(const TransportInstance& t) {
  if (t.scale <= 0) throw std::invalid_argument("transport: scale must be positive");
  if (t.cost.size() != t.sources.size()) {
    throw std::invalid_argument("transport: cost matrix row count does not match sources");
  }
  for (const auto& row : t.cost) {
    if (row.size() != t.sinks.size()) {
      throw std::invalid_argument("transport: cost matrix column count does not match sinks");
    }
    if (std::any_of(row.begin(), row.end(), [](std::int64_t c) { return c < 0; })) {
      throw std::invalid_argument("transport: negative cost");
    }
  }
  auto negative = [](const Supply& s) { return s.amount < 0; };
  if (std::any_of(t.sources.begin(), t.sources.end(), negative) ||
      std::any_of(t.sinks.begin(), t.sinks.end(), negative)) {
    throw std::invalid_argument("transport: negative supply or demand");
  }
  if (t.total_supply() != t.total_demand()) {
    throw std::invalid_argument("transport: unbalanced instance (supply " +
                                std::to_string(t.total_supply()) + " != demand " +
                                std::to_string(t.total_demand()) + ")");
  }
}

}  // namespace detail

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Residual network for the primal-dual solver.
class FlowNetwork {
 public:
  struct Arc {
    std::size_t to;
    std::size_t rev;
    std::int64_t cap;
    std::int64_t cost;
  };

  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  /// Returns the arc's index within adj(from).
  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t cap, std::int64_t cost) {
    adj_[from].push_back({to, adj_[to].size(), cap, cost});
    adj_[to].push_back({from, adj_[from].size() - 1, 0, -cost});
    return adj_[from].size() - 1;
  }

  const Arc& arc(std::size_t from, std::size_t index) const { return adj_[from][index]; }

  /// Pushes `need` units from source to sink at minimum cost. Each round
  /// reprices with Dijkstra, then saturates the zero reduced cost subgraph.
  void run(std::size_t source, std::size_t sink, std::int64_t need) {
    potential_.assign(adj_.size(), 0);
    std::int64_t pushed = 0;
    while (pushed < need) {
      if (!reprice(source, sink)) {
        throw std::logic_error("transport: sink unreachable before demand was met");
      }
      pushed += blocking_flows(source, sink, need - pushed);
    }
  }

 private:
  std::int64_t reduced(std::size_t from, const Arc& a) const {
    return a.cost + potential_[from] - potential_[a.to];
  }

  bool admissible(std::size_t from, const Arc& a) const {
    return a.cap > 0 && reduced(from, a) == 0;
  }

  // Dense O(V^2) Dijkstra; the bipartite network has ~V^2/4 arcs anyway.
  // Potentials grow by min(dist, dist(sink)), which keeps reduced costs >= 0.
  bool reprice(std::size_t source, std::size_t sink) {
    const std::size_t n = adj_.size();
    std::vector<std::int64_t> dist(n, kInf);
    std::vector<char> done(n, 0);
    dist[source] = 0;
    for (std::size_t iter = 0; iter < n; ++iter) {
      std::size_t u = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (!done[v] && dist[v] < kInf && (u == n || dist[v] < dist[u])) u = v;
      }
      if (u == n) break;
      done[u] = 1;
      for (const Arc& a : adj_[u]) {
        if (a.cap > 0) dist[a.to] = std::min(dist[a.to], dist[u] + reduced(u, a));
      }
    }
    const std::int64_t horizon = dist[sink];
    if (horizon >= kInf) return false;
    for (std::size_t v = 0; v < n; ++v) potential_[v] += std::min(dist[v], horizon);
    return true;
  }

  std::int64_t blocking_flows(std::size_t source, std::size_t sink, std::int64_t limit) {
    std::int64_t total = 0;
    while (total < limit && levelize(source, sink)) {
      cursor_.assign(adj_.size(), 0);
      while (total < limit) {
        const std::int64_t f = augment(source, sink, limit - total);
        if (f == 0) break;
        total += f;
      }
    }
    return total;
  }

  bool levelize(std::size_t source, std::size_t sink) {
    level_.assign(adj_.size(), -1);
    std::vector<std::size_t> queue{source};
    level_[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (const Arc& a : adj_[u]) {
        if (admissible(u, a) && level_[a.to] < 0) {
          level_[a.to] = level_[u] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  std::int64_t augment(std::size_t u, std::size_t sink, std::int64_t limit) {
    if (u == sink) return limit;
    auto& arcs = adj_[u];
    for (auto& i = cursor_[u]; i < arcs.size(); ++i) {
      Arc& a = arcs[i];
      if (level_[a.to] != level_[u] + 1 || !admissible(u, a)) continue;
      const std::int64_t f = augment(a.to, sink, std::min(limit, a.cap));
      if (f > 0) {
        a.cap -= f;
        adj_[a.to][a.rev].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> adj_;
  std::vector<std::int64_t> potential_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace

TransportResult min_cost_transport(const TransportInstance& t) {
  detail::validate(t);
  const std::size_t ns = t.sources.size();
  const std::size_t nt = t.sinks.size();
  // Node 0 is the super source, 1..ns the sources, ns+1..ns+nt the sinks.
  const std::size_t source = 0;
  const std::size_t sink = ns + nt + 1;
  const std::int64_t total = t.total_supply();

  FlowNetwork net(ns + nt + 2);
  for (std::size_t s = 0; s < ns; ++s) net.add_arc(source, 1 + s, t.sources[s].amount, 0);
  std::vector<std::size_t> handle(ns * nt);
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t k = 0; k < nt; ++k) {
      handle[s * nt + k] = net.add_arc(1 + s, 1 + ns + k, total, t.cost[s][k]);
    }
  }
  for (std::size_t k = 0; k < nt; ++k) net.add_arc(1 + ns + k, sink, t.sinks[k].amount, 0);

  if (total > 0) net.run(source, sink, total);

  TransportResult result;
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t k = 0; k < nt; ++k) {
      const std::int64_t amount = total - net.arc(1 + s, handle[s * nt + k]).cap;
      if (amount == 0) continue;
      result.flow.push_back({t.sources[s].node, t.sinks[k].node, amount});
      result.flow_cost += amount * t.cost[s][k];
    }
  }
  result.optimal_cost = Rational(result.flow_cost, t.scale);
  return result;
}

}  // namespace curvkit
