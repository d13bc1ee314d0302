#include "curvkit/generators.hpp"

#include "curvkit/random.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace curvkit {
namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": p must lie in [0, 1]");
  }
}

NodeId id(std::size_t v) { return static_cast<NodeId>(v); }

}  // namespace

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  require_probability(p, "erdos_renyi");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u + 1 < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({id(u), id(v)});
    }
  }
  return Graph::from_dense_edges(n, edges);
}

Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || m >= n) throw std::invalid_argument("barabasi_albert: need 1 <= m < n");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m * (n - m));
  // Every endpoint occurrence, so a uniform pick is degree-proportional.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * m * (n - m));

  for (std::size_t t = 0; t < m; ++t) {
    edges.push_back({id(t), id(m)});
    endpoints.push_back(id(t));
    endpoints.push_back(id(m));
  }
  std::vector<NodeId> targets;
  for (std::size_t arrival = m + 1; arrival < n; ++arrival) {
    targets.clear();
    while (targets.size() < m) {
      const NodeId pick = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) targets.push_back(pick);
    }
    for (NodeId target : targets) {
      edges.push_back({target, id(arrival)});
      endpoints.push_back(target);
      endpoints.push_back(id(arrival));
    }
  }
  return Graph::from_dense_edges(n, edges);
}

Graph watts_strogatz(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  require_probability(p, "watts_strogatz");
  if (k % 2 != 0) throw std::invalid_argument("watts_strogatz: k must be even");
  if (k >= n) throw std::invalid_argument("watts_strogatz: k must be smaller than n");
  SplitMix64 rng(seed);

  std::vector<std::set<NodeId>> adj(n);
  auto link = [&adj](std::size_t a, std::size_t b) {
    adj[a].insert(id(b));
    adj[b].insert(id(a));
  };
  auto unlink = [&adj](std::size_t a, std::size_t b) {
    adj[a].erase(id(b));
    adj[b].erase(id(a));
  };
  for (std::size_t s = 1; s <= k / 2; ++s) {
    for (std::size_t u = 0; u < n; ++u) link(u, (u + s) % n);
  }
  for (std::size_t s = 1; s <= k / 2; ++s) {
    for (std::size_t u = 0; u < n; ++u) {
      if (!rng.bernoulli(p)) continue;
      const std::size_t old = (u + s) % n;
      const std::size_t w = rng.below(n);
      if (w == u || adj[u].contains(id(w))) continue;
      unlink(u, old);
      link(u, w);
    }
  }

  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (NodeId v : adj[u]) {
      if (u < v) edges.push_back({id(u), v});
    }
  }
  return Graph::from_dense_edges(n, edges);
}

Graph random_geometric(std::size_t n, double r, std::uint64_t seed) {
  if (!(r >= 0.0)) throw std::invalid_argument("random_geometric: r must be nonnegative");
  r = std::min(r, std::sqrt(2.0));
  SplitMix64 rng(seed);
  std::vector<double> x(n), y(n);
  for (std::size_t v = 0; v < n; ++v) {
    x[v] = rng.uniform();
    y[v] = rng.uniform();
  }
  const double r2 = r * r;
  std::vector<Edge> edges;
  for (std::size_t u = 0; u + 1 < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double dx = x[u] - x[v];
      const double dy = y[u] - y[v];
      if (dx * dx + dy * dy < r2) edges.push_back({id(u), id(v)});
    }
  }
  return Graph::from_dense_edges(n, edges);
}

Graph generate(const GenSpec& spec) {
  return std::visit(
      [seed = spec.seed](const auto& m) -> Graph {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ErParams>) {
          return erdos_renyi(m.n, m.p, seed);
        } else if constexpr (std::is_same_v<T, BaParams>) {
          return barabasi_albert(m.n, m.m, seed);
        } else if constexpr (std::is_same_v<T, WsParams>) {
          return watts_strogatz(m.n, m.k, m.p, seed);
        } else {
          return random_geometric(m.n, m.r, seed);
        }
      },
      spec.model);
}

std::string model_name(const GenSpec& spec) {
  std::ostringstream out;
  std::visit(
      [&out](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ErParams>) {
          out << "ER(" << m.n << ',' << m.p << ')';
        } else if constexpr (std::is_same_v<T, BaParams>) {
          out << "BA(" << m.n << ',' << m.m << ')';
        } else if constexpr (std::is_same_v<T, WsParams>) {
          out << "WS(" << m.n << ',' << m.k << ',' << m.p << ')';
        } else {
          out << "RGG(" << m.n << ',' << m.r << ')';
        }
      },
      spec.model);
  return out.str();
}

}  // namespace curvkit
