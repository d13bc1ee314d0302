#include "curvkit/graph.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>

namespace curvkit {

Graph Graph::from_dense_edges(std::size_t node_count, std::span<const Edge> edges,
                              NormalizationStats* stats) {
  std::vector<Label> labels(node_count);
  std::iota(labels.begin(), labels.end(), Label{0});
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw std::out_of_range("edge endpoint " + std::to_string(std::max(e.u, e.v)) +
                              " >= node count " + std::to_string(node_count));
    }
  }
  return build(std::move(labels), {edges.begin(), edges.end()}, stats);
}

Graph Graph::from_edge_list(std::span<const std::pair<Label, Label>> pairs,
                            NormalizationStats* stats) {
  std::vector<Label> labels;
  labels.reserve(pairs.size() * 2);
  for (const auto& [a, b] : pairs) {
    labels.push_back(a);
    labels.push_back(b);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  auto dense = [&labels](Label l) {
    return static_cast<NodeId>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back({dense(a), dense(b)});
  return build(std::move(labels), std::move(edges), stats);
}

Graph Graph::build(std::vector<Label> labels, std::vector<Edge> edges, NormalizationStats* stats) {
  NormalizationStats local;
  std::erase_if(edges, [&local](const Edge& e) {
    if (e.u != e.v) return false;
    ++local.self_loops_dropped;
    return true;
  });
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  const auto before = edges.size();
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  local.duplicates_collapsed = before - edges.size();
  if (stats) *stats = local;

  Graph g;
  g.labels_ = std::move(labels);
  g.edges_ = std::move(edges);
  const std::size_t n = g.labels_.size();

  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

  g.adjacency_.resize(2 * g.edges_.size());
  g.slot_edge_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in edge order leaves every list ascending:
  // for node x, neighbours u < x arrive first (ordered by u), then v > x (ordered by v).
  for (std::uint32_t id = 0; id < g.edges_.size(); ++id) {
    const Edge& e = g.edges_[id];
    g.adjacency_[cursor[e.u]] = e.v;
    g.slot_edge_[cursor[e.u]++] = id;
    g.adjacency_[cursor[e.v]] = e.u;
    g.slot_edge_[cursor[e.v]++] = id;
  }
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < node_count(); ++v) best = std::max(best, degree(static_cast<NodeId>(v)));
  return best;
}

double Graph::average_degree() const {
  if (node_count() == 0) return 0.0;
  return 2.0 * static_cast<double>(edge_count()) / static_cast<double>(node_count());
}

void Graph::check_node(NodeId v) const {
  if (v >= node_count()) {
    throw std::out_of_range("node id " + std::to_string(v) + " out of range (n = " +
                            std::to_string(node_count()) + ")");
  }
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint32_t Graph::edge_id(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) {
    throw std::invalid_argument("(" + std::to_string(label(u)) + "," + std::to_string(label(v)) +
                                ") is not an edge");
  }
  return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
}

HopDistance truncated_distance(const Graph& g, NodeId x, NodeId y, int cap) {
  g.check_node(x);
  g.check_node(y);
  if (cap < 0 || cap > 3) throw std::invalid_argument("distance cap must be in [0, 3]");
  if (x == y) return HopDistance::hops(0);

  std::vector<NodeId> frontier{x};
  std::vector<NodeId> seen{x};
  for (int depth = 1; depth <= cap; ++depth) {
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      for (NodeId w : g.neighbors(u)) {
        if (w == y) return HopDistance::hops(depth);
        if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
          seen.push_back(w);
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return HopDistance::beyond_cap();
}

CommonNeighbors common_neighbors(const Graph& g, NodeId i, NodeId j) {
  g.check_node(i);
  g.check_node(j);
  CommonNeighbors out;
  auto a = g.neighbors(i);
  auto b = g.neighbors(j);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.nodes));
  out.count = out.nodes.size();
  return out;
}

std::size_t count_common_neighbors(const Graph& g, NodeId i, NodeId j) {
  auto a = g.neighbors(i);
  auto b = g.neighbors(j);
  std::size_t count = 0;
  auto p = a.begin();
  auto q = b.begin();
  while (p != a.end() && q != b.end()) {
    if (*p < *q) {
      ++p;
    } else if (*q < *p) {
      ++q;
    } else {
      ++count;
      ++p;
      ++q;
    }
  }
  return count;
}

}  // namespace curvkit
