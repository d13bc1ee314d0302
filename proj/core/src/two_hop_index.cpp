#include "curvkit/two_hop_index.hpp"

#include <algorithm>

namespace curvkit {

TwoHopIndex::TwoHopIndex(const Graph& g) : graph_(&g) {
  const std::size_t n = g.node_count();
  offsets_.assign(n + 1, 0);
  // stamp[x] == v + 1 marks x as already within distance 1 of v or recorded at 2.
  std::vector<std::uint32_t> stamp(n, 0);
  std::vector<NodeId> scratch;
  for (NodeId v = 0; v < n; ++v) {
    const auto mark = v + 1;
    stamp[v] = mark;
    for (NodeId w : g.neighbors(v)) stamp[w] = mark;
    scratch.clear();
    for (NodeId w : g.neighbors(v)) {
      for (NodeId x : g.neighbors(w)) {
        if (stamp[x] != mark) {
          stamp[x] = mark;
          scratch.push_back(x);
        }
      }
    }
    std::sort(scratch.begin(), scratch.end());
    second_.insert(second_.end(), scratch.begin(), scratch.end());
    offsets_[v + 1] = second_.size();
  }
  second_.shrink_to_fit();
}

HopDistance TwoHopIndex::lookup(NodeId u, NodeId v) const {
  if (u == v) {
    graph_->check_node(u);
    return HopDistance::hops(0);
  }
  if (graph_->has_edge(u, v)) return HopDistance::hops(1);
  auto two = at_distance_two(u);
  if (std::binary_search(two.begin(), two.end(), v)) return HopDistance::hops(2);
  return HopDistance::beyond_cap();
}

}  // namespace curvkit
