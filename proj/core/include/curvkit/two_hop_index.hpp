#pragma once

#include "curvkit/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace curvkit {

/// Depth-2 BFS lookup table. Distances 0 and 1 come straight from the graph;
/// the index stores, per node, the sorted list of nodes at exactly 2 hops.
/// Immutable after construction and safe to share across threads.
class TwoHopIndex {
 public:
  explicit TwoHopIndex(const Graph& g);

  /// Shortest-path distance if it is at most 2, otherwise HopDistance::beyond_cap().
  HopDistance lookup(NodeId u, NodeId v) const;
  bool within_two(NodeId u, NodeId v) const { return !lookup(u, v).is_beyond_cap(); }

  std::span<const NodeId> at_distance_two(NodeId v) const {
    return {second_.data() + offsets_[v], second_.data() + offsets_[v + 1]};
  }
  std::size_t entry_count() const { return second_.size(); }

 private:
  const Graph* graph_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> second_;
};

}  // namespace curvkit
