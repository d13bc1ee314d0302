#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace curvkit {

using NodeId = std::uint32_t;
/// Original (file) label of a node.
using Label = std::uint64_t;

struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Counts surfaced while normalizing raw input into a simple graph.
struct NormalizationStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;
};

// =============================================================================
// Graph
// =============================================================================
// Immutable simple undirected graph stored as CSR with ascending adjacency.
// Edge ids index the canonical edge list (u < v, sorted lexicographically by
// dense id). Every CSR slot also carries the id of the edge it represents.

class Graph {
 public:
  Graph() = default;

  /// Dense construction: nodes are 0..node_count-1 and labels equal ids.
  /// Self-loops and duplicates are normalized, counts go to `stats`.
  /// Throws std::out_of_range when an endpoint is >= node_count.
  static Graph from_dense_edges(std::size_t node_count, std::span<const Edge> edges,
                                NormalizationStats* stats = nullptr);

  /// Sparse labels are remapped to dense ids in ascending label order.
  static Graph from_edge_list(std::span<const std::pair<Label, Label>> pairs,
                              NormalizationStats* stats = nullptr);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  /// Edge ids parallel to neighbors(v).
  std::span<const std::uint32_t> incident_edges(NodeId v) const {
    return {slot_edge_.data() + offsets_[v], slot_edge_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  double average_degree() const;

  std::span<const Edge> edges() const { return edges_; }
  Label label(NodeId v) const { return labels_[v]; }
  std::span<const Label> labels() const { return labels_; }

  bool has_edge(NodeId u, NodeId v) const;
  /// Edge id of {u, v}; throws std::invalid_argument when it is not an edge.
  std::uint32_t edge_id(NodeId u, NodeId v) const;

  /// Throws std::out_of_range for ids >= node_count().
  void check_node(NodeId v) const;

 private:
  static Graph build(std::vector<Label> labels, std::vector<Edge> edges,
                     NormalizationStats* stats);

  std::vector<Label> labels_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<std::uint32_t> slot_edge_;
  std::vector<Edge> edges_;
};

// =============================================================================
// Distances
// =============================================================================

/// Hop distance truncated at a cap of at most 3 hops.
struct HopDistance {
  static constexpr std::uint8_t kBeyondCap = 0xFF;
  std::uint8_t value = kBeyondCap;

  static constexpr HopDistance beyond_cap() { return {}; }
  static constexpr HopDistance hops(int h) { return {static_cast<std::uint8_t>(h)}; }

  bool is_beyond_cap() const { return value == kBeyondCap; }
  friend bool operator==(const HopDistance&, const HopDistance&) = default;
};

/// Breadth-first search from x stopped at depth `cap` (0..3).
HopDistance truncated_distance(const Graph& g, NodeId x, NodeId y, int cap);

struct CommonNeighbors {
  std::size_t count = 0;
  std::vector<NodeId> nodes;
};

/// Linear merge of the two sorted adjacency lists.
CommonNeighbors common_neighbors(const Graph& g, NodeId i, NodeId j);

/// Same as common_neighbors(...).count without materializing the list.
std::size_t count_common_neighbors(const Graph& g, NodeId i, NodeId j);

}  // namespace curvkit
