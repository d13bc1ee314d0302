#pragma once

#include "curvkit/graph.hpp"
#include "curvkit/two_hop_index.hpp"

#include <cstdint>

namespace curvkit {

/// Per-edge classification of the union of the endpoint neighbourhoods.
///
/// `common` counts nodes adjacent to both endpoints. An exclusive neighbour k of
/// the first endpoint i (k ~ i, k != j, k !~ j) lands in bucket r in {1,2,3}, the
/// hop distance from k to the nearest node of N(j) \ {i}. Common neighbours are
/// valid targets, so r = 1 whenever k touches one. When N(j) \ {i} is empty every
/// exclusive neighbour of i is put in bucket 1. `union_size` is |N(i) u N(j)|,
/// which contains i and j themselves.
struct NeighborhoodPartition {
  std::int64_t common = 0;
  std::int64_t s1_i = 0, s2_i = 0, s3_i = 0;
  std::int64_t s1_j = 0, s2_j = 0, s3_j = 0;
  std::int64_t union_size = 0;

  std::int64_t s1() const { return s1_i + s1_j; }
  std::int64_t s2() const { return s2_i + s2_j; }
  std::int64_t s3() const { return s3_i + s3_j; }
  /// Exclusive neighbours of both endpoints.
  std::int64_t exclusive() const { return s1() + s2() + s3(); }
  /// Separate nodes: exclusive neighbours plus i and j.
  std::int64_t separate() const { return exclusive() + 2; }

  friend bool operator==(const NeighborhoodPartition&, const NeighborhoodPartition&) = default;
};

/// S1 membership by adjacency merge, S2 versus S3 by the two-hop index.
/// Throws std::invalid_argument when (i, j) is not an edge.
NeighborhoodPartition partition(const Graph& g, const TwoHopIndex& index, NodeId i, NodeId j);

}  // namespace curvkit
