#include "curvkit/neighborhood.hpp"

#include <stdexcept>
#include <string>

namespace curvkit {
namespace {

// Sorted merge: do N(k) and targets \ {skip} intersect?
bool touches(std::span<const NodeId> nk, std::span<const NodeId> targets, NodeId skip) {
  auto p = nk.begin();
  auto q = targets.begin();
  while (p != nk.end() && q != targets.end()) {
    if (*p < *q) {
      ++p;
    } else if (*q < *p) {
      ++q;
    } else {
      if (*p != skip) return true;
      ++p;
      ++q;
    }
  }
  return false;
}

struct SideCounts {
  std::int64_t s1 = 0, s2 = 0, s3 = 0;
};

// Classifies the exclusive neighbours of `self` against the targets N(other) \ {self}.
SideCounts classify(const Graph& g, const TwoHopIndex& index, NodeId self, NodeId other) {
  SideCounts out;
  auto own = g.neighbors(self);
  auto opposite = g.neighbors(other);
  const bool no_targets = opposite.size() == 1;  // N(other) = {self}

  auto q = opposite.begin();
  for (NodeId k : own) {
    if (k == other) continue;
    while (q != opposite.end() && *q < k) ++q;
    if (q != opposite.end() && *q == k) continue;  // common neighbour
    if (no_targets) {
      ++out.s1;
      continue;
    }
    if (touches(g.neighbors(k), opposite, self)) {
      ++out.s1;
      continue;
    }
    bool within_two = false;
    for (NodeId l : opposite) {
      if (l == self) continue;
      if (index.within_two(k, l)) {
        within_two = true;
        break;
      }
    }
    if (within_two) {
      ++out.s2;
    } else {
      ++out.s3;
    }
  }
  return out;
}

}  // namespace

NeighborhoodPartition partition(const Graph& g, const TwoHopIndex& index, NodeId i, NodeId j) {
  if (!g.has_edge(i, j)) {
    throw std::invalid_argument("partition: (" + std::to_string(g.label(i)) + "," +
                                std::to_string(g.label(j)) + ") is not an edge");
  }
  NeighborhoodPartition p;
  p.common = static_cast<std::int64_t>(count_common_neighbors(g, i, j));
  p.union_size = static_cast<std::int64_t>(g.degree(i) + g.degree(j)) - p.common;

  const SideCounts a = classify(g, index, i, j);
  const SideCounts b = classify(g, index, j, i);
  p.s1_i = a.s1;
  p.s2_i = a.s2;
  p.s3_i = a.s3;
  p.s1_j = b.s1;
  p.s2_j = b.s2;
  p.s3_j = b.s3;
  return p;
}

}  // namespace curvkit
