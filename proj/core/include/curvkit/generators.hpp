#pragma once

#include "curvkit/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>

namespace curvkit {

// Seeded random-graph models. Node ids are 0..n-1 and labels equal ids. All
// generators draw from a single SplitMix64 stream seeded with `seed`; the draw
// order is fixed below so an (model, parameters, seed) triple is portable.

/// Each of the n(n-1)/2 pairs, visited as (0,1),(0,2),...,(n-2,n-1), is kept
/// with probability p. Throws std::invalid_argument unless p in [0, 1].
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Preferential attachment. Nodes 0..m-1 start isolated; node m links to all of
/// them; every later node draws m distinct targets with probability
/// proportional to degree (redrawing repeats). m (n - m) edges.
/// Throws std::invalid_argument unless 1 <= m < n.
Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

/// Ring lattice with k/2 neighbours per side, then for s = 1..k/2 and u = 0..n-1
/// the lattice edge (u, u+s) is rewired with probability p to (u, w), w uniform;
/// the rewire is skipped when w == u or (u, w) already exists.
/// Throws std::invalid_argument unless k is even, k < n and p in [0, 1].
Graph watts_strogatz(std::size_t n, std::size_t k, double p, std::uint64_t seed);

/// n points uniform on the unit square (x then y per point), edge iff the
/// Euclidean distance is < r. r above sqrt(2) is clamped. Throws
/// std::invalid_argument when r is negative or NaN.
Graph random_geometric(std::size_t n, double r, std::uint64_t seed);

struct ErParams {
  std::size_t n;
  double p;
};
struct BaParams {
  std::size_t n;
  std::size_t m;
};
struct WsParams {
  std::size_t n;
  std::size_t k;
  double p;
};
struct RggParams {
  std::size_t n;
  double r;
};

struct GenSpec {
  std::variant<ErParams, BaParams, WsParams, RggParams> model;
  std::uint64_t seed = 0;
};

Graph generate(const GenSpec& spec);
/// Compact display name, e.g. "ER(100,0.1)" or "WS(500,4,0.1)".
std::string model_name(const GenSpec& spec);

}  // namespace curvkit
