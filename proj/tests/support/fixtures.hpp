#pragma once

#include "curvkit/generators.hpp"
#include "curvkit/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace curvkit::testing {

/// Six-node worked example: edges 1-2, 1-3, 1-4, 1-6, 2-3, 2-5, 4-5.
/// Labels are 1..6, so dense ids are label - 1.
Graph worked_example();

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
/// Centre 0 with leaves 1..leaves.
Graph star(std::size_t leaves);
/// rows x cols grid with wrap-around in both directions.
Graph torus(std::size_t rows, std::size_t cols);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// `count` seeded graphs with 2 <= n <= max_n, cycling through ER, BA and WS.
std::vector<NamedGraph> random_mix(std::size_t count, std::size_t max_n, std::uint64_t seed,
                                   bool include_rgg = false);

/// Small fixed graphs plus one instance of every generator.
std::vector<NamedGraph> catalogue();

}  // namespace curvkit::testing
