#include "fixtures.hpp"

#include "curvkit/random.hpp"

#include <utility>

namespace curvkit::testing {

Graph worked_example() {
  const std::vector<std::pair<Label, Label>> pairs = {{1, 2}, {1, 3}, {1, 4}, {1, 6},
                                                      {2, 3}, {2, 5}, {4, 5}};
  return Graph::from_edge_list(pairs);
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u + 1 < n; ++u) {
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(u + 1)});
  }
  return Graph::from_dense_edges(n, edges);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>((u + 1) % n)});
  }
  return Graph::from_dense_edges(n, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    }
  }
  return Graph::from_dense_edges(n, edges);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) edges.push_back({0, static_cast<NodeId>(v)});
  return Graph::from_dense_edges(leaves + 1, edges);
}

Graph torus(std::size_t rows, std::size_t cols) {
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<NodeId>(r * cols + c); };
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      edges.push_back({id(r, c), id(r, (c + 1) % cols)});
      edges.push_back({id(r, c), id((r + 1) % rows, c)});
    }
  }
  return Graph::from_dense_edges(rows * cols, edges);
}

std::vector<NamedGraph> random_mix(std::size_t count, std::size_t max_n, std::uint64_t seed,
                                   bool include_rgg) {
  SplitMix64 rng(seed);
  std::vector<NamedGraph> out;
  const std::size_t kinds = include_rgg ? 4 : 3;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t n = 4 + rng.below(max_n - 3);
    const std::uint64_t s = rng();
    GenSpec spec;
    spec.seed = s;
    switch (t % kinds) {
      case 0:
        spec.model = ErParams{n, 0.05 + 0.4 * rng.uniform()};
        break;
      case 1:
        spec.model = BaParams{n, 1 + rng.below(3)};
        break;
      case 2: {
        std::size_t k = 2 * (1 + rng.below(3));
        if (k >= n) k = 2;
        spec.model = WsParams{n, k, rng.uniform()};
        break;
      }
      default:
        spec.model = RggParams{n, 0.1 + 0.4 * rng.uniform()};
        break;
    }
    out.push_back({model_name(spec) + "#" + std::to_string(s), generate(spec)});
  }
  return out;
}

std::vector<NamedGraph> catalogue() {
  std::vector<NamedGraph> out;
  out.push_back({"six", worked_example()});
  out.push_back({"K2", complete(2)});
  out.push_back({"K3", complete(3)});
  out.push_back({"K6", complete(6)});
  out.push_back({"P5", path(5)});
  out.push_back({"C5", cycle(5)});
  out.push_back({"C8", cycle(8)});
  out.push_back({"star5", star(5)});
  out.push_back({"torus5x5", torus(5, 5)});
  out.push_back({"torus7x7", torus(7, 7)});
  out.push_back({"ER", erdos_renyi(60, 0.1, 3)});
  out.push_back({"BA", barabasi_albert(60, 2, 3)});
  out.push_back({"WS", watts_strogatz(60, 4, 0.2, 3)});
  out.push_back({"RGG", random_geometric(60, 0.25, 3)});
  return out;
}

}  // namespace curvkit::testing
