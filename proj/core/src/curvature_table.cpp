#include "curvkit/curvature_table.hpp"

#include "curvkit/jaccard.hpp"
#include "curvkit/neighborhood.hpp"
#include "curvkit/ollivier.hpp"
#include "curvkit/two_hop_index.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

namespace curvkit {

MetricSet MetricSet::parse(std::string_view text) {
  MetricSet out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    if (token == "or") {
      out.bits_ |= static_cast<std::uint8_t>(Metric::kOllivier);
    } else if (token == "jc") {
      out.bits_ |= static_cast<std::uint8_t>(Metric::kJaccard);
    } else if (token == "gjc") {
      out.bits_ |= static_cast<std::uint8_t>(Metric::kGeneralizedJaccard);
    } else if (token == "forman") {
      out.bits_ |= static_cast<std::uint8_t>(Metric::kForman);
    } else {
      throw std::invalid_argument("unknown metric '" + std::string(token) +
                                  "' (expected or, jc, gjc, forman)");
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw std::invalid_argument("empty metric list");
  return out;
}

GraphSummary summarize(const Graph& g) {
  return {g.node_count(), g.edge_count(), g.max_degree(), g.average_degree()};
}

std::vector<double> CurvatureTable::column(Metric m) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    switch (m) {
      case Metric::kOllivier:
        out.push_back(to_double(row.ollivier.value()));
        break;
      case Metric::kJaccard:
        out.push_back(to_double(row.jaccard.value()));
        break;
      case Metric::kGeneralizedJaccard:
        out.push_back(to_double(row.generalized_jaccard.value()));
        break;
      case Metric::kForman:
        out.push_back(row.forman.value());
        break;
    }
  }
  return out;
}

CurvatureTable compute_all(const Graph& g, const ComputeOptions& options) {
  if (options.metrics.empty()) throw std::invalid_argument("compute_all: no metrics requested");
  const MetricSet metrics = options.metrics;

  CurvatureTable table;
  table.metrics = metrics;
  table.summary = summarize(g);
  // Dense ids are assigned in ascending label order, so the canonical edge list
  // is already sorted by (u, v) in original labels.
  const auto edges = g.edges();
  table.rows.resize(edges.size());

  std::optional<TwoHopIndex> index;
  if (metrics.contains(Metric::kOllivier) || metrics.contains(Metric::kGeneralizedJaccard)) {
    index.emplace(g);
  }

  auto evaluate = [&](std::size_t first, std::size_t last) {
    for (std::size_t e = first; e < last; ++e) {
      const auto [i, j] = edges[e];
      EdgeCurvature& row = table.rows[e];
      row.u = g.label(i);
      row.v = g.label(j);
      if (metrics.contains(Metric::kJaccard) && !metrics.contains(Metric::kGeneralizedJaccard)) {
        const auto c = static_cast<std::int64_t>(count_common_neighbors(g, i, j));
        const auto n = static_cast<std::int64_t>(g.degree(i) + g.degree(j)) - c;
        row.jaccard = Rational(-2) + Rational(3 * c, n);
      }
      if (metrics.contains(Metric::kGeneralizedJaccard)) {
        const NeighborhoodPartition p = partition(g, *index, i, j);
        row.generalized_jaccard = gjc_exact(p);
        if (metrics.contains(Metric::kJaccard)) row.jaccard = jc_exact(p);
      }
      if (metrics.contains(Metric::kOllivier)) {
        row.ollivier = or_curvature_exact(g, *index, i, j, options.idle);
      }
      if (metrics.contains(Metric::kForman)) {
        row.forman = forman(g, i, j, options.forman_weighting);
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, std::max<std::size_t>(1, edges.size()));
  if (workers == 1) {
    evaluate(0, edges.size());
    return table;
  }

  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (edges.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = std::min(edges.size(), w * chunk);
      const std::size_t last = std::min(edges.size(), first + chunk);
      pool.emplace_back([&, w, first, last] {
        try {
          evaluate(first, last);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return table;
}

}  // namespace curvkit
