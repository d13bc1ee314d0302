#pragma once

#include "curvkit/curvature_table.hpp"
#include "curvkit/graph.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace curvkit {

struct LoadReport {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;
  std::size_t label_map_size = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LoadedGraph {
  Graph graph;
  LoadReport report;
};

/// Whitespace separated edge list: two nonnegative integer labels per line,
/// further tokens ignored, blank lines and lines starting with '#' or '%'
/// skipped. Throws ParseError naming the offending line.
LoadedGraph read_edge_list(std::istream& in);
LoadedGraph read_edge_list(const std::filesystem::path& path);

/// "u v" per canonical edge, in original labels, after a '#' comment line.
void write_edge_list(const Graph& g, std::ostream& out, const std::string& comment = {});
void write_edge_list(const Graph& g, const std::filesystem::path& path,
                     const std::string& comment = {});

/// Header `u,v,or,jc,gjc,forman`; absent metrics leave empty fields. With
/// `exact`, three more columns or_exact,jc_exact,gjc_exact hold fractions.
void write_curvature_csv(const CurvatureTable& table, std::ostream& out, bool exact = false);
void write_curvature_csv(const CurvatureTable& table, const std::filesystem::path& path,
                         bool exact = false);

/// Shortest round-trip fixed-point rendering ("0.25", "-1.5", "0").
std::string format_decimal(double value);

}  // namespace curvkit
