#include "curvkit/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace curvkit {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits off the next whitespace separated token; empty when none is left.
std::string_view next_token(std::string_view& rest) {
  std::size_t a = 0;
  while (a < rest.size() && is_space(rest[a])) ++a;
  std::size_t b = a;
  while (b < rest.size() && !is_space(rest[b])) ++b;
  const std::string_view token = rest.substr(a, b - a);
  rest.remove_prefix(b);
  return token;
}

Label parse_label(std::string_view token, std::size_t line) {
  Label value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line, "malformed node label '" + std::string(token) + "'");
  }
  return value;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace

LoadedGraph read_edge_list(std::istream& in) {
  std::vector<std::pair<Label, Label>> pairs;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view rest = line;
    const std::string_view first = next_token(rest);
    if (first.empty() || first.front() == '#' || first.front() == '%') continue;
    const std::string_view second = next_token(rest);
    if (second.empty()) throw ParseError(number, "expected two node labels");
    pairs.emplace_back(parse_label(first, number), parse_label(second, number));
  }
  if (in.bad()) throw std::runtime_error("read error after line " + std::to_string(number));

  NormalizationStats stats;
  LoadedGraph out{Graph::from_edge_list(pairs, &stats), {}};
  out.report.nodes = out.graph.node_count();
  out.report.edges = out.graph.edge_count();
  out.report.self_loops_dropped = stats.self_loops_dropped;
  out.report.duplicates_collapsed = stats.duplicates_collapsed;
  out.report.label_map_size = out.graph.labels().size();
  return out;
}

LoadedGraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

void write_edge_list(const Graph& g, const std::filesystem::path& path, const std::string& comment) {
  auto out = open_for_write(path);
  write_edge_list(g, out, comment);
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::string format_decimal(double value) {
  std::array<char, 64> buffer{};
  auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                              std::chars_format::fixed);
  if (result.ec != std::errc()) {
    result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  }
  std::string s(buffer.data(), result.ptr);
  if (s == "-0") s = "0";
  return s;
}

void write_curvature_csv(const CurvatureTable& table, std::ostream& out, bool exact) {
  out << "u,v,or,jc,gjc,forman";
  if (exact) out << ",or_exact,jc_exact,gjc_exact";
  out << '\n';
  auto field = [&out](const std::optional<Rational>& value) {
    out << ',';
    if (value) out << format_decimal(to_double(*value));
  };
  auto exact_field = [&out](const std::optional<Rational>& value) {
    out << ',';
    if (value) out << to_string(*value);
  };
  for (const EdgeCurvature& row : table.rows) {
    out << row.u << ',' << row.v;
    field(row.ollivier);
    field(row.jaccard);
    field(row.generalized_jaccard);
    out << ',';
    if (row.forman) out << format_decimal(*row.forman);
    if (exact) {
      exact_field(row.ollivier);
      exact_field(row.jaccard);
      exact_field(row.generalized_jaccard);
    }
    out << '\n';
  }
}

void write_curvature_csv(const CurvatureTable& table, const std::filesystem::path& path, bool exact) {
  auto out = open_for_write(path);
  write_curvature_csv(table, out, exact);
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace curvkit
