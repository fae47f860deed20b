#include "cvgraph/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace cvgraph {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  return s;
}

struct Line {
  int number;
  std::string text;
};

// Significant lines only: blank and `#` comment lines dropped.
std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = trim(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') {
      lines.push_back({number, std::string(line)});
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

std::optional<int> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  size_t idx = 0;
  int value = 0;
  try {
    value = std::stoi(s, &idx);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (idx != s.size()) return std::nullopt;
  return value;
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  auto lines = significant_lines(text);
  if (lines.empty() || lines[0].text != "cvgraph v1") {
    throw ParseError(lines.empty() ? 1 : lines[0].number,
                     "expected header 'cvgraph v1'");
  }
  if (lines.size() < 2) {
    throw ParseError(lines[0].number, "missing 'n <count>' line");
  }

  auto n_fields = split_fields(lines[1].text);
  std::optional<int> n;
  if (n_fields.size() == 2 && n_fields[0] == "n") n = parse_int(n_fields[1]);
  if (!n || *n < 1) {
    throw ParseError(lines[1].number, "expected 'n <count>' with count >= 1");
  }

  WeightedGraph g(*n);
  for (size_t i = 2; i < lines.size(); ++i) {
    const auto& [number, line] = lines[i];
    auto fields = split_fields(line);
    if (fields.size() != 4 || fields[0] != "e") {
      throw ParseError(number, "expected 'e <u> <v> <weight>'");
    }
    auto u = parse_int(fields[1]);
    auto v = parse_int(fields[2]);
    if (!u || !v || *u < 1 || *u > *n || *v < 1 || *v > *n) {
      throw ParseError(number, "edge vertex out of range 1.." + std::to_string(*n));
    }
    if (*u == *v) {
      throw ParseError(number, "self-loop is not allowed");
    }
    if (*u > *v) {
      throw ParseError(number, "edge must be written with u < v");
    }
    auto w = parse_rational(fields[3]);
    if (!w) {
      throw ParseError(number, "unparseable rational '" + fields[3] + "'");
    }
    if (g.has_edge(*u, *v) && g.weight(*u, *v) != *w) {
      throw ParseError(number, "conflicting duplicate edge (" + fields[1] + "," +
                                   fields[2] + ")");
    }
    g = g.set_edge(*u, *v, *w);
  }
  return g;
}

std::string serialize_graph(const WeightedGraph& g) {
  std::string out = "cvgraph v1\n";
  out += "n " + std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += "e " + std::to_string(u) + " " + std::to_string(v) + " " +
           to_string(g.weight(u, v)) + "\n";
  }
  return out;
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void write_graph_file(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError(0, "cannot write '" + path + "'");
  out << serialize_graph(g);
}

}  // namespace cvgraph
