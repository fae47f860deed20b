#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cvgraph/weighted_graph.hpp"

namespace cvgraph {

/// Malformed graph or op-script text. `line` is 1-based, 0 when the error is
/// not tied to a specific line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Graph file format (UTF-8 text):
///   cvgraph v1
///   n <count>
///   e <u> <v> <weight>     one line per edge, u < v, weight a rational
/// `#` starts a comment; blank lines are ignored. Pairs not listed have
/// weight 0. Duplicate edge lines are rejected when the weights conflict.
WeightedGraph parse_graph(std::string_view text);

/// Canonical text form: header, then edges sorted by (u, v) with reduced
/// rational weights. parse_graph(serialize_graph(g)) == g, bit-exact.
std::string serialize_graph(const WeightedGraph& g);

WeightedGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const WeightedGraph& g);

}  // namespace cvgraph
