#include "cvgraph/rules.hpp"

#include <sstream>
#include <stdexcept>

#include "cvgraph/graph_io.hpp"

namespace cvgraph {

WeightedGraph apply_lg_rule(const WeightedGraph& g, int a,
                            const Rational& delta) {
  g.check_vertex(a);
  WeightedGraph out = g;
  const auto neighbors = g.neighborhood(a);
  for (size_t i = 0; i < neighbors.size(); ++i) {
    for (size_t j = i + 1; j < neighbors.size(); ++j) {
      const int b = neighbors[i];
      const int c = neighbors[j];
      Rational w = g.weight(b, c) - g.weight(a, b) * g.weight(a, c) * delta;
      out = out.set_edge(b, c, w);
    }
  }
  return out;
}

WeightedGraph apply_f2_rule(const WeightedGraph& g, int a) {
  g.check_vertex(a);
  WeightedGraph out = g;
  for (int v : g.neighborhood(a)) {
    out = out.set_edge(a, v, -g.weight(a, v));
  }
  return out;
}

WeightedGraph apply_scale_rule(const WeightedGraph& g, int a,
                               const Rational& lambda) {
  g.check_vertex(a);
  if (lambda <= 0) {
    throw std::invalid_argument("scale factor must be positive");
  }
  WeightedGraph out = g;
  for (int v : g.neighborhood(a)) {
    out = out.set_edge(a, v, lambda * g.weight(a, v));
  }
  return out;
}

void validate_rule(const RuleOp& op, int vertex_count) {
  auto check = [&](int v) {
    if (v < 1 || v > vertex_count) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range 1.." +
                                  std::to_string(vertex_count));
    }
  };
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, LgOp>) {
          check(o.pivot);
        } else if constexpr (std::is_same_v<T, F2Op>) {
          check(o.vertex);
        } else {
          check(o.vertex);
          if (o.lambda <= 0) {
            throw std::invalid_argument("scale factor must be positive");
          }
        }
      },
      op);
}

WeightedGraph apply_rule(const WeightedGraph& g, const RuleOp& op) {
  validate_rule(op, g.vertex_count());
  return std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, LgOp>) {
          return apply_lg_rule(g, o.pivot, o.delta);
        } else if constexpr (std::is_same_v<T, F2Op>) {
          return apply_f2_rule(g, o.vertex);
        } else {
          return apply_scale_rule(g, o.vertex, o.lambda);
        }
      },
      op);
}

SequenceResult apply_sequence(const WeightedGraph& g,
                              const std::vector<RuleOp>& ops) {
  for (size_t i = 0; i < ops.size(); ++i) {
    try {
      validate_rule(ops[i], g.vertex_count());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("op " + std::to_string(i + 1) + ": " +
                                  e.what());
    }
  }
  SequenceResult r{g, {}};
  r.steps.reserve(ops.size());
  for (const auto& op : ops) {
    r.result = apply_rule(r.result, op);
    r.steps.push_back(r.result);
  }
  return r;
}

std::vector<RuleOp> parse_ops(std::string_view text) {
  std::vector<RuleOp> ops;
  int line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_number;
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;

    std::istringstream in(line);
    std::string keyword;
    if (!(in >> keyword) || keyword.front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    auto read_vertex = [&]() {
      int v;
      if (!(in >> v)) throw ParseError(line_number, "expected vertex index");
      return v;
    };
    auto read_rational = [&](const char* what) {
      std::string s;
      if (!(in >> s)) throw ParseError(line_number, std::string("expected ") + what);
      auto r = parse_rational(s);
      if (!r) throw ParseError(line_number, "unparseable rational '" + s + "'");
      return *r;
    };

    if (keyword == "lg") {
      int a = read_vertex();
      Rational d = read_rational("delta");
      ops.push_back(LgOp{a, d});
    } else if (keyword == "f2") {
      ops.push_back(F2Op{read_vertex()});
    } else if (keyword == "scale") {
      int a = read_vertex();
      Rational l = read_rational("lambda");
      if (l <= 0) throw ParseError(line_number, "scale factor must be positive");
      ops.push_back(ScaleOp{a, l});
    } else {
      throw ParseError(line_number, "unknown op '" + keyword + "'");
    }
    std::string rest;
    if (in >> rest) {
      throw ParseError(line_number, "trailing text '" + rest + "'");
    }
    if (end == text.size()) break;
  }
  return ops;
}

std::string op_to_string(const RuleOp& op) {
  return std::visit(
      [](const auto& o) -> std::string {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, LgOp>) {
          return "lg " + std::to_string(o.pivot) + " " + to_string(o.delta);
        } else if constexpr (std::is_same_v<T, F2Op>) {
          return "f2 " + std::to_string(o.vertex);
        } else {
          return "scale " + std::to_string(o.vertex) + " " + to_string(o.lambda);
        }
      },
      op);
}

std::string serialize_ops(const std::vector<RuleOp>& ops) {
  std::string out;
  for (const auto& op : ops) {
    out += op_to_string(op);
    out += '\n';
  }
  return out;
}

RuleOp inverse_op(const RuleOp& op) {
  return std::visit(
      [](const auto& o) -> RuleOp {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, LgOp>) {
          return LgOp{o.pivot, -o.delta};
        } else if constexpr (std::is_same_v<T, F2Op>) {
          return o;
        } else {
          return ScaleOp{o.vertex, 1 / o.lambda};
        }
      },
      op);
}

}  // namespace cvgraph
