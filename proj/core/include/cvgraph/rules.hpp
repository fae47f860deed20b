#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cvgraph/rational.hpp"
#include "cvgraph/weighted_graph.hpp"

namespace cvgraph {

// The three local rewrite rules. Script syntax, one op per line:
//   lg <a> <delta>
//   f2 <a>
//   scale <a> <lambda>

struct LgOp {
  int pivot;
  Rational delta;
  bool operator==(const LgOp&) const = default;
};

struct F2Op {
  int vertex;
  bool operator==(const F2Op&) const = default;
};

struct ScaleOp {
  int vertex;
  Rational lambda;  // > 0
  bool operator==(const ScaleOp&) const = default;
};

using RuleOp = std::variant<LgOp, F2Op, ScaleOp>;

/// Local-Gaussian rewrite at pivot a: for every unordered pair {b, c} of
/// distinct neighbors of a, the weight becomes
///     w'(b,c) = w(b,c) - w(a,b) * w(a,c) * delta
/// (absent edges read as 0 and a resulting 0 deletes the edge). Edges
/// incident to a and edges outside the neighborhood are unchanged.
WeightedGraph apply_lg_rule(const WeightedGraph& g, int a,
                            const Rational& delta);

/// Negates the weight of every edge incident to a.
WeightedGraph apply_f2_rule(const WeightedGraph& g, int a);

/// Multiplies the weight of every edge incident to a by lambda (> 0).
WeightedGraph apply_scale_rule(const WeightedGraph& g, int a,
                               const Rational& lambda);

/// Applies one rule op; validates it first.
WeightedGraph apply_rule(const WeightedGraph& g, const RuleOp& op);

/// Throws std::invalid_argument on out-of-range vertex or lambda <= 0.
void validate_rule(const RuleOp& op, int vertex_count);

struct SequenceResult {
  WeightedGraph result;
  /// Graph after each op, in order (steps.size() == ops.size()).
  std::vector<WeightedGraph> steps;
};

/// Left-to-right fold of the ops. The first invalid op aborts with its
/// 1-based index in the exception message, leaving no partial result.
SequenceResult apply_sequence(const WeightedGraph& g,
                              const std::vector<RuleOp>& ops);

/// Parses op-script text; `#` comments and blank lines are ignored.
std::vector<RuleOp> parse_ops(std::string_view text);

std::string op_to_string(const RuleOp& op);
std::string serialize_ops(const std::vector<RuleOp>& ops);

/// The rule that undoes `op`: lg(a,-delta), f2(a), scale(a,1/lambda).
RuleOp inverse_op(const RuleOp& op);

}  // namespace cvgraph
