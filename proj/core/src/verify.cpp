#include "cvgraph/verify.hpp"

#include "cvgraph/graph_io.hpp"

namespace cvgraph {

std::vector<GaussianGate> gates_for_rule(const WeightedGraph& g,
                                         const RuleOp& op) {
  validate_rule(op, g.vertex_count());
  return std::visit(
      [&](const auto& o) -> std::vector<GaussianGate> {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, LgOp>) {
          return expand_local_gaussian(g, o.pivot, o.delta);
        } else if constexpr (std::is_same_v<T, F2Op>) {
          return {FourierSquaredGate{o.vertex}};
        } else {
          return {ScaleGate{o.vertex, o.lambda}};
        }
      },
      op);
}

std::string RuleCheck::report() const {
  if (agree) return "agreement: rewrite matches symplectic transport exactly";
  std::string out = "MISMATCH\nrewrite result:\n" + serialize_graph(candidate);
  if (oracle_result) {
    out += "oracle result:\n" + serialize_graph(*oracle_result);
  } else {
    out += "oracle result: not graph form (" + oracle_failure->message + ")";
  }
  return out;
}

RuleCheck check_candidate_against_oracle(const WeightedGraph& g,
                                         const RuleOp& op,
                                         const WeightedGraph& candidate) {
  RuleCheck check{false, candidate, std::nullopt, std::nullopt};
  const auto gates = gates_for_rule(g, op);
  GraphRecovery recovered = recover_graph(transport(graph_nullifier_matrix(g), gates));
  if (const auto* failure = std::get_if<NotGraphForm>(&recovered)) {
    check.oracle_failure = *failure;
    return check;
  }
  check.oracle_result = std::get<WeightedGraph>(std::move(recovered));
  check.agree = *check.oracle_result == candidate;
  return check;
}

RuleCheck check_rule_against_oracle(const WeightedGraph& g, const RuleOp& op) {
  return check_candidate_against_oracle(g, op, apply_rule(g, op));
}

}  // namespace cvgraph
