#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvgraph/rules.hpp"
#include "cvgraph/symplectic.hpp"
#include "cvgraph/weighted_graph.hpp"

namespace cvgraph {

/// The gate sequence realizing one rule op on the given graph: the expanded
/// local-Gaussian composite for lg, a half rotation for f2, a squeezer for
/// scale.
std::vector<GaussianGate> gates_for_rule(const WeightedGraph& g,
                                         const RuleOp& op);

/// Outcome of checking one candidate rewrite against the symplectic route.
struct RuleCheck {
  bool agree = false;
  WeightedGraph candidate;
  std::optional<WeightedGraph> oracle_result;   // empty when not graph form
  std::optional<NotGraphForm> oracle_failure;

  std::string report() const;
};

/// Transports the graph's nullifier matrix through gates_for_rule and
/// recovers; agree is exact equality with `candidate`. The candidate is an
/// arbitrary input so that a deliberately wrong rewrite can be shown to
/// fail.
RuleCheck check_candidate_against_oracle(const WeightedGraph& g,
                                         const RuleOp& op,
                                         const WeightedGraph& candidate);

/// check_candidate_against_oracle with candidate = apply_rule(g, op).
RuleCheck check_rule_against_oracle(const WeightedGraph& g, const RuleOp& op);

}  // namespace cvgraph
