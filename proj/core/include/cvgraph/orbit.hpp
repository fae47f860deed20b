#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cvgraph/rules.hpp"
#include "cvgraph/weighted_graph.hpp"

namespace cvgraph {

/// Bounds for the orbit enumeration. The reachable set is infinite in
/// general; a finite delta/lambda sample plus depth and node budgets makes
/// the search finite. Results are never evidence of inequivalence.
struct OrbitConfig {
  std::vector<Rational> delta_set;   // lg moves exist iff nonempty
  std::vector<Rational> lambda_set;  // all > 0
  int max_depth = 0;
  long max_nodes = 1;
  bool include_f2 = false;
  bool include_scale = false;
};

struct OrbitNode {
  WeightedGraph graph;
  int depth = 0;
  std::optional<std::string> parent_key;  // canonical bytes of the parent
  std::optional<RuleOp> via;
};

struct OrbitResult {
  /// Keyed by canonical bytes; map order makes iteration deterministic.
  std::map<std::string, OrbitNode> nodes;
  bool truncated = false;
};

/// Breadth-first enumeration from g. Moves per node, in order: vertices
/// ascending; per vertex lg with each delta in list order, then f2 when
/// enabled, then scale with each lambda in list order. Deduplication is by
/// canonical bytes of the labeled graph. Stops at max_depth or max_nodes;
/// truncated is set iff stopping hid at least one unvisited graph.
OrbitResult explore(const WeightedGraph& g, const OrbitConfig& cfg);

struct OrbitStats {
  size_t node_count = 0;
  std::map<int, size_t> depth_histogram;
  bool truncated = false;
  /// Smallest/largest |weight| over all edges of all enumerated graphs;
  /// empty when no graph in the orbit has an edge.
  std::optional<Rational> min_abs_weight;
  std::optional<Rational> max_abs_weight;
};

OrbitStats orbit_stats(const OrbitResult& result);

/// Bounded bidirectional search for a rule sequence taking g1 to g2.
/// Forward moves come from cfg; the backward frontier expands with inverse
/// moves so that every edge still corresponds to a configured op. A found
/// sequence is validated with apply_sequence before being returned; nullopt
/// means not found within budget, never inequivalence.
std::optional<std::vector<RuleOp>> find_sequence(const WeightedGraph& g1,
                                                 const WeightedGraph& g2,
                                                 const OrbitConfig& cfg);

/// Replays the parent chain from the root to `key`. Empty for the root.
std::vector<RuleOp> path_to_node(const OrbitResult& result,
                                 const std::string& key);

}  // namespace cvgraph
