#include "cvgraph/orbit.hpp"

#include <algorithm>
#include <stdexcept>

namespace cvgraph {

namespace {

void validate_config(const OrbitConfig& cfg) {
  if (cfg.max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
  if (cfg.max_nodes < 1) throw std::invalid_argument("max_nodes must be >= 1");
  for (const auto& l : cfg.lambda_set) {
    if (l <= 0) throw std::invalid_argument("lambda values must be positive");
  }
}

// Move vocabulary, independent of the current graph: vertices ascending;
// per vertex lg with each delta in list order, then f2, then scale with
// each lambda in list order.
std::vector<RuleOp> enumerate_moves(int vertex_count, const OrbitConfig& cfg) {
  std::vector<RuleOp> moves;
  for (int a = 1; a <= vertex_count; ++a) {
    for (const auto& d : cfg.delta_set) moves.push_back(LgOp{a, d});
    if (cfg.include_f2) moves.push_back(F2Op{a});
    if (cfg.include_scale) {
      for (const auto& l : cfg.lambda_set) moves.push_back(ScaleOp{a, l});
    }
  }
  return moves;
}

}  // namespace

OrbitResult explore(const WeightedGraph& g, const OrbitConfig& cfg) {
  validate_config(cfg);
  const auto moves = enumerate_moves(g.vertex_count(), cfg);

  OrbitResult result;
  const std::string root_key = g.canonical_bytes();
  result.nodes.emplace(root_key, OrbitNode{g, 0, std::nullopt, std::nullopt});

  std::vector<std::string> frontier{root_key};
  for (int depth = 0; depth < cfg.max_depth && !frontier.empty(); ++depth) {
    std::sort(frontier.begin(), frontier.end());
    std::vector<std::string> next;
    for (const auto& key : frontier) {
      const WeightedGraph parent = result.nodes.at(key).graph;
      for (const auto& move : moves) {
        WeightedGraph child = apply_rule(parent, move);
        std::string child_key = child.canonical_bytes();
        if (result.nodes.contains(child_key)) continue;
        if (static_cast<long>(result.nodes.size()) >= cfg.max_nodes) {
          result.truncated = true;
          return result;
        }
        result.nodes.emplace(child_key,
                             OrbitNode{std::move(child), depth + 1, key, move});
        next.push_back(std::move(child_key));
      }
    }
    frontier = std::move(next);
  }

  // The depth cap may have hidden graphs one step past the last layer;
  // probe without inserting so the flag is exact.
  for (const auto& key : frontier) {
    const WeightedGraph node = result.nodes.at(key).graph;
    for (const auto& move : moves) {
      if (!result.nodes.contains(apply_rule(node, move).canonical_bytes())) {
        result.truncated = true;
        return result;
      }
    }
  }
  return result;
}

OrbitStats orbit_stats(const OrbitResult& result) {
  OrbitStats stats;
  stats.node_count = result.nodes.size();
  stats.truncated = result.truncated;
  for (const auto& [key, node] : result.nodes) {
    ++stats.depth_histogram[node.depth];
    for (auto [u, v] : node.graph.edges()) {
      Rational mag = rational_abs(node.graph.weight(u, v));
      if (!stats.min_abs_weight || mag < *stats.min_abs_weight) {
        stats.min_abs_weight = mag;
      }
      if (!stats.max_abs_weight || mag > *stats.max_abs_weight) {
        stats.max_abs_weight = mag;
      }
    }
  }
  return stats;
}

std::vector<RuleOp> path_to_node(const OrbitResult& result,
                                 const std::string& key) {
  std::vector<RuleOp> ops;
  std::string cur = key;
  while (true) {
    const auto& node = result.nodes.at(cur);
    if (!node.parent_key) break;
    ops.push_back(*node.via);
    cur = *node.parent_key;
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

namespace {

struct SearchNode {
  WeightedGraph graph;
  int depth;
  std::optional<std::string> parent_key;
  std::optional<RuleOp> via;  // op linking this node toward its side's root
};

using SearchMap = std::map<std::string, SearchNode>;

// Expands one BFS layer. `invert` selects the backward side, whose edges
// apply inverse ops but record the forward op: via(m) on node h means
// apply_rule(h, m) == parent(h).
bool expand_layer(SearchMap& side, std::vector<std::string>& frontier,
                  const std::vector<RuleOp>& moves, bool invert,
                  long node_budget, size_t other_side_count) {
  std::sort(frontier.begin(), frontier.end());
  std::vector<std::string> next;
  for (const auto& key : frontier) {
    const SearchNode parent = side.at(key);
    for (const auto& move : moves) {
      const RuleOp step = invert ? inverse_op(move) : move;
      WeightedGraph child = apply_rule(parent.graph, step);
      std::string child_key = child.canonical_bytes();
      if (side.contains(child_key)) continue;
      if (static_cast<long>(side.size() + other_side_count) >= node_budget) {
        frontier = std::move(next);
        return false;  // budget exhausted
      }
      side.emplace(child_key, SearchNode{std::move(child), parent.depth + 1,
                                         key, move});
      next.push_back(std::move(child_key));
    }
  }
  frontier = std::move(next);
  return true;
}

std::optional<std::string> first_intersection(const SearchMap& fwd,
                                              const SearchMap& bwd) {
  // Map iteration is key-ordered, so the meeting point is deterministic.
  for (const auto& [key, node] : fwd) {
    if (bwd.contains(key)) return key;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<RuleOp>> find_sequence(const WeightedGraph& g1,
                                                 const WeightedGraph& g2,
                                                 const OrbitConfig& cfg) {
  if (g1.vertex_count() != g2.vertex_count()) {
    throw std::invalid_argument("vertex count mismatch: " +
                                std::to_string(g1.vertex_count()) + " vs " +
                                std::to_string(g2.vertex_count()));
  }
  validate_config(cfg);
  const auto moves = enumerate_moves(g1.vertex_count(), cfg);

  SearchMap fwd, bwd;
  fwd.emplace(g1.canonical_bytes(),
              SearchNode{g1, 0, std::nullopt, std::nullopt});
  bwd.emplace(g2.canonical_bytes(),
              SearchNode{g2, 0, std::nullopt, std::nullopt});
  std::vector<std::string> fwd_frontier{g1.canonical_bytes()};
  std::vector<std::string> bwd_frontier{g2.canonical_bytes()};
  int fwd_depth = 0, bwd_depth = 0;

  auto build_result =
      [&](const std::string& meet) -> std::optional<std::vector<RuleOp>> {
    std::vector<RuleOp> ops;
    for (std::string cur = meet; fwd.at(cur).parent_key;) {
      ops.push_back(*fwd.at(cur).via);
      cur = *fwd.at(cur).parent_key;
    }
    std::reverse(ops.begin(), ops.end());
    for (std::string cur = meet; bwd.at(cur).parent_key;) {
      ops.push_back(*bwd.at(cur).via);
      cur = *bwd.at(cur).parent_key;
    }
    if (apply_sequence(g1, ops).result != g2) {
      throw std::logic_error("connecting sequence failed validation");
    }
    return ops;
  };

  if (auto meet = first_intersection(fwd, bwd)) return build_result(*meet);

  while (fwd_depth + bwd_depth < cfg.max_depth &&
         (!fwd_frontier.empty() || !bwd_frontier.empty())) {
    // Expand the smaller live frontier; ties go forward.
    bool expand_fwd;
    if (fwd_frontier.empty()) {
      expand_fwd = false;
    } else if (bwd_frontier.empty()) {
      expand_fwd = true;
    } else {
      expand_fwd = fwd_frontier.size() <= bwd_frontier.size();
    }
    bool within_budget;
    if (expand_fwd) {
      within_budget = expand_layer(fwd, fwd_frontier, moves, false,
                                   cfg.max_nodes, bwd.size());
      ++fwd_depth;
    } else {
      within_budget = expand_layer(bwd, bwd_frontier, moves, true,
                                   cfg.max_nodes, fwd.size());
      ++bwd_depth;
    }
    if (auto meet = first_intersection(fwd, bwd)) return build_result(*meet);
    if (!within_budget) break;
  }
  return std::nullopt;
}

}  // namespace cvgraph
