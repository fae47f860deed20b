#pragma once

#include <string>
#include <vector>

#include "cvgraph/rational.hpp"

namespace cvgraph {

/// Undirected simple graph on vertices 1..n with exact rational edge
/// weights. The weight matrix is symmetric with zero diagonal; weight 0 and
/// "no edge" are the same state. Values are immutable after construction:
/// mutating operations return a new graph.
class WeightedGraph {
 public:
  /// Edgeless graph on n vertices. n must be >= 1.
  explicit WeightedGraph(int vertex_count);

  /// Builds from a full n*n row-major weight matrix; rejects asymmetric
  /// matrices and nonzero diagonals.
  static WeightedGraph from_weight_matrix(int vertex_count,
                                          std::vector<Rational> weights);

  int vertex_count() const { return n_; }

  /// Weight of (u, v); vertices are 1-based. u == v is allowed and reads 0.
  const Rational& weight(int u, int v) const;

  /// Copy of this graph with weights[u][v] = weights[v][u] = w. Weight 0
  /// removes the edge. Self-loops (u == v) are rejected.
  WeightedGraph set_edge(int u, int v, const Rational& w) const;

  bool has_edge(int u, int v) const { return weight(u, v) != 0; }

  /// Sorted list of all v with weight(a, v) != 0.
  std::vector<int> neighborhood(int a) const;

  /// Sorted (u, v) pairs with u < v and nonzero weight.
  std::vector<std::pair<int, int>> edges() const;

  /// Deterministic injective encoding of (n, weights): vertex count, then
  /// the upper-triangular weights row-major as canonical rational text.
  /// Equal graphs produce identical bytes; unequal graphs distinct bytes.
  std::string canonical_bytes() const;

  bool operator==(const WeightedGraph& other) const = default;

  /// Throws std::invalid_argument unless 1 <= v <= n.
  void check_vertex(int v) const;

 private:
  const Rational& at(int u, int v) const { return w_[(u - 1) * n_ + (v - 1)]; }

  int n_;
  std::vector<Rational> w_;  // n*n row-major, symmetric, zero diagonal
};

}  // namespace cvgraph
