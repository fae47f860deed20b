#include "cvgraph/weighted_graph.hpp"

#include <stdexcept>
#include <utility>

namespace cvgraph {

WeightedGraph::WeightedGraph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 1) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  w_.assign(static_cast<size_t>(n_) * n_, Rational(0));
}

WeightedGraph WeightedGraph::from_weight_matrix(int vertex_count,
                                                std::vector<Rational> weights) {
  WeightedGraph g(vertex_count);
  if (weights.size() != g.w_.size()) {
    throw std::invalid_argument("weight matrix size mismatch");
  }
  const int n = vertex_count;
  for (int u = 0; u < n; ++u) {
    if (weights[u * n + u] != 0) {
      throw std::invalid_argument("weight matrix has nonzero diagonal");
    }
    for (int v = u + 1; v < n; ++v) {
      if (weights[u * n + v] != weights[v * n + u]) {
        throw std::invalid_argument("weight matrix is not symmetric");
      }
    }
  }
  g.w_ = std::move(weights);
  return g;
}

void WeightedGraph::check_vertex(int v) const {
  if (v < 1 || v > n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range 1.." + std::to_string(n_));
  }
}

const Rational& WeightedGraph::weight(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return at(u, v);
}

WeightedGraph WeightedGraph::set_edge(int u, int v, const Rational& w) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("self-loop (" + std::to_string(u) + "," +
                                std::to_string(v) + ") is not allowed");
  }
  WeightedGraph out(*this);
  out.w_[(u - 1) * n_ + (v - 1)] = w;
  out.w_[(v - 1) * n_ + (u - 1)] = w;
  return out;
}

std::vector<int> WeightedGraph::neighborhood(int a) const {
  check_vertex(a);
  std::vector<int> result;
  for (int v = 1; v <= n_; ++v) {
    if (v != a && at(a, v) != 0) result.push_back(v);
  }
  return result;
}

std::vector<std::pair<int, int>> WeightedGraph::edges() const {
  std::vector<std::pair<int, int>> result;
  for (int u = 1; u <= n_; ++u) {
    for (int v = u + 1; v <= n_; ++v) {
      if (at(u, v) != 0) result.emplace_back(u, v);
    }
  }
  return result;
}

std::string WeightedGraph::canonical_bytes() const {
  std::string bytes = std::to_string(n_);
  bytes += ':';
  for (int u = 1; u <= n_; ++u) {
    for (int v = u + 1; v <= n_; ++v) {
      bytes += to_string(at(u, v));
      bytes += ',';
    }
  }
  return bytes;
}

}  // namespace cvgraph
