#include "cvgraph/symplectic.hpp"

#include <stdexcept>

namespace cvgraph {

namespace {

// Index of x_m / p_m in the quadrature ordering, modes 1-based.
int x_index(int mode, int /*n*/) { return mode - 1; }
int p_index(int mode, int n) { return n + mode - 1; }

}  // namespace

SymplecticMatrix gate_symplectic(const GaussianGate& gate, int mode_count) {
  validate_gate(gate, mode_count);
  const int n = mode_count;
  SymplecticMatrix s{n, RationalMatrix::identity(2 * n)};
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, PhaseZGate>) {
          // p_m -> p_m - eta x_m
          s.m.at(p_index(g.mode, n), x_index(g.mode, n)) = -g.eta;
        } else if constexpr (std::is_same_v<T, PhaseXGate>) {
          // x_m -> x_m + eta p_m
          s.m.at(x_index(g.mode, n), p_index(g.mode, n)) = g.eta;
        } else if constexpr (std::is_same_v<T, FourierGate>) {
          // x_m -> p_m, p_m -> -x_m
          s.m.at(x_index(g.mode, n), x_index(g.mode, n)) = 0;
          s.m.at(x_index(g.mode, n), p_index(g.mode, n)) = 1;
          s.m.at(p_index(g.mode, n), x_index(g.mode, n)) = -1;
          s.m.at(p_index(g.mode, n), p_index(g.mode, n)) = 0;
        } else if constexpr (std::is_same_v<T, FourierSquaredGate>) {
          s.m.at(x_index(g.mode, n), x_index(g.mode, n)) = -1;
          s.m.at(p_index(g.mode, n), p_index(g.mode, n)) = -1;
        } else if constexpr (std::is_same_v<T, ScaleGate>) {
          // x_m -> lambda x_m, p_m -> p_m / lambda
          s.m.at(x_index(g.mode, n), x_index(g.mode, n)) = g.lambda;
          s.m.at(p_index(g.mode, n), p_index(g.mode, n)) = 1 / g.lambda;
        } else if constexpr (std::is_same_v<T, ControlledZGate>) {
          // p_1 -> p_1 - omega x_2 and symmetrically; matches the
          // preparation convention that coupling the edgeless state with
          // strength omega yields nullifiers p - A x with A_12 = omega.
          s.m.at(p_index(g.mode1, n), x_index(g.mode2, n)) = -g.omega;
          s.m.at(p_index(g.mode2, n), x_index(g.mode1, n)) = -g.omega;
        } else if constexpr (std::is_same_v<T, PauliXGate> ||
                             std::is_same_v<T, PauliZGate>) {
          // translations: identity on the linear representation
        } else {
          throw std::invalid_argument(
              "local-Gaussian gate must be expanded against a graph before "
              "building its symplectic matrix");
        }
      },
      gate);
  return s;
}

SymplecticMatrix compose_symplectic(std::span<const GaussianGate> gates,
                                    int mode_count) {
  SymplecticMatrix out{mode_count, RationalMatrix::identity(2 * mode_count)};
  for (const auto& gate : gates) {
    out.m = out.m * gate_symplectic(gate, mode_count).m;
  }
  return out;
}

RationalMatrix symplectic_form(int mode_count) {
  const int n = mode_count;
  RationalMatrix j(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j.at(i, n + i) = 1;
    j.at(n + i, i) = -1;
  }
  return j;
}

bool is_symplectic(const SymplecticMatrix& s) {
  const RationalMatrix j = symplectic_form(s.mode_count);
  return s.m.transpose() * j * s.m == j;
}

NullifierMatrix graph_nullifier_matrix(const WeightedGraph& g) {
  const int n = g.vertex_count();
  NullifierMatrix nm{n, RationalMatrix(n, 2 * n)};
  for (int v = 1; v <= n; ++v) {
    for (int u = 1; u <= n; ++u) {
      nm.rows.at(v - 1, u - 1) = -g.weight(v, u);
    }
    nm.rows.at(v - 1, n + v - 1) = 1;
  }
  return nm;
}

NullifierMatrix transport(const NullifierMatrix& nm,
                          std::span<const GaussianGate> gates) {
  NullifierMatrix out = nm;
  out.rows = nm.rows * compose_symplectic(gates, nm.mode_count).m;
  return out;
}

GraphRecovery recover_graph(const NullifierMatrix& nm) {
  const int n = nm.mode_count;
  if (nm.rows.rank() < n) {
    throw std::invalid_argument("nullifier matrix has dependent rows");
  }
  RationalMatrix mx(n, n), mp(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      mx.at(r, c) = nm.rows.at(r, c);
      mp.at(r, c) = nm.rows.at(r, n + c);
    }
  }
  auto mp_inv = mp.inverse();
  if (!mp_inv) {
    return NotGraphForm{NotGraphForm::Reason::SingularPBlock,
                        "p-block is singular"};
  }
  RationalMatrix a = *mp_inv * mx;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      a.at(r, c) = -a.at(r, c);
    }
  }
  for (int r = 0; r < n; ++r) {
    if (a.at(r, r) != 0) {
      return NotGraphForm{NotGraphForm::Reason::NonzeroDiagonal,
                          "recovered matrix has nonzero diagonal at vertex " +
                              std::to_string(r + 1)};
    }
    for (int c = r + 1; c < n; ++c) {
      if (a.at(r, c) != a.at(c, r)) {
        return NotGraphForm{NotGraphForm::Reason::Asymmetric,
                            "recovered matrix is asymmetric at (" +
                                std::to_string(r + 1) + "," +
                                std::to_string(c + 1) + ")"};
      }
    }
  }
  std::vector<Rational> weights;
  weights.reserve(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      weights.push_back(a.at(r, c));
    }
  }
  return WeightedGraph::from_weight_matrix(n, std::move(weights));
}

}  // namespace cvgraph
