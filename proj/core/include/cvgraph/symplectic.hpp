#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cvgraph/gates.hpp"
#include "cvgraph/rational_matrix.hpp"
#include "cvgraph/weighted_graph.hpp"

namespace cvgraph {

// Independent verification engine. Quadratures are ordered
// (x_1..x_n, p_1..p_n); a gate U defines the matrix S by
//     U r_i U^-1 = sum_j S[i][j] r_j,
// so a linear form with coefficient row c transports to c*S. Gate lists are
// applied left to right, i.e. the composite of [g1, g2] is S1*S2 acting on
// rows from the right.

/// 2n x 2n exact-rational matrix satisfying m^T J m = J with
/// J = [[0, I], [-I, 0]].
struct SymplecticMatrix {
  int mode_count = 0;
  RationalMatrix m;

  bool operator==(const SymplecticMatrix&) const = default;
};

/// n x 2n matrix whose v-th row holds the coefficients of the v-th
/// nullifier. A graph state's matrix is [-A | I] for weight matrix A.
struct NullifierMatrix {
  int mode_count = 0;
  RationalMatrix rows;

  bool operator==(const NullifierMatrix&) const = default;
};

/// Why a transported nullifier matrix no longer describes a weighted graph.
struct NotGraphForm {
  enum class Reason { SingularPBlock, Asymmetric, NonzeroDiagonal };
  Reason reason;
  std::string message;
};

using GraphRecovery = std::variant<WeightedGraph, NotGraphForm>;

/// The symplectic representation of one gate. Pauli translations map to the
/// identity (their action is affine; the linear part is trivial).
/// LocalGaussianGate is rejected: expand it against a graph first.
SymplecticMatrix gate_symplectic(const GaussianGate& gate, int mode_count);

/// Product of the gate matrices in list order (row-vector composition).
SymplecticMatrix compose_symplectic(std::span<const GaussianGate> gates,
                                    int mode_count);

/// The standard form J = [[0, I], [-I, 0]].
RationalMatrix symplectic_form(int mode_count);

bool is_symplectic(const SymplecticMatrix& s);

/// Rows [-A | I] for the graph's weight matrix A.
NullifierMatrix graph_nullifier_matrix(const WeightedGraph& g);

/// Conjugates every nullifier row by the gate sequence.
NullifierMatrix transport(const NullifierMatrix& nm,
                          std::span<const GaussianGate> gates);

/// Row-reduces [M_x | M_p]: with M_p invertible and A = -M_p^-1 M_x
/// symmetric with zero diagonal, the graph with weights A comes back;
/// otherwise NotGraphForm says which condition failed. Dependent rows are a
/// std::invalid_argument (the input was not a valid nullifier matrix).
GraphRecovery recover_graph(const NullifierMatrix& nm);

}  // namespace cvgraph
