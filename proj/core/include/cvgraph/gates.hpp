#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cvgraph/rational.hpp"
#include "cvgraph/weighted_graph.hpp"

namespace cvgraph {

// Gate set closed under conjugation of translation operators. Heisenberg
// convention throughout: a gate U sends an operator R to U R U^-1.

/// exp[i(eta/2) x^2]: fixes x, sends p -> p - eta*x.
struct PhaseZGate {
  int mode;
  Rational eta;
  bool operator==(const PhaseZGate&) const = default;
};

/// exp[i(eta/2) p^2]: sends x -> x + eta*p, fixes p.
struct PhaseXGate {
  int mode;
  Rational eta;
  bool operator==(const PhaseXGate&) const = default;
};

/// Quarter rotation: x -> p, p -> -x.
struct FourierGate {
  int mode;
  bool operator==(const FourierGate&) const = default;
};

/// Half rotation: x -> -x, p -> -p.
struct FourierSquaredGate {
  int mode;
  bool operator==(const FourierSquaredGate&) const = default;
};

/// Squeezing by a positive rational factor: x -> lambda*x, p -> p/lambda.
struct ScaleGate {
  int mode;
  Rational lambda;
  bool operator==(const ScaleGate&) const = default;
};

/// exp[i omega x_1 x_2]: p_1 -> p_1 - omega*x_2, p_2 -> p_2 - omega*x_1.
struct ControlledZGate {
  int mode1;
  int mode2;
  Rational omega;
  bool operator==(const ControlledZGate&) const = default;
};

/// Position translation exp[-i s p]; acts trivially on the linear
/// symplectic representation and contributes only phases under conjugation.
struct PauliXGate {
  int mode;
  Rational s;
  bool operator==(const PauliXGate&) const = default;
};

/// Momentum translation exp[i t x].
struct PauliZGate {
  int mode;
  Rational t;
  bool operator==(const PauliZGate&) const = default;
};

/// Composite local-Gaussian operation at a pivot vertex. Has no intrinsic
/// action: it expands against a graph via expand_local_gaussian.
struct LocalGaussianGate {
  int pivot;
  Rational delta;
  bool operator==(const LocalGaussianGate&) const = default;
};

using GaussianGate =
    std::variant<PhaseZGate, PhaseXGate, FourierGate, FourierSquaredGate,
                 ScaleGate, ControlledZGate, PauliXGate, PauliZGate,
                 LocalGaussianGate>;

/// Validates mode ranges against n, lambda > 0, and distinct ControlledZ
/// modes. Throws std::invalid_argument on violation.
void validate_gate(const GaussianGate& gate, int mode_count);

/// Expansion of the local-Gaussian composite at `pivot`:
///   [PhaseX(pivot, -delta)] then [PhaseZ(b, w(pivot,b)^2 * delta)]
/// for each neighbor b in ascending order. All factors commute.
std::vector<GaussianGate> expand_local_gaussian(const WeightedGraph& g,
                                                int pivot,
                                                const Rational& delta);

std::string gate_to_string(const GaussianGate& gate);

}  // namespace cvgraph
