#include "cvgraph/gates.hpp"

#include <stdexcept>

namespace cvgraph {

namespace {

void check_mode(int mode, int n) {
  if (mode < 1 || mode > n) {
    throw std::invalid_argument("mode " + std::to_string(mode) +
                                " out of range 1.." + std::to_string(n));
  }
}

}  // namespace

void validate_gate(const GaussianGate& gate, int mode_count) {
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ControlledZGate>) {
          check_mode(g.mode1, mode_count);
          check_mode(g.mode2, mode_count);
          if (g.mode1 == g.mode2) {
            throw std::invalid_argument("controlled-Z needs distinct modes");
          }
        } else if constexpr (std::is_same_v<T, ScaleGate>) {
          check_mode(g.mode, mode_count);
          if (g.lambda <= 0) {
            throw std::invalid_argument("scale factor must be positive");
          }
        } else if constexpr (std::is_same_v<T, LocalGaussianGate>) {
          check_mode(g.pivot, mode_count);
        } else {
          check_mode(g.mode, mode_count);
        }
      },
      gate);
}

std::vector<GaussianGate> expand_local_gaussian(const WeightedGraph& g,
                                                int pivot,
                                                const Rational& delta) {
  g.check_vertex(pivot);
  std::vector<GaussianGate> gates;
  gates.push_back(PhaseXGate{pivot, -delta});
  for (int b : g.neighborhood(pivot)) {
    Rational w = g.weight(pivot, b);
    gates.push_back(PhaseZGate{b, w * w * delta});
  }
  return gates;
}

std::string gate_to_string(const GaussianGate& gate) {
  return std::visit(
      [](const auto& g) -> std::string {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, PhaseZGate>) {
          return "P" + std::to_string(g.mode) + "(" + to_string(g.eta) + ")";
        } else if constexpr (std::is_same_v<T, PhaseXGate>) {
          return "PX" + std::to_string(g.mode) + "(" + to_string(g.eta) + ")";
        } else if constexpr (std::is_same_v<T, FourierGate>) {
          return "F" + std::to_string(g.mode);
        } else if constexpr (std::is_same_v<T, FourierSquaredGate>) {
          return "F2_" + std::to_string(g.mode);
        } else if constexpr (std::is_same_v<T, ScaleGate>) {
          return "S" + std::to_string(g.mode) + "(" + to_string(g.lambda) + ")";
        } else if constexpr (std::is_same_v<T, ControlledZGate>) {
          return "CZ" + std::to_string(g.mode1) + "," + std::to_string(g.mode2) +
                 "(" + to_string(g.omega) + ")";
        } else if constexpr (std::is_same_v<T, PauliXGate>) {
          return "X" + std::to_string(g.mode) + "(" + to_string(g.s) + ")";
        } else if constexpr (std::is_same_v<T, PauliZGate>) {
          return "Z" + std::to_string(g.mode) + "(" + to_string(g.t) + ")";
        } else {
          return "ULG" + std::to_string(g.pivot) + "(" + to_string(g.delta) + ")";
        }
      },
      gate);
}

}  // namespace cvgraph
