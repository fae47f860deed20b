#include "cvgraph/pauli.hpp"

#include <stdexcept>

#include "cvgraph/rules.hpp"

namespace cvgraph {

namespace {

void check_same_modes(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("mode count mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b));
  }
}

void check_mode_index(int mode, int n) {
  if (mode < 1 || mode > n) {
    throw std::invalid_argument("mode " + std::to_string(mode) +
                                " out of range 1.." + std::to_string(n));
  }
}

}  // namespace

PauliElement::PauliElement(int n, std::vector<Rational> s,
                           std::vector<Rational> t, Rational phase)
    : n_(n), s_(std::move(s)), t_(std::move(t)), phase_(std::move(phase)) {}

PauliElement PauliElement::identity(int mode_count) {
  if (mode_count < 1) throw std::invalid_argument("mode count must be >= 1");
  return PauliElement(mode_count, std::vector<Rational>(mode_count),
                      std::vector<Rational>(mode_count), Rational(0));
}

PauliElement PauliElement::x_translation(int mode_count, int mode, Rational s) {
  PauliElement e = identity(mode_count);
  check_mode_index(mode, mode_count);
  e.s_[mode - 1] = std::move(s);
  return e;
}

PauliElement PauliElement::z_translation(int mode_count, int mode, Rational t) {
  PauliElement e = identity(mode_count);
  check_mode_index(mode, mode_count);
  e.t_[mode - 1] = std::move(t);
  return e;
}

PauliElement PauliElement::phase_factor(int mode_count, Rational phi) {
  PauliElement e = identity(mode_count);
  e.phase_ = std::move(phi);
  return e;
}

const Rational& PauliElement::x_param(int mode) const {
  check_mode_index(mode, n_);
  return s_[mode - 1];
}

const Rational& PauliElement::z_param(int mode) const {
  check_mode_index(mode, n_);
  return t_[mode - 1];
}

bool PauliElement::is_identity() const {
  if (phase_ != 0) return false;
  for (int j = 0; j < n_; ++j) {
    if (s_[j] != 0 || t_[j] != 0) return false;
  }
  return true;
}

PauliElement PauliElement::operator*(const PauliElement& rhs) const {
  check_same_modes(n_, rhs.n_);
  // Z(tP)X(sP) * Z(tQ)X(sQ): moving X(sP) across Z(tQ) mode by mode costs
  // e^{-i sP.tQ}.
  Rational phase = phase_ + rhs.phase_;
  for (int j = 0; j < n_; ++j) {
    phase -= s_[j] * rhs.t_[j];
  }
  std::vector<Rational> s(n_), t(n_);
  for (int j = 0; j < n_; ++j) {
    s[j] = s_[j] + rhs.s_[j];
    t[j] = t_[j] + rhs.t_[j];
  }
  return PauliElement(n_, std::move(s), std::move(t), std::move(phase));
}

PauliElement PauliElement::inverse() const {
  // Negating the translations leaves the residual phase -phi - sP.tP.
  Rational phase = -phase_;
  std::vector<Rational> s(n_), t(n_);
  for (int j = 0; j < n_; ++j) {
    s[j] = -s_[j];
    t[j] = -t_[j];
    phase -= s_[j] * t_[j];
  }
  return PauliElement(n_, std::move(s), std::move(t), std::move(phase));
}

std::string PauliElement::to_string() const {
  std::string out = "exp(i " + cvgraph::to_string(phase_) + ")";
  bool any = false;
  for (int j = 0; j < n_; ++j) {
    if (t_[j] != 0) {
      out += " Z" + std::to_string(j + 1) + "(" + cvgraph::to_string(t_[j]) + ")";
      any = true;
    }
  }
  for (int j = 0; j < n_; ++j) {
    if (s_[j] != 0) {
      out += " X" + std::to_string(j + 1) + "(" + cvgraph::to_string(s_[j]) + ")";
      any = true;
    }
  }
  if (!any) out += " I";
  return out;
}

std::optional<int> Nullifier::graph_form_vertex() const {
  int unit = 0;
  for (int j = 0; j < mode_count; ++j) {
    if (p_coeff[j] == 0) continue;
    if (p_coeff[j] != 1 || unit != 0) return std::nullopt;
    unit = j + 1;
  }
  if (unit == 0) return std::nullopt;
  if (x_coeff[unit - 1] != 0) return std::nullopt;
  return unit;
}

std::string Nullifier::to_string() const {
  std::string out;
  for (int j = 0; j < mode_count; ++j) {
    if (p_coeff[j] != 0) {
      out += (out.empty() ? "" : " + ") + cvgraph::to_string(p_coeff[j]) + "*p" +
             std::to_string(j + 1);
    }
  }
  for (int j = 0; j < mode_count; ++j) {
    if (x_coeff[j] != 0) {
      out += (out.empty() ? "" : " + ") + cvgraph::to_string(x_coeff[j]) + "*x" +
             std::to_string(j + 1);
    }
  }
  return out.empty() ? "0" : out;
}

Nullifier stabilizer_generator(const WeightedGraph& g, int a) {
  g.check_vertex(a);
  const int n = g.vertex_count();
  Nullifier f{n, std::vector<Rational>(n), std::vector<Rational>(n)};
  f.p_coeff[a - 1] = 1;
  for (int v = 1; v <= n; ++v) {
    f.x_coeff[v - 1] = -g.weight(a, v);
  }
  return f;
}

PauliElement nullifier_to_pauli(const Nullifier& g, const Rational& xi) {
  auto a = g.graph_form_vertex();
  if (!a) {
    throw std::invalid_argument("nullifier is not in graph-normal form: " +
                                g.to_string());
  }
  // exp[-i xi (p_a + sum_b cx_b x_b)] splits exactly into
  // X_a(xi) prod_b Z_b(-cx_b xi): the only same-mode pair would be (x_a, p_a)
  // and cx_a = 0, so no reordering phase arises.
  PauliElement e = PauliElement::x_translation(g.mode_count, *a, xi);
  PauliElement z = PauliElement::identity(g.mode_count);
  for (int b = 1; b <= g.mode_count; ++b) {
    if (g.x_coeff[b - 1] != 0) {
      z = z * PauliElement::z_translation(g.mode_count, b,
                                          -g.x_coeff[b - 1] * xi);
    }
  }
  return z * e;
}

namespace {

// Conjugate of a single Z_m(t) factor.
PauliElement conjugate_z_factor(const GaussianGate& gate, int n, int m,
                                const Rational& t) {
  return std::visit(
      [&](const auto& g) -> PauliElement {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, PhaseZGate>) {
          return PauliElement::z_translation(n, m, t);
        } else if constexpr (std::is_same_v<T, PhaseXGate>) {
          if (g.mode != m) return PauliElement::z_translation(n, m, t);
          // Z(t) -> e^{-i t^2 eta/2} X(-t eta) Z(t)
          return PauliElement::phase_factor(n, -t * t * g.eta / 2) *
                 PauliElement::x_translation(n, m, -t * g.eta) *
                 PauliElement::z_translation(n, m, t);
        } else if constexpr (std::is_same_v<T, FourierGate>) {
          if (g.mode != m) return PauliElement::z_translation(n, m, t);
          return PauliElement::x_translation(n, m, -t);
        } else if constexpr (std::is_same_v<T, FourierSquaredGate>) {
          return PauliElement::z_translation(n, m, g.mode == m ? -t : t);
        } else if constexpr (std::is_same_v<T, ScaleGate>) {
          return PauliElement::z_translation(n, m,
                                             g.mode == m ? g.lambda * t : t);
        } else if constexpr (std::is_same_v<T, ControlledZGate>) {
          return PauliElement::z_translation(n, m, t);
        } else if constexpr (std::is_same_v<T, PauliXGate>) {
          // X(u) Z(t) X(-u) = e^{-i u t} Z(t)
          if (g.mode != m) return PauliElement::z_translation(n, m, t);
          return PauliElement::phase_factor(n, -g.s * t) *
                 PauliElement::z_translation(n, m, t);
        } else if constexpr (std::is_same_v<T, PauliZGate>) {
          return PauliElement::z_translation(n, m, t);
        } else {
          throw std::invalid_argument(
              "local-Gaussian gate must be expanded against a graph before "
              "conjugation");
        }
      },
      gate);
}

// Conjugate of a single X_m(s) factor.
PauliElement conjugate_x_factor(const GaussianGate& gate, int n, int m,
                                const Rational& s) {
  return std::visit(
      [&](const auto& g) -> PauliElement {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, PhaseZGate>) {
          if (g.mode != m) return PauliElement::x_translation(n, m, s);
          // X(s) -> e^{-i s^2 eta/2} Z(s eta) X(s)
          return PauliElement::phase_factor(n, -s * s * g.eta / 2) *
                 PauliElement::z_translation(n, m, s * g.eta) *
                 PauliElement::x_translation(n, m, s);
        } else if constexpr (std::is_same_v<T, PhaseXGate>) {
          return PauliElement::x_translation(n, m, s);
        } else if constexpr (std::is_same_v<T, FourierGate>) {
          if (g.mode != m) return PauliElement::x_translation(n, m, s);
          return PauliElement::z_translation(n, m, s);
        } else if constexpr (std::is_same_v<T, FourierSquaredGate>) {
          return PauliElement::x_translation(n, m, g.mode == m ? -s : s);
        } else if constexpr (std::is_same_v<T, ScaleGate>) {
          return PauliElement::x_translation(n, m,
                                             g.mode == m ? s / g.lambda : s);
        } else if constexpr (std::is_same_v<T, ControlledZGate>) {
          if (g.mode1 == m) {
            return PauliElement::x_translation(n, m, s) *
                   PauliElement::z_translation(n, g.mode2, g.omega * s);
          }
          if (g.mode2 == m) {
            return PauliElement::x_translation(n, m, s) *
                   PauliElement::z_translation(n, g.mode1, g.omega * s);
          }
          return PauliElement::x_translation(n, m, s);
        } else if constexpr (std::is_same_v<T, PauliXGate>) {
          return PauliElement::x_translation(n, m, s);
        } else if constexpr (std::is_same_v<T, PauliZGate>) {
          // Z(u) X(s) Z(-u) = e^{i u s} X(s)
          if (g.mode != m) return PauliElement::x_translation(n, m, s);
          return PauliElement::phase_factor(n, g.t * s) *
                 PauliElement::x_translation(n, m, s);
        } else {
          throw std::invalid_argument(
              "local-Gaussian gate must be expanded against a graph before "
              "conjugation");
        }
      },
      gate);
}

}  // namespace

PauliElement conjugate_pauli(const GaussianGate& gate, const PauliElement& p) {
  const int n = p.mode_count();
  validate_gate(gate, n);
  // Conjugation is a homomorphism; conjugate each normal-form factor in
  // order and let the product restore normal form exactly.
  PauliElement out = PauliElement::phase_factor(n, p.phase());
  for (int m = 1; m <= n; ++m) {
    if (p.z_param(m) != 0) {
      out = out * conjugate_z_factor(gate, n, m, p.z_param(m));
    }
  }
  for (int m = 1; m <= n; ++m) {
    if (p.x_param(m) != 0) {
      out = out * conjugate_x_factor(gate, n, m, p.x_param(m));
    }
  }
  return out;
}

PauliElement conjugate_pauli(const GaussianGate& gate, const PauliElement& p,
                             const WeightedGraph& graph_context) {
  if (const auto* lg = std::get_if<LocalGaussianGate>(&gate)) {
    auto gates = expand_local_gaussian(graph_context, lg->pivot, lg->delta);
    return conjugate_pauli(gates, p);
  }
  return conjugate_pauli(gate, p);
}

PauliElement conjugate_pauli(std::span<const GaussianGate> gates,
                             const PauliElement& p) {
  PauliElement out = p;
  for (const auto& gate : gates) {
    out = conjugate_pauli(gate, out);
  }
  return out;
}

TransportReport verify_stabilizer_transport(const WeightedGraph& g, int a,
                                            const Rational& delta,
                                            const Rational& xi) {
  const WeightedGraph transformed = apply_lg_rule(g, a, delta);
  const auto gates = expand_local_gaussian(g, a, delta);

  for (int v = 1; v <= g.vertex_count(); ++v) {
    PauliElement moved =
        conjugate_pauli(gates, nullifier_to_pauli(stabilizer_generator(g, v), xi));
    if (v != a) {
      Rational correction = -g.weight(a, v) * delta * xi;
      moved = moved * nullifier_to_pauli(stabilizer_generator(transformed, a),
                                         correction);
    }
    PauliElement expected =
        nullifier_to_pauli(stabilizer_generator(transformed, v), xi);
    if (moved != expected) {
      return TransportReport{
          false, v,
          "vertex " + std::to_string(v) + ": transported " + moved.to_string() +
              " != expected " + expected.to_string()};
    }
  }
  return TransportReport{};
}

}  // namespace cvgraph
