#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvgraph/gates.hpp"
#include "cvgraph/rational.hpp"
#include "cvgraph/weighted_graph.hpp"

namespace cvgraph {

/// n-mode Pauli-group element in the normal form
///
///     e^{i phi} * Z_1(t_1)...Z_n(t_n) * X_1(s_1)...X_n(s_n)
///
/// with all Z factors left of all X factors. X(s) = exp[-i s p],
/// Z(t) = exp[i t x], and X(s)Z(t) = e^{-i s t} Z(t)X(s) fixes every
/// reordering phase. The phase exponent phi is exact and never reduced
/// modulo anything.
class PauliElement {
 public:
  static PauliElement identity(int mode_count);
  static PauliElement x_translation(int mode_count, int mode, Rational s);
  static PauliElement z_translation(int mode_count, int mode, Rational t);
  static PauliElement phase_factor(int mode_count, Rational phi);

  int mode_count() const { return n_; }
  const Rational& x_param(int mode) const;  // s_mode, 1-based
  const Rational& z_param(int mode) const;  // t_mode, 1-based
  const std::vector<Rational>& x_params() const { return s_; }
  const std::vector<Rational>& z_params() const { return t_; }
  const Rational& phase() const { return phase_; }

  bool is_identity() const;

  /// Normal-form product. Reordering X(s)Z(t) -> Z(t)X(s) on each mode
  /// contributes -s*t to the phase exponent; translations add componentwise.
  PauliElement operator*(const PauliElement& rhs) const;

  /// Two-sided group inverse, exact including phase.
  PauliElement inverse() const;

  bool operator==(const PauliElement&) const = default;

  /// Debug rendering, e.g. "exp(i -2) Z1(2) X1(2)". Not machine-parsed.
  std::string to_string() const;

 private:
  PauliElement(int n, std::vector<Rational> s, std::vector<Rational> t,
               Rational phase);

  int n_ = 0;
  std::vector<Rational> s_;  // X translation parameters
  std::vector<Rational> t_;  // Z translation parameters
  Rational phase_;           // phi in the factor e^{i phi}
};

/// Real linear form sum_j cx_j x_j + sum_j cp_j p_j in the 2n quadratures.
/// A graph's stabilizer generator for vertex a is exp[-i xi g_a] with
/// g_a = p_a - sum_b w(a,b) x_b, i.e. cp = e_a and cx = -(row a).
struct Nullifier {
  int mode_count = 0;
  std::vector<Rational> x_coeff;
  std::vector<Rational> p_coeff;

  bool operator==(const Nullifier&) const = default;

  /// The vertex a for which this is in graph-normal form (cp = e_a and
  /// cx_a = 0), or nullopt.
  std::optional<int> graph_form_vertex() const;

  std::string to_string() const;
};

/// g_a = p_a - sum_{b in N_a} w(a,b) x_b.
Nullifier stabilizer_generator(const WeightedGraph& g, int a);

/// exp[-i xi g] for a graph-normal-form nullifier g: the element
/// X_a(xi) * prod_b Z_b(-cx_b xi), which already has phase exponent 0 in
/// normal form because cx_a = 0. Throws if g is not in graph-normal form.
PauliElement nullifier_to_pauli(const Nullifier& g, const Rational& xi);

/// U P U^-1 for every concrete gate; LocalGaussianGate is rejected (expand
/// it first, or use the graph-context overload).
PauliElement conjugate_pauli(const GaussianGate& gate, const PauliElement& p);

/// As above, but LocalGaussianGate is expanded against the supplied graph.
PauliElement conjugate_pauli(const GaussianGate& gate, const PauliElement& p,
                             const WeightedGraph& graph_context);

/// Conjugates by each gate in order: P -> U_k ... U_1 P U_1^-1 ... U_k^-1.
PauliElement conjugate_pauli(std::span<const GaussianGate> gates,
                             const PauliElement& p);

/// Result of replaying the stabilizer-transport derivation for one pivot.
struct TransportReport {
  bool ok = true;
  int mismatch_vertex = 0;  // first mismatching vertex when !ok
  std::string detail;       // both elements rendered when !ok
};

/// Checks, for every vertex v, that conjugating the generator G_v(xi) of g
/// by the expanded local-Gaussian composite at pivot a — then multiplying by
/// the correction generator G_a(-w(a,v)*delta*xi) of the transformed graph
/// when v != a — reproduces the transformed graph's generator G'_v(xi)
/// exactly, phase included. The pivot's generator must come back verbatim
/// with no correction.
TransportReport verify_stabilizer_transport(const WeightedGraph& g, int a,
                                            const Rational& delta,
                                            const Rational& xi);

}  // namespace cvgraph
