#include <doctest.h>

#include <random>
#include <vector>

#include "cvgraph/pauli.hpp"
#include "cvgraph/rules.hpp"
#include "test_support.hpp"

using namespace cvgraph;
using cvgraph::test::five_vertex_example;
using cvgraph::test::random_graph;
using cvgraph::test::random_pauli;
using cvgraph::test::random_rational;

namespace {

PauliElement conj_fourier_inverse(int mode, const PauliElement& p) {
  // F has period 4 on translation parameters, so F^-1 acts as F^3.
  PauliElement out = p;
  for (int i = 0; i < 3; ++i) {
    out = conjugate_pauli(FourierGate{mode}, out);
  }
  return out;
}

}  // namespace

TEST_SUITE("pauli_algebra") {

TEST_CASE("product reorders X across Z with the commutation phase") {
  // X(1) * Z(1) = e^{-i} Z(1) X(1)
  PauliElement x = PauliElement::x_translation(1, 1, 1);
  PauliElement z = PauliElement::z_translation(1, 1, 1);
  PauliElement prod = x * z;
  CHECK(prod.x_param(1) == 1);
  CHECK(prod.z_param(1) == 1);
  CHECK(prod.phase() == -1);

  // Z(t) X(s) is already in normal form: no phase.
  CHECK((z * x).phase() == 0);

  SUBCASE("phases of the two orders differ by exactly -s*t") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
      Rational s = random_rational(rng), t = random_rational(rng);
      PauliElement xs = PauliElement::x_translation(3, 2, s);
      PauliElement zt = PauliElement::z_translation(3, 2, t);
      CHECK((xs * zt).phase() - (zt * xs).phase() == -s * t);
    }
  }
}

TEST_CASE("identity is two-sided and multiplication is associative") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    int n = 1 + static_cast<int>(rng() % 4);
    PauliElement p = random_pauli(rng, n);
    CHECK(p * PauliElement::identity(n) == p);
    CHECK(PauliElement::identity(n) * p == p);
    PauliElement q = random_pauli(rng, n), r = random_pauli(rng, n);
    CHECK((p * q) * r == p * (q * r));
  }
  CHECK_THROWS_AS(PauliElement::identity(2) * PauliElement::identity(3),
                  std::invalid_argument);
}

TEST_CASE("inverse is two-sided including phase") {
  CHECK(PauliElement::identity(2).inverse() == PauliElement::identity(2));
  CHECK(PauliElement::x_translation(1, 1, 5).inverse() ==
        PauliElement::x_translation(1, 1, -5));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    int n = 1 + static_cast<int>(rng() % 4);
    PauliElement p = random_pauli(rng, n);
    CHECK(p * p.inverse() == PauliElement::identity(n));
    CHECK(p.inverse() * p == PauliElement::identity(n));
  }
}

TEST_CASE("frozen single-gate conjugations") {
  const int n = 2;
  SUBCASE("phase-Z gate on an X translation") {
    // eta=1 on X_1(2): prefactor e^{-i s^2 eta / 2} = e^{-2i}, Z(s eta) = Z(2)
    PauliElement r =
        conjugate_pauli(PhaseZGate{1, 1}, PauliElement::x_translation(n, 1, 2));
    CHECK(r.x_param(1) == 2);
    CHECK(r.z_param(1) == 2);
    CHECK(r.phase() == -2);
    CHECK(conjugate_pauli(PhaseZGate{1, 1},
                          PauliElement::z_translation(n, 1, 2)) ==
          PauliElement::z_translation(n, 1, 2));
  }
  SUBCASE("phase-X gate on a Z translation") {
    // eta=3 on Z_1(2): e^{-i t^2 eta/2} X(-t eta) Z(t); in normal form the
    // reordering flips the phase sign: e^{+6i} Z(2) X(-6).
    PauliElement r =
        conjugate_pauli(PhaseXGate{1, 3}, PauliElement::z_translation(n, 1, 2));
    CHECK(r.z_param(1) == 2);
    CHECK(r.x_param(1) == -6);
    CHECK(r.phase() == 6);
  }
  SUBCASE("fourier and its square") {
    PauliElement x = PauliElement::x_translation(n, 1, 2);
    PauliElement z = PauliElement::z_translation(n, 1, 2);
    CHECK(conjugate_pauli(FourierGate{1}, x) ==
          PauliElement::z_translation(n, 1, 2));
    CHECK(conjugate_pauli(FourierGate{1}, z) ==
          PauliElement::x_translation(n, 1, -2));
    CHECK(conjugate_pauli(FourierSquaredGate{1}, x) ==
          PauliElement::x_translation(n, 1, -2));
    CHECK(conjugate_pauli(FourierSquaredGate{1}, z) ==
          PauliElement::z_translation(n, 1, -2));
  }
  SUBCASE("scale maps X(s) -> X(s/lambda), Z(t) -> Z(lambda t)") {
    ScaleGate s{1, Rational(2, 3)};
    CHECK(conjugate_pauli(s, PauliElement::x_translation(n, 1, 2)) ==
          PauliElement::x_translation(n, 1, 3));
    CHECK(conjugate_pauli(s, PauliElement::z_translation(n, 1, 2)) ==
          PauliElement::z_translation(n, 1, Rational(4, 3)));
    CHECK_THROWS_AS(
        conjugate_pauli(ScaleGate{1, Rational(0)}, PauliElement::identity(n)),
        std::invalid_argument);
  }
  SUBCASE("controlled-Z attaches a Z on the partner mode") {
    ControlledZGate cz{1, 2, 3};
    PauliElement r = conjugate_pauli(cz, PauliElement::x_translation(n, 1, 2));
    CHECK(r == PauliElement::z_translation(n, 2, 6) *
                   PauliElement::x_translation(n, 1, 2));
    CHECK(r.phase() == 0);
    r = conjugate_pauli(cz, PauliElement::x_translation(n, 2, 2));
    CHECK(r.z_param(1) == 6);
    CHECK(conjugate_pauli(cz, PauliElement::z_translation(n, 1, 5)) ==
          PauliElement::z_translation(n, 1, 5));
    CHECK_THROWS_AS(conjugate_pauli(ControlledZGate{1, 1, 1},
                                    PauliElement::identity(n)),
                    std::invalid_argument);
  }
  SUBCASE("pauli translations contribute only phase") {
    CHECK(conjugate_pauli(PauliXGate{1, 3},
                          PauliElement::z_translation(n, 1, 2)) ==
          PauliElement::phase_factor(n, -6) *
              PauliElement::z_translation(n, 1, 2));
    CHECK(conjugate_pauli(PauliZGate{1, 3},
                          PauliElement::x_translation(n, 1, 2)) ==
          PauliElement::phase_factor(n, 6) *
              PauliElement::x_translation(n, 1, 2));
    CHECK(conjugate_pauli(PauliXGate{1, 3},
                          PauliElement::x_translation(n, 1, 2)) ==
          PauliElement::x_translation(n, 1, 2));
  }
  SUBCASE("every gate fixes the identity") {
    std::vector<GaussianGate> gates = {
        PhaseZGate{1, 2},       PhaseXGate{2, Rational(-1, 2)},
        FourierGate{1},         FourierSquaredGate{2},
        ScaleGate{1, 3},        ControlledZGate{1, 2, Rational(5, 7)},
        PauliXGate{2, 1},       PauliZGate{1, -4}};
    for (const auto& g : gates) {
      CHECK(conjugate_pauli(g, PauliElement::identity(n)) ==
            PauliElement::identity(n));
    }
  }
  SUBCASE("unexpanded local-Gaussian is rejected without a graph") {
    CHECK_THROWS_AS(conjugate_pauli(LocalGaussianGate{1, 1},
                                    PauliElement::identity(n)),
                    std::invalid_argument);
  }
}

TEST_CASE("fourier-squared conjugation is an involution") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    int n = 1 + static_cast<int>(rng() % 4);
    PauliElement p = random_pauli(rng, n);
    int mode = 1 + static_cast<int>(rng() % n);
    PauliElement once = conjugate_pauli(FourierSquaredGate{mode}, p);
    CHECK(conjugate_pauli(FourierSquaredGate{mode}, once) == p);
  }
}

TEST_CASE("conjugation is a homomorphism for every gate tag") {
  std::mt19937_64 rng(4);
  const int n = 3;
  for (int i = 0; i < 50; ++i) {
    std::vector<GaussianGate> gates = {
        PhaseZGate{1 + static_cast<int>(rng() % n), random_rational(rng)},
        PhaseXGate{1 + static_cast<int>(rng() % n), random_rational(rng)},
        FourierGate{1 + static_cast<int>(rng() % n)},
        FourierSquaredGate{1 + static_cast<int>(rng() % n)},
        ScaleGate{1 + static_cast<int>(rng() % n),
                  cvgraph::test::random_positive_rational(rng)},
        ControlledZGate{1, 2, random_rational(rng)},
        PauliXGate{1 + static_cast<int>(rng() % n), random_rational(rng)},
        PauliZGate{1 + static_cast<int>(rng() % n), random_rational(rng)}};
    PauliElement p = random_pauli(rng, n), q = random_pauli(rng, n);
    for (const auto& g : gates) {
      CHECK(conjugate_pauli(g, p * q) ==
            conjugate_pauli(g, p) * conjugate_pauli(g, q));
    }
  }
}

TEST_CASE("phase-X conjugation equals F . phase-Z . F^-1") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    int n = 1 + static_cast<int>(rng() % 3);
    int mode = 1 + static_cast<int>(rng() % n);
    Rational eta = random_rational(rng);
    PauliElement p = random_pauli(rng, n);
    PauliElement direct = conjugate_pauli(PhaseXGate{mode, eta}, p);
    PauliElement routed = conjugate_pauli(
        FourierGate{mode},
        conjugate_pauli(PhaseZGate{mode, eta}, conj_fourier_inverse(mode, p)));
    CHECK(direct == routed);
  }
}

TEST_CASE("stabilizer generators read off the weight rows") {
  WeightedGraph g = five_vertex_example();
  Nullifier g2 = stabilizer_generator(g, 2);
  CHECK(g2.p_coeff == std::vector<Rational>{0, 1, 0, 0, 0});
  CHECK(g2.x_coeff == std::vector<Rational>{-1, 0, 0, 0, -1});

  Nullifier isolated = stabilizer_generator(WeightedGraph(3), 2);
  CHECK(isolated.p_coeff == std::vector<Rational>{0, 1, 0});
  CHECK(isolated.x_coeff == std::vector<Rational>{0, 0, 0});

  WeightedGraph pair = WeightedGraph(2).set_edge(1, 2, Rational(5, 3));
  Nullifier g1 = stabilizer_generator(pair, 1);
  CHECK(g1.x_coeff == std::vector<Rational>{0, Rational(-5, 3)});
  CHECK(g1.graph_form_vertex() == 1);

  CHECK_THROWS_AS(stabilizer_generator(g, 6), std::invalid_argument);
}

TEST_CASE("nullifier exponentials have zero normal-form phase") {
  WeightedGraph pair = WeightedGraph(2).set_edge(1, 2, Rational(5, 3));
  PauliElement e = nullifier_to_pauli(stabilizer_generator(pair, 1), 1);
  CHECK(e == PauliElement::z_translation(2, 2, Rational(5, 3)) *
                 PauliElement::x_translation(2, 1, 1));
  CHECK(e.phase() == 0);

  CHECK(nullifier_to_pauli(stabilizer_generator(pair, 1), 0) ==
        PauliElement::identity(2));

  WeightedGraph g = five_vertex_example();
  Rational xi(7, 3);
  PauliElement g1 = nullifier_to_pauli(stabilizer_generator(g, 1), xi);
  CHECK(g1.x_param(1) == xi);
  CHECK(g1.z_param(2) == xi);
  CHECK(g1.z_param(3) == 2 * xi);
  CHECK(g1.z_param(5) == 3 * xi);
  CHECK(g1.z_param(4) == 0);
  CHECK(g1.phase() == 0);

  SUBCASE("non graph-normal nullifiers are rejected") {
    Nullifier bad{2, {Rational(0), Rational(0)}, {Rational(2), Rational(0)}};
    CHECK_THROWS_AS(nullifier_to_pauli(bad, 1), std::invalid_argument);
    Nullifier two_units{2, {Rational(0), Rational(0)}, {Rational(1), Rational(1)}};
    CHECK_THROWS_AS(nullifier_to_pauli(two_units, 1), std::invalid_argument);
    Nullifier diag{2, {Rational(1), Rational(0)}, {Rational(1), Rational(0)}};
    CHECK_THROWS_AS(nullifier_to_pauli(diag, 1), std::invalid_argument);
  }
}

TEST_CASE("stabilizer generators of one graph commute exactly") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    int n = 2 + static_cast<int>(rng() % 5);
    WeightedGraph g = random_graph(rng, n);
    Rational xi = random_rational(rng), xi2 = random_rational(rng);
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        PauliElement gu = nullifier_to_pauli(stabilizer_generator(g, u), xi);
        PauliElement gv = nullifier_to_pauli(stabilizer_generator(g, v), xi2);
        CHECK(gu * gv == gv * gu);
      }
    }
  }
}

TEST_CASE("local-Gaussian expansion") {
  WeightedGraph g = five_vertex_example();
  Rational delta(3, 7);
  auto gates = expand_local_gaussian(g, 1, delta);
  REQUIRE(gates.size() == 4);
  CHECK(gates[0] == GaussianGate{PhaseXGate{1, -delta}});
  CHECK(gates[1] == GaussianGate{PhaseZGate{2, delta}});        // 1^2 delta
  CHECK(gates[2] == GaussianGate{PhaseZGate{3, 4 * delta}});    // 2^2 delta
  CHECK(gates[3] == GaussianGate{PhaseZGate{5, 9 * delta}});    // 3^2 delta

  auto isolated = expand_local_gaussian(WeightedGraph(4), 3, delta);
  REQUIRE(isolated.size() == 1);
  CHECK(isolated[0] == GaussianGate{PhaseXGate{3, -delta}});

  auto zero = expand_local_gaussian(g, 1, 0);
  CHECK(zero[0] == GaussianGate{PhaseXGate{1, 0}});
  CHECK(zero[1] == GaussianGate{PhaseZGate{2, 0}});

  SUBCASE("composite conjugation via graph context matches the expansion") {
    std::mt19937_64 rng(8);
    PauliElement p = random_pauli(rng, 5);
    CHECK(conjugate_pauli(GaussianGate{LocalGaussianGate{1, delta}}, p, g) ==
          conjugate_pauli(std::span<const GaussianGate>(gates), p));
  }
}

TEST_CASE("stabilizer transport replays the rewrite exactly") {
  WeightedGraph g = five_vertex_example();
  Rational delta(3, 5), xi(7, 3);

  TransportReport report = verify_stabilizer_transport(g, 1, delta, xi);
  CHECK(report.ok);
  CHECK(report.detail.empty());

  SUBCASE("the pivot generator is verbatim invariant under the composite") {
    auto gates = expand_local_gaussian(g, 1, delta);
    PauliElement pivot = nullifier_to_pauli(stabilizer_generator(g, 1), xi);
    CHECK(conjugate_pauli(std::span<const GaussianGate>(gates), pivot) == pivot);
  }

  SUBCASE("delta = 0 transports every generator to itself") {
    CHECK(verify_stabilizer_transport(g, 2, 0, xi).ok);
    auto gates = expand_local_gaussian(g, 2, Rational(0));
    for (int v = 1; v <= 5; ++v) {
      PauliElement e = nullifier_to_pauli(stabilizer_generator(g, v), xi);
      CHECK(conjugate_pauli(std::span<const GaussianGate>(gates), e) == e);
    }
  }

  SUBCASE("the correction generator is load-bearing") {
    // Without multiplying in G'_a(-w(a,v) delta xi) the transported
    // neighbor generator keeps stray factors on the pivot mode.
    auto gates = expand_local_gaussian(g, 1, delta);
    WeightedGraph moved = apply_lg_rule(g, 1, delta);
    PauliElement transported = conjugate_pauli(
        std::span<const GaussianGate>(gates),
        nullifier_to_pauli(stabilizer_generator(g, 2), xi));
    CHECK(transported != nullifier_to_pauli(stabilizer_generator(moved, 2), xi));
  }

  SUBCASE("randomized graphs, pivots, and parameters") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
      int n = 2 + static_cast<int>(rng() % 5);
      WeightedGraph h = random_graph(rng, n);
      int pivot = 1 + static_cast<int>(rng() % n);
      TransportReport r = verify_stabilizer_transport(
          h, pivot, random_rational(rng), random_rational(rng));
      CHECK(r.ok);
    }
  }
}

TEST_CASE("debug rendering") {
  PauliElement e = PauliElement::phase_factor(2, -2) *
                   PauliElement::z_translation(2, 1, 2) *
                   PauliElement::x_translation(2, 1, 2);
  CHECK(e.to_string() == "exp(i -2) Z1(2) X1(2)");
  CHECK(PauliElement::identity(1).to_string() == "exp(i 0) I");
}

}  // TEST_SUITE
