// SPDX-License-Identifier: MIT

#include "qutil/architecture.hpp"
#include "qutil/errors.hpp"
#include "qutil/generator.hpp"
#include "qutil/transpiler/passes.hpp"
#include "qutil/transpiler/transpile.hpp"
#include "qutil/verifier.hpp"

#include <gtest/gtest.h>

using namespace qutil;

TEST(Verifier, HadamardPairIsIdentity) {
  Circuit c(1);
  c.append(GateKind::H, {0});
  c.append(GateKind::H, {0});
  EXPECT_LT((unitary(c) - MatrixX::Identity(2, 2)).norm(), 1e-12);
}

TEST(Verifier, QubitOrderConvention) {
  // Qubit 0 is the least significant bit: CX(0,1) flips bit 1 when bit 0 is set.
  Circuit c(2);
  c.append(GateKind::CX, {0, 1});
  const MatrixX u = unitary(c);
  EXPECT_EQ(u(3, 1), Complex(1));
  EXPECT_EQ(u(1, 3), Complex(1));
  EXPECT_EQ(u(0, 0), Complex(1));
  EXPECT_EQ(u(2, 2), Complex(1));
  // With operands reversed the textbook matrix appears.
  Circuit r(2);
  r.append(GateKind::CX, {1, 0});
  EXPECT_LT((unitary(r) - matrix(GateKind::CX, Angles{})).norm(), 1e-12);
  // X on qubit 0 of a 3-qubit register maps |000> to |001>.
  Circuit x(3);
  x.append(GateKind::X, {0});
  EXPECT_EQ(unitary(x)(1, 0), Complex(1));
}

TEST(Verifier, SwapMatchesTemplate) {
  Circuit c(2);
  c.append(GateKind::SWAP, {0, 1});
  EXPECT_LT(phase_aligned_distance(unitary(c), unitary(translate(c, falcon_basis()))),
            1e-12);
}

TEST(Verifier, Multiplicative) {
  const auto c = generate({3, 6, GateRatio{1, 1}, 4});
  for (std::size_t split = 0; split <= c.size(); split += 3) {
    Circuit a(3);
    Circuit b(3);
    for (std::size_t i = 0; i < c.size(); ++i) {
      (i < split ? a : b).append(c[i]);
    }
    EXPECT_LT((unitary(b) * unitary(a) - unitary(c)).norm(), 1e-10);
  }
}

TEST(Verifier, WidthCap) {
  EXPECT_THROW((void)unitary(Circuit(9)), CapacityError);
}

TEST(Verifier, UnitaryIsUnitary) {
  const auto u = unitary(generate({4, 10, GateRatio{1, 1}, 8}));
  EXPECT_LT((u.adjoint() * u - MatrixX::Identity(16, 16)).norm(), 1e-10);
}

TEST(Verifier, IdentityTranspile) {
  Circuit c(2);
  c.append(GateKind::Rz, {0}, {0.2});
  c.append(GateKind::CX, {0, 1});
  TranspileConfig cfg;
  cfg.optimization_level = 0;
  const auto r = transpile(c, line(2), cfg);
  const auto eq = equivalent(c, r);
  EXPECT_TRUE(eq.equivalent);
  EXPECT_LT(eq.deviation, 1e-12);
}

TEST(Verifier, RoutedLineThree) {
  Circuit c(3);
  c.append(GateKind::H, {0});
  c.append(GateKind::CX, {0, 2});
  TranspileConfig cfg;
  cfg.optimization_level = 0;
  cfg.layout = LayoutMethod::Trivial;
  cfg.use_vf2 = false;
  const auto r = transpile(c, line(3), cfg);
  EXPECT_EQ(r.swaps, 1U);
  EXPECT_TRUE(equivalent(c, r).equivalent);
}

TEST(Verifier, DetectsCorruption) {
  const auto c = generate({3, 6, GateRatio{1, 1}, 12});
  TranspileConfig cfg;
  auto r = transpile(c, line(3), cfg);
  ASSERT_TRUE(equivalent(c, r).equivalent);
  Circuit dropped(r.circuit.width());
  for (std::size_t i = 0; i + 1 < r.circuit.size(); ++i) {
    dropped.append(r.circuit[i]);
  }
  r.circuit = dropped;
  EXPECT_FALSE(equivalent(c, r).equivalent);
}

class PipelineEquivalence
    : public ::testing::TestWithParam<std::tuple<int, LayoutMethod>> {};

TEST_P(PipelineEquivalence, LineAndFalconSubgraphs) {
  const auto [level, method] = GetParam();
  const auto falcon = falcon_r4();
  // Induced falcon pieces of up to 8 qubits: a path, a T junction, a bridge.
  const std::vector<ArchitectureSpec> pieces{
      induced_subgraph(falcon, {0, 1, 2, 3, 4}, "falcon-path5"),
      induced_subgraph(falcon, {1, 2, 3, 4, 5, 7, 8}, "falcon-t7"),
      induced_subgraph(falcon, {8, 11, 14, 13, 12, 10, 7, 16}, "falcon-ring8"),
  };
  Rng rng(static_cast<std::uint64_t>(level) * 10 + static_cast<std::uint64_t>(method));
  for (int trial = 0; trial < 24; ++trial) {
    const auto q = static_cast<std::uint32_t>(2 + rng.below(4));
    const auto d = static_cast<std::uint32_t>(1 + rng.below(8));
    const GateRatio ratio{static_cast<std::uint32_t>(1 + rng.below(4)),
                          static_cast<std::uint32_t>(1 + rng.below(4))};
    const auto c = generate({q, d, ratio, rng.next()});
    const ArchitectureSpec arch =
        trial % 2 == 0 ? line(q) : pieces[static_cast<std::size_t>(trial / 2) % 3];
    TranspileConfig cfg;
    cfg.optimization_level = level;
    cfg.layout = method;
    cfg.seed = rng.next();
    const auto r = transpile(c, arch, cfg);
    check_hardware_invariants(r.circuit, arch);
    const auto eq = equivalent(c, r);
    EXPECT_TRUE(eq.equivalent) << "deviation " << eq.deviation << " on " << arch.name
                               << "\n" << to_text(c);
    const auto probe = probe_equivalent(c, r, 20, 3);
    EXPECT_TRUE(probe.equivalent) << probe.deviation;
  }
}

INSTANTIATE_TEST_SUITE_P(
    Grid, PipelineEquivalence,
    ::testing::Combine(::testing::Values(0, 1, 2, 3),
                       ::testing::Values(LayoutMethod::Trivial, LayoutMethod::Dense,
                                         LayoutMethod::Sabre)));

TEST(Verifier, ProbeOnFullFalcon) {
  const auto falcon = falcon_r4();
  const auto c = generate({6, 12, GateRatio{1, 1}, 31});
  TranspileConfig cfg;
  cfg.optimization_level = 2;
  const auto r = transpile(c, falcon, cfg);
  const auto eq = probe_equivalent(c, r, 20, 1);
  EXPECT_TRUE(eq.equivalent) << eq.deviation;
}
