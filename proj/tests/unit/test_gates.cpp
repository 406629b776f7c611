// SPDX-License-Identifier: MIT

#include "qutil/errors.hpp"
#include "qutil/gates.hpp"
#include "qutil/random.hpp"

#include <gtest/gtest.h>
#include <unsupported/Eigen/KroneckerProduct>

#include <numbers>

using namespace qutil;

namespace {

constexpr double kPi = std::numbers::pi;

Angles random_angles(GateKind kind, Rng& rng) {
  Angles a;
  for (int i = 0; i < param_count(kind); ++i) {
    a.push_back((rng.uniform() * 2 - 1) * 2 * kPi);
  }
  return a;
}

Matrix4 swap_ops(const Matrix4& m) {
  Matrix4 p = Matrix4::Zero();
  p(0, 0) = p(1, 2) = p(2, 1) = p(3, 3) = 1;
  return p * m * p;
}

MatrixX template_unitary(const Template& t, int arity) {
  const auto dim = static_cast<Eigen::Index>(1) << arity;
  MatrixX u = MatrixX::Identity(dim, dim);
  for (const auto& g : t) {
    MatrixX step;
    if (qutil::arity(g.kind) == 1) {
      const Matrix2 m = matrix1(g.kind, g.params);
      if (arity == 1) {
        step = m;
      } else if (g.slots[0] == 0) {
        step = Eigen::kroneckerProduct(m, Matrix2::Identity());
      } else {
        step = Eigen::kroneckerProduct(Matrix2::Identity(), m);
      }
    } else {
      const Matrix4 m = matrix2(g.kind, g.params);
      step = g.slots[0] == 0 ? m : swap_ops(m);
    }
    u = step * u;
  }
  return u;
}

bool is_unitary(const MatrixX& m) {
  return (m.adjoint() * m - MatrixX::Identity(m.rows(), m.cols())).norm() < 1e-10;
}

} // namespace

TEST(Gates, Catalogue) {
  EXPECT_EQ(one_qubit_kinds().size(), 17U);
  EXPECT_EQ(two_qubit_kinds().size(), 22U);
  EXPECT_EQ(all_kinds().size(), kGateKindCount);
  EXPECT_EQ(param_count(GateKind::U), 3);
  EXPECT_EQ(param_count(GateKind::CU), 4);
  EXPECT_EQ(param_count(GateKind::R), 2);
  EXPECT_EQ(param_count(GateKind::RxxMinusYy), 2);
  EXPECT_EQ(param_count(GateKind::H), 0);
  EXPECT_EQ(kind_from_name("cx"), GateKind::CX);
  EXPECT_EQ(kind_from_name("Rxx-yy"), GateKind::RxxMinusYy);
  EXPECT_FALSE(kind_from_name("ccx").has_value());
}

TEST(Gates, ParameterCountChecked) {
  const std::array<double, 1> one{0.5};
  EXPECT_THROW((void)matrix(GateKind::H, one), ParameterArityError);
  EXPECT_THROW((void)matrix(GateKind::Rz, std::span<const double>()),
               ParameterArityError);
}

TEST(Gates, AllMatricesUnitary) {
  Rng rng(7);
  for (const auto kind : all_kinds()) {
    for (int trial = 0; trial < 5; ++trial) {
      EXPECT_TRUE(is_unitary(matrix(kind, random_angles(kind, rng))))
          << name(kind);
    }
  }
}

TEST(Gates, KnownMatrices) {
  const Complex i(0, 1);
  const MatrixX cx = matrix(GateKind::CX, Angles{});
  EXPECT_EQ(cx(2, 3), Complex(1));
  EXPECT_EQ(cx(0, 0), Complex(1));
  Matrix2 sx;
  sx << Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.5, -0.5),
      Complex(0.5, 0.5);
  EXPECT_LT((matrix1(GateKind::SX, {}) - sx).norm(), 1e-12);
  Matrix2 rz;
  rz << std::exp(-i * 0.35), 0, 0, std::exp(i * 0.35);
  EXPECT_LT((matrix1(GateKind::Rz, {0.7}) - rz).norm(), 1e-12);
  // iSWAP maps |01> to i|10>.
  EXPECT_LT(std::abs(matrix2(GateKind::iSWAP, {})(2, 1) - i), 1e-12);
  // ECR = (X (x) I - Y (x) X)/sqrt2 with operand 0 as the first factor.
  Matrix2 x;
  x << 0, 1, 1, 0;
  Matrix2 y;
  y << 0, -i, i, 0;
  const Matrix4 ecr = (Eigen::kroneckerProduct(x, Matrix2::Identity()) -
                       Eigen::kroneckerProduct(y, x).eval()) /
                      std::sqrt(2.0);
  EXPECT_LT((matrix2(GateKind::ECR, {}) - ecr).norm(), 1e-12);
}

TEST(Gates, InverseIsAdjoint) {
  Rng rng(11);
  for (const auto kind : all_kinds()) {
    for (int trial = 0; trial < 5; ++trial) {
      const Angles a = random_angles(kind, rng);
      const auto inv = inverse_of(kind, a);
      MatrixX m = matrix(inv.kind, inv.params);
      if (inv.reverse_operands) {
        m = swap_ops(m);
      }
      EXPECT_LT((m * matrix(kind, a) -
                 MatrixX::Identity(m.rows(), m.cols()))
                    .norm(),
                1e-10)
          << name(kind);
    }
  }
}

class TemplateEquivalence : public ::testing::TestWithParam<int> {};

TEST_P(TemplateEquivalence, AllKindsMatchUpToPhase) {
  const std::array<BasisSet, 4> bases{
      falcon_basis(),
      BasisSet{GateKind::CZ, GateKind::Rz, GateKind::SX, GateKind::X},
      BasisSet{GateKind::CX, GateKind::U},
      BasisSet{GateKind::CX, GateKind::Rz, GateKind::Ry},
  };
  const auto& basis = bases[static_cast<std::size_t>(GetParam())];
  Rng rng(100 + GetParam());
  for (const auto kind : all_kinds()) {
    for (int trial = 0; trial < 20; ++trial) {
      Angles a = random_angles(kind, rng);
      if (trial < 4 && !a.empty()) {
        // special angles hit the short Euler paths
        const double special[] = {0.0, kPi / 2, kPi, -kPi / 2};
        a[0] = special[trial];
      }
      const Template t = translate_template(kind, a, basis);
      for (const auto& g : t) {
        EXPECT_TRUE(basis.contains(g.kind))
            << name(kind) << " produced " << name(g.kind);
      }
      const double err =
          phase_aligned_distance(template_unitary(t, arity(kind)), matrix(kind, a));
      EXPECT_LT(err, 1e-9) << name(kind) << " trial " << trial;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Bases, TemplateEquivalence, ::testing::Range(0, 4));

TEST(Gates, TwoQubitTemplatesUseFewEntanglers) {
  Rng rng(3);
  for (const auto kind : two_qubit_kinds()) {
    const auto t = translate_template(kind, random_angles(kind, rng), falcon_basis());
    std::size_t cx = 0;
    for (const auto& g : t) {
      cx += g.kind == GateKind::CX ? 1 : 0;
    }
    EXPECT_LE(cx, 3U) << name(kind);
  }
}

TEST(Gates, Synthesis) {
  EXPECT_TRUE(synthesize_1q(Matrix2::Identity(), falcon_basis()).empty());
  EXPECT_TRUE(
      synthesize_1q(Complex(0, 1) * Matrix2::Identity(), falcon_basis()).empty());
  const auto z = synthesize_1q(matrix1(GateKind::Rz, {0.3}), falcon_basis());
  ASSERT_EQ(z.size(), 1U);
  EXPECT_EQ(z[0].kind, GateKind::Rz);
  const auto h = synthesize_1q(matrix1(GateKind::H, {}), falcon_basis());
  EXPECT_EQ(h.size(), 3U);
  EXPECT_THROW((void)synthesize_1q(matrix1(GateKind::H, {}),
                                   BasisSet{GateKind::CX, GateKind::Rz}),
               UnsupportedTranslationError);
}

TEST(Gates, WrapAngle) {
  EXPECT_NEAR(wrap_angle(3 * kPi), kPi, 1e-12);
  EXPECT_NEAR(wrap_angle(-kPi), kPi, 1e-12);
  EXPECT_NEAR(wrap_angle(0.25), 0.25, 1e-15);
}

TEST(Random, Reproducible) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.next(), b.next());
  }
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  Rng c(9);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(c.below(7), 7U);
  }
}
