// SPDX-License-Identifier: MIT

#include "qutil/circuit.hpp"
#include "qutil/errors.hpp"

#include <gtest/gtest.h>

using namespace qutil;

TEST(Circuit, AppendValidates) {
  Circuit c(2);
  EXPECT_THROW(c.append(GateKind::CX, {0, 0}), IndexError);
  EXPECT_THROW(c.append(GateKind::H, {2}), IndexError);
  EXPECT_THROW(c.append(GateKind::Rz, {0}), ParameterArityError);
  EXPECT_THROW(c.append(GateKind::H, {0, 1}), IndexError);
  c.append(GateKind::Rz, {1}, {0.5});
  EXPECT_EQ(c.size(), 1U);
}

TEST(Circuit, ComposeIsFunctional) {
  Circuit c(2);
  const auto d = compose(c, Instruction(GateKind::H, {0}));
  EXPECT_TRUE(c.empty());
  EXPECT_EQ(d.size(), 1U);
}

TEST(Circuit, Depth) {
  Circuit c(3);
  EXPECT_EQ(depth(c), 0U);
  c.append(GateKind::H, {0});
  c.append(GateKind::H, {1});
  EXPECT_EQ(depth(c), 1U);
  c.append(GateKind::CX, {0, 1});
  c.append(GateKind::X, {2});
  EXPECT_EQ(depth(c), 2U);
  c.append(GateKind::CX, {1, 2});
  EXPECT_EQ(depth(c), 3U);
}

TEST(Circuit, ActiveSetIgnoresIdleAndSlack) {
  Circuit c(4);
  c.add_slack(3, 5);
  c.append(GateKind::CX, {2, 0});
  const auto a = active_qubits(c);
  EXPECT_EQ(a.indices(), (std::vector<Qubit>{0, 2}));
  EXPECT_TRUE(a.contains(2));
  EXPECT_FALSE(a.contains(3));
  EXPECT_TRUE(active_qubits(Circuit(5)).empty());
}

TEST(Circuit, TextRoundTrip) {
  Circuit c(3);
  c.set_slack({0, 2, 1});
  c.append(GateKind::H, {0});
  c.append(GateKind::U, {2}, {0.1, -2.5, 1e-17});
  c.append(GateKind::CU, {1, 2}, {0.3, 0.4, 0.5, 0.6});
  c.append(GateKind::RxxMinusYy, {2, 0}, {1.0 / 3.0, 2.0});
  const auto text = to_text(c);
  EXPECT_EQ(from_text(text), c);
  EXPECT_EQ(to_text(from_text(text)), text);
}

TEST(Circuit, TextParsing) {
  const auto c = from_text("# demo\nqubits 2\n  h q0  # trailing\ncx q0, q1\n");
  ASSERT_EQ(c.size(), 2U);
  EXPECT_EQ(c[1].kind, GateKind::CX);
  EXPECT_EQ(c[1].qubits[1], 1U);
  EXPECT_THROW((void)from_text("H q0\n"), ConfigError);
  EXPECT_THROW((void)from_text("qubits 1\nFOO q0\n"), ConfigError);
  EXPECT_THROW((void)from_text("qubits 1\nRz q0\n"), ConfigError);
  EXPECT_THROW((void)from_text("qubits 1\nH q3\n"), ConfigError);
  EXPECT_THROW((void)from_text("qubits 2\nCX q0\n"), ConfigError);
  try {
    (void)from_text("qubits 2\nH q0\nbad line\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Circuit, Widened) {
  Circuit c(2);
  c.append(GateKind::CX, {0, 1});
  const auto w = c.widened(5);
  EXPECT_EQ(w.width(), 5U);
  EXPECT_EQ(w.slack().size(), 5U);
  EXPECT_EQ(active_qubits(w).size(), 2U);
}
