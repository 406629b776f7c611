// SPDX-License-Identifier: MIT

#pragma once

#include "qutil/circuit.hpp"
#include "qutil/gates.hpp"
#include "qutil/transpiler/transpile.hpp"

#include <cstdint>
#include <vector>

namespace qutil {

/// Largest width unitary() accepts.
inline constexpr std::size_t kMaxUnitaryWidth = 8;
/// Largest compressed width the statevector probe accepts.
inline constexpr std::size_t kMaxProbeWidth = 22;

using StateVector = Eigen::VectorXcd;

/**
 * Qubit order: qubit k is bit k of the basis index (little-endian), so
 * qubit 0 is the fastest-varying tensor axis. A two-qubit gate matrix is
 * written with operand 0 as its high local bit, so CX on (0,1) maps
 * |q1 q0> = |01> to |11>.
 */
void apply(const Instruction& instr, StateVector& state);
/// Applies to every column of `m`.
void apply(const Instruction& instr, MatrixX& m);

/// Throws CapacityError above kMaxUnitaryWidth qubits.
[[nodiscard]] MatrixX unitary(const Circuit& c);

[[nodiscard]] StateVector simulate(const Circuit& c, const StateVector& input);

struct Equivalence {
  bool equivalent = false;
  double deviation = 0;
  /// Physical qubits kept after compression, ascending.
  std::vector<Qubit> support;
};

/**
 * Checks P_final^dagger U_result P_initial = U_original (x) I up to global
 * phase. The physical circuit is first restricted to its active qubits plus
 * the initial and final images of the data qubits; ancillas inside that set
 * must come back untouched. Throws CapacityError when the restricted width
 * exceeds kMaxUnitaryWidth.
 */
[[nodiscard]] Equivalence equivalent(const Circuit& original,
                                     const TranspileResult& result,
                                     double tol = 1e-9);

/**
 * Statevector form of equivalent() for wider circuits: runs `probes` random
 * computational basis inputs (ancillas in |0>) through both circuits and
 * compares the outputs after the final permutation, with one shared global
 * phase.
 */
[[nodiscard]] Equivalence probe_equivalent(const Circuit& original,
                                           const TranspileResult& result,
                                           std::size_t probes, std::uint64_t seed,
                                           double tol = 1e-9);

} // namespace qutil

namespace qutil {

struct SuiteReport {
  std::size_t circuits = 0;
  /// Circuit/configuration pairs checked (circuits x opt levels x layouts).
  std::size_t checks = 0;
  std::size_t passed = 0;
  double worst_deviation = 0;
  /// One line per failed check.
  std::vector<std::string> failures;
};

/**
 * Random pipeline check. Each circuit has 2..max_width qubits, depth 1..8 and
 * a ratio drawn from {4:1, 1:1, 1:4}; it targets line(q) or a connected
 * falcon-r4 piece of at most eight qubits, alternately, and is transpiled at
 * every level in `levels` with every layout method, each result checked with
 * equivalent().
 */
[[nodiscard]] SuiteReport verify_suite(std::size_t max_width, std::size_t circuits,
                                       std::uint64_t seed,
                                       const std::vector<int>& levels = {0, 1, 2, 3},
                                       double tol = 1e-9);

} // namespace qutil
