// SPDX-License-Identifier: MIT

#pragma once

#include "qutil/circuit.hpp"
#include "qutil/gates.hpp"

namespace qutil {

/// Checks that no gate acts on more than two qubits. The gate set has no
/// wider kinds, so a valid circuit passes through unchanged.
[[nodiscard]] Circuit initialize(const Circuit& c);

/// Replaces every instruction by its basis template on the same operands.
[[nodiscard]] Circuit translate(const Circuit& c, const BasisSet& basis);

struct OptimizeReport {
  std::size_t rounds = 0;
  std::size_t removed = 0;
  /// Set by passes that add two-qubit gates; triggers re-routing.
  bool inserted_two_qubit = false;
};

/// Removes adjacent gate/inverse pairs, including pairs exposed by earlier
/// removals. Returns the number of removed instructions.
std::size_t cancel_inverse_pairs(Circuit& c);

/// Re-synthesizes maximal runs of one-qubit gates when the Euler form is
/// shorter. Identity runs disappear.
std::size_t fuse_one_qubit_runs(Circuit& c, const BasisSet& basis);

/// Cancels CX pairs on the same (control, target) whose intervening gates
/// all commute with them (diagonal gates on the control, X-axis gates on the
/// target, CX sharing only the control or only the target).
std::size_t cancel_commuting_cx(Circuit& c);

/**
 * Level 0: identity.
 * Level 1: one round of inverse-pair cancellation and one-qubit fusion.
 * Level 2: inverse-pair, commuting-CX and fusion rounds until a fixpoint
 *          (at most 10 rounds).
 * Level 3: as level 2 with up to 100 rounds.
 *
 * No pass adds two-qubit gates or touches a qubit that had no gate.
 */
[[nodiscard]] Circuit optimize(const Circuit& c, int level,
                               const BasisSet& basis,
                               OptimizeReport* report = nullptr);

} // namespace qutil
