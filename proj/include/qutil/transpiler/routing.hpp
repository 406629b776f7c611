// SPDX-License-Identifier: MIT

#pragma once

#include "qutil/architecture.hpp"
#include "qutil/circuit.hpp"
#include "qutil/transpiler/layout.hpp"

#include <cstdint>

namespace qutil {

/// SABRE constants. Defaults follow the published heuristic.
struct SabreOptions {
  std::size_t extended_set_size = 20;
  double extended_set_weight = 0.5;
  double decay_increment = 0.001;
  /// Decay values reset after this many consecutive SWAPs.
  std::size_t decay_reset = 5;
  std::size_t layout_trials = 4;
  /// Forward/backward refinement rounds per layout trial.
  std::size_t iterations = 3;
  /// Also start one extra trial from the trivial layout (virtual i on
  /// physical i). It runs first, so it wins ties.
  bool trivial_start = false;

  friend bool operator==(const SabreOptions&, const SabreOptions&) = default;
};

struct RoutingResult {
  /// Physical circuit of width arch.size(); original gates plus SWAPs.
  Circuit circuit;
  Layout initial_layout;
  Layout final_layout;
  std::size_t swaps = 0;
};

/**
 * Inserts SWAPs so that every two-qubit gate acts on a coupled pair.
 *
 * The layout is completed with ancillas first, so SWAPs may move data through
 * physical qubits the circuit never used. Swap candidates are scored by the
 * mean front-layer distance plus the weighted mean extended-set distance,
 * scaled by the larger decay factor of the two qubits; ties are broken with
 * the seeded generator. After 8*n swaps without progress the closest front
 * gate is routed along a shortest path, which bounds the total number of
 * inserted SWAPs.
 */
[[nodiscard]] RoutingResult sabre_route(const Circuit& c, const Layout& layout,
                                        const ArchitectureSpec& arch,
                                        std::uint64_t seed,
                                        const SabreOptions& options = {});

/**
 * Bidirectional SABRE layout search.
 *
 * Each trial starts from a random bijection, refines it with `iterations`
 * forward/backward routing rounds, and is scored by the SWAP count of a final
 * forward pass. The trial with the fewest SWAPs wins (lowest trial index on
 * ties); the returned circuit is already routed.
 */
[[nodiscard]] RoutingResult sabre_layout(const Circuit& c,
                                         const ArchitectureSpec& arch,
                                         std::uint64_t seed,
                                         const SabreOptions& options = {});

} // namespace qutil
