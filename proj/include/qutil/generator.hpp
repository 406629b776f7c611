// SPDX-License-Identifier: MIT

#pragma once

#include "qutil/circuit.hpp"
#include "qutil/gates.hpp"
#include "qutil/random.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qutil {

/// Target ratio of one-qubit to two-qubit gates, written `a:b`.
struct GateRatio {
  std::uint32_t one_qubit = 1;
  std::uint32_t two_qubit = 1;

  /// Parses `a:b`. Throws ConfigError.
  static GateRatio parse(std::string_view text);
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] double value() const noexcept {
    return static_cast<double>(one_qubit) / static_cast<double>(two_qubit);
  }

  friend auto operator<=>(const GateRatio&, const GateRatio&) = default;
};

struct GenerationConfig {
  std::uint32_t qubits = 1;
  std::uint32_t depth = 0;
  GateRatio ratio;
  std::uint64_t seed = 0;

  /// Throws ConfigError when the config cannot produce a circuit.
  void validate() const;

  friend bool operator==(const GenerationConfig&,
                         const GenerationConfig&) = default;
};

/// round(size * a / (a + b)) one-qubit kinds followed by the two-qubit
/// remainder, each drawn uniformly with replacement.
[[nodiscard]] std::vector<GateKind> build_gate_pool(GateRatio ratio,
                                                    std::size_t pool_size,
                                                    Rng& rng);

/**
 * Layered random circuit of width `qubits` and depth exactly `depth`.
 *
 * Each layer draws a fresh pool of `qubits` kinds at the target ratio,
 * shuffles it, and places gates on random disjoint free qubits until the
 * next gate needs more qubits than remain; that gate is discarded and the
 * idle qubits receive one step of slack. If a layer would not extend the
 * critical path, its first gate's first operand is moved onto an idle qubit
 * that ends the current longest chain. Angles are uniform in [0, 2pi).
 */
[[nodiscard]] Circuit generate(const GenerationConfig& cfg);

} // namespace qutil
