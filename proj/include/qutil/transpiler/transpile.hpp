// SPDX-License-Identifier: MIT

#pragma once

#include "qutil/architecture.hpp"
#include "qutil/circuit.hpp"
#include "qutil/transpiler/layout.hpp"
#include "qutil/transpiler/routing.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qutil {

enum class LayoutMethod : std::uint8_t { Trivial, Dense, Sabre };

[[nodiscard]] std::string_view to_string(LayoutMethod method) noexcept;
/// Throws ConfigError.
[[nodiscard]] LayoutMethod parse_layout_method(std::string_view text);

/// Which stage ended up choosing the initial layout.
enum class LayoutSource : std::uint8_t { Trivial, Vf2, Dense, Sabre };

[[nodiscard]] std::string_view to_string(LayoutSource source) noexcept;

struct TranspileConfig {
  int optimization_level = 1;
  LayoutMethod layout = LayoutMethod::Sabre;
  std::uint64_t seed = 0;
  /// At levels <= 1, accept the trivial layout first when it is perfect.
  bool trivial_first = true;
  /// Try a perfect VF2 embedding before the configured layout method.
  bool use_vf2 = true;
  std::size_t vf2_node_limit = 10000;
  /// At levels <= 1, SABRE layout also runs a trial seeded with the trivial
  /// layout (SabreOptions::trivial_start).
  bool trivial_sabre_trial = false;
  SabreOptions sabre;

  /// Throws ConfigError.
  void validate() const;

  friend bool operator==(const TranspileConfig&, const TranspileConfig&) = default;
};

struct StageMetrics {
  std::string stage;
  std::size_t gates = 0;
  std::size_t two_qubit_gates = 0;
  std::size_t depth = 0;
};

struct TranspileResult {
  Circuit circuit;
  Layout initial_layout;
  Layout final_layout;
  LayoutSource layout_source = LayoutSource::Trivial;
  std::size_t swaps = 0;
  std::vector<StageMetrics> stage_metrics;
};

/**
 * initialize -> layout -> routing -> translation -> optimization.
 *
 * Layout selection: at levels <= 1 (when trivial_first is on) the trivial
 * layout is accepted if it is perfect; otherwise a VF2 embedding is tried
 * (when use_vf2 is on); otherwise the configured method runs. Dense and
 * trivial layouts are repaired by SABRE routing; SABRE layout routes as part
 * of the search. A pure function of (circuit, arch, cfg).
 */
[[nodiscard]] TranspileResult transpile(const Circuit& c,
                                        const ArchitectureSpec& arch,
                                        const TranspileConfig& cfg);

/// Throws InvariantViolation when a two-qubit gate acts on an uncoupled
/// pair or a kind is outside the basis.
void check_hardware_invariants(const Circuit& c, const ArchitectureSpec& arch);

} // namespace qutil
