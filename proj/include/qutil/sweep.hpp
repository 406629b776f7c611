// SPDX-License-Identifier: MIT

#pragma once

#include "qutil/architecture.hpp"
#include "qutil/circuit.hpp"
#include "qutil/generator.hpp"
#include "qutil/transpiler/transpile.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qutil {

struct SweepConfig {
  std::vector<ArchitectureSpec> architectures;
  std::vector<std::uint32_t> qubits;
  std::vector<std::uint32_t> depths;
  std::vector<GateRatio> ratios;
  std::vector<int> opt_levels;
  std::vector<LayoutMethod> layouts;
  /// Generation and transpilation seed multiplicities; each group gets
  /// mg * mt runs, each with a fresh seed pair.
  std::uint32_t mg = 1;
  std::uint32_t mt = 1;
  std::uint64_t global_seed = 0;
  bool trivial_first = true;
  bool use_vf2 = true;
  bool trivial_sabre_trial = false;
  SabreOptions sabre;

  /// Throws ConfigError.
  void validate() const;
  [[nodiscard]] std::size_t runs_per_group() const noexcept {
    return static_cast<std::size_t>(mg) * mt;
  }
  /// Stable digest of every field that influences results.
  [[nodiscard]] std::uint64_t fingerprint() const;
};

struct ParameterSet {
  std::size_t arch_index = 0;
  GenerationConfig gen;
  TranspileConfig trans;
  std::size_t ordinal = 0;
  std::uint64_t sweep_fingerprint = 0;
};

/**
 * Expands the grid. Architectures are expanded one at a time, each from its
 * own stream seeded with derive_seed(global_seed, arch_index). Within an
 * architecture the loops run q, d, r, O, L outermost to innermost with the
 * repetition index innermost; every repetition draws G_S then T_S from the
 * stream. A pair already used anywhere in the sweep is redrawn.
 */
[[nodiscard]] std::vector<ParameterSet> expand_parameters(const SweepConfig& cfg);

/// Generates, transpiles and hardware-checks one parameter set, returning
/// the active physical qubits. Throws InvariantViolation on a bad result.
[[nodiscard]] ActiveSet evaluate(const ParameterSet& p, const SweepConfig& cfg);

struct GroupKey {
  std::string arch;
  std::uint32_t q = 0;
  std::uint32_t d = 0;
  GateRatio r;
  int O = 0;
  LayoutMethod L = LayoutMethod::Trivial;

  friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

struct GroupStats {
  /// Active-run count per physical qubit.
  std::vector<std::uint64_t> active;
  /// Successful runs in the group.
  std::uint64_t total = 0;

  [[nodiscard]] double utilization(Qubit q) const {
    return total == 0 ? 0.0
                      : static_cast<double>(active[q]) / static_cast<double>(total);
  }
  friend bool operator==(const GroupStats&, const GroupStats&) = default;
};

using UtilizationTable = std::map<GroupKey, GroupStats>;

struct EvaluationRecord {
  ParameterSet params;
  ActiveSet active;
};

/// Folds results into per-group counts. Order of `results` does not matter.
/// Throws ConsistencyError on mixed sweeps or repeated ordinals.
[[nodiscard]] UtilizationTable aggregate(const std::vector<EvaluationRecord>& results,
                                         const SweepConfig& cfg);

struct Failure {
  std::size_t ordinal = 0;
  std::string message;
};

struct SweepOutcome {
  UtilizationTable table;
  std::vector<Failure> failures;
  std::size_t evaluations = 0;
  double seconds = 0;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/**
 * Expands, evaluates on `workers` threads and aggregates. Workers claim
 * ordinals from a shared counter and write into a slot per ordinal, so the
 * table does not depend on scheduling. A failed evaluation is retried once
 * and then recorded.
 */
[[nodiscard]] SweepOutcome run_sweep(const SweepConfig& cfg, std::size_t workers,
                                     const ProgressFn& progress = {});

/// Run manifest: seed, grids, multiplicities, per-group counts, failures.
[[nodiscard]] nlohmann::json manifest(const SweepConfig& cfg,
                                      const SweepOutcome& outcome);

} // namespace qutil
