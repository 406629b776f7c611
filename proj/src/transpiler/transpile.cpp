// SPDX-License-Identifier: MIT

#include "qutil/transpiler/transpile.hpp"

#include "qutil/errors.hpp"
#include "qutil/transpiler/passes.hpp"

namespace qutil {

std::string_view to_string(LayoutMethod method) noexcept {
  switch (method) {
  case LayoutMethod::Trivial:
    return "trivial";
  case LayoutMethod::Dense:
    return "dense";
  case LayoutMethod::Sabre:
    return "sabre";
  }
  return "?";
}

LayoutMethod parse_layout_method(std::string_view text) {
  if (text == "trivial") {
    return LayoutMethod::Trivial;
  }
  if (text == "dense") {
    return LayoutMethod::Dense;
  }
  if (text == "sabre") {
    return LayoutMethod::Sabre;
  }
  throw ConfigError("unknown layout method '" + std::string(text) +
                    "' (expected trivial, dense or sabre)");
}

std::string_view to_string(LayoutSource source) noexcept {
  switch (source) {
  case LayoutSource::Trivial:
    return "trivial";
  case LayoutSource::Vf2:
    return "vf2";
  case LayoutSource::Dense:
    return "dense";
  case LayoutSource::Sabre:
    return "sabre";
  }
  return "?";
}

void TranspileConfig::validate() const {
  if (optimization_level < 0 || optimization_level > 3) {
    throw ConfigError("optimization level must be 0..3, got " +
                      std::to_string(optimization_level));
  }
  if (sabre.layout_trials == 0 || sabre.decay_reset == 0) {
    throw ConfigError("SABRE needs at least one trial and a decay reset >= 1");
  }
}

namespace {

StageMetrics metrics(std::string stage, const Circuit& c) {
  return {std::move(stage), c.size(), c.count_two_qubit(), depth(c)};
}

} // namespace

TranspileResult transpile(const Circuit& input, const ArchitectureSpec& arch,
                          const TranspileConfig& cfg) {
  cfg.validate();
  if (input.width() > arch.coupling.size()) {
    throw CapacityError("circuit needs " + std::to_string(input.width()) +
                        " qubits but " + arch.name + " has " +
                        std::to_string(arch.coupling.size()));
  }
  TranspileResult result;
  const Circuit c = initialize(input);
  result.stage_metrics.push_back(metrics("initialize", c));

  std::optional<Layout> chosen;
  if (cfg.trivial_first && cfg.optimization_level <= 1) {
    auto trivial = trivial_layout(c, arch);
    if (trivial.perfect) {
      chosen = std::move(trivial.layout);
      result.layout_source = LayoutSource::Trivial;
    }
  }
  if (!chosen && cfg.use_vf2) {
    chosen = vf2_layout(c, arch, cfg.vf2_node_limit);
    if (chosen) {
      result.layout_source = LayoutSource::Vf2;
    }
  }
  SabreOptions sabre = cfg.sabre;
  if (cfg.trivial_sabre_trial && cfg.optimization_level <= 1) {
    sabre.trivial_start = true;
  }
  RoutingResult routed;
  if (chosen) {
    routed = sabre_route(c, *chosen, arch, cfg.seed, sabre);
  } else {
    switch (cfg.layout) {
    case LayoutMethod::Trivial:
      result.layout_source = LayoutSource::Trivial;
      routed = sabre_route(c, trivial_layout(c, arch).layout, arch, cfg.seed,
                           sabre);
      break;
    case LayoutMethod::Dense:
      result.layout_source = LayoutSource::Dense;
      routed = sabre_route(c, dense_layout(c, arch), arch, cfg.seed, sabre);
      break;
    case LayoutMethod::Sabre:
      result.layout_source = LayoutSource::Sabre;
      routed = sabre_layout(c, arch, cfg.seed, sabre);
      break;
    }
  }
  result.swaps = routed.swaps;
  result.initial_layout = routed.initial_layout;
  result.final_layout = routed.final_layout;
  result.stage_metrics.push_back(metrics("routing", routed.circuit));

  Circuit translated = translate(routed.circuit, arch.basis);
  result.stage_metrics.push_back(metrics("translation", translated));

  OptimizeReport report;
  Circuit optimized =
      optimize(translated, cfg.optimization_level, arch.basis, &report);
  const auto before = active_qubits(translated);
  for (const Qubit q : active_qubits(optimized)) {
    if (!before.contains(q)) {
      throw InvariantViolation("optimization activated idle qubit " +
                               std::to_string(q));
    }
  }
  if (report.inserted_two_qubit) {
    // A pass added two-qubit gates: route again from the current placement.
    auto rerouted = sabre_route(optimized,
                                Layout::identity(arch.coupling.size(),
                                                 arch.coupling.size()),
                                arch, cfg.seed, sabre);
    optimized = translate(rerouted.circuit, arch.basis);
    Layout final_layout = result.final_layout;
    std::vector<Qubit> v2p(final_layout.virtual_count());
    for (std::size_t v = 0; v < v2p.size(); ++v) {
      v2p[v] = rerouted.final_layout.physical(final_layout.physical(
          static_cast<Qubit>(v)));
    }
    result.final_layout = Layout(std::move(v2p), arch.coupling.size());
    result.swaps += rerouted.swaps;
  }
  result.stage_metrics.push_back(metrics("optimization", optimized));
  result.circuit = std::move(optimized);
  return result;
}

void check_hardware_invariants(const Circuit& c, const ArchitectureSpec& arch) {
  if (c.width() != arch.coupling.size()) {
    throw InvariantViolation("physical circuit width " + std::to_string(c.width()) +
                             " differs from " + arch.name + " size " +
                             std::to_string(arch.coupling.size()));
  }
  for (const auto& instr : c) {
    if (!arch.basis.contains(instr.kind)) {
      throw InvariantViolation(std::string(name(instr.kind)) +
                               " is not in the basis " + arch.basis.to_string());
    }
    if (instr.arity() == 2 &&
        !arch.coupling.coupled(instr.qubits[0], instr.qubits[1])) {
      throw InvariantViolation(to_string(instr) + " acts on an uncoupled pair");
    }
  }
}

} // namespace qutil
