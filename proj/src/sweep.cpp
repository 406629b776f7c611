// SPDX-License-Identifier: MIT

#include "qutil/sweep.hpp"

#include "qutil/errors.hpp"
#include "qutil/random.hpp"
#include "qutil/version.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <optional>
#include <set>
#include <thread>

namespace qutil {

void SweepConfig::validate() const {
  if (architectures.empty() || qubits.empty() || depths.empty() ||
      ratios.empty() || opt_levels.empty() || layouts.empty()) {
    throw ConfigError("every sweep grid (arch, qubits, depths, ratios, "
                      "opt-levels, layouts) needs at least one value");
  }
  if (mg == 0 || mt == 0) {
    throw ConfigError("seed multiplicities must be at least 1");
  }
  for (const auto& arch : architectures) {
    for (const auto q : qubits) {
      if (q > arch.coupling.size()) {
        throw ConfigError(std::to_string(q) + " qubits do not fit on " +
                          arch.name + " (" +
                          std::to_string(arch.coupling.size()) + " qubits)");
      }
    }
  }
  for (const auto q : qubits) {
    for (const auto& r : ratios) {
      GenerationConfig{q, 1, r, 0}.validate();
    }
  }
  for (const int o : opt_levels) {
    TranspileConfig t;
    t.optimization_level = o;
    t.sabre = sabre;
    t.validate();
  }
}

std::uint64_t SweepConfig::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xFF;
      h *= 0x100000001b3ULL;
    }
  };
  auto mix_text = [&](const std::string& s) {
    mix(s.size());
    for (const char ch : s) {
      mix(static_cast<unsigned char>(ch));
    }
  };
  for (const auto& arch : architectures) {
    mix_text(arch.name);
    mix(arch.coupling.size());
    for (const auto& [a, b] : arch.coupling.edges()) {
      mix(a);
      mix(b);
    }
    mix_text(arch.basis.to_string());
  }
  for (const auto q : qubits) {
    mix(q);
  }
  mix(0xFFFF);
  for (const auto d : depths) {
    mix(d);
  }
  mix(0xFFFF);
  for (const auto& r : ratios) {
    mix(r.one_qubit);
    mix(r.two_qubit);
  }
  mix(0xFFFF);
  for (const int o : opt_levels) {
    mix(static_cast<std::uint64_t>(o));
  }
  mix(0xFFFF);
  for (const auto l : layouts) {
    mix(static_cast<std::uint64_t>(l));
  }
  mix(mg);
  mix(mt);
  mix(global_seed);
  mix(trivial_first ? 1 : 0);
  mix(use_vf2 ? 1 : 0);
  mix(trivial_sabre_trial ? 1 : 0);
  mix(sabre.extended_set_size);
  mix(std::bit_cast<std::uint64_t>(sabre.extended_set_weight));
  mix(std::bit_cast<std::uint64_t>(sabre.decay_increment));
  mix(sabre.decay_reset);
  mix(sabre.layout_trials);
  mix(sabre.iterations);
  mix(sabre.trivial_start ? 1 : 0);
  return h;
}

std::vector<ParameterSet> expand_parameters(const SweepConfig& cfg) {
  cfg.validate();
  const std::uint64_t fp = cfg.fingerprint();
  std::vector<ParameterSet> out;
  out.reserve(cfg.architectures.size() * cfg.qubits.size() * cfg.depths.size() *
              cfg.ratios.size() * cfg.opt_levels.size() * cfg.layouts.size() *
              cfg.runs_per_group());
  std::set<std::pair<std::uint64_t, std::uint64_t>> used;
  for (std::size_t a = 0; a < cfg.architectures.size(); ++a) {
    Rng stream(derive_seed(cfg.global_seed, a));
    for (const auto q : cfg.qubits) {
      for (const auto d : cfg.depths) {
        for (const auto& r : cfg.ratios) {
          for (const int o : cfg.opt_levels) {
            for (const auto l : cfg.layouts) {
              for (std::size_t rep = 0; rep < cfg.runs_per_group(); ++rep) {
                std::uint64_t gs = 0;
                std::uint64_t ts = 0;
                do {
                  gs = stream.next();
                  ts = stream.next();
                } while (!used.emplace(gs, ts).second);
                ParameterSet p;
                p.arch_index = a;
                p.gen = {q, d, r, gs};
                p.trans.optimization_level = o;
                p.trans.layout = l;
                p.trans.seed = ts;
                p.trans.trivial_first = cfg.trivial_first;
                p.trans.use_vf2 = cfg.use_vf2;
                p.trans.trivial_sabre_trial = cfg.trivial_sabre_trial;
                p.trans.sabre = cfg.sabre;
                p.ordinal = out.size();
                p.sweep_fingerprint = fp;
                out.push_back(p);
              }
            }
          }
        }
      }
    }
  }
  return out;
}

ActiveSet evaluate(const ParameterSet& p, const SweepConfig& cfg) {
  const auto& arch = cfg.architectures.at(p.arch_index);
  const Circuit circuit = generate(p.gen);
  const auto result = transpile(circuit, arch, p.trans);
  check_hardware_invariants(result.circuit, arch);
  return active_qubits(result.circuit);
}

namespace {

GroupKey key_of(const ParameterSet& p, const SweepConfig& cfg) {
  return {cfg.architectures.at(p.arch_index).name,
          p.gen.qubits,
          p.gen.depth,
          p.gen.ratio,
          p.trans.optimization_level,
          p.trans.layout};
}

} // namespace

UtilizationTable aggregate(const std::vector<EvaluationRecord>& results,
                           const SweepConfig& cfg) {
  const std::uint64_t fp = cfg.fingerprint();
  std::vector<bool> seen;
  UtilizationTable table;
  for (const auto& rec : results) {
    if (rec.params.sweep_fingerprint != fp) {
      throw ConsistencyError("result for ordinal " +
                             std::to_string(rec.params.ordinal) +
                             " belongs to a different sweep");
    }
    if (rec.params.ordinal >= seen.size()) {
      seen.resize(rec.params.ordinal + 1, false);
    }
    if (seen[rec.params.ordinal]) {
      throw ConsistencyError("ordinal " + std::to_string(rec.params.ordinal) +
                             " appears twice");
    }
    seen[rec.params.ordinal] = true;
    const auto n = cfg.architectures.at(rec.params.arch_index).coupling.size();
    auto& stats = table[key_of(rec.params, cfg)];
    if (stats.active.empty()) {
      stats.active.assign(n, 0);
    }
    ++stats.total;
    for (const Qubit q : rec.active) {
      if (q >= n) {
        throw ConsistencyError("active qubit " + std::to_string(q) +
                               " outside the architecture");
      }
      ++stats.active[q];
    }
  }
  return table;
}

SweepOutcome run_sweep(const SweepConfig& cfg, std::size_t workers,
                       const ProgressFn& progress) {
  if (workers == 0) {
    throw ConfigError("need at least one worker");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto params = expand_parameters(cfg);
  std::vector<std::optional<ActiveSet>> slots(params.size());
  std::vector<std::string> errors(params.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};

  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= params.size()) {
        return;
      }
      for (int attempt = 0; attempt < 2 && !slots[i]; ++attempt) {
        try {
          slots[i] = evaluate(params[i], cfg);
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      }
      const std::size_t finished = done.fetch_add(1) + 1;
      if (progress) {
        progress(finished, params.size());
      }
    }
  };
  const std::size_t threads = std::min(workers, std::max<std::size_t>(params.size(), 1));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back(work);
    }
  }

  SweepOutcome out;
  std::vector<EvaluationRecord> records;
  records.reserve(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (slots[i]) {
      records.push_back({params[i], std::move(*slots[i])});
    } else {
      out.failures.push_back({i, errors[i]});
    }
  }
  out.table = aggregate(records, cfg);
  // Groups whose every run failed still appear, with zero totals.
  for (const auto& p : params) {
    auto& stats = out.table[key_of(p, cfg)];
    if (stats.active.empty()) {
      stats.active.assign(cfg.architectures[p.arch_index].coupling.size(), 0);
    }
  }
  out.evaluations = params.size();
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

nlohmann::json manifest(const SweepConfig& cfg, const SweepOutcome& outcome) {
  nlohmann::json doc;
  doc["version"] = std::string(kVersion);
  doc["global_seed"] = cfg.global_seed;
  doc["fingerprint"] = cfg.fingerprint();
  std::vector<std::string> archs;
  for (const auto& a : cfg.architectures) {
    archs.push_back(a.name);
  }
  doc["architectures"] = archs;
  doc["qubits"] = cfg.qubits;
  doc["depths"] = cfg.depths;
  std::vector<std::string> ratios;
  for (const auto& r : cfg.ratios) {
    ratios.push_back(r.to_string());
  }
  doc["ratios"] = ratios;
  doc["opt_levels"] = cfg.opt_levels;
  std::vector<std::string> layouts;
  for (const auto l : cfg.layouts) {
    layouts.emplace_back(to_string(l));
  }
  doc["layouts"] = layouts;
  doc["mg"] = cfg.mg;
  doc["mt"] = cfg.mt;
  doc["runs_per_group"] = cfg.runs_per_group();
  doc["trivial_first"] = cfg.trivial_first;
  doc["vf2"] = cfg.use_vf2;
  doc["trivial_sabre_trial"] = cfg.trivial_sabre_trial;
  doc["sabre"] = {{"extended_set_size", cfg.sabre.extended_set_size},
                  {"extended_set_weight", cfg.sabre.extended_set_weight},
                  {"decay_increment", cfg.sabre.decay_increment},
                  {"decay_reset", cfg.sabre.decay_reset},
                  {"layout_trials", cfg.sabre.layout_trials},
                  {"iterations", cfg.sabre.iterations},
                  {"trivial_start", cfg.sabre.trivial_start}};
  doc["evaluations"] = outcome.evaluations;
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& [key, stats] : outcome.table) {
    groups.push_back({{"arch", key.arch},
                      {"q", key.q},
                      {"d", key.d},
                      {"r", key.r.to_string()},
                      {"O", key.O},
                      {"L", std::string(to_string(key.L))},
                      {"total", stats.total}});
  }
  doc["groups"] = groups;
  std::vector<std::size_t> failed;
  for (const auto& f : outcome.failures) {
    failed.push_back(f.ordinal);
  }
  doc["failures"] = failed;
  return doc;
}

} // namespace qutil
