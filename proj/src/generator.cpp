// SPDX-License-Identifier: MIT

#include "qutil/generator.hpp"

#include "qutil/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

namespace qutil {

GateRatio GateRatio::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ConfigError("ratio must look like a:b, got '" + std::string(text) + "'");
  }
  auto read = [&](std::string_view part) {
    std::uint32_t value = 0;
    const auto* end = part.data() + part.size();
    const auto [ptr, ec] = std::from_chars(part.data(), end, value);
    if (part.empty() || ec != std::errc() || ptr != end) {
      throw ConfigError("ratio must look like a:b, got '" + std::string(text) +
                        "'");
    }
    return value;
  };
  GateRatio ratio{read(text.substr(0, colon)), read(text.substr(colon + 1))};
  if (ratio.one_qubit == 0 && ratio.two_qubit == 0) {
    throw ConfigError("ratio 0:0 has no gates");
  }
  return ratio;
}

std::string GateRatio::to_string() const {
  return std::to_string(one_qubit) + ":" + std::to_string(two_qubit);
}

void GenerationConfig::validate() const {
  if (qubits == 0) {
    throw ConfigError("circuit needs at least one qubit");
  }
  if (ratio.one_qubit == 0 && ratio.two_qubit == 0) {
    throw ConfigError("ratio 0:0 has no gates");
  }
  if (qubits < 2 && ratio.two_qubit > 0) {
    throw ConfigError("ratio " + ratio.to_string() +
                      " needs two-qubit gates but the circuit has one qubit");
  }
}

std::vector<GateKind> build_gate_pool(GateRatio ratio, std::size_t pool_size,
                                      Rng& rng) {
  const double total = static_cast<double>(ratio.one_qubit) + ratio.two_qubit;
  const auto n1 = static_cast<std::size_t>(
      std::lround(static_cast<double>(pool_size) * ratio.one_qubit / total));
  const auto ones = one_qubit_kinds();
  const auto twos = two_qubit_kinds();
  std::vector<GateKind> pool;
  pool.reserve(pool_size);
  for (std::size_t i = 0; i < pool_size; ++i) {
    if (i < n1) {
      pool.push_back(ones[rng.below(ones.size())]);
    } else {
      pool.push_back(twos[rng.below(twos.size())]);
    }
  }
  return pool;
}

Circuit generate(const GenerationConfig& cfg) {
  cfg.validate();
  const std::size_t q = cfg.qubits;
  Rng rng(cfg.seed);
  Circuit circuit(q);
  circuit.reserve(static_cast<std::size_t>(cfg.depth) * q);

  std::vector<std::size_t> level(q, 0);
  std::vector<Qubit> free_qubits(q);
  std::vector<bool> used(q);
  std::vector<Instruction> layer;

  for (std::size_t step = 0; step < cfg.depth; ++step) {
    auto pool = build_gate_pool(cfg.ratio, q, rng);
    rng.shuffle(pool);
    for (Qubit i = 0; i < q; ++i) {
      free_qubits[i] = i;
    }
    rng.shuffle(free_qubits);

    layer.clear();
    std::size_t next_free = 0;
    for (const auto kind : pool) {
      const auto need = static_cast<std::size_t>(arity(kind));
      if (need > q - next_free) {
        break;
      }
      Instruction instr;
      instr.kind = kind;
      for (std::size_t k = 0; k < need; ++k) {
        instr.qubits[k] = free_qubits[next_free++];
      }
      for (int k = 0; k < param_count(kind); ++k) {
        instr.params.push_back(rng.uniform() * 2 * std::numbers::pi);
      }
      layer.push_back(instr);
    }

    std::fill(used.begin(), used.end(), false);
    bool extends = false;
    for (const auto& instr : layer) {
      for (const Qubit qb : instr.operands()) {
        used[qb] = true;
        extends = extends || level[qb] == step;
      }
    }
    if (!extends) {
      // Every qubit at the current depth is idle in this layer.
      std::vector<Qubit> frontier;
      for (Qubit i = 0; i < q; ++i) {
        if (level[i] == step) {
          frontier.push_back(i);
        }
      }
      const Qubit target = frontier[rng.below(frontier.size())];
      used[layer.front().qubits[0]] = false;
      layer.front().qubits[0] = target;
      used[target] = true;
    }

    for (const auto& instr : layer) {
      std::size_t d = 0;
      for (const Qubit qb : instr.operands()) {
        d = std::max(d, level[qb]);
      }
      for (const Qubit qb : instr.operands()) {
        level[qb] = d + 1;
      }
      circuit.append_unchecked(instr);
    }
    for (Qubit i = 0; i < q; ++i) {
      if (!used[i]) {
        circuit.add_slack(i);
      }
    }
  }
  return circuit;
}

} // namespace qutil
