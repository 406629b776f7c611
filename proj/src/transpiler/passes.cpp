// SPDX-License-Identifier: MIT

#include "qutil/transpiler/passes.hpp"

#include "qutil/errors.hpp"

#include <cmath>

namespace qutil {

Circuit initialize(const Circuit& c) {
  for (const auto& instr : c) {
    if (instr.arity() > 2) {
      throw UnsupportedGateError(std::string(name(instr.kind)) +
                                 " acts on more than two qubits");
    }
  }
  return c;
}

Circuit translate(const Circuit& c, const BasisSet& basis) {
  Circuit out(c.width());
  out.set_slack(c.slack());
  out.reserve(c.size() * 3);
  for (const auto& instr : c) {
    if (basis.contains(instr.kind)) {
      out.append_unchecked(instr);
      continue;
    }
    for (const auto& g : translate_template(instr.kind, instr.params, basis)) {
      Instruction mapped;
      mapped.kind = g.kind;
      mapped.params = g.params;
      mapped.qubits[0] = instr.qubits[g.slots[0]];
      if (arity(g.kind) == 2) {
        mapped.qubits[1] = instr.qubits[g.slots[1]];
      }
      out.append_unchecked(mapped);
    }
  }
  return out;
}

namespace {

bool symmetric(GateKind kind) {
  switch (kind) {
  case GateKind::CZ:
  case GateKind::CP:
  case GateKind::CS:
  case GateKind::CSdg:
  case GateKind::SWAP:
  case GateKind::Rxx:
  case GateKind::Ryy:
  case GateKind::Rzz:
    return true;
  default:
    return false;
  }
}

bool same_params(const Angles& a, const Angles& b) {
  if (a.size() != b.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > 1e-12) {
      return false;
    }
  }
  return true;
}

/// True when `second` undoes `first` on the same operands.
bool cancels(const Instruction& first, const Instruction& second) {
  const auto inv = inverse_of(first.kind, first.params);
  if (inv.kind != second.kind || !same_params(inv.params, second.params)) {
    return false;
  }
  if (first.arity() == 1) {
    return first.qubits[0] == second.qubits[0];
  }
  const bool same = first.qubits == second.qubits;
  const bool flipped = first.qubits[0] == second.qubits[1] &&
                       first.qubits[1] == second.qubits[0];
  if (symmetric(second.kind)) {
    return same || flipped;
  }
  return inv.reverse_operands ? flipped : same;
}

bool diagonal(GateKind kind) {
  switch (kind) {
  case GateKind::I:
  case GateKind::P:
  case GateKind::Rz:
  case GateKind::S:
  case GateKind::Sdg:
  case GateKind::T:
  case GateKind::Tdg:
  case GateKind::Z:
    return true;
  default:
    return false;
  }
}

bool x_axis(GateKind kind) {
  switch (kind) {
  case GateKind::I:
  case GateKind::Rx:
  case GateKind::SX:
  case GateKind::SXdg:
  case GateKind::X:
    return true;
  default:
    return false;
  }
}

Circuit compact(const Circuit& c, const std::vector<bool>& removed) {
  Circuit out(c.width());
  out.set_slack(c.slack());
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!removed[i]) {
      out.append_unchecked(c[i]);
    }
  }
  return out;
}

} // namespace

std::size_t cancel_inverse_pairs(Circuit& c) {
  // Per-qubit stacks of surviving instruction indices.
  std::vector<std::vector<std::uint32_t>> stacks(c.width());
  std::vector<bool> removed(c.size(), false);
  std::size_t count = 0;
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    const auto& g = c[i];
    const auto& s0 = stacks[g.qubits[0]];
    if (!s0.empty()) {
      const std::uint32_t prev = s0.back();
      const auto& p = c[prev];
      const bool adjacent =
          p.arity() == g.arity() &&
          (g.arity() == 1 || (!stacks[g.qubits[1]].empty() &&
                              stacks[g.qubits[1]].back() == prev));
      if (adjacent && cancels(p, g)) {
        removed[prev] = true;
        removed[i] = true;
        count += 2;
        for (const Qubit q : p.operands()) {
          stacks[q].pop_back();
        }
        continue;
      }
    }
    for (const Qubit q : g.operands()) {
      stacks[q].push_back(i);
    }
  }
  if (count > 0) {
    c = compact(c, removed);
  }
  return count;
}

std::size_t fuse_one_qubit_runs(Circuit& c, const BasisSet& basis) {
  std::vector<std::vector<std::uint32_t>> runs(c.width());
  std::vector<bool> removed(c.size(), false);
  std::vector<std::pair<std::uint32_t, Template>> inserts;
  std::size_t count = 0;

  auto flush = [&](Qubit q) {
    auto& run = runs[q];
    if (run.empty()) {
      return;
    }
    Matrix2 m = Matrix2::Identity();
    for (const auto i : run) {
      m = matrix1(c[i].kind, c[i].params) * m;
    }
    Template replacement;
    try {
      replacement = synthesize_1q(m, basis);
    } catch (const UnsupportedTranslationError&) {
      run.clear();
      return;
    }
    if (replacement.size() < run.size()) {
      for (const auto i : run) {
        removed[i] = true;
      }
      count += run.size() - replacement.size();
      inserts.emplace_back(run.back(), std::move(replacement));
    }
    run.clear();
  };

  for (std::uint32_t i = 0; i < c.size(); ++i) {
    const auto& g = c[i];
    if (g.arity() == 1) {
      runs[g.qubits[0]].push_back(i);
    } else {
      flush(g.qubits[0]);
      flush(g.qubits[1]);
    }
  }
  for (Qubit q = 0; q < c.width(); ++q) {
    flush(q);
  }
  if (inserts.empty()) {
    return 0;
  }
  std::sort(inserts.begin(), inserts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Circuit out(c.width());
  out.set_slack(c.slack());
  out.reserve(c.size());
  std::size_t next = 0;
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    if (!removed[i]) {
      out.append_unchecked(c[i]);
    }
    if (next < inserts.size() && inserts[next].first == i) {
      for (const auto& g : inserts[next].second) {
        Instruction instr;
        instr.kind = g.kind;
        instr.params = g.params;
        instr.qubits[0] = c[i].qubits[0];
        out.append_unchecked(instr);
      }
      ++next;
    }
  }
  c = std::move(out);
  return count;
}

std::size_t cancel_commuting_cx(Circuit& c) {
  std::vector<bool> removed(c.size(), false);
  std::size_t count = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (removed[i] || c[i].kind != GateKind::CX) {
      continue;
    }
    const Qubit ctl = c[i].qubits[0];
    const Qubit tgt = c[i].qubits[1];
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (removed[j]) {
        continue;
      }
      const auto& g = c[j];
      const bool on_ctl = g.touches(ctl);
      const bool on_tgt = g.touches(tgt);
      if (!on_ctl && !on_tgt) {
        continue;
      }
      if (g.kind == GateKind::CX && g.qubits[0] == ctl && g.qubits[1] == tgt) {
        removed[i] = true;
        removed[j] = true;
        count += 2;
        break;
      }
      bool commutes = false;
      if (g.arity() == 1) {
        commutes = on_ctl ? diagonal(g.kind) : x_axis(g.kind);
      } else if (g.kind == GateKind::CX) {
        commutes = (on_ctl && !on_tgt && g.qubits[0] == ctl) ||
                   (on_tgt && !on_ctl && g.qubits[1] == tgt);
      }
      if (!commutes) {
        break;
      }
    }
  }
  if (count > 0) {
    c = compact(c, removed);
  }
  return count;
}

Circuit optimize(const Circuit& c, int level, const BasisSet& basis,
                 OptimizeReport* report) {
  OptimizeReport local;
  Circuit out = c;
  if (level == 1) {
    local.rounds = 1;
    local.removed += cancel_inverse_pairs(out);
    local.removed += fuse_one_qubit_runs(out, basis);
  } else if (level >= 2) {
    const std::size_t budget = level == 2 ? 10 : 100;
    for (std::size_t round = 0; round < budget; ++round) {
      ++local.rounds;
      std::size_t removed = cancel_inverse_pairs(out);
      removed += cancel_commuting_cx(out);
      removed += fuse_one_qubit_runs(out, basis);
      local.removed += removed;
      if (removed == 0) {
        break;
      }
    }
  }
  if (report != nullptr) {
    *report = local;
  }
  return out;
}

} // namespace qutil
