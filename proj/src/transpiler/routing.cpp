// SPDX-License-Identifier: MIT

#include "qutil/transpiler/routing.hpp"

#include "qutil/errors.hpp"
#include "qutil/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qutil {

namespace {

constexpr std::uint32_t kNoGate = std::numeric_limits<std::uint32_t>::max();

/// Dependency graph over a circuit's instructions.
struct Dag {
  std::vector<Instruction> gates;
  std::vector<std::array<std::uint32_t, 2>> next;
  std::vector<std::uint8_t> preds;

  Dag(const std::vector<Instruction>& instrs, std::size_t width) : gates(instrs) {
    next.assign(gates.size(), {kNoGate, kNoGate});
    preds.assign(gates.size(), 0);
    std::vector<std::uint32_t> last(width, kNoGate);
    for (std::uint32_t i = 0; i < gates.size(); ++i) {
      const auto& g = gates[i];
      for (int k = 0; k < g.arity(); ++k) {
        const Qubit q = g.qubits[static_cast<std::size_t>(k)];
        const std::uint32_t prev = last[q];
        if (prev != kNoGate) {
          const auto& pg = gates[prev];
          const std::size_t slot = pg.qubits[0] == q ? 0 : 1;
          next[prev][slot] = i;
          ++preds[i];
        }
        last[q] = i;
      }
    }
  }
};

std::vector<Instruction> two_qubit_only(const Circuit& c) {
  std::vector<Instruction> out;
  for (const auto& instr : c) {
    if (instr.arity() == 2) {
      out.push_back(instr);
    }
  }
  return out;
}

/// Places one-qubit gates relative to the two-qubit skeleton the router sees:
/// each runs just before the next two-qubit gate on its qubit, or at the end.
struct EmissionPlan {
  const Circuit* source = nullptr;
  std::vector<std::vector<std::uint32_t>> before;
  std::vector<std::uint32_t> trailing;

  explicit EmissionPlan(const Circuit& c) : source(&c) {
    std::vector<std::vector<std::uint32_t>> pending(c.width());
    for (std::uint32_t i = 0; i < c.size(); ++i) {
      const auto& g = c[i];
      if (g.arity() == 1) {
        pending[g.qubits[0]].push_back(i);
        continue;
      }
      auto& list = before.emplace_back();
      for (const Qubit q : g.operands()) {
        list.insert(list.end(), pending[q].begin(), pending[q].end());
        pending[q].clear();
      }
    }
    for (const auto& list : pending) {
      trailing.insert(trailing.end(), list.begin(), list.end());
    }
  }
};

class Router {
public:
  Router(const Dag& dag, const CouplingMap& coupling, const SabreOptions& opts,
         std::uint64_t seed, const EmissionPlan* plan)
      : dag_(dag), coupling_(coupling), opts_(opts), rng_(seed), plan_(plan),
        emit_(plan != nullptr), decay_(coupling.size(), 1.0),
        out_(coupling.size()) {}

  RoutingResult run(Layout layout) {
    layout.fill_ancillas();
    RoutingResult result;
    result.initial_layout = layout;
    v2p_ = layout.virtual_to_physical();
    layout_ = std::move(layout);

    const std::size_t n = coupling_.size();
    remaining_ = dag_.preds;
    front_.clear();
    for (std::uint32_t i = 0; i < dag_.gates.size(); ++i) {
      if (remaining_[i] == 0) {
        front_.push_back(i);
      }
    }
    if (emit_) {
      out_.reserve(dag_.gates.size() * 2);
    }
    std::size_t stalled = 0;
    std::size_t since_reset = 0;
    while (true) {
      if (execute_ready()) {
        stalled = 0;
        since_reset = 0;
        std::fill(decay_.begin(), decay_.end(), 1.0);
      }
      if (front_.empty()) {
        break;
      }
      if (stalled >= 8 * n) {
        force_closest();
        stalled = 0;
        since_reset = 0;
        std::fill(decay_.begin(), decay_.end(), 1.0);
        continue;
      }
      const auto [a, b] = choose_swap();
      apply_swap(a, b);
      decay_[a] += opts_.decay_increment;
      decay_[b] += opts_.decay_increment;
      ++stalled;
      if (++since_reset % opts_.decay_reset == 0) {
        std::fill(decay_.begin(), decay_.end(), 1.0);
      }
    }
    if (emit_) {
      for (const auto i : plan_->trailing) {
        emit((*plan_->source)[i]);
      }
      out_.set_slack(std::vector<std::uint32_t>(coupling_.size(), 0));
    }
    result.circuit = std::move(out_);
    result.final_layout = std::move(layout_);
    result.swaps = swaps_;
    return result;
  }

private:
  Qubit phys(Qubit v) const { return v2p_[v]; }

  void emit(const Instruction& g) {
    if (!emit_) {
      return;
    }
    Instruction mapped = g;
    mapped.qubits[0] = phys(g.qubits[0]);
    if (g.arity() == 2) {
      mapped.qubits[1] = phys(g.qubits[1]);
    }
    out_.append_unchecked(mapped);
  }

  void release(std::uint32_t i) {
    for (const auto s : dag_.next[i]) {
      if (s != kNoGate && --remaining_[s] == 0) {
        front_.push_back(s);
      }
    }
  }

  /// Runs every front gate that can execute; returns true if a two-qubit
  /// gate ran.
  bool execute_ready() {
    bool progressed = false;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < front_.size();) {
        const std::uint32_t i = front_[k];
        const auto& g = dag_.gates[i];
        const bool two = g.arity() == 2;
        if (!two || coupling_.coupled(phys(g.qubits[0]), phys(g.qubits[1]))) {
          if (emit_) {
            for (const auto j : plan_->before[i]) {
              emit((*plan_->source)[j]);
            }
          }
          emit(g);
          front_.erase(front_.begin() + static_cast<std::ptrdiff_t>(k));
          release(i);
          progressed = progressed || two;
          changed = true;
        } else {
          ++k;
        }
      }
    }
    return progressed;
  }

  void collect_extended() {
    extended_.clear();
    scratch_ = remaining_;
    std::vector<std::uint32_t> queue(front_.begin(), front_.end());
    for (std::size_t head = 0;
         head < queue.size() && extended_.size() < opts_.extended_set_size;
         ++head) {
      for (const auto s : dag_.next[queue[head]]) {
        if (s == kNoGate || --scratch_[s] != 0) {
          continue;
        }
        queue.push_back(s);
        if (dag_.gates[s].arity() == 2) {
          extended_.push_back(s);
          if (extended_.size() >= opts_.extended_set_size) {
            break;
          }
        }
      }
    }
  }

  double set_cost(const std::vector<std::uint32_t>& set, Qubit a, Qubit b) const {
    double total = 0;
    for (const auto i : set) {
      const auto& g = dag_.gates[i];
      Qubit p = phys(g.qubits[0]);
      Qubit q = phys(g.qubits[1]);
      p = p == a ? b : (p == b ? a : p);
      q = q == a ? b : (q == b ? a : q);
      total += coupling_.dist(p, q);
    }
    return total;
  }

  std::pair<Qubit, Qubit> choose_swap() {
    candidates_.clear();
    for (const auto i : front_) {
      const auto& g = dag_.gates[i];
      for (int k = 0; k < 2; ++k) {
        const Qubit p = phys(g.qubits[static_cast<std::size_t>(k)]);
        for (const Qubit nb : coupling_.neighbors(p)) {
          candidates_.emplace_back(std::min(p, nb), std::max(p, nb));
        }
      }
    }
    std::sort(candidates_.begin(), candidates_.end());
    candidates_.erase(std::unique(candidates_.begin(), candidates_.end()),
                      candidates_.end());
    collect_extended();

    const double nf = static_cast<double>(front_.size());
    const double ne = static_cast<double>(extended_.size());
    double best = std::numeric_limits<double>::infinity();
    ties_.clear();
    for (const auto& [a, b] : candidates_) {
      double score = set_cost(front_, a, b) / nf;
      if (!extended_.empty()) {
        score += opts_.extended_set_weight * set_cost(extended_, a, b) / ne;
      }
      score *= std::max(decay_[a], decay_[b]);
      if (score < best - 1e-10) {
        best = score;
        ties_.clear();
        ties_.emplace_back(a, b);
      } else if (score <= best + 1e-10) {
        ties_.emplace_back(a, b);
      }
    }
    return ties_.size() == 1 ? ties_[0] : ties_[rng_.below(ties_.size())];
  }

  void apply_swap(Qubit a, Qubit b) {
    if (emit_) {
      out_.append_unchecked(Instruction(GateKind::SWAP, {a, b}));
    }
    layout_.swap_physical(a, b);
    const auto va = layout_.virtual_at(a);
    const auto vb = layout_.virtual_at(b);
    v2p_[static_cast<std::size_t>(va)] = a;
    v2p_[static_cast<std::size_t>(vb)] = b;
    ++swaps_;
  }

  void force_closest() {
    std::uint32_t pick = front_.front();
    std::uint32_t pick_dist = std::numeric_limits<std::uint32_t>::max();
    for (const auto i : front_) {
      const auto& g = dag_.gates[i];
      const auto d = coupling_.dist(phys(g.qubits[0]), phys(g.qubits[1]));
      if (d < pick_dist || (d == pick_dist && i < pick)) {
        pick = i;
        pick_dist = d;
      }
    }
    const auto& g = dag_.gates[pick];
    const auto path = coupling_.shortest_path(phys(g.qubits[0]), phys(g.qubits[1]));
    for (std::size_t k = 0; k + 2 < path.size(); ++k) {
      apply_swap(path[k], path[k + 1]);
    }
  }

  const Dag& dag_;
  const CouplingMap& coupling_;
  const SabreOptions& opts_;
  Rng rng_;
  const EmissionPlan* plan_;
  bool emit_;
  std::vector<double> decay_;
  Circuit out_;
  Layout layout_;
  std::vector<Qubit> v2p_;
  std::vector<std::uint8_t> remaining_;
  std::vector<std::uint8_t> scratch_;
  std::vector<std::uint32_t> front_;
  std::vector<std::uint32_t> extended_;
  std::vector<std::pair<Qubit, Qubit>> candidates_;
  std::vector<std::pair<Qubit, Qubit>> ties_;
  std::size_t swaps_ = 0;
};

void check_width(const Circuit& c, const ArchitectureSpec& arch) {
  if (c.width() > arch.coupling.size()) {
    throw CapacityError("circuit needs " + std::to_string(c.width()) +
                        " qubits but " + arch.name + " has " +
                        std::to_string(arch.coupling.size()));
  }
}

void check_options(const SabreOptions& opts) {
  if (opts.decay_reset == 0 || opts.layout_trials == 0) {
    throw ConfigError("SABRE needs decay_reset >= 1 and layout_trials >= 1");
  }
}

} // namespace

RoutingResult sabre_route(const Circuit& c, const Layout& layout,
                          const ArchitectureSpec& arch, std::uint64_t seed,
                          const SabreOptions& options) {
  check_width(c, arch);
  check_options(options);
  if (layout.physical_count() != arch.coupling.size() ||
      layout.virtual_count() < c.width()) {
    throw IndexError("layout does not cover the circuit on " + arch.name);
  }
  const Dag dag(two_qubit_only(c), c.width());
  const EmissionPlan plan(c);
  return Router(dag, arch.coupling, options, seed, &plan).run(layout);
}

RoutingResult sabre_layout(const Circuit& c, const ArchitectureSpec& arch,
                           std::uint64_t seed, const SabreOptions& options) {
  check_width(c, arch);
  check_options(options);
  const std::size_t n = arch.coupling.size();
  auto forward_gates = two_qubit_only(c);
  auto backward_gates = forward_gates;
  std::reverse(backward_gates.begin(), backward_gates.end());
  const Dag forward(forward_gates, c.width());
  const Dag backward(backward_gates, c.width());

  const std::size_t trials = options.layout_trials + (options.trivial_start ? 1 : 0);
  Layout best_layout;
  std::uint64_t best_seed = 0;
  std::size_t best_swaps = std::numeric_limits<std::size_t>::max();
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, t);
    Layout layout;
    if (options.trivial_start && t == 0) {
      layout = Layout::identity(n, n);
    } else {
      std::vector<Qubit> perm(n);
      for (Qubit i = 0; i < n; ++i) {
        perm[i] = i;
      }
      Rng rng(trial_seed);
      rng.shuffle(perm);
      layout = Layout(std::move(perm), n);
    }
    for (std::size_t it = 0; it < options.iterations; ++it) {
      auto fwd = Router(forward, arch.coupling, options,
                        derive_seed(trial_seed, 2 * it + 1), nullptr)
                     .run(layout);
      auto bwd = Router(backward, arch.coupling, options,
                        derive_seed(trial_seed, 2 * it + 2), nullptr)
                     .run(fwd.final_layout);
      layout = std::move(bwd.final_layout);
    }
    const std::uint64_t final_seed = derive_seed(trial_seed, 0);
    const auto scored =
        Router(forward, arch.coupling, options, final_seed, nullptr).run(layout);
    if (scored.swaps < best_swaps) {
      best_swaps = scored.swaps;
      best_layout = std::move(layout);
      best_seed = final_seed;
    }
  }
  const EmissionPlan plan(c);
  return Router(forward, arch.coupling, options, best_seed, &plan)
      .run(best_layout);
}

} // namespace qutil
