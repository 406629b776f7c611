// SPDX-License-Identifier: MIT

#include "qutil/transpiler/layout.hpp"

#include "qutil/errors.hpp"

#include <algorithm>

namespace qutil {

Layout::Layout(std::vector<Qubit> virtual_to_physical, std::size_t physical_count)
    : v2p_(std::move(virtual_to_physical)), p2v_(physical_count, kNone) {
  if (v2p_.size() > physical_count) {
    throw CapacityError("layout has " + std::to_string(v2p_.size()) +
                        " virtual qubits but only " +
                        std::to_string(physical_count) + " physical qubits");
  }
  for (std::size_t v = 0; v < v2p_.size(); ++v) {
    const Qubit p = v2p_[v];
    if (p >= physical_count) {
      throw IndexError("physical qubit " + std::to_string(p) + " out of range");
    }
    if (p2v_[p] != kNone) {
      throw IndexError("physical qubit " + std::to_string(p) +
                       " assigned twice");
    }
    p2v_[p] = static_cast<std::int32_t>(v);
  }
}

Layout Layout::identity(std::size_t virtual_count, std::size_t physical_count) {
  std::vector<Qubit> v2p(virtual_count);
  for (std::size_t i = 0; i < virtual_count; ++i) {
    v2p[i] = static_cast<Qubit>(i);
  }
  return Layout(std::move(v2p), physical_count);
}

void Layout::fill_ancillas() {
  for (std::size_t p = 0; p < p2v_.size(); ++p) {
    if (p2v_[p] == kNone) {
      p2v_[p] = static_cast<std::int32_t>(v2p_.size());
      v2p_.push_back(static_cast<Qubit>(p));
    }
  }
}

void Layout::swap_physical(Qubit a, Qubit b) {
  const auto va = p2v_[a];
  const auto vb = p2v_[b];
  p2v_[a] = vb;
  p2v_[b] = va;
  if (va != kNone) {
    v2p_[static_cast<std::size_t>(va)] = b;
  }
  if (vb != kNone) {
    v2p_[static_cast<std::size_t>(vb)] = a;
  }
}

std::vector<std::pair<Qubit, Qubit>> interaction_edges(const Circuit& c) {
  std::vector<std::pair<Qubit, Qubit>> edges;
  for (const auto& instr : c) {
    if (instr.arity() == 2) {
      edges.emplace_back(std::min(instr.qubits[0], instr.qubits[1]),
                         std::max(instr.qubits[0], instr.qubits[1]));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

namespace {

void check_capacity(const Circuit& c, const ArchitectureSpec& arch) {
  if (c.width() > arch.coupling.size()) {
    throw CapacityError("circuit needs " + std::to_string(c.width()) +
                        " qubits but " + arch.name + " has " +
                        std::to_string(arch.coupling.size()));
  }
}

class Vf2Search {
public:
  Vf2Search(const Circuit& c, const CouplingMap& coupling, std::size_t limit)
      : coupling_(coupling), limit_(limit), adj_(c.width()),
        v2p_(c.width(), 0), mapped_(c.width(), false),
        used_(coupling.size(), false) {
    for (const auto& [a, b] : interaction_edges(c)) {
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
  }

  std::optional<Layout> run() {
    if (!extend(0)) {
      return std::nullopt;
    }
    return Layout(v2p_, coupling_.size());
  }

private:
  bool feasible(Qubit v, Qubit p) const {
    if (used_[p] || coupling_.degree(p) < adj_[v].size()) {
      return false;
    }
    std::size_t pending = 0;
    for (const Qubit u : adj_[v]) {
      if (mapped_[u]) {
        if (!coupling_.coupled(p, v2p_[u])) {
          return false;
        }
      } else {
        ++pending;
      }
    }
    if (pending == 0) {
      return true;
    }
    std::size_t free_neighbors = 0;
    for (const Qubit n : coupling_.neighbors(p)) {
      free_neighbors += used_[n] ? 0 : 1;
    }
    return free_neighbors >= pending;
  }

  bool extend(Qubit v) {
    if (v == v2p_.size()) {
      return true;
    }
    for (Qubit p = 0; p < coupling_.size(); ++p) {
      if (!feasible(v, p)) {
        continue;
      }
      if (++states_ > limit_) {
        return false;
      }
      v2p_[v] = p;
      mapped_[v] = true;
      used_[p] = true;
      if (extend(v + 1)) {
        return true;
      }
      mapped_[v] = false;
      used_[p] = false;
      if (states_ > limit_) {
        return false;
      }
    }
    return false;
  }

  const CouplingMap& coupling_;
  std::size_t limit_;
  std::size_t states_ = 0;
  std::vector<std::vector<Qubit>> adj_;
  std::vector<Qubit> v2p_;
  std::vector<bool> mapped_;
  std::vector<bool> used_;
};

} // namespace

TrivialLayoutResult trivial_layout(const Circuit& c, const ArchitectureSpec& arch) {
  check_capacity(c, arch);
  TrivialLayoutResult out{Layout::identity(c.width(), arch.coupling.size()), true};
  for (const auto& instr : c) {
    if (instr.arity() == 2 &&
        !arch.coupling.coupled(instr.qubits[0], instr.qubits[1])) {
      out.perfect = false;
      break;
    }
  }
  return out;
}

std::optional<Layout> vf2_layout(const Circuit& c, const ArchitectureSpec& arch,
                                 std::size_t node_limit) {
  check_capacity(c, arch);
  return Vf2Search(c, arch.coupling, node_limit).run();
}

std::size_t induced_edge_count(const CouplingMap& coupling,
                               const std::vector<Qubit>& subset) {
  std::vector<bool> in(coupling.size(), false);
  for (const Qubit q : subset) {
    in[q] = true;
  }
  std::size_t count = 0;
  for (const auto& [a, b] : coupling.edges()) {
    count += in[a] && in[b] ? 1 : 0;
  }
  return count;
}

std::vector<Qubit> dense_subset(const CouplingMap& coupling, std::size_t width) {
  const std::size_t n = coupling.size();
  if (width > n) {
    throw CapacityError("requested " + std::to_string(width) +
                        " qubits from a " + std::to_string(n) + "-qubit map");
  }
  if (width == 0) {
    return {};
  }
  std::vector<Qubit> best;
  std::size_t best_edges = 0;
  std::vector<bool> in(n);
  std::vector<std::size_t> links(n);
  for (Qubit start = 0; start < n; ++start) {
    std::fill(in.begin(), in.end(), false);
    std::fill(links.begin(), links.end(), 0);
    std::vector<Qubit> subset{start};
    std::size_t edges = 0;
    auto add = [&](Qubit q) {
      in[q] = true;
      edges += links[q];
      for (const Qubit nb : coupling.neighbors(q)) {
        ++links[nb];
      }
    };
    add(start);
    while (subset.size() < width) {
      Qubit pick = 0;
      std::size_t pick_links = 0;
      for (Qubit q = 0; q < n; ++q) {
        if (!in[q] && links[q] > pick_links) {
          pick = q;
          pick_links = links[q];
        }
      }
      subset.push_back(pick);
      add(pick);
    }
    std::sort(subset.begin(), subset.end());
    if (best.empty() || edges > best_edges ||
        (edges == best_edges && subset < best)) {
      best = std::move(subset);
      best_edges = edges;
    }
  }
  return best;
}

Layout dense_layout(const Circuit& c, const ArchitectureSpec& arch) {
  check_capacity(c, arch);
  return Layout(dense_subset(arch.coupling, c.width()), arch.coupling.size());
}

} // namespace qutil
