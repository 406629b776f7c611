// SPDX-License-Identifier: MIT

#pragma once

#include "qutil/architecture.hpp"
#include "qutil/circuit.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qutil {

/**
 * Injective map from virtual (circuit) qubits to physical qubits.
 *
 * After fill_ancillas() the map is a bijection over all physical qubits;
 * virtual indices >= the circuit width then denote ancillas.
 */
class Layout {
public:
  static constexpr std::int32_t kNone = -1;

  Layout() = default;
  /// Throws IndexError on an out-of-range or repeated physical index.
  Layout(std::vector<Qubit> virtual_to_physical, std::size_t physical_count);
  static Layout identity(std::size_t virtual_count, std::size_t physical_count);

  [[nodiscard]] std::size_t virtual_count() const noexcept { return v2p_.size(); }
  [[nodiscard]] std::size_t physical_count() const noexcept { return p2v_.size(); }
  [[nodiscard]] Qubit physical(Qubit v) const { return v2p_[v]; }
  /// kNone when the physical qubit hosts no virtual qubit.
  [[nodiscard]] std::int32_t virtual_at(Qubit p) const { return p2v_[p]; }
  [[nodiscard]] const std::vector<Qubit>& virtual_to_physical() const noexcept {
    return v2p_;
  }
  [[nodiscard]] const std::vector<std::int32_t>& physical_to_virtual() const noexcept {
    return p2v_;
  }

  /// Extends to a bijection: free physical qubits (ascending) host new
  /// ancilla virtual indices (ascending).
  void fill_ancillas();
  /// Exchanges whatever the two physical qubits host.
  void swap_physical(Qubit a, Qubit b);

  friend bool operator==(const Layout&, const Layout&) = default;

private:
  std::vector<Qubit> v2p_;
  std::vector<std::int32_t> p2v_;
};

/// Distinct unordered virtual pairs that share a two-qubit gate.
[[nodiscard]] std::vector<std::pair<Qubit, Qubit>> interaction_edges(
    const Circuit& c);

struct TrivialLayoutResult {
  Layout layout;
  /// Every two-qubit gate lands on a coupled pair.
  bool perfect = false;
};

/// Virtual i -> physical i. Throws CapacityError if the circuit is wider
/// than the architecture.
[[nodiscard]] TrivialLayoutResult trivial_layout(const Circuit& c,
                                                 const ArchitectureSpec& arch);

/**
 * Searches for a monomorphism of the interaction graph into the coupling
 * graph. Virtual qubits are assigned in index order and physical candidates
 * are tried in ascending order, so the first complete assignment found is the
 * lexicographically smallest one. Candidates are pruned VF2-style: a
 * candidate must be adjacent to the images of all already-mapped neighbours
 * and must have enough free neighbours left for the virtual qubit's
 * unmapped neighbours. Returns nullopt when no embedding exists or the
 * search visits more than `node_limit` states.
 */
[[nodiscard]] std::optional<Layout> vf2_layout(const Circuit& c,
                                               const ArchitectureSpec& arch,
                                               std::size_t node_limit = 10000);

/**
 * Picks a `width`-qubit physical subset with many internal couplings.
 *
 * From every start qubit a subset is grown greedily: repeatedly add the
 * neighbouring qubit with the most couplings into the subset (smallest index
 * on ties). The grown subset with the most induced edges wins, ties going to
 * the lexicographically smallest sorted subset. Returns the sorted subset.
 */
[[nodiscard]] std::vector<Qubit> dense_subset(const CouplingMap& coupling,
                                              std::size_t width);

/// Maps virtual qubits onto dense_subset() in ascending order.
[[nodiscard]] Layout dense_layout(const Circuit& c, const ArchitectureSpec& arch);

/// Number of coupling edges with both ends in `subset`.
[[nodiscard]] std::size_t induced_edge_count(const CouplingMap& coupling,
                                             const std::vector<Qubit>& subset);

} // namespace qutil
