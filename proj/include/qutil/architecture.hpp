// SPDX-License-Identifier: MIT

#pragma once

#include "qutil/circuit.hpp"
#include "qutil/gates.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qutil {

struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/**
 * Undirected, connected physical connectivity graph.
 *
 * Edges are stored normalized (a < b) and sorted. Adjacency lists are sorted
 * ascending. All-pairs hop distances are computed once at construction.
 */
class CouplingMap {
public:
  using Edge = std::pair<Qubit, Qubit>;

  CouplingMap() = default;
  /// Throws ConfigError on self-loops, out-of-range endpoints, or a
  /// disconnected graph.
  CouplingMap(std::size_t n, std::vector<Edge> edges,
              std::vector<Point> coords = {});

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept {
    return edges_;
  }
  [[nodiscard]] const std::vector<Qubit>& neighbors(Qubit q) const {
    return adjacency_[q];
  }
  [[nodiscard]] std::size_t degree(Qubit q) const {
    return adjacency_[q].size();
  }
  [[nodiscard]] bool coupled(Qubit a, Qubit b) const noexcept {
    return coupled_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }
  /// Unchecked hop distance; see distance() for the checked form.
  [[nodiscard]] std::uint32_t dist(Qubit a, Qubit b) const noexcept {
    return dist_[static_cast<std::size_t>(a) * n_ + b];
  }
  [[nodiscard]] const std::vector<Point>& coords() const noexcept {
    return coords_;
  }
  [[nodiscard]] bool has_coords() const noexcept { return !coords_.empty(); }

  /// Qubits with minimum eccentricity.
  [[nodiscard]] std::vector<Qubit> center() const;
  /// Shortest path a -> b (inclusive), ties broken towards smaller indices.
  [[nodiscard]] std::vector<Qubit> shortest_path(Qubit a, Qubit b) const;

private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Qubit>> adjacency_;
  std::vector<std::uint8_t> coupled_;
  std::vector<std::uint32_t> dist_;
  std::vector<Point> coords_;
};

struct ArchitectureSpec {
  std::string name;
  CouplingMap coupling;
  BasisSet basis;
  /// Minimum instruction time step. Carried for completeness; scheduling is
  /// not modelled.
  double dt = 0.0;

  [[nodiscard]] std::size_t size() const noexcept { return coupling.size(); }
};

/// Checked hop distance. Throws IndexError when either index is >= n.
[[nodiscard]] std::uint32_t distance(const ArchitectureSpec& arch, Qubit a,
                                     Qubit b);

/// IBM 27-qubit Falcon R4 heavy-hex processor with basis {CX, I, Rz, SX, X}.
[[nodiscard]] ArchitectureSpec falcon_r4();

/// Generic families. All use the Falcon basis and dt = 1.
[[nodiscard]] ArchitectureSpec line(std::size_t n);
[[nodiscard]] ArchitectureSpec ring(std::size_t n);
[[nodiscard]] ArchitectureSpec grid(std::size_t width, std::size_t height);
/**
 * Heavy-hex lattice of the given (odd) code distance.
 *
 * `distance` rows of 2*distance+1 qubits are joined by bridge qubits; bridges
 * sit on columns 0, 4, 8, ... below even rows and 2, 6, 10, ... below odd
 * rows, which yields 12-qubit hexagonal cells with degree at most 3.
 */
[[nodiscard]] ArchitectureSpec heavy_hex(std::size_t distance);

/// Induced subgraph on `qubits`, relabelled 0..k-1 in the given order.
/// Throws ConfigError if the induced subgraph is disconnected.
[[nodiscard]] ArchitectureSpec induced_subgraph(const ArchitectureSpec& arch,
                                                const std::vector<Qubit>& qubits,
                                                std::string name);

/**
 * Resolves a descriptor: `falcon-r4`, `line:N`, `ring:N`, `grid:WxH`,
 * `heavy-hex:D`, or a path to a JSON preset. Throws ConfigError.
 */
[[nodiscard]] ArchitectureSpec architecture_from_descriptor(
    const std::string& descriptor);

/// JSON preset: {name, n, edges: [[a,b],...], basis: [...], coords: [[x,y]], dt}
[[nodiscard]] nlohmann::json to_json(const ArchitectureSpec& arch);
[[nodiscard]] ArchitectureSpec architecture_from_json(const nlohmann::json& doc);

} // namespace qutil
