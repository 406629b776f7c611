// SPDX-License-Identifier: MIT

#include "qutil/architecture.hpp"

#include "qutil/errors.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>

namespace qutil {

namespace {

constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

std::vector<std::uint32_t> bfs_distances(
    const std::vector<std::vector<Qubit>>& adjacency, Qubit source) {
  std::vector<std::uint32_t> dist(adjacency.size(), kUnreachable);
  std::deque<Qubit> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Qubit u = queue.front();
    queue.pop_front();
    for (const Qubit v : adjacency[u]) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::size_t parse_size(std::string_view text, const std::string& descriptor) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError("bad size in architecture descriptor '" + descriptor +
                      "'");
  }
  return value;
}

ArchitectureSpec generic(std::string name, CouplingMap coupling) {
  return ArchitectureSpec{std::move(name), std::move(coupling), falcon_basis(),
                          1.0};
}

} // namespace

CouplingMap::CouplingMap(std::size_t n, std::vector<Edge> edges,
                         std::vector<Point> coords)
    : n_(n), coords_(std::move(coords)) {
  if (n == 0) {
    throw ConfigError("coupling map needs at least one qubit");
  }
  if (!coords_.empty() && coords_.size() != n) {
    throw ConfigError("coordinate count " + std::to_string(coords_.size()) +
                      " does not match qubit count " + std::to_string(n));
  }
  for (auto& [a, b] : edges) {
    if (a == b) {
      throw ConfigError("self-loop on qubit " + std::to_string(a));
    }
    if (a >= n || b >= n) {
      throw ConfigError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                        ") out of range for " + std::to_string(n) + " qubits");
    }
    if (a > b) {
      std::swap(a, b);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.assign(n, {});
  coupled_.assign(n * n, 0);
  for (const auto& [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
    coupled_[a * n + b] = 1;
    coupled_[b * n + a] = 1;
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
  }

  dist_.assign(n * n, 0);
  for (Qubit s = 0; s < n; ++s) {
    const auto row = bfs_distances(adjacency_, s);
    if (std::find(row.begin(), row.end(), kUnreachable) != row.end()) {
      throw ConfigError("coupling map is not connected");
    }
    std::copy(row.begin(), row.end(), dist_.begin() + s * n);
  }
}

std::vector<Qubit> CouplingMap::center() const {
  std::vector<std::uint32_t> ecc(n_, 0);
  for (Qubit a = 0; a < n_; ++a) {
    for (Qubit b = 0; b < n_; ++b) {
      ecc[a] = std::max(ecc[a], dist(a, b));
    }
  }
  const auto best = *std::min_element(ecc.begin(), ecc.end());
  std::vector<Qubit> out;
  for (Qubit q = 0; q < n_; ++q) {
    if (ecc[q] == best) {
      out.push_back(q);
    }
  }
  return out;
}

std::vector<Qubit> CouplingMap::shortest_path(Qubit a, Qubit b) const {
  std::vector<Qubit> path{a};
  Qubit cur = a;
  while (cur != b) {
    for (const Qubit next : adjacency_[cur]) {
      if (dist(next, b) + 1 == dist(cur, b)) {
        cur = next;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

std::uint32_t distance(const ArchitectureSpec& arch, Qubit a, Qubit b) {
  if (a >= arch.size() || b >= arch.size()) {
    throw IndexError("distance(" + std::to_string(a) + "," + std::to_string(b) +
                     ") out of range for " + std::to_string(arch.size()) +
                     " qubits");
  }
  return arch.coupling.dist(a, b);
}

ArchitectureSpec falcon_r4() {
  std::vector<CouplingMap::Edge> edges{
      {0, 1},   {1, 2},   {1, 4},   {2, 3},   {3, 5},   {4, 7},   {5, 8},
      {6, 7},   {7, 10},  {8, 9},   {8, 11},  {10, 12}, {11, 14}, {12, 13},
      {12, 15}, {13, 14}, {14, 16}, {15, 18}, {16, 19}, {17, 18}, {18, 21},
      {19, 20}, {19, 22}, {21, 23}, {22, 25}, {23, 24}, {24, 25}, {25, 26}};
  // (column, row) of the usual 27-qubit drawing.
  std::vector<Point> coords{
      {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 0},
      {3, 1}, {3, 3}, {3, 4}, {4, 1}, {4, 3}, {5, 1}, {5, 2},
      {5, 3}, {6, 1}, {6, 3}, {7, 0}, {7, 1}, {7, 3}, {7, 4},
      {8, 1}, {8, 3}, {9, 1}, {9, 2}, {9, 3}, {10, 3}};
  return ArchitectureSpec{"falcon-r4",
                          CouplingMap(27, std::move(edges), std::move(coords)),
                          falcon_basis(), 2.2222222222222221e-10};
}

ArchitectureSpec line(std::size_t n) {
  if (n == 0) {
    throw ConfigError("line needs at least one qubit");
  }
  std::vector<CouplingMap::Edge> edges;
  std::vector<Point> coords;
  for (Qubit i = 0; i < n; ++i) {
    coords.push_back({static_cast<double>(i), 0});
    if (i + 1 < n) {
      edges.emplace_back(i, i + 1);
    }
  }
  return generic("line:" + std::to_string(n),
                 CouplingMap(n, std::move(edges), std::move(coords)));
}

ArchitectureSpec ring(std::size_t n) {
  if (n < 3) {
    throw ConfigError("ring needs at least three qubits");
  }
  std::vector<CouplingMap::Edge> edges;
  std::vector<Point> coords;
  const double radius = static_cast<double>(n) / (2 * std::numbers::pi);
  for (Qubit i = 0; i < n; ++i) {
    const double angle = 2 * std::numbers::pi * i / static_cast<double>(n);
    coords.push_back({radius * (1 + std::cos(angle)),
                      radius * (1 + std::sin(angle))});
    edges.emplace_back(i, static_cast<Qubit>((i + 1) % n));
  }
  return generic("ring:" + std::to_string(n),
                 CouplingMap(n, std::move(edges), std::move(coords)));
}

ArchitectureSpec grid(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) {
    throw ConfigError("grid dimensions must be positive");
  }
  std::vector<CouplingMap::Edge> edges;
  std::vector<Point> coords;
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      const auto q = static_cast<Qubit>(r * width + c);
      coords.push_back({static_cast<double>(c), static_cast<double>(r)});
      if (c + 1 < width) {
        edges.emplace_back(q, q + 1);
      }
      if (r + 1 < height) {
        edges.emplace_back(q, static_cast<Qubit>(q + width));
      }
    }
  }
  return generic("grid:" + std::to_string(width) + "x" + std::to_string(height),
                 CouplingMap(width * height, std::move(edges), std::move(coords)));
}

ArchitectureSpec heavy_hex(std::size_t distance) {
  if (distance < 3 || distance % 2 == 0) {
    throw ConfigError("heavy-hex distance must be an odd integer >= 3");
  }
  const std::size_t rows = distance;
  const std::size_t cols = 2 * distance + 1;
  std::vector<CouplingMap::Edge> edges;
  std::vector<Point> coords;
  std::vector<std::vector<Qubit>> row_ids(rows);
  Qubit next = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      row_ids[r].push_back(next);
      coords.push_back({static_cast<double>(c), static_cast<double>(2 * r)});
      if (c > 0) {
        edges.emplace_back(next - 1, next);
      }
      ++next;
    }
    if (r + 1 == rows) {
      break;
    }
    // Bridges between row r and r+1 are numbered after row r, which keeps
    // indices increasing top to bottom as on IBM devices.
    for (std::size_t c = (r % 2 == 0 ? 0 : 2); c < cols; c += 4) {
      coords.push_back({static_cast<double>(c), static_cast<double>(2 * r + 1)});
      edges.emplace_back(row_ids[r][c], next);
      ++next;
    }
  }
  // Second pass: connect bridges to the row below now that it is numbered.
  std::vector<CouplingMap::Edge> lower;
  for (Qubit q = 0; q < next; ++q) {
    const auto& p = coords[q];
    if (static_cast<std::size_t>(p.y) % 2 == 1) {
      const auto r = static_cast<std::size_t>(p.y) / 2 + 1;
      lower.emplace_back(q, row_ids[r][static_cast<std::size_t>(p.x)]);
    }
  }
  edges.insert(edges.end(), lower.begin(), lower.end());
  return generic("heavy-hex:" + std::to_string(distance),
                 CouplingMap(next, std::move(edges), std::move(coords)));
}

ArchitectureSpec induced_subgraph(const ArchitectureSpec& arch,
                                  const std::vector<Qubit>& qubits,
                                  std::string name) {
  std::vector<std::int64_t> relabel(arch.size(), -1);
  std::vector<Point> coords;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] >= arch.size()) {
      throw IndexError("subgraph qubit out of range");
    }
    relabel[qubits[i]] = static_cast<std::int64_t>(i);
    if (arch.coupling.has_coords()) {
      coords.push_back(arch.coupling.coords()[qubits[i]]);
    }
  }
  std::vector<CouplingMap::Edge> edges;
  for (const auto& [a, b] : arch.coupling.edges()) {
    if (relabel[a] >= 0 && relabel[b] >= 0) {
      edges.emplace_back(static_cast<Qubit>(relabel[a]),
                         static_cast<Qubit>(relabel[b]));
    }
  }
  return ArchitectureSpec{std::move(name),
                          CouplingMap(qubits.size(), std::move(edges),
                                      std::move(coords)),
                          arch.basis, arch.dt};
}

ArchitectureSpec architecture_from_descriptor(const std::string& descriptor) {
  if (descriptor == "falcon-r4" || descriptor == "falcon") {
    return falcon_r4();
  }
  const auto colon = descriptor.find(':');
  if (colon != std::string::npos) {
    const std::string family = descriptor.substr(0, colon);
    const std::string_view args = std::string_view(descriptor).substr(colon + 1);
    if (family == "line") {
      return line(parse_size(args, descriptor));
    }
    if (family == "ring") {
      return ring(parse_size(args, descriptor));
    }
    if (family == "heavy-hex") {
      return heavy_hex(parse_size(args, descriptor));
    }
    if (family == "grid") {
      const auto x = args.find('x');
      if (x == std::string_view::npos) {
        throw ConfigError("grid descriptor must look like grid:WxH");
      }
      return grid(parse_size(args.substr(0, x), descriptor),
                  parse_size(args.substr(x + 1), descriptor));
    }
  }
  if (std::filesystem::exists(descriptor)) {
    std::ifstream in(descriptor);
    if (!in) {
      throw IoError("cannot open architecture file " + descriptor);
    }
    try {
      return architecture_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("invalid architecture JSON in " + descriptor + ": " +
                        e.what());
    }
  }
  throw ConfigError("unknown architecture '" + descriptor +
                    "' (expected falcon-r4, line:N, ring:N, grid:WxH, "
                    "heavy-hex:D or a JSON file)");
}

nlohmann::json to_json(const ArchitectureSpec& arch) {
  nlohmann::json doc;
  doc["name"] = arch.name;
  doc["n"] = arch.size();
  auto& edges = doc["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : arch.coupling.edges()) {
    edges.push_back({a, b});
  }
  auto& basis = doc["basis"] = nlohmann::json::array();
  for (auto kind : arch.basis.kinds()) {
    basis.push_back(std::string(name(kind)));
  }
  if (arch.coupling.has_coords()) {
    auto& coords = doc["coords"] = nlohmann::json::array();
    for (const auto& p : arch.coupling.coords()) {
      coords.push_back({p.x, p.y});
    }
  }
  doc["dt"] = arch.dt;
  return doc;
}

ArchitectureSpec architecture_from_json(const nlohmann::json& doc) {
  ArchitectureSpec arch;
  arch.name = doc.value("name", std::string("custom"));
  const auto n = doc.at("n").get<std::size_t>();
  std::vector<CouplingMap::Edge> edges;
  for (const auto& e : doc.at("edges")) {
    if (e.size() != 2) {
      throw ConfigError("architecture edge must have two endpoints");
    }
    edges.emplace_back(e[0].get<Qubit>(), e[1].get<Qubit>());
  }
  std::vector<Point> coords;
  if (doc.contains("coords")) {
    for (const auto& p : doc.at("coords")) {
      coords.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    }
  }
  for (const auto& b : doc.at("basis")) {
    const auto kind = kind_from_name(b.get<std::string>());
    if (!kind) {
      throw ConfigError("unknown basis gate '" + b.get<std::string>() + "'");
    }
    arch.basis.insert(*kind);
  }
  if (arch.basis.empty()) {
    throw ConfigError("architecture basis must not be empty");
  }
  arch.dt = doc.value("dt", 0.0);
  arch.coupling = CouplingMap(n, std::move(edges), std::move(coords));
  return arch;
}

} // namespace qutil
