// SPDX-License-Identifier: MIT

#pragma once

#include "qutil/architecture.hpp"
#include "qutil/sweep.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace qutil {

inline constexpr std::string_view kCsvHeader =
    "arch,q,d,r,O,L,qubit,active_count,total,utilization";

/// One row per (group, qubit), groups in key order, utilization printed
/// with six decimals. Throws ConfigError for an arch name containing a
/// comma, quote or newline.
void write_csv(std::ostream& os, const UtilizationTable& table);
[[nodiscard]] std::string to_csv(const UtilizationTable& table);
/// Throws IoError with the path on failure.
void export_csv(const UtilizationTable& table, const std::filesystem::path& path);

/// Inverse of write_csv. Throws ConfigError with a line number.
[[nodiscard]] UtilizationTable parse_csv(std::string_view text);
[[nodiscard]] UtilizationTable load_csv(const std::filesystem::path& path);

/// `q=6,d=20,r=1:1,O=2,L=sabre`; omitted fields match anything.
struct GroupFilter {
  std::optional<std::string> arch;
  std::optional<std::uint32_t> q;
  std::optional<std::uint32_t> d;
  std::optional<GateRatio> r;
  std::optional<int> O;
  std::optional<LayoutMethod> L;

  /// Throws ConfigError.
  static GroupFilter parse(std::string_view text);
  [[nodiscard]] bool matches(const GroupKey& key) const;
};

/// The single group the filter selects. Throws ConfigError when it selects
/// none or several.
[[nodiscard]] UtilizationTable::const_iterator select_group(
    const UtilizationTable& table, const GroupFilter& filter);

/// Five-stop sequential ramp, black through dark red, orange and yellow to
/// near white: #000000 #800000 #ff3000 #ffb000 #ffffe0. Every RGB channel is
/// non-decreasing in `value`, which is clamped to [0, 1].
struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};
[[nodiscard]] Rgb heat_color(double value) noexcept;
[[nodiscard]] std::string to_hex(Rgb c);

/// Spring-embedder placement used when an architecture has no coordinates.
/// Deterministic for a given coupling map.
[[nodiscard]] std::vector<Point> force_layout(const CouplingMap& coupling);

struct HeatmapOptions {
  std::string title;
  /// Place qubits with force_layout() when the map has no coordinates.
  bool force_layout = false;
};

/**
 * SVG 1.1 heatmap: coupling edges as lines, one circle per physical qubit
 * filled by its utilization, qubit indices inside the circles, and a labelled
 * colour bar over [0, 1]. Throws RenderError when the architecture has no
 * coordinates and force_layout is off.
 */
[[nodiscard]] std::string render_heatmap(const GroupStats& stats,
                                         const ArchitectureSpec& arch,
                                         const HeatmapOptions& options = {});

/// Coupling map drawing with no utilization (all circles white).
[[nodiscard]] std::string render_architecture(const ArchitectureSpec& arch,
                                              bool use_force_layout = false);

} // namespace qutil
