// SPDX-License-Identifier: MIT

#include "qutil/report.hpp"

#include "qutil/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace qutil {

namespace {

std::string format_double(const char* fmt, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, value);
  return buf;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos
                                         ? std::string_view::npos
                                         : pos - start));
    if (pos == std::string_view::npos) {
      return out;
    }
    start = pos + 1;
  }
}

template <typename T>
std::optional<T> to_number(std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    return std::nullopt;
  }
  return value;
}

} // namespace

void write_csv(std::ostream& os, const UtilizationTable& table) {
  os << kCsvHeader << '\n';
  for (const auto& [key, stats] : table) {
    if (key.arch.find_first_of(",\"\n\r") != std::string::npos) {
      throw ConfigError("architecture name '" + key.arch +
                        "' cannot be written to CSV");
    }
    const std::string prefix = key.arch + ',' + std::to_string(key.q) + ',' +
                               std::to_string(key.d) + ',' + key.r.to_string() +
                               ',' + std::to_string(key.O) + ',' +
                               std::string(to_string(key.L)) + ',';
    for (Qubit q = 0; q < stats.active.size(); ++q) {
      os << prefix << q << ',' << stats.active[q] << ',' << stats.total << ','
         << format_double("%.6f", stats.utilization(q)) << '\n';
    }
  }
}

std::string to_csv(const UtilizationTable& table) {
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

void export_csv(const UtilizationTable& table, const std::filesystem::path& path) {
  const std::string text = to_csv(table);
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
}

UtilizationTable parse_csv(std::string_view text) {
  UtilizationTable table;
  std::size_t line_no = 0;
  bool header_seen = false;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (line.empty()) {
      continue;
    }
    auto fail = [&](const std::string& what) {
      throw ConfigError("utilization CSV line " + std::to_string(line_no) +
                        ": " + what);
    };
    if (!header_seen) {
      if (line != kCsvHeader) {
        fail("expected header '" + std::string(kCsvHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    const auto cells = split(line, ',');
    if (cells.size() != 10) {
      fail("expected 10 columns, got " + std::to_string(cells.size()));
    }
    GroupKey key;
    key.arch = std::string(cells[0]);
    const auto q = to_number<std::uint32_t>(cells[1]);
    const auto d = to_number<std::uint32_t>(cells[2]);
    const auto o = to_number<int>(cells[4]);
    const auto qubit = to_number<std::uint32_t>(cells[6]);
    const auto active = to_number<std::uint64_t>(cells[7]);
    const auto total = to_number<std::uint64_t>(cells[8]);
    if (!q || !d || !o || !qubit || !active || !total) {
      fail("bad integer field");
    }
    key.q = *q;
    key.d = *d;
    key.O = *o;
    try {
      key.r = GateRatio::parse(cells[3]);
      key.L = parse_layout_method(cells[5]);
    } catch (const ConfigError& e) {
      fail(e.what());
    }
    if (*active > *total) {
      fail("active count exceeds total");
    }
    auto& stats = table[key];
    if (*qubit != stats.active.size()) {
      fail("qubit rows must be consecutive from 0");
    }
    if (!stats.active.empty() && stats.total != *total) {
      fail("total differs within a group");
    }
    stats.total = *total;
    stats.active.push_back(*active);
  }
  if (!header_seen) {
    throw ConfigError("utilization CSV is empty");
  }
  return table;
}

UtilizationTable load_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

GroupFilter GroupFilter::parse(std::string_view text) {
  GroupFilter f;
  if (text.empty()) {
    return f;
  }
  for (const auto part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("filter term '" + std::string(part) +
                        "' must look like key=value");
    }
    const auto key = part.substr(0, eq);
    const auto value = part.substr(eq + 1);
    auto number = [&](auto tag) {
      const auto v = to_number<decltype(tag)>(value);
      if (!v) {
        throw ConfigError("filter value '" + std::string(value) + "' for " +
                          std::string(key) + " is not a number");
      }
      return *v;
    };
    if (key == "arch") {
      f.arch = std::string(value);
    } else if (key == "q") {
      f.q = number(std::uint32_t{});
    } else if (key == "d") {
      f.d = number(std::uint32_t{});
    } else if (key == "r") {
      f.r = GateRatio::parse(value);
    } else if (key == "O") {
      f.O = number(int{});
    } else if (key == "L") {
      f.L = parse_layout_method(value);
    } else {
      throw ConfigError("unknown filter key '" + std::string(key) +
                        "' (expected arch, q, d, r, O, L)");
    }
  }
  return f;
}

bool GroupFilter::matches(const GroupKey& key) const {
  return (!arch || *arch == key.arch) && (!q || *q == key.q) &&
         (!d || *d == key.d) && (!r || *r == key.r) && (!O || *O == key.O) &&
         (!L || *L == key.L);
}

UtilizationTable::const_iterator select_group(const UtilizationTable& table,
                                              const GroupFilter& filter) {
  auto found = table.end();
  std::size_t count = 0;
  for (auto it = table.begin(); it != table.end(); ++it) {
    if (filter.matches(it->first)) {
      found = it;
      ++count;
    }
  }
  if (count != 1) {
    throw ConfigError("filter selects " + std::to_string(count) +
                      " groups; it must select exactly one");
  }
  return found;
}

Rgb heat_color(double value) noexcept {
  static constexpr std::array<Rgb, 5> stops{
      Rgb{0x00, 0x00, 0x00}, Rgb{0x80, 0x00, 0x00}, Rgb{0xff, 0x30, 0x00},
      Rgb{0xff, 0xb0, 0x00}, Rgb{0xff, 0xff, 0xe0}};
  if (!(value > 0)) {
    return stops.front();
  }
  if (value >= 1) {
    return stops.back();
  }
  const double scaled = value * (stops.size() - 1);
  const auto i = static_cast<std::size_t>(scaled);
  const double t = scaled - static_cast<double>(i);
  auto mix = [t](std::uint8_t a, std::uint8_t b) {
    return static_cast<std::uint8_t>(std::lround(a + (b - a) * t));
  };
  return {mix(stops[i].r, stops[i + 1].r), mix(stops[i].g, stops[i + 1].g),
          mix(stops[i].b, stops[i + 1].b)};
}

std::string to_hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

std::vector<Point> force_layout(const CouplingMap& coupling) {
  const std::size_t n = coupling.size();
  std::vector<Point> pos(n);
  const double radius = std::max(1.0, static_cast<double>(n) / (2 * std::numbers::pi));
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pos[i] = {radius * std::cos(a), radius * std::sin(a)};
  }
  if (n < 2) {
    return {Point{0, 0}};
  }
  // Fruchterman-Reingold with unit ideal edge length and linear cooling.
  const int rounds = 300;
  std::vector<Point> shift(n);
  for (int round = 0; round < rounds; ++round) {
    const double temperature = radius * 0.1 * (1.0 - round / static_cast<double>(rounds));
    std::fill(shift.begin(), shift.end(), Point{});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double dx = pos[i].x - pos[j].x;
        const double dy = pos[i].y - pos[j].y;
        const double dist = std::max(1e-6, std::hypot(dx, dy));
        const double push = 1.0 / dist;
        shift[i].x += dx / dist * push;
        shift[i].y += dy / dist * push;
        shift[j].x -= dx / dist * push;
        shift[j].y -= dy / dist * push;
      }
    }
    for (const auto& [a, b] : coupling.edges()) {
      const double dx = pos[a].x - pos[b].x;
      const double dy = pos[a].y - pos[b].y;
      const double dist = std::max(1e-6, std::hypot(dx, dy));
      const double pull = dist * dist;
      shift[a].x -= dx / dist * pull;
      shift[a].y -= dy / dist * pull;
      shift[b].x += dx / dist * pull;
      shift[b].y += dy / dist * pull;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double len = std::max(1e-9, std::hypot(shift[i].x, shift[i].y));
      const double step = std::min(len, temperature);
      pos[i].x += shift[i].x / len * step;
      pos[i].y += shift[i].y / len * step;
    }
  }
  double min_x = pos[0].x;
  double min_y = pos[0].y;
  for (const auto& p : pos) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
  }
  for (auto& p : pos) {
    p = {p.x - min_x, p.y - min_y};
  }
  return pos;
}

namespace {

constexpr double kScale = 60;
constexpr double kMargin = 40;
constexpr double kRadius = 18;

std::string escape(std::string_view text) {
  std::string out;
  for (const char ch : text) {
    switch (ch) {
    case '&':
      out += "&amp;";
      break;
    case '<':
      out += "&lt;";
      break;
    case '>':
      out += "&gt;";
      break;
    case '"':
      out += "&quot;";
      break;
    default:
      out += ch;
    }
  }
  return out;
}

std::string num(double v) { return format_double("%.1f", v); }

std::string draw(const ArchitectureSpec& arch, const std::vector<double>* values,
                 const std::string& title, bool use_force_layout) {
  const auto& coupling = arch.coupling;
  std::vector<Point> coords;
  if (coupling.has_coords()) {
    coords = coupling.coords();
  } else if (use_force_layout) {
    coords = force_layout(coupling);
  } else {
    throw RenderError("architecture '" + arch.name +
                      "' has no drawing coordinates; pass --force-layout to "
                      "place qubits automatically");
  }
  double max_x = 0;
  double max_y = 0;
  for (const auto& p : coords) {
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  const double plot_w = 2 * kMargin + max_x * kScale;
  const double bar_x = plot_w + 10;
  const double width = values != nullptr ? bar_x + 80 : plot_w;
  const double top = title.empty() ? 0 : 30;
  const double height = std::max(2 * kMargin + max_y * kScale, 220.0) + top;

  auto px = [&](Qubit q) { return kMargin + coords[q].x * kScale; };
  auto py = [&](Qubit q) { return top + kMargin + coords[q].y * kScale; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(width) << "\" height=\"" << num(height) << "\" viewBox=\"0 0 "
      << num(width) << ' ' << num(height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  if (!title.empty()) {
    svg << "<text x=\"" << num(kMargin / 2) << "\" y=\"22\" font-family=\"sans-serif\" "
        << "font-size=\"14\">" << escape(title) << "</text>\n";
  }
  svg << "<g stroke=\"#606060\" stroke-width=\"3\">\n";
  for (const auto& [a, b] : coupling.edges()) {
    svg << "<line x1=\"" << num(px(a)) << "\" y1=\"" << num(py(a)) << "\" x2=\""
        << num(px(b)) << "\" y2=\"" << num(py(b)) << "\"/>\n";
  }
  svg << "</g>\n";
  for (Qubit q = 0; q < coupling.size(); ++q) {
    const double v = values != nullptr ? (*values)[q] : 1.0;
    const Rgb fill = values != nullptr ? heat_color(v) : Rgb{0xff, 0xff, 0xff};
    const bool dark = fill.g < 0x90;
    svg << "<g><title>qubit " << q;
    if (values != nullptr) {
      svg << ": " << format_double("%.3f", v);
    }
    svg << "</title><circle cx=\"" << num(px(q)) << "\" cy=\"" << num(py(q))
        << "\" r=\"" << num(kRadius) << "\" fill=\"" << to_hex(fill)
        << "\" stroke=\"#303030\" stroke-width=\"1.5\"/>"
        << "<text x=\"" << num(px(q)) << "\" y=\"" << num(py(q) + 4)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
        << (dark ? "#ffffff" : "#000000") << "\">" << q << "</text></g>\n";
  }
  if (values != nullptr) {
    const double bar_top = top + kMargin;
    const double bar_h = 150;
    svg << "<defs><linearGradient id=\"ramp\" x1=\"0\" y1=\"1\" x2=\"0\" y2=\"0\">\n";
    for (int i = 0; i <= 4; ++i) {
      svg << "<stop offset=\"" << format_double("%.2f", i / 4.0)
          << "\" stop-color=\"" << to_hex(heat_color(i / 4.0)) << "\"/>\n";
    }
    svg << "</linearGradient></defs>\n";
    svg << "<rect x=\"" << num(bar_x) << "\" y=\"" << num(bar_top)
        << "\" width=\"16\" height=\"" << num(bar_h)
        << "\" fill=\"url(#ramp)\" stroke=\"#303030\"/>\n";
    for (int i = 0; i <= 4; ++i) {
      const double y = bar_top + bar_h * (1.0 - i / 4.0);
      svg << "<text x=\"" << num(bar_x + 22) << "\" y=\"" << num(y + 4)
          << "\" font-family=\"sans-serif\" font-size=\"11\">"
          << format_double("%.2f", i / 4.0) << "</text>\n";
    }
    svg << "<text x=\"" << num(bar_x) << "\" y=\"" << num(bar_top + bar_h + 20)
        << "\" font-family=\"sans-serif\" font-size=\"11\">utilization</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

} // namespace

std::string render_heatmap(const GroupStats& stats, const ArchitectureSpec& arch,
                           const HeatmapOptions& options) {
  if (stats.active.size() != arch.coupling.size()) {
    throw RenderError("table has " + std::to_string(stats.active.size()) +
                      " qubits but " + arch.name + " has " +
                      std::to_string(arch.coupling.size()));
  }
  std::vector<double> values(stats.active.size());
  for (Qubit q = 0; q < values.size(); ++q) {
    values[q] = stats.utilization(q);
  }
  return draw(arch, &values, options.title, options.force_layout);
}

std::string render_architecture(const ArchitectureSpec& arch, bool use_force_layout) {
  return draw(arch, nullptr, arch.name, use_force_layout);
}

} // namespace qutil
