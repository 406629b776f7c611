// SPDX-License-Identifier: MIT

#include "qutil/errors.hpp"
#include "qutil/report.hpp"

#include <gtest/gtest.h>

#include <regex>

using namespace qutil;

namespace {

UtilizationTable sample_table() {
  UtilizationTable t;
  GroupKey a{"falcon-r4", 6, 20, GateRatio{1, 1}, 2, LayoutMethod::Sabre};
  GroupStats s;
  s.total = 400;
  for (Qubit q = 0; q < 27; ++q) {
    s.active.push_back(q * 13 % 401);
  }
  s.active[26] = 0;
  t[a] = s;
  GroupKey b{"falcon-r4", 11, 20, GateRatio{4, 1}, 1, LayoutMethod::Trivial};
  GroupStats z;
  z.total = 3;
  z.active.assign(27, 1);
  t[b] = z;
  return t;
}

} // namespace

TEST(Report, CsvShape) {
  const auto text = to_csv(sample_table());
  EXPECT_EQ(text.rfind(std::string(kCsvHeader) + "\n", 0), 0U);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 2 * 27);
  EXPECT_NE(text.find("falcon-r4,6,20,1:1,2,sabre,1,13,400,0.032500\n"),
            std::string::npos);
  EXPECT_NE(text.find("falcon-r4,11,20,4:1,1,trivial,0,1,3,0.333333\n"),
            std::string::npos);
  EXPECT_EQ(to_csv(sample_table()), text);
}

TEST(Report, CsvRoundTrip) {
  const auto table = sample_table();
  EXPECT_EQ(parse_csv(to_csv(table)), table);
}

TEST(Report, CsvErrors) {
  EXPECT_THROW((void)parse_csv(""), ConfigError);
  EXPECT_THROW((void)parse_csv("a,b\n"), ConfigError);
  const std::string head = std::string(kCsvHeader) + "\n";
  EXPECT_THROW((void)parse_csv(head + "x,6,20,1:1,2,sabre,1,1,4,0.25\n"), ConfigError);
  EXPECT_THROW((void)parse_csv(head + "x,6,20,1:1,2,sabre,0,5,4,1.25\n"), ConfigError);
  EXPECT_THROW((void)parse_csv(head + "x,6,20,1:1,2,fancy,0,1,4,0.25\n"), ConfigError);
  UtilizationTable bad;
  bad[GroupKey{"a,b", 1, 1, GateRatio{1, 1}, 1, LayoutMethod::Sabre}] = GroupStats{{0}, 1};
  EXPECT_THROW((void)to_csv(bad), ConfigError);
}

TEST(Report, Filter) {
  const auto f = GroupFilter::parse("q=6,d=20,r=1:1,O=2,L=sabre");
  const auto table = sample_table();
  EXPECT_EQ(select_group(table, f)->first.q, 6U);
  EXPECT_THROW((void)select_group(table, GroupFilter::parse("d=20")), ConfigError);
  EXPECT_THROW((void)select_group(table, GroupFilter::parse("q=16")), ConfigError);
  EXPECT_THROW((void)GroupFilter::parse("depth=3"), ConfigError);
  EXPECT_THROW((void)GroupFilter::parse("q=abc"), ConfigError);
}

TEST(Report, ColorRampIsMonotone) {
  EXPECT_EQ(to_hex(heat_color(0)), "#000000");
  EXPECT_EQ(to_hex(heat_color(0.25)), "#800000");
  EXPECT_EQ(to_hex(heat_color(0.5)), "#ff3000");
  EXPECT_EQ(to_hex(heat_color(0.75)), "#ffb000");
  EXPECT_EQ(to_hex(heat_color(1)), "#ffffe0");
  EXPECT_EQ(heat_color(-1), heat_color(0));
  EXPECT_EQ(heat_color(2), heat_color(1));
  Rgb prev = heat_color(0);
  for (int i = 1; i <= 1000; ++i) {
    const Rgb c = heat_color(i / 1000.0);
    EXPECT_GE(c.r, prev.r);
    EXPECT_GE(c.g, prev.g);
    EXPECT_GE(c.b, prev.b);
    prev = c;
  }
}

TEST(Report, HeatmapContents) {
  const auto table = sample_table();
  const auto it = select_group(table, GroupFilter::parse("q=6"));
  const auto svg = render_heatmap(it->second, falcon_r4(), {"demo", false});
  EXPECT_EQ(svg.rfind("<?xml", 0), 0U);
  const std::regex circle("<circle ");
  const std::regex line("<line ");
  EXPECT_EQ(std::distance(std::sregex_iterator(svg.begin(), svg.end(), circle),
                          std::sregex_iterator()),
            27);
  EXPECT_EQ(std::distance(std::sregex_iterator(svg.begin(), svg.end(), line),
                          std::sregex_iterator()),
            28);
  EXPECT_NE(svg.find("linearGradient"), std::string::npos);
  EXPECT_NE(svg.find(">26</text>"), std::string::npos);
  EXPECT_EQ(svg, render_heatmap(it->second, falcon_r4(), {"demo", false}));
}

TEST(Report, AllZeroHeatmapUsesZeroColor) {
  GroupStats zero;
  zero.total = 10;
  zero.active.assign(27, 0);
  const auto svg = render_heatmap(zero, falcon_r4());
  std::size_t count = 0;
  for (auto pos = svg.find("fill=\"#000000\" stroke"); pos != std::string::npos;
       pos = svg.find("fill=\"#000000\" stroke", pos + 1)) {
    ++count;
  }
  EXPECT_EQ(count, 27U);
}

TEST(Report, MissingCoordinates) {
  ArchitectureSpec bare{"bare", CouplingMap(3, {{0, 1}, {1, 2}}), falcon_basis(), 1};
  GroupStats s{{1, 1, 0}, 2};
  EXPECT_THROW((void)render_heatmap(s, bare), RenderError);
  try {
    (void)render_heatmap(s, bare);
  } catch (const RenderError& e) {
    EXPECT_NE(std::string(e.what()).find("--force-layout"), std::string::npos);
  }
  const auto svg = render_heatmap(s, bare, {"", true});
  EXPECT_NE(svg.find("<circle"), std::string::npos);
  EXPECT_EQ(force_layout(bare.coupling), force_layout(bare.coupling));
}
