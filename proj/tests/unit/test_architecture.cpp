// SPDX-License-Identifier: MIT

#include "qutil/architecture.hpp"
#include "qutil/errors.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace qutil;

TEST(Architecture, FalconShape) {
  const auto f = falcon_r4();
  EXPECT_EQ(f.size(), 27U);
  EXPECT_EQ(f.coupling.edges().size(), 28U);
  std::size_t max_degree = 0;
  for (Qubit q = 0; q < 27; ++q) {
    max_degree = std::max(max_degree, f.coupling.degree(q));
  }
  EXPECT_EQ(max_degree, 3U);
  EXPECT_EQ(f.basis, falcon_basis());
  EXPECT_TRUE(f.coupling.has_coords());
}

TEST(Architecture, FalconDistances) {
  const auto f = falcon_r4();
  EXPECT_EQ(distance(f, 0, 1), 1U);
  EXPECT_EQ(distance(f, 0, 26), 12U);
  EXPECT_EQ(distance(f, 13, 13), 0U);
  EXPECT_THROW((void)distance(f, 0, 27), IndexError);
  // The map is symmetric under q -> 26 - q.
  for (const auto& [a, b] : f.coupling.edges()) {
    EXPECT_TRUE(f.coupling.coupled(26 - a, 26 - b));
  }
}

TEST(Architecture, FalconCenter) {
  const auto center = falcon_r4().coupling.center();
  EXPECT_NE(std::find(center.begin(), center.end(), 13U), center.end());
}

TEST(Architecture, ShortestPath) {
  const auto f = falcon_r4();
  const auto path = f.coupling.shortest_path(0, 3);
  EXPECT_EQ(path, (std::vector<Qubit>{0, 1, 2, 3}));
  const auto l = line(5);
  EXPECT_EQ(l.coupling.shortest_path(4, 1), (std::vector<Qubit>{4, 3, 2, 1}));
}

TEST(Architecture, Validation) {
  EXPECT_THROW(CouplingMap(3, {{0, 0}}), ConfigError);
  EXPECT_THROW(CouplingMap(3, {{0, 3}}), ConfigError);
  EXPECT_THROW(CouplingMap(4, {{0, 1}, {2, 3}}), ConfigError);
  EXPECT_NO_THROW(CouplingMap(1, {}));
}

TEST(Architecture, Families) {
  EXPECT_EQ(line(4).coupling.edges().size(), 3U);
  EXPECT_EQ(ring(5).coupling.edges().size(), 5U);
  EXPECT_EQ(grid(3, 2).coupling.edges().size(), 7U);
  const auto hh = heavy_hex(3);
  std::size_t max_degree = 0;
  for (Qubit q = 0; q < hh.size(); ++q) {
    max_degree = std::max(max_degree, hh.coupling.degree(q));
  }
  EXPECT_LE(max_degree, 3U);
  EXPECT_THROW((void)heavy_hex(4), ConfigError);
  EXPECT_THROW((void)ring(2), ConfigError);
}

TEST(Architecture, Descriptors) {
  EXPECT_EQ(architecture_from_descriptor("falcon").name, "falcon-r4");
  EXPECT_EQ(architecture_from_descriptor("line:7").size(), 7U);
  EXPECT_EQ(architecture_from_descriptor("grid:3x4").size(), 12U);
  EXPECT_THROW((void)architecture_from_descriptor("torus:3"), ConfigError);
  EXPECT_THROW((void)architecture_from_descriptor("line:x"), ConfigError);
}

TEST(Architecture, JsonRoundTrip) {
  const auto f = falcon_r4();
  const auto back = architecture_from_json(to_json(f));
  EXPECT_EQ(back.name, f.name);
  EXPECT_EQ(back.coupling.edges(), f.coupling.edges());
  EXPECT_EQ(back.coupling.coords(), f.coupling.coords());
  EXPECT_EQ(back.basis, f.basis);
  EXPECT_DOUBLE_EQ(back.dt, f.dt);

  const auto path = std::filesystem::temp_directory_path() / "qutil_arch_test.json";
  std::ofstream(path) << to_json(line(3)).dump();
  EXPECT_EQ(architecture_from_descriptor(path.string()).size(), 3U);
  std::filesystem::remove(path);
}

TEST(Architecture, InducedSubgraph) {
  const auto f = falcon_r4();
  const auto sub = induced_subgraph(f, {12, 13, 14}, "piece");
  EXPECT_EQ(sub.size(), 3U);
  EXPECT_EQ(sub.coupling.edges().size(), 2U);
  EXPECT_THROW((void)induced_subgraph(f, {0, 26}, "split"), ConfigError);
}
