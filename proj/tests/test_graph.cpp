#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <random>

#include "htcover/error.hpp"
#include "htcover/graph.hpp"
#include "oracles.hpp"

using namespace htcover;
using ::testing::ElementsAre;

namespace {

std::vector<oracle::Mask> masks(const std::vector<VertexSet>& sets) {
  std::vector<oracle::Mask> out;
  for (VertexSet s : sets) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet named(const Graph& g, std::initializer_list<std::string_view> names) {
  return g.vertex_set(std::vector<std::string_view>(names));
}

}  // namespace

TEST(BuildHt, VertexAndEdgeCounts) {
  // Cycle edges, three for y1, four for every later y.
  const std::pair<std::size_t, std::size_t> expected[] = {{6, 8}, {9, 14}, {14, 22}, {19, 30}};
  for (int t = 1; t <= 4; ++t) {
    const Graph g = build_ht(t);
    EXPECT_EQ(g.vertex_count(), expected[t - 1].first) << "t=" << t;
    EXPECT_EQ(g.edge_count(), expected[t - 1].second) << "t=" << t;
  }
}

TEST(BuildHt, NeighborhoodsOfYVertices) {
  for (int t = 1; t <= 5; ++t) {
    const Graph g = build_ht(t);
    EXPECT_EQ(g.names_of(neighbors(g, named(g, {"y1"}))), (std::vector<std::string>{"x1", "x2", "x3"}));
    for (int i = 2; i <= t; ++i) {
      const std::string y = "y" + std::to_string(i);
      std::vector<std::string> want;
      for (int k = 4 * i - 4; k <= 4 * i - 1; ++k) want.push_back("x" + std::to_string(k));
      EXPECT_EQ(g.names_of(neighbors(g, named(g, {y}))), want) << y;
    }
  }
}

TEST(BuildHt, XVerticesFormTheOddCycle) {
  for (int t = 1; t <= 4; ++t) {
    const Graph g = build_ht(t);
    const VertexSet xs = g.all() - g.y_vertices();
    EXPECT_EQ(xs.size(), t == 1 ? 5u : 4u * t - 1);
    EXPECT_TRUE(is_induced_odd_cycle(g, xs));
  }
}

TEST(BuildHt, RejectsNonPositiveT) {
  EXPECT_THROW(build_ht(0), ContractError);
  EXPECT_THROW(build_ht(-2), ContractError);
}

TEST(BuildOddCycle, ShapeAndValidation) {
  const Graph c5 = build_odd_cycle(5);
  EXPECT_EQ(c5.vertex_count(), 5u);
  EXPECT_EQ(c5.edge_count(), 5u);
  EXPECT_TRUE(is_induced_odd_cycle(c5, c5.all()));
  EXPECT_THROW(build_odd_cycle(4), ContractError);
  EXPECT_THROW(build_odd_cycle(1), ContractError);
}

TEST(Graph, ConstructorContracts) {
  std::vector<Vertex> vs{{"a", VertexKind::kX}, {"b", VertexKind::kX}};
  EXPECT_THROW(Graph("g", vs, {{0, 0}}), ContractError);
  EXPECT_THROW(Graph("g", vs, {{0, 1}, {1, 0}}), ContractError);
  EXPECT_THROW(Graph("g", vs, {{0, 2}}), ContractError);
  EXPECT_THROW(Graph("g", {{"a", VertexKind::kX}, {"a", VertexKind::kY}}, {}), ContractError);
  std::vector<Vertex> many;
  for (int i = 0; i < 65; ++i) many.push_back({"v" + std::to_string(i), VertexKind::kX});
  EXPECT_THROW(Graph("big", many, {}), CapacityError);
}

TEST(Graph, CapacityGuard) {
  EnumerationLimits small;
  small.max_vertices = 8;
  EXPECT_THROW(check_capacity(build_ht(2), small), CapacityError);
  EXPECT_NO_THROW(check_capacity(build_ht(1), small));
  EXPECT_THROW(enumerate_minimal_vertex_covers(build_ht(2), small), CapacityError);
}

TEST(RecognizeHt, RoundTripAndRejection) {
  for (int t = 1; t <= 4; ++t) EXPECT_EQ(recognize_ht(build_ht(t)), t);
  EXPECT_FALSE(recognize_ht(build_odd_cycle(5)).has_value());
  const Graph h1 = build_ht(1);
  auto vs = h1.vertices();
  vs[5].kind = VertexKind::kX;
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (const Edge& e : h1.edges()) es.emplace_back(e.u, e.v);
  EXPECT_FALSE(recognize_ht(Graph("relabelled", vs, es)).has_value());
}

TEST(ChromaticNumber, ThreeForEveryHt) {
  for (int t = 1; t <= 4; ++t) {
    const Graph g = build_ht(t);
    const Coloring c = chromatic_number(g);
    EXPECT_EQ(c.colors, 3u) << "t=" << t;
    ASSERT_EQ(c.assignment.size(), g.vertex_count());
    for (const Edge& e : g.edges()) EXPECT_NE(c.assignment[e.u], c.assignment[e.v]);
  }
}

TEST(ChromaticNumber, ReferenceColoringIsProper) {
  // x1, x3 and y_i (i > 1) share a color; x2 and odd x_k (k > 3) another.
  for (int t = 2; t <= 4; ++t) {
    const Graph g = build_ht(t);
    std::vector<int> color(g.vertex_count(), 3);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      const std::string& n = g.name(i);
      const int k = std::stoi(n.substr(1));
      if (n[0] == 'y' && k > 1) color[i] = 1;
      if (n[0] == 'x' && (k == 1 || k == 3)) color[i] = 1;
      if (n[0] == 'x' && (k == 2 || (k % 2 == 1 && k > 3))) color[i] = 2;
    }
    for (const Edge& e : g.edges()) {
      EXPECT_NE(color[e.u], color[e.v]) << g.name(e.u) << "-" << g.name(e.v) << " t=" << t;
    }
  }
}

TEST(ChromaticNumber, AgreesWithExhaustiveColoring) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(rng, 4 + trial % 6, 0.45);
    EXPECT_EQ(static_cast<int>(chromatic_number(g).colors), oracle::chromatic_number(g)) << "trial " << trial;
  }
  EXPECT_EQ(chromatic_number(Graph("empty", {}, {})).colors, 0u);
  EXPECT_EQ(chromatic_number(build_odd_cycle(7)).colors, 3u);
}

TEST(VertexCovers, MinimalCoversMatchSubsetEnumeration) {
  for (int t = 1; t <= 3; ++t) {
    const Graph g = build_ht(t);
    EXPECT_EQ(masks(enumerate_minimal_vertex_covers(g)), oracle::minimal_covers(g)) << "t=" << t;
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(rng, 3 + trial % 9, 0.4);
    EXPECT_EQ(masks(enumerate_minimal_vertex_covers(g)), oracle::minimal_covers(g)) << "trial " << trial;
  }
}

TEST(VertexCovers, MinimumCoversMatchSubsetEnumeration) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(rng, 3 + trial % 9, 0.35);
    std::uniform_int_distribution<oracle::Mask> pick(0, oracle::full(g));
    const oracle::Mask region = pick(rng);
    const auto got = masks(minimum_vertex_covers(g, VertexSet(region)));
    EXPECT_EQ(got, oracle::minimum_covers(g, region)) << "trial " << trial;
  }
}

TEST(VertexCovers, OddCyclesNeedHalfPlusOne) {
  for (int k : {3, 5, 7, 9}) {
    EXPECT_EQ(minimum_vertex_cover_size(build_odd_cycle(k)), static_cast<std::size_t>((k + 1) / 2)) << k;
  }
}

TEST(VertexCovers, YNeighborhoodCovers) {
  for (int t = 1; t <= 4; ++t) {
    const Graph g = build_ht(t);
    const VertexSet y1 = named(g, {"y1"});
    const auto c1 = minimum_vertex_covers(g, y1 | neighbors(g, y1));
    ASSERT_EQ(c1.size(), 1u);
    EXPECT_EQ(g.names_of(c1.front()), (std::vector<std::string>{"x2", "y1"}));
    for (int i = 2; i <= t; ++i) {
      const VertexSet yi = named(g, {"y" + std::to_string(i)});
      const auto ci = minimum_vertex_covers(g, yi | neighbors(g, yi));
      ASSERT_FALSE(ci.empty());
      for (VertexSet c : ci) {
        EXPECT_EQ(c.size(), 3u);
        EXPECT_TRUE(yi.is_subset_of(c));
      }
    }
  }
}

TEST(VertexCovers, EdgelessRegionHasEmptyCover) {
  const Graph g = build_ht(1);
  const auto covers = minimum_vertex_covers(g, named(g, {"x1", "x4"}));
  EXPECT_THAT(covers, ElementsAre(VertexSet{}));
}

TEST(InducedOddCycles, MatchSubsetEnumeration) {
  for (int t = 1; t <= 3; ++t) {
    const Graph g = build_ht(t);
    EXPECT_EQ(masks(enumerate_induced_odd_cycles(g)), oracle::induced_odd_cycles(g)) << "t=" << t;
  }
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(rng, 4 + trial % 8, 0.35);
    EXPECT_EQ(masks(enumerate_induced_odd_cycles(g)), oracle::induced_odd_cycles(g)) << "trial " << trial;
  }
}

TEST(InducedOddCycles, CountsForSmallHt) {
  EXPECT_EQ(enumerate_induced_odd_cycles(build_ht(1)).size(), 4u);
  EXPECT_EQ(enumerate_induced_odd_cycles(build_ht(2)).size(), 7u);
}

TEST(Clusters, MatchSubsetEnumeration) {
  for (int t = 1; t <= 3; ++t) {
    const Graph g = build_ht(t);
    for (int r = 1; r <= t + 1; ++r) {
      std::vector<oracle::Cluster> got;
      for (const ClusterDescriptor& c : enumerate_r_clusters(g, r)) {
        EXPECT_EQ(c.r, static_cast<std::size_t>(r));
        EXPECT_TRUE(is_valid_cluster(g, c));
        got.push_back({c.cycle.bits(), c.ys.bits()});
      }
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, oracle::clusters(g, r)) << "t=" << t << " r=" << r;
    }
  }
}

TEST(Clusters, SmallCounts) {
  const auto h1 = enumerate_r_clusters(build_ht(1), 1);
  ASSERT_EQ(h1.size(), 1u);
  EXPECT_EQ(h1.front().support(), build_ht(1).all());
  EXPECT_EQ(enumerate_r_clusters(build_ht(2), 1).size(), 3u);
  EXPECT_TRUE(enumerate_r_clusters(build_ht(1), 2).empty());
  EXPECT_THROW(enumerate_r_clusters(build_ht(1), 0), ContractError);
}

TEST(Clusters, ValidityChecks) {
  const Graph g = build_ht(2);
  const VertexSet xs = g.all() - g.y_vertices();
  EXPECT_TRUE(is_valid_cluster(g, {xs, named(g, {"y1"}), 1}));
  EXPECT_FALSE(is_valid_cluster(g, {xs, named(g, {"y1"}), 2}));
  EXPECT_FALSE(is_valid_cluster(g, {xs, named(g, {"x1"}), 1}));
  EXPECT_FALSE(is_valid_cluster(g, {named(g, {"x1", "x2", "y1"}), named(g, {"y2"}), 1}));
}
