#include <gtest/gtest.h>

#include <random>

#include "example_h4.hpp"
#include "htcover/covers.hpp"
#include "htcover/error.hpp"
#include "oracles.hpp"

using namespace htcover;

namespace {

std::set<oracle::Vec> vectors_of(const std::vector<AdmissibleVector>& vs) {
  std::set<oracle::Vec> out;
  for (const auto& v : vs) out.insert(v.vector.to_ints());
  return out;
}

bool is_one_cover_oracle(const Graph& g, const oracle::Vec& a) {
  for (const Edge& e : g.edges()) {
    if (a[e.u] + a[e.v] < 1) return false;
  }
  return std::any_of(a.begin(), a.end(), [](int x) { return x > 0; });
}

}  // namespace

TEST(KCover, Basics) {
  const Graph c5 = build_odd_cycle(5);
  EXPECT_TRUE(is_k_cover(c5, DegreeVector{1, 1, 1, 1, 1}, 2));
  EXPECT_FALSE(is_k_cover(c5, DegreeVector{1, 1, 1, 1, 1}, 3));
  EXPECT_TRUE(is_k_cover(c5, DegreeVector{1, 0, 1, 0, 1}, 1));
  EXPECT_FALSE(is_k_cover(c5, DegreeVector{1, 0, 1, 0, 0}, 1));
  EXPECT_THROW(is_k_cover(c5, DegreeVector(5), 1), ContractError);
  EXPECT_THROW(is_k_cover(c5, DegreeVector{1, 1, 1, 1, 1}, 0), ContractError);
  EXPECT_THROW(is_k_cover(c5, DegreeVector{1, 1}, 1), ContractError);
}

TEST(OneCoverDecomposition, AgreesWithPowerMembership) {
  std::mt19937_64 rng(41);
  for (const Graph& g : {build_ht(1), build_odd_cycle(5), build_ht(2)}) {
    const MonomialIdeal j = cover_ideal(g);
    for (int n = 1; n <= 4; ++n) {
      const auto gens = oracle::to_vecs(power(j, n));
      std::uniform_int_distribution<int> e(0, n + 1);
      for (int s = 0; s < 60; ++s) {
        oracle::Vec a(g.vertex_count());
        for (int& x : a) x = e(rng);
        const auto cert = decompose_into_one_covers(g, DegreeVector::from_ints(a), n);
        EXPECT_EQ(cert.has_value(), oracle::member(gens, a)) << g.label() << " n=" << n;
        if (!cert) continue;
        ASSERT_EQ(cert->summands.size(), static_cast<std::size_t>(n));
        oracle::Vec sum(g.vertex_count(), 0);
        for (const auto& b : cert->summands) {
          EXPECT_TRUE(is_one_cover_oracle(g, b.to_ints()));
          sum = oracle::add(sum, b.to_ints());
        }
        EXPECT_EQ(sum, a);
      }
    }
  }
}

TEST(OneCoverDecomposition, EdgelessGraph) {
  const Graph g("points", {{"a", VertexKind::kX}, {"b", VertexKind::kX}}, {});
  EXPECT_TRUE(decompose_into_one_covers(g, DegreeVector{2, 1}, 3).has_value());
  EXPECT_FALSE(decompose_into_one_covers(g, DegreeVector{1, 1}, 3).has_value());
  EXPECT_THROW(decompose_into_one_covers(g, DegreeVector{1, 1}, 0), ContractError);
}

TEST(OneCoverDecomposition, SearchBudget) {
  EnumerationLimits tiny;
  tiny.max_search_nodes = 1;
  const Graph g = build_ht(2);
  EXPECT_THROW(decompose_into_one_covers(g, DegreeVector::constant(9, g.all(), 3), 4, tiny), CapacityError);
}

TEST(MinimumOneCovers, CycleAndDegenerateRegion) {
  const Graph c5 = build_odd_cycle(5);
  const auto all = minimum_one_covers(c5);
  EXPECT_EQ(all.covers.size(), 5u);
  EXPECT_FALSE(all.degenerate);
  for (const auto& c : all.covers) EXPECT_EQ(c.total_degree(), 3);
  const auto none = minimum_one_covers(c5, IndexSet{0, 2});
  EXPECT_TRUE(none.degenerate);
  ASSERT_EQ(none.covers.size(), 1u);
  EXPECT_TRUE(none.covers.front().is_zero());
}

TEST(NAdmissible, MatchesDefinitionOracle) {
  for (int t = 1; t <= 2; ++t) {
    const Graph g = build_ht(t);
    for (VertexSet cycle : enumerate_induced_odd_cycles(g)) {
      for (int n = 3; n <= 5; ++n) {
        EXPECT_EQ(vectors_of(enumerate_n_admissible(cycle, g, n)), oracle::n_admissible(g, cycle.bits(), n))
            << "t=" << t << " n=" << n;
      }
    }
  }
}

TEST(NAdmissible, TriangleOfH1) {
  const Graph g = build_ht(1);
  const VertexSet tri = g.vertex_set({"x1", "x2", "y1"});
  const auto vs = enumerate_n_admissible(tri, g, 3);
  ASSERT_EQ(vs.size(), 3u);
  for (const auto& v : vs) {
    std::vector<int> on;
    for (std::size_t i : tri) on.push_back(v.vector[i]);
    std::sort(on.begin(), on.end());
    EXPECT_EQ(on, (std::vector<int>{2, 3, 3}));
    EXPECT_EQ(v.vector.support(), tri);
  }
  // Adding n-2 covers drawn from three choices gives n choose 2 vectors.
  for (int n = 3; n <= 7; ++n) EXPECT_EQ(enumerate_n_admissible(tri, g, n).size(), static_cast<std::size_t>(n * (n - 1) / 2));
}

TEST(NAdmissible, DegreeSumIdentity) {
  for (int t = 1; t <= 2; ++t) {
    const Graph g = build_ht(t);
    for (VertexSet cycle : enumerate_induced_odd_cycles(g)) {
      const int k = static_cast<int>(cycle.size());
      for (int n = 3; n <= 5; ++n) {
        for (const auto& v : enumerate_n_admissible(cycle, g, n)) {
          EXPECT_EQ(v.vector.total_degree(), 2 * k + (n - 2) * (k + 1) / 2);
        }
      }
    }
  }
}

TEST(NAdmissible, Contracts) {
  const Graph g = build_ht(1);
  const VertexSet tri = g.vertex_set({"x1", "x2", "y1"});
  EXPECT_THROW(enumerate_n_admissible(tri, g, 2), ContractError);
  EXPECT_THROW(enumerate_n_admissible(g.vertex_set({"x1", "x2", "x3"}), g, 3), ContractError);
}

TEST(NHatAdmissible, MatchesDefinitionOracle) {
  for (int t = 1; t <= 3; ++t) {
    const Graph g = build_ht(t);
    for (std::size_t r = 1; r <= static_cast<std::size_t>(t); ++r) {
      for (const ClusterDescriptor& c : enumerate_r_clusters(g, r)) {
        for (int n = 3; n <= (t == 3 ? 4 : 5); ++n) {
          EXPECT_EQ(vectors_of(enumerate_nhat_admissible(c, g, n)),
                    oracle::nhat_admissible(g, {c.cycle.bits(), c.ys.bits()}, n))
              << "t=" << t << " r=" << r << " n=" << n;
        }
      }
    }
  }
}

TEST(NHatAdmissible, WitnessFieldsAddUp) {
  const Graph g = build_ht(2);
  for (const ClusterDescriptor& c : enumerate_r_clusters(g, 1)) {
    for (const auto& v : enumerate_nhat_admissible(c, g, 5)) {
      ASSERT_TRUE(v.e.has_value());
      DegreeVector sum = v.base + *v.e;
      for (const auto& f : v.summands) sum += f;
      EXPECT_EQ(sum, v.vector);
      EXPECT_EQ(v.summands.size(), 2u);
      EXPECT_EQ(v.support, c.support());
    }
  }
}

TEST(NHatAdmissible, Contracts) {
  const Graph g = build_ht(1);
  const ClusterDescriptor c = enumerate_r_clusters(g, 1).front();
  EXPECT_THROW(enumerate_nhat_admissible(c, g, 2), ContractError);
  ClusterDescriptor bad = c;
  bad.r = 2;
  EXPECT_THROW(enumerate_nhat_admissible(bad, g, 3), ContractError);
}

TEST(WorkedExample, ClusterVectorIsAdmissible) {
  const Graph g = build_ht(4);
  const ClusterDescriptor cl = example_h4::cluster(g);
  ASSERT_TRUE(is_valid_cluster(g, cl));
  const DegreeVector c = example_h4::vector(g, example_h4::kC);
  const DegreeVector d = example_h4::vector(g, example_h4::kD);
  const DegreeVector e = example_h4::vector(g, example_h4::kE);
  const DegreeVector f1 = example_h4::vector(g, example_h4::kF1);
  const DegreeVector f2 = example_h4::vector(g, example_h4::kF2);
  EXPECT_EQ(d + e + f1 + f2, c);

  const auto all = enumerate_nhat_admissible(cl, g, 5);
  const auto found = std::find_if(all.begin(), all.end(), [&](const AdmissibleVector& v) { return v.vector == c; });
  ASSERT_NE(found, all.end());
  EXPECT_EQ(found->base, d);

  // The listed e and f satisfy the definition, checked by subset search.
  const oracle::Mask rest = (cl.cycle - neighbors(g, cl.ys)).bits();
  const auto rest_min = oracle::minimum_covers(g, rest);
  auto on = [&](const DegreeVector& v, oracle::Mask region) {
    oracle::Mask s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if ((region >> i & 1) && v[i] > 0) s |= oracle::Mask{1} << i;
    }
    return s;
  };
  EXPECT_EQ(on(e, ~rest), 0u);
  EXPECT_NE(std::find(rest_min.begin(), rest_min.end(), on(e, rest)), rest_min.end());
  for (const DegreeVector& f : {f1, f2}) {
    EXPECT_NE(std::find(rest_min.begin(), rest_min.end(), on(f, rest)), rest_min.end());
    for (std::size_t y : cl.ys) {
      const oracle::Mask reg = (VertexSet{y} | neighbors(g, VertexSet{y})).bits();
      const auto mins = oracle::minimum_covers(g, reg);
      EXPECT_NE(std::find(mins.begin(), mins.end(), on(f, reg)), mins.end()) << g.name(y);
    }
  }
}

TEST(WorkedExample, OptionCounts) {
  const Graph g = build_ht(4);
  const ClusterDescriptor cl = example_h4::cluster(g);
  const VertexSet rest = cl.cycle - neighbors(g, cl.ys);
  EXPECT_EQ(minimum_one_covers(g, rest).covers.size(), 4u);
  EXPECT_EQ(oracle::minimum_covers(g, rest.bits()).size(), 4u);
  std::set<oracle::Vec> got;
  for (const auto& v : enumerate_nhat_admissible(cl, g, 5)) got.insert(v.vector.to_ints());
  EXPECT_EQ(got, oracle::nhat_admissible(g, {cl.cycle.bits(), cl.ys.bits()}, 5));
}

TEST(DegreeSumBound, HoldsForEveryClusterVector) {
  for (int t = 1; t <= 2; ++t) {
    const Graph g = build_ht(t);
    for (std::size_t r = 1; r <= static_cast<std::size_t>(t); ++r) {
      for (const ClusterDescriptor& c : enumerate_r_clusters(g, r)) {
        for (int n = static_cast<int>(r) + 2; n <= 5; ++n) {
          for (const auto& v : enumerate_nhat_admissible(c, g, n)) EXPECT_TRUE(check_degree_sum_bound(c, v, n));
        }
      }
    }
  }
}

TEST(DegreeSumBound, WorkedExampleAndContract) {
  const Graph g = build_ht(4);
  const ClusterDescriptor cl = example_h4::cluster(g);
  AdmissibleVector v;
  v.vector = example_h4::vector(g, example_h4::kC);
  EXPECT_EQ(v.vector.total_degree(), 58);
  // k = 13, r = 2: 2 + 13 + 5 * (7 + 2) = 60.
  EXPECT_TRUE(check_degree_sum_bound(cl, v, 5));
  EXPECT_THROW(check_degree_sum_bound(cl, v, 3), ContractError);
}

TEST(LiftedClusterVectors, BaseCaseIsLiteral) {
  const Graph g = build_ht(2);
  for (std::size_t r = 1; r <= 2; ++r) {
    for (const ClusterDescriptor& c : enumerate_r_clusters(g, r)) {
      const int n0 = static_cast<int>(r) + 2;
      if (n0 < 3) continue;
      EXPECT_EQ(vectors_of(enumerate_lifted_cluster_vectors(c, g, n0)),
                vectors_of(enumerate_nhat_admissible(c, g, n0)));
      EXPECT_THROW(enumerate_lifted_cluster_vectors(c, g, n0 - 1), ContractError);
      const auto whole = oracle::minimum_covers(g, c.support().bits());
      for (const auto& v : enumerate_lifted_cluster_vectors(c, g, n0 + 2)) {
        // The last two summands are minimum covers of the whole cluster.
        ASSERT_GE(v.summands.size(), 2u);
        for (std::size_t k = v.summands.size() - 2; k < v.summands.size(); ++k) {
          EXPECT_NE(std::find(whole.begin(), whole.end(), v.summands[k].support().bits()), whole.end());
        }
        EXPECT_EQ(v.n, n0 + 2);
      }
    }
  }
}
