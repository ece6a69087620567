#include <gtest/gtest.h>

#include "onion/flow.hpp"
#include "onion/generate.hpp"
#include "onion/oracle.hpp"

using namespace onion;

namespace {

VertexId V(int i) { return VertexId{i}; }

// Every returned path must be a simple source -> sink path, and the family
// must be pairwise arc-disjoint.
void expect_family(const MultiDigraph& d, const DisjointPathFamily& f) {
  auto src = membership(d, f.sources);
  auto snk = membership(d, f.sinks);
  for (const auto& p : f.paths) {
    ASSERT_FALSE(p.empty());
    ASSERT_TRUE(is_valid_path(d, p));
    EXPECT_TRUE(is_simple(d, p));
    EXPECT_TRUE(src[path_tail(d, p).index()]);
    EXPECT_TRUE(snk[path_head(d, p).index()]);
  }
  EXPECT_TRUE(pairwise_arc_disjoint(f.paths));
}

}  // namespace

TEST(Flow, OnionDirections) {
  auto d = onion_pattern();
  EXPECT_EQ(mu(d, V(0), V(1)), 2u);
  EXPECT_EQ(mu(d, V(1), V(0)), 1u);
}

TEST(Flow, ArclessAndUnreachable) {
  MultiDigraph d(3);
  EXPECT_EQ(mu(d, V(0), V(2)), 0u);
  auto cut = min_cut(d, V(0), V(2));
  EXPECT_EQ(cut.size, 0u);
  EXPECT_EQ(cut.source_side, (std::vector<VertexId>{V(0)}));
}

TEST(Flow, Contracts) {
  MultiDigraph d(2);
  d.add_arc(V(0), V(1));
  EXPECT_THROW(min_cut(d, V(0), V(0)), contract_violation);
  EXPECT_THROW(mu(d, V(0), V(5)), structural_error);
  std::vector<VertexId> both{V(0), V(1)};
  std::vector<VertexId> one{V(1)};
  EXPECT_THROW(max_disjoint_paths(d, both, one), contract_violation);
  std::vector<VertexId> none;
  EXPECT_THROW(max_disjoint_paths(d, none, one), contract_violation);
}

TEST(Flow, SetTerminals) {
  MultiDigraph d(4);
  d.add_arc(V(0), V(2));
  d.add_arc(V(1), V(2));
  d.add_arc(V(1), V(3));
  d.add_arc(V(2), V(3));
  std::vector<VertexId> S{V(0), V(1)}, T{V(3)};
  auto f = max_disjoint_paths(d, S, T);
  EXPECT_EQ(f.size(), 2u);
  expect_family(d, f);
}

TEST(Flow, DecompositionDropsCycles) {
  MultiDigraph d(4);
  d.add_arc(V(0), V(1));  // 0
  d.add_arc(V(1), V(2));  // 1
  d.add_arc(V(2), V(1));  // 2
  d.add_arc(V(1), V(3));  // 3
  std::vector<ArcId> support{ArcId{0}, ArcId{1}, ArcId{2}, ArcId{3}};
  auto paths = decompose_flow(d, support, V(0), V(3));
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_TRUE(is_simple(d, paths[0]));
  EXPECT_EQ(paths[0], (Path{ArcId{0}, ArcId{3}}));
}

TEST(Flow, DecompositionRejectsNonFlow) {
  MultiDigraph d(3);
  d.add_arc(V(0), V(1));
  d.add_arc(V(1), V(2));
  std::vector<ArcId> broken{ArcId{1}};
  EXPECT_THROW(decompose_flow(d, broken, V(0), V(2)), contract_violation);
}

TEST(Flow, MengerOnRandomDigraphs) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    std::size_t n = 2 + seed % 12;
    auto d = random_digraph(n, seed % 40, seed);
    VertexId s{0}, t{static_cast<std::uint32_t>(n - 1)};
    auto f = max_disjoint_paths(d, s, t);
    expect_family(d, f);
    auto cut = min_cut(d, s, t);
    EXPECT_EQ(f.size(), cut.size) << "seed " << seed;
    EXPECT_EQ(boundary(d, cut.source_side, Direction::out).size(), cut.size);
  }
}

TEST(Flow, AgreesWithBruteForceOnSmallDigraphs) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    std::size_t n = 2 + seed % 4;
    auto d = random_digraph(n, seed % 9, seed * 7 + 1);
    EXPECT_EQ(mu(d, V(0), VertexId{n - 1}), max_disjoint_brute(d, V(0), VertexId{n - 1}))
        << "seed " << seed;
  }
}

TEST(Flow, Deterministic) {
  auto d = random_digraph(10, 40, 99);
  auto a = max_disjoint_paths(d, V(0), V(9));
  auto b = max_disjoint_paths(d, V(0), V(9));
  EXPECT_EQ(a.paths, b.paths);
}
