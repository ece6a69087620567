#include <gtest/gtest.h>

#include <random>

#include "onion/digraph.hpp"
#include "onion/generate.hpp"

using namespace onion;

namespace {

VertexId V(int i) { return VertexId{i}; }
ArcId A(int i) { return ArcId{i}; }

}  // namespace

TEST(MultiDigraph, ParallelArcsAreDistinct) {
  MultiDigraph d(2);
  auto a = d.add_arc(V(0), V(1));
  auto b = d.add_arc(V(0), V(1));
  EXPECT_NE(a, b);
  EXPECT_EQ(d.arc_count(), 2u);
  EXPECT_EQ(d.out_degree(V(0)), 2u);
  EXPECT_EQ(d.in_degree(V(1)), 2u);
  EXPECT_EQ(d.endpoints(a), d.endpoints(b));
}

TEST(MultiDigraph, RejectsLoopsAndUnknownVertices) {
  MultiDigraph d(2);
  EXPECT_THROW(d.add_arc(V(0), V(0)), contract_violation);
  EXPECT_THROW(d.add_arc(V(0), V(2)), structural_error);
  EXPECT_EQ(d.arc_count(), 0u);
}

TEST(MultiDigraph, IdsAreDenseInInsertionOrder) {
  MultiDigraph d;
  EXPECT_EQ(d.add_vertex(), V(0));
  EXPECT_EQ(d.add_vertex(), V(1));
  EXPECT_EQ(d.add_arc(V(1), V(0)), A(0));
  EXPECT_EQ(d.add_arc(V(0), V(1)), A(1));
  EXPECT_EQ(d.tail(A(0)), V(1));
  EXPECT_EQ(d.head(A(1)), V(1));
}

TEST(Trim, FiveForms) {
  Path p{A(1), A(2), A(3), A(4)};
  EXPECT_EQ(trim(p, A(2), Trim::before_open), (Path{A(1)}));
  EXPECT_EQ(trim(p, A(2), Trim::before_closed), (Path{A(1), A(2)}));
  EXPECT_EQ(trim(p, A(2), Trim::after_open), (Path{A(3), A(4)}));
  EXPECT_EQ(trim(p, A(2), Trim::after_closed), (Path{A(2), A(3), A(4)}));
  EXPECT_EQ(trim_between(p, A(1), A(4)), (Path{A(2), A(3)}));
  EXPECT_TRUE(trim_between(p, A(2), A(3)).empty());
}

TEST(Trim, EdgeCases) {
  Path single{A(7)};
  EXPECT_TRUE(trim(single, A(7), Trim::before_open).empty());
  EXPECT_TRUE(trim(single, A(7), Trim::after_open).empty());
  EXPECT_THROW(trim(single, A(3), Trim::before_open), not_found_error);
  Path p{A(1), A(2)};
  EXPECT_THROW(trim_between(p, A(2), A(1)), contract_violation);
  EXPECT_THROW(trim_between(p, A(1), A(9)), not_found_error);
}

TEST(Trim, PiecesReassemble) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t len = 1 + rng() % 8;
    std::vector<ArcId> as;
    for (std::size_t i = 0; i < len; ++i) as.emplace_back(10 * i + 3);
    Path p(as);
    ArcId a = as[rng() % len];
    auto left = trim(p, a, Trim::before_open).arcs();
    auto right = trim(p, a, Trim::after_closed).arcs();
    left.insert(left.end(), right.begin(), right.end());
    EXPECT_EQ(Path(left), p);
    EXPECT_EQ(trim(p, a, Trim::before_closed).size() +
                  trim(p, a, Trim::after_open).size(),
              p.size());
  }
}

TEST(Concatenate, EmptyIsNeutral) {
  MultiDigraph d(3);
  d.add_arc(V(0), V(1));
  d.add_arc(V(1), V(2));
  Path p{A(0)}, q{A(1)};
  EXPECT_EQ(concatenate(d, Path{}, p), p);
  EXPECT_EQ(concatenate(d, p, Path{}), p);
  EXPECT_EQ(concatenate(d, p, q), (Path{A(0), A(1)}));
  EXPECT_THROW(concatenate(d, q, p), contract_violation);
}

TEST(Concatenate, SharedArcRejected) {
  MultiDigraph d(2);
  d.add_arc(V(0), V(1));
  d.add_arc(V(1), V(0));
  Path p{A(0), A(1)};
  EXPECT_THROW(concatenate(d, p, Path{A(0)}), contract_violation);
}

TEST(Path, ValidityAndSimplicity) {
  MultiDigraph d(3);
  d.add_arc(V(0), V(1));  // 0
  d.add_arc(V(1), V(0));  // 1
  d.add_arc(V(0), V(2));  // 2
  Path closed{A(0), A(1), A(2)};
  EXPECT_TRUE(is_valid_path(d, closed));
  EXPECT_FALSE(is_simple(d, closed));
  EXPECT_TRUE(is_simple(d, Path{A(0)}));
  EXPECT_FALSE(is_valid_path(d, Path{A(0), A(2)}));
  EXPECT_FALSE(is_valid_path(d, Path{A(0), A(1), A(0)}));
  EXPECT_THROW(validate_path(d, Path{A(9)}), structural_error);
  EXPECT_EQ(path_tail(d, closed), V(0));
  EXPECT_EQ(path_head(d, closed), V(2));
  EXPECT_THROW(path_tail(d, Path{}), contract_violation);
}

TEST(Reverse, InvolutionAndOrientation) {
  auto d = random_digraph(6, 15, 3);
  auto r = reverse(d);
  EXPECT_EQ(reverse(r), d);
  for (ArcId a : d.arcs()) {
    EXPECT_EQ(r.tail(a), d.head(a));
    EXPECT_EQ(r.head(a), d.tail(a));
  }
  MultiDigraph line(3);
  line.add_arc(V(0), V(1));
  line.add_arc(V(1), V(2));
  Path p{A(0), A(1)};
  auto rp = reverse(p);
  EXPECT_TRUE(is_valid_path(reverse(line), rp));
  EXPECT_EQ(path_tail(reverse(line), rp), V(2));
  EXPECT_EQ(reverse(rp), p);
}

TEST(Boundary, OutAndInSidesAscending) {
  MultiDigraph d(4);
  d.add_arc(V(0), V(2));  // 0 out
  d.add_arc(V(1), V(0));  // 1 internal
  d.add_arc(V(3), V(1));  // 2 in
  d.add_arc(V(1), V(3));  // 3 out
  d.add_arc(V(2), V(3));  // 4 outside
  std::vector<VertexId> X{V(1), V(0)};
  EXPECT_EQ(boundary(d, X, Direction::out), (std::vector<ArcId>{A(0), A(3)}));
  EXPECT_EQ(boundary(d, X, Direction::in), (std::vector<ArcId>{A(2)}));
  EXPECT_EQ(complement(d, X), (std::vector<VertexId>{V(2), V(3)}));
}

TEST(Families, ArcDisjointness) {
  std::vector<Path> f{Path{A(0), A(1)}, Path{A(2)}};
  EXPECT_TRUE(pairwise_arc_disjoint(f));
  f.push_back(Path{A(1)});
  EXPECT_FALSE(pairwise_arc_disjoint(f));
  EXPECT_TRUE(share_arc(f[0], f[2]));
  EXPECT_FALSE(share_arc(f[0], f[1]));
}
