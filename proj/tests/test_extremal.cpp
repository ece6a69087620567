#include <gtest/gtest.h>

#include <random>

#include "onion/extremal.hpp"

using namespace onion;

namespace {

BipartiteGraph random_bipartite(std::size_t l, std::size_t r, unsigned percent,
                                std::mt19937_64& rng) {
  BipartiteGraph g(l, r);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (rng() % 100 < percent) g.add_edge(i, j);
  return g;
}

// Brute force over all pairs of k-subsets, bitmask based.
bool brute_has(const BipartiteGraph& g, std::size_t k, bool complete) {
  const std::size_t L = g.left_size(), R = g.right_size();
  for (std::uint32_t a = 0; a < (1u << L); ++a) {
    if (static_cast<std::size_t>(__builtin_popcount(a)) != k) continue;
    for (std::uint32_t b = 0; b < (1u << R); ++b) {
      if (static_cast<std::size_t>(__builtin_popcount(b)) != k) continue;
      bool ok = true;
      for (std::size_t i = 0; i < L && ok; ++i) {
        if (!(a >> i & 1)) continue;
        for (std::size_t j = 0; j < R && ok; ++j) {
          if (b >> j & 1) ok = g.has_edge(i, j) == complete;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

TEST(Thomason, AgreesWithBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t L = 2 + rng() % 5, R = 2 + rng() % 5, k = 1 + rng() % 3;
    auto g = random_bipartite(L, R, 20 + rng() % 60, rng);
    auto bc = biclique_search(g, k);
    EXPECT_EQ(bc.has_value(), brute_has(g, k, true));
    if (bc) {
      EXPECT_EQ(bc->left.size(), k);
      EXPECT_EQ(bc->right.size(), k);
      EXPECT_TRUE(is_biclique(g, *bc));
    }
    auto ac = anticomplete_search(g, k);
    EXPECT_EQ(ac.has_value(), brute_has(g, k, false));
    if (ac) {
      EXPECT_TRUE(is_anticomplete(g, *ac));
    }
    auto th = thomason_search(g, k);
    EXPECT_EQ(th.has_value(), bc.has_value() || ac.has_value());
    if (th) {
      SidePair sp{th->left, th->right};
      if (th->tag == ThomasonOutcome::Tag::biclique) {
        EXPECT_TRUE(is_biclique(g, sp));
      } else {
        EXPECT_FALSE(bc.has_value());
        EXPECT_TRUE(is_anticomplete(g, sp));
      }
    }
  }
}

TEST(Thomason, FiveByFiveAlwaysSplitsAtTwo) {
  // b(2) <= 5: every 5 x 5 bipartite graph has a 2 x 2 complete or
  // anti-complete pair.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20000; ++trial) {
    auto g = random_bipartite(5, 5, rng() % 101, rng);
    ASSERT_TRUE(thomason_search(g, 2).has_value()) << trial;
  }
}

TEST(Thomason, EdgeCases) {
  BipartiteGraph g(3, 3);
  EXPECT_THROW(thomason_search(g, 0), contract_violation);
  EXPECT_FALSE(thomason_search(g, 4).has_value());
  auto hit = thomason_search(g, 3);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->tag, ThomasonOutcome::Tag::anticomplete);
  EXPECT_TRUE(biclique_search(g, 0).has_value());
  EXPECT_FALSE(biclique_search(g, 1).has_value());
}

TEST(Bounds, SmallValuesOfB) {
  Bounds B;
  const int expected[] = {1, 5, 17, 49, 129};
  for (std::uint64_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(B.b(n).value(), expected[n - 1]) << "n = " << n;
  }
  EXPECT_EQ(bounds("b", {3}).value(), 17);
}

TEST(Bounds, FrozenGAndF) {
  Bounds B;
  EXPECT_EQ(B.g(1).value(), 512);
  EXPECT_EQ(B.g(2).value(), 8388608);
  auto f1 = B.f(1);
  ASSERT_FALSE(f1.is_overflow());
  auto s = f1.value().str();
  EXPECT_EQ(s.size(), 2184u);
  EXPECT_EQ(s.substr(0, 20), "70495545561472216729");
  EXPECT_EQ(s.substr(s.size() - 20), "63851684158905516032");
  EXPECT_EQ(f1.value() % 3, 0);
}

TEST(Bounds, OverflowKeepsResidue) {
  Bounds B;
  for (std::uint64_t n = 2; n <= 4; ++n) {
    auto f = B.f(n);
    EXPECT_TRUE(f.is_overflow());
    ASSERT_TRUE(f.residue_mod3().has_value());
    EXPECT_EQ(*f.residue_mod3(), 0u);
    EXPECT_EQ(f.compare(BigInt(6 * n)), 1);
  }
  EXPECT_TRUE(B.F(1).is_overflow());
  EXPECT_TRUE(B.f_thm(1).is_overflow());
  EXPECT_THROW(B.F(1).value(), contract_violation);
}

TEST(Bounds, DigitCapIsRespected) {
  Bounds tiny(3);
  EXPECT_EQ(tiny.b(2).value(), 5);
  // (16 c(2))^2 = 1024 exceeds the cap before the halving.
  EXPECT_TRUE(tiny.g(1).is_overflow());
  EXPECT_EQ(Bounds(4).g(1).value(), 512);
  EXPECT_TRUE(tiny.b(8).is_overflow());  // 1793
  EXPECT_THROW(Bounds(0), contract_violation);
}

TEST(Bounds, Dispatch) {
  EXPECT_EQ(bounds("c", {7}).value(), 7);
  EXPECT_EQ(bounds("g_tk", {1, 1}, 10).to_string(), "overflow(>10 digits)");
  EXPECT_THROW(bounds("zeta", {1}), contract_violation);
  EXPECT_THROW(bounds("b", {}), contract_violation);
  EXPECT_THROW(bounds("b", {1, 2}), contract_violation);
  EXPECT_THROW(bounds("b", {0}), contract_violation);
}

TEST(Bounds, MonotoneWhereExact) {
  Bounds B;
  for (std::uint64_t n = 1; n < 30; ++n) {
    EXPECT_LT(B.b(n).value(), B.b(n + 1).value());
  }
  EXPECT_EQ(BigBound::digits(BigInt(0)), 1u);
  EXPECT_EQ(BigBound::digits(BigInt(999)), 3u);
  EXPECT_EQ(BigBound::digits(BigInt(1000)), 4u);
}
