#include <gtest/gtest.h>

#include "onion/generate.hpp"
#include "onion/harvest.hpp"

using namespace onion;

namespace {

WellCrossingInstance ordered(std::size_t n) {
  GridGadgetOptions o;
  o.p_count = n;
  o.q_count = n;
  o.ordered = true;
  return grid_gadget(o);
}

WellCrossingInstance shuffled(std::size_t p, std::size_t q, std::uint64_t seed) {
  GridGadgetOptions o;
  o.p_count = p;
  o.q_count = q;
  o.double_crossing_percent = 25;
  o.merge_attempts = 10;
  o.seed = seed;
  return grid_gadget(o);
}

// Number of P paths that meet Q strictly after position k.
std::size_t crossing_after(const WellCrossingPair& w, const Path& Q, std::size_t k) {
  std::size_t n = 0;
  for (const auto& P : w.P) {
    for (std::size_t i = k + 1; i < Q.size(); ++i) {
      if (P.contains(Q[i])) {
        ++n;
        break;
      }
    }
  }
  return n;
}

}  // namespace

TEST(Pivot, SmallestArcWithAThirdAfterIt) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = shuffled(3 + seed % 7, 1 + seed % 5, seed);
    ASSERT_TRUE(is_well_crossing(g.digraph, g.pair).ok());
    for (std::size_t q = 0; q < g.pair.Q.size(); ++q) {
      auto [e, tail] = pivot_arc(g.pair, q);
      const Path& Q = g.pair.Q[q];
      std::size_t k = *Q.position(e);
      std::size_t target = g.pair.P.size() / 3;
      EXPECT_EQ(crossing_after(g.pair, Q, k), target);
      for (std::size_t j = 0; j < k; ++j) EXPECT_NE(crossing_after(g.pair, Q, j), target);
      EXPECT_EQ(tail, trim(Q, e, Trim::after_closed));
    }
  }
}

TEST(Pivot, Contracts) {
  auto g = ordered(3);
  EXPECT_THROW(pivot_arc(g.pair, 3), contract_violation);
}

TEST(HarvestSingle, OrderedGadgetIsHarvested) {
  auto g = ordered(9);
  auto out = harvest_single(g.digraph, g.pair, 1);
  ASSERT_TRUE(conclusive(out)) << std::get<Inconclusive>(out).stage;
  const auto& r = std::get<HarvestResult>(out);
  auto rep = verify_harvest(g.digraph, g.pair, r, 1);
  EXPECT_TRUE(rep.ok()) << to_string(rep.clause) << ": " << rep.detail;
  EXPECT_EQ(r.onion.source, g.pair.root);
}

TEST(HarvestSingle, SafeOnlyPathUsesTheBicliqueBranch) {
  // On the last Q path of an ordered grid every crossing has all other Q
  // paths before it, so no crossing is dangerous.
  for (std::size_t n : {9, 12}) {
    auto g = ordered(n);
    HarvestOptions opts;
    opts.only_q = n - 1;
    auto out = harvest_single(g.digraph, g.pair, 1, opts);
    ASSERT_TRUE(conclusive(out)) << n << ": " << std::get<Inconclusive>(out).detail;
    const auto& r = std::get<HarvestResult>(out);
    EXPECT_TRUE(verify_harvest(g.digraph, g.pair, r, 1).ok());
    EXPECT_GE(r.residual.P.size(), 2u);
  }
}

TEST(HarvestSingle, RandomGadgetsAreSoundOrInconclusive) {
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto g = shuffled(6 + seed % 10, 6 + seed % 8, seed);
    ASSERT_TRUE(is_well_crossing(g.digraph, g.pair).ok());
    auto out = harvest_single(g.digraph, g.pair, 1);
    if (auto* r = std::get_if<HarvestResult>(&out)) {
      ++hits;
      auto rep = verify_harvest(g.digraph, g.pair, *r, 1);
      EXPECT_TRUE(rep.ok()) << seed << ": " << to_string(rep.clause) << " " << rep.detail;
    } else {
      EXPECT_FALSE(std::get<Inconclusive>(out).stage.empty());
    }
  }
  EXPECT_GT(hits, 75u);
}

TEST(HarvestSingle, ResidualCapIsHonoured) {
  auto g = ordered(12);
  HarvestOptions opts;
  opts.residual_cap = 2;
  auto out = harvest_single(g.digraph, g.pair, 1, opts);
  ASSERT_TRUE(conclusive(out));
  const auto& r = std::get<HarvestResult>(out);
  EXPECT_LE(r.residual.P.size(), 2u);
  EXPECT_LE(r.residual.Q.size(), 2u);
}

TEST(HarvestSingle, Contracts) {
  auto g = ordered(4);
  EXPECT_THROW(harvest_single(g.digraph, g.pair, 0), contract_violation);
  auto broken = g.pair;
  broken.P[0] = Path{};
  EXPECT_THROW(harvest_single(g.digraph, broken, 1), contract_violation);
  HarvestOptions opts;
  opts.only_q = 9;
  EXPECT_THROW(harvest_single(g.digraph, g.pair, 1, opts), contract_violation);
}

TEST(HarvestSingle, TinyInstanceIsInconclusiveNotWrong) {
  auto g = ordered(1);
  auto out = harvest_single(g.digraph, g.pair, 1);
  EXPECT_FALSE(conclusive(out));
}

TEST(VerifyHarvest, DetectsTampering) {
  auto g = ordered(9);
  auto out = harvest_single(g.digraph, g.pair, 1);
  ASSERT_TRUE(conclusive(out));
  auto r = std::get<HarvestResult>(out);

  auto bad = r;
  bad.onion.back_path = bad.onion.out_paths[0];
  EXPECT_EQ(verify_harvest(g.digraph, g.pair, bad).clause,
            HarvestReport::Clause::onion_model);

  bad = r;
  bad.residual.P.push_back(r.onion.out_paths[0]);
  EXPECT_FALSE(verify_harvest(g.digraph, g.pair, bad).ok());

  bad = r;
  EXPECT_EQ(verify_harvest(g.digraph, g.pair, bad, r.residual.P.size() + 1).clause,
            HarvestReport::Clause::residual_size);
}

TEST(HarvestMany, BothDirections) {
  auto g = ordered(20);
  for (Direction dir : {Direction::out, Direction::in}) {
    auto out = harvest_many(g.digraph, g.pair, 2, 1, dir);
    ASSERT_TRUE(conclusive(out)) << std::get<Inconclusive>(out).stage;
    const auto& h = std::get<HarvestFamily>(out);
    EXPECT_EQ(h.onions.size(), 2u);
    auto rep = verify_harvest_family(g.digraph, g.pair, h, dir, 1);
    EXPECT_TRUE(rep.ok()) << to_string(rep.clause) << ": " << rep.detail;
  }
}

TEST(HarvestMany, ZeroOnionsReturnsInput) {
  auto g = ordered(3);
  auto out = harvest_many(g.digraph, g.pair, 0, 1, Direction::out);
  ASSERT_TRUE(conclusive(out));
  EXPECT_EQ(std::get<HarvestFamily>(out).residual.P, g.pair.P);
}

TEST(HarvestOnionStar, OrderedGadgets) {
  for (std::size_t n : {9, 12, 20}) {
    auto g = ordered(n);
    auto out = harvest_onion_star(g.digraph, g.pair, 1);
    ASSERT_TRUE(conclusive(out)) << n << ": " << std::get<Inconclusive>(out).stage;
    const auto& s = std::get<OnionStarModel>(out);
    EXPECT_EQ(s.center, g.pair.root);
    EXPECT_TRUE(verify_onion_star(g.digraph, s).ok());
  }
}

TEST(HarvestOnionStar, StageIsPrefixedWhenItFails) {
  auto g = ordered(3);
  auto out = harvest_onion_star(g.digraph, g.pair, 1);
  ASSERT_FALSE(conclusive(out));
  EXPECT_EQ(std::get<Inconclusive>(out).stage.rfind("out-onions/", 0), 0u);
  EXPECT_THROW(harvest_onion_star(g.digraph, g.pair, 0), contract_violation);
}

TEST(AssembleOnionStar, NeedsEnoughOnions) {
  auto g = ordered(3);
  EXPECT_FALSE(assemble_onion_star(g.digraph, g.pair.root, {}, {}, 1));
}
