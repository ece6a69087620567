#pragma once

// Top-level pipelines: the onion-star / uncrossed-flow dichotomy, the
// linked-set procedure that turns large pairwise flows into an onion star,
// and the embedding of degree-bounded digraphs into an onion star.
//
// Every bound in these procedures is astronomically large, so callers pass
// working thresholds instead; every returned object is verified.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "onion/crossing.hpp"
#include "onion/digraph.hpp"
#include "onion/errors.hpp"
#include "onion/extremal.hpp"
#include "onion/flow.hpp"
#include "onion/generate.hpp"
#include "onion/harvest.hpp"
#include "onion/oracle.hpp"

namespace onion {

struct DichotomyOutcome {
  enum class Tag { onion_star, uncrossed, inconclusive };
  Tag tag = Tag::inconclusive;
  std::optional<OnionStarModel> star;
  // P' (from y) and Q' (into y), k paths each, all 2k pairwise arc-disjoint.
  std::optional<std::pair<PathFamily, PathFamily>> families;
  std::string stage;  // inconclusive only
  std::string detail;
};

inline const char* to_string(DichotomyOutcome::Tag t) {
  switch (t) {
    case DichotomyOutcome::Tag::onion_star: return "onion-star";
    case DichotomyOutcome::Tag::uncrossed: return "uncrossed";
    case DichotomyOutcome::Tag::inconclusive: return "inconclusive";
  }
  return "?";
}

// k paths from y into Z, k paths from Z into y, all simple, all pairwise
// arc-disjoint.
inline bool verify_uncrossed(const MultiDigraph& d, VertexId y,
                             std::span<const VertexId> Z, const PathFamily& P,
                             const PathFamily& Q, std::size_t k) {
  if (P.size() != k || Q.size() != k) return false;
  auto inZ = membership(d, Z);
  for (const auto& p : P) {
    if (p.empty() || !is_valid_path(d, p)) return false;
    if (path_tail(d, p) != y || !inZ[path_head(d, p).index()]) return false;
  }
  for (const auto& q : Q) {
    if (q.empty() || !is_valid_path(d, q)) return false;
    if (path_head(d, q) != y || !inZ[path_tail(d, q).index()]) return false;
  }
  PathFamily all = P;
  all.insert(all.end(), Q.begin(), Q.end());
  return pairwise_arc_disjoint(all);
}

struct DichotomyOptions {
  HarvestOptions harvest;
};

// The dichotomy on given families: P runs from y into Z, Q from Z into y.
// Thomason's search with n = max(k, N_w) on the intersection graph gives
// either a well-crossing pair, which is harvested into a t-onion star, or
// an arc-disjoint pair of subfamilies, of which k paths each are returned.
inline DichotomyOutcome onion_or_uncross_families(
    const MultiDigraph& d, VertexId y, std::span<const VertexId> Z,
    const PathFamily& P, const PathFamily& Q, std::size_t t, std::size_t k,
    std::size_t working_threshold, DichotomyOptions opts = {}) {
  using Tag = DichotomyOutcome::Tag;
  if (t == 0 || k == 0) throw contract_violation("dichotomy needs t, k >= 1");
  auto inconclusive = [](std::string stage, std::string detail) {
    DichotomyOutcome o;
    o.stage = std::move(stage);
    o.detail = std::move(detail);
    return o;
  };
  auto uncrossed = [&](const std::vector<std::size_t>& left,
                       const std::vector<std::size_t>& right)
      -> std::optional<DichotomyOutcome> {
    PathFamily Pk, Qk;
    for (std::size_t i = 0; i < k; ++i) {
      Pk.push_back(P[left[i]]);
      Qk.push_back(Q[right[i]]);
    }
    if (!verify_uncrossed(d, y, Z, Pk, Qk, k)) return std::nullopt;
    DichotomyOutcome o;
    o.tag = Tag::uncrossed;
    o.families.emplace(std::move(Pk), std::move(Qk));
    return o;
  };

  const std::size_t N = std::max(k, working_threshold);
  auto G = intersection_graph(P, Q);
  auto split = thomason_search(G, N);
  if (!split) {
    return inconclusive("thomason", "no " + std::to_string(N) + "x" +
                                        std::to_string(N) +
                                        " complete or anti-complete pair in a " +
                                        std::to_string(P.size()) + "x" +
                                        std::to_string(Q.size()) +
                                        " intersection graph");
  }
  if (split->tag == ThomasonOutcome::Tag::anticomplete) {
    if (auto o = uncrossed(split->left, split->right)) return *o;
    throw std::logic_error("anti-complete families are not arc-disjoint");
  }

  WellCrossingPair pair{{}, {}, y};
  for (auto i : split->left) pair.P.push_back(P[i]);
  for (auto j : split->right) pair.Q.push_back(Q[j]);
  auto star = harvest_onion_star(d, pair, t, opts.harvest);
  if (auto* s = std::get_if<OnionStarModel>(&star)) {
    DichotomyOutcome o;
    o.tag = Tag::onion_star;
    o.star = std::move(*s);
    return o;
  }
  // The complete side did not yield a star at this size; an anti-complete
  // k x k pair elsewhere in the graph still settles the dichotomy.
  if (auto anti = anticomplete_search(G, k)) {
    if (auto o = uncrossed(anti->left, anti->right)) return *o;
  }
  const auto& inc = std::get<Inconclusive>(star);
  return inconclusive("harvest/" + inc.stage, inc.detail);
}

// Maximum families of arc-disjoint simple paths y -> Z and Z -> y, then the
// dichotomy on them.
inline DichotomyOutcome onion_or_uncross(const MultiDigraph& d, VertexId y,
                                         std::span<const VertexId> Z,
                                         std::size_t t, std::size_t k,
                                         std::size_t working_threshold,
                                         DichotomyOptions opts = {}) {
  if (!d.has_vertex(y)) throw structural_error("y is not a vertex");
  if (Z.empty()) throw contract_violation("Z must be nonempty");
  for (VertexId z : Z) {
    if (!d.has_vertex(z)) throw structural_error("Z contains a non-vertex");
    if (z == y) throw contract_violation("y must not belong to Z");
  }
  VertexId ys[] = {y};
  auto P = max_disjoint_paths(d, ys, Z).paths;
  auto Q = max_disjoint_paths(d, Z, ys).paths;
  return onion_or_uncross_families(d, y, Z, P, Q, t, k, working_threshold,
                                   opts);
}

// ---------------------------------------------------------------------------

struct LinkedSetInstance {
  MultiDigraph d;
  std::vector<VertexId> X;
  std::size_t t = 1;
};

// Family size after iteration p (1-based, p <= 4t^2).
using BudgetSchedule = std::function<std::size_t(std::size_t p)>;

struct NoCutOptions {
  BudgetSchedule schedule;  // empty: constant B
  DichotomyOptions dichotomy;
};

// Linked-set procedure. X is enumerated as y < x_1 < ... < x_2t. An extra
// vertex v gets B arcs to and from every x_i; maximum v -> y and y -> v
// flows are split by leaf into P_i (x_i -> y) and Q_i (y -> x_i), and the
// dichotomy is run on every (P_i, Q_j) in row-major order. If every round
// uncrosses, two paths per family form an onion star centered at y.
inline Outcome<OnionStarModel> no_cut_to_onion_star(
    const LinkedSetInstance& inst, std::size_t B, NoCutOptions opts = {}) {
  const auto& d = inst.d;
  const std::size_t t = inst.t;
  if (t == 0) throw contract_violation("linked set needs t >= 1");
  auto X = detail::dedupe(inst.X);
  if (X.size() != inst.X.size() || X.size() != 2 * t + 1) {
    throw contract_violation("X must consist of exactly 2t+1 distinct vertices");
  }
  for (VertexId x : X)
    if (!d.has_vertex(x)) throw structural_error("X contains a non-vertex");
  if (B < 2) throw contract_violation("budget B must be at least 2");
  auto schedule = opts.schedule ? opts.schedule
                                : BudgetSchedule([B](std::size_t) { return B; });

  const VertexId y = X.front();
  const std::vector<VertexId> xs(X.begin() + 1, X.end());
  const std::size_t L = xs.size();  // 2t
  const std::size_t target = L * B;

  MultiDigraph aux = d;
  const VertexId v = aux.add_vertex();
  for (VertexId x : xs) {
    for (std::size_t c = 0; c < B; ++c) aux.add_arc(v, x);
    for (std::size_t c = 0; c < B; ++c) aux.add_arc(x, v);
  }

  // If the flow falls short, a minimum cut separates some x_i from y with
  // fewer than LB arcs; the x_i on the wrong side with the smallest flow is
  // named.
  auto deficient = [&](bool into_y) -> std::optional<Inconclusive> {
    auto flow = into_y ? max_disjoint_paths(aux, v, y) : max_disjoint_paths(aux, y, v);
    if (flow.size() == target) return std::nullopt;
    auto cut = into_y ? min_cut(aux, v, y) : min_cut(aux, y, v);
    const auto& side = into_y ? cut.source_side : cut.sink_side;
    std::optional<VertexId> worst;
    std::size_t worst_mu = 0;
    for (VertexId x : xs) {
      if (!std::binary_search(side.begin(), side.end(), x)) continue;
      std::size_t m = into_y ? mu(d, x, y) : mu(d, y, x);
      if (!worst || m < worst_mu) {
        worst = x;
        worst_mu = m;
      }
    }
    std::string pair = into_y ? "(" + std::to_string(worst->value) + ", " +
                                    std::to_string(y.value) + ")"
                              : "(" + std::to_string(y.value) + ", " +
                                    std::to_string(worst->value) + ")";
    return Inconclusive{"flow", "mu" + pair + " = " + std::to_string(worst_mu) +
                                    " < " + std::to_string(target) +
                                    "; auxiliary flow is " +
                                    std::to_string(flow.size())};
  };
  if (auto bad = deficient(true)) return *bad;
  if (auto bad = deficient(false)) return *bad;

  auto leaf_of = [&](VertexId x) {
    return static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), x) -
                                    xs.begin());
  };
  std::vector<PathFamily> Pi(L), Qi(L);
  for (const auto& p : max_disjoint_paths(aux, v, y).paths) {
    VertexId x = aux.head(p.front());
    Pi[leaf_of(x)].emplace_back(
        std::vector<ArcId>(p.arcs().begin() + 1, p.arcs().end()));
  }
  for (const auto& q : max_disjoint_paths(aux, y, v).paths) {
    VertexId x = aux.tail(q.back());
    Qi[leaf_of(x)].emplace_back(
        std::vector<ArcId>(q.arcs().begin(), q.arcs().end() - 1));
  }
  for (std::size_t i = 0; i < L; ++i) {
    if (Pi[i].size() != B || Qi[i].size() != B) {
      throw std::logic_error("auxiliary flow does not split evenly over X");
    }
  }

  std::size_t p = 0;
  std::size_t prev = B;
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = 0; j < L; ++j) {
      ++p;
      const std::size_t kp = schedule(p);
      if (kp < 2 || kp > prev) {
        throw contract_violation("budget schedule must be nonincreasing and >= 2");
      }
      prev = kp;
      std::vector<VertexId> Z{xs[i]};
      if (j != i) Z.push_back(xs[j]);
      std::sort(Z.begin(), Z.end());
      // Roles: the family leaving y is Q_j, the family entering y is P_i.
      auto out = onion_or_uncross_families(d, y, Z, Qi[j], Pi[i], t, kp, kp,
                                           opts.dichotomy);
      if (out.tag == DichotomyOutcome::Tag::onion_star) return *out.star;
      if (out.tag == DichotomyOutcome::Tag::inconclusive) {
        return Inconclusive{"round " + std::to_string(p) + "/" + out.stage,
                            "(i, j) = (" + std::to_string(i + 1) + ", " +
                                std::to_string(j + 1) + "): " + out.detail};
      }
      Qi[j] = std::move(out.families->first);
      Pi[i] = std::move(out.families->second);
      for (auto& f : Pi) f.resize(std::min(f.size(), kp));
      for (auto& f : Qi) f.resize(std::min(f.size(), kp));
    }
  }

  // Leaves x_1..x_t become y-leaves (center -> leaf doubled), the rest
  // z-leaves (leaf -> center doubled).
  OnionStarModel s;
  s.center = y;
  s.arc_paths.resize(6 * t);
  for (std::size_t l = 0; l < t; ++l) {
    const auto& Py = Pi[l];
    const auto& Qy = Qi[l];
    const auto& Pz = Pi[t + l];
    const auto& Qz = Qi[t + l];
    s.y_leaves.push_back(xs[l]);
    s.z_leaves.push_back(xs[t + l]);
    s.arc_paths[star_arc(l, StarArc::center_to_y_first).index()] = Qy[0];
    s.arc_paths[star_arc(l, StarArc::center_to_y_second).index()] = Qy[1];
    s.arc_paths[star_arc(l, StarArc::y_to_center).index()] = Py[0];
    s.arc_paths[star_arc(l, StarArc::z_to_center_first).index()] = Pz[0];
    s.arc_paths[star_arc(l, StarArc::z_to_center_second).index()] = Pz[1];
    s.arc_paths[star_arc(l, StarArc::center_to_z).index()] = Qz[0];
  }
  if (auto rep = verify_onion_star(d, s); !rep) {
    return Inconclusive{"assemble", std::string(to_string(rep.clause)) + ": " +
                                        rep.locus};
  }
  return s;
}

// Wires a center y to 2t further vertices with `multiplicity` parallel arcs
// each way. X = {y, x_1, ..., x_2t}.
inline LinkedSetInstance wired_star(std::size_t t, std::size_t multiplicity) {
  LinkedSetInstance inst{MultiDigraph(2 * t + 1), {}, t};
  for (std::size_t i = 0; i <= 2 * t; ++i) inst.X.emplace_back(i);
  for (std::size_t i = 1; i <= 2 * t; ++i) {
    for (std::size_t c = 0; c < multiplicity; ++c) {
      inst.d.add_arc(VertexId{0}, VertexId{i});
      inst.d.add_arc(VertexId{i}, VertexId{0});
    }
  }
  return inst;
}

// ---------------------------------------------------------------------------

// Immersion of h into the t-onion star when every vertex of h has
// (outdeg <= 2 and indeg <= 1) or (outdeg <= 1 and indeg <= 2). Vertices of
// the first kind go to z-leaves, of the second kind to y-leaves; vertices
// of both kinds go to the pool with more room left (z on ties). Arc u -> w
// becomes leaf(u) -> center -> leaf(w).
inline ImmersionModel embed_degree_bounded(const MultiDigraph& h,
                                           std::size_t t) {
  if (t == 0) throw contract_violation("onion star needs t >= 1");
  if (h.vertex_count() > t) {
    throw contract_violation("pattern has more than t vertices");
  }
  auto star = onion_star(t);
  std::vector<VertexId> vmap(h.vertex_count());
  std::vector<bool> is_z(h.vertex_count());
  std::vector<std::size_t> leaf(h.vertex_count());
  std::size_t y_used = 0, z_used = 0;
  for (VertexId u : h.vertices()) {
    auto out = h.out_degree(u), in = h.in_degree(u);
    bool z_ok = out <= 2 && in <= 1;
    bool y_ok = out <= 1 && in <= 2;
    if (!z_ok && !y_ok) {
      throw contract_violation("vertex " + std::to_string(u.value) +
                               " violates the degree condition (out " +
                               std::to_string(out) + ", in " +
                               std::to_string(in) + ")");
    }
    bool to_z = z_ok && (!y_ok || t - z_used >= t - y_used);
    is_z[u.index()] = to_z;
    leaf[u.index()] = to_z ? z_used++ : y_used++;
    vmap[u.index()] = to_z ? star.z_leaves[leaf[u.index()]]
                           : star.y_leaves[leaf[u.index()]];
  }

  std::vector<std::size_t> toward_center(h.vertex_count(), 0);
  std::vector<std::size_t> from_center(h.vertex_count(), 0);
  auto take = [](std::size_t& used, std::size_t cap, VertexId u) {
    if (used >= cap) {
      throw std::logic_error("leaf arcs exhausted at vertex " +
                             std::to_string(u.value));
    }
    return used++;
  };
  auto leave = [&](VertexId u) {
    std::size_t l = leaf[u.index()];
    auto& used = toward_center[u.index()];
    if (!is_z[u.index()]) {
      take(used, 1, u);
      return star_arc(l, StarArc::y_to_center);
    }
    return star_arc(l, take(used, 2, u) == 0 ? StarArc::z_to_center_first
                                             : StarArc::z_to_center_second);
  };
  auto enter = [&](VertexId w) {
    std::size_t l = leaf[w.index()];
    auto& used = from_center[w.index()];
    if (is_z[w.index()]) {
      take(used, 1, w);
      return star_arc(l, StarArc::center_to_z);
    }
    return star_arc(l, take(used, 2, w) == 0 ? StarArc::center_to_y_first
                                             : StarArc::center_to_y_second);
  };
  std::vector<Path> amap;
  for (ArcId a : h.arcs()) {
    ArcId first = leave(h.tail(a));
    ArcId second = enter(h.head(a));
    amap.push_back(Path{first, second});
  }
  ImmersionModel m{h, std::move(star.digraph), std::move(vmap), std::move(amap)};
  if (auto rep = verify_model(m); !rep) {
    throw std::logic_error(std::string("embedding does not verify: ") +
                           to_string(rep.clause) + ": " + rep.locus);
  }
  return m;
}

}  // namespace onion
