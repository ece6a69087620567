#pragma once

// Onion harvesting: pull onion immersion models out of a well-crossing pair
// while keeping a smaller well-crossing residual, iterate that to families of
// onions sharing the root, and assemble an onion star from two such families.
//
// Every operation runs at any input size. When an internal search comes up
// empty the result is Inconclusive; anything else has passed the verifier.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "onion/crossing.hpp"
#include "onion/digraph.hpp"
#include "onion/errors.hpp"
#include "onion/extremal.hpp"
#include "onion/generate.hpp"
#include "onion/oracle.hpp"

namespace onion {

struct Inconclusive {
  std::string stage;
  std::string detail;
};

template <class T>
using Outcome = std::variant<T, Inconclusive>;

template <class T>
bool conclusive(const Outcome<T>& o) {
  return std::holds_alternative<T>(o);
}

struct OnionModel {
  VertexId source;
  VertexId sink;
  Path out_paths[2];  // source -> sink
  Path back_path;     // sink -> source
};

struct OnionStarModel {
  VertexId center;
  std::vector<VertexId> y_leaves;
  std::vector<VertexId> z_leaves;
  std::vector<Path> arc_paths;  // indexed like star_arc(leaf, slot)

  std::size_t t() const noexcept { return y_leaves.size(); }
};

struct HarvestResult {
  OnionModel onion;
  WellCrossingPair residual;
};

struct HarvestFamily {
  std::vector<OnionModel> onions;
  WellCrossingPair residual;
};

inline ImmersionModel to_immersion_model(const MultiDigraph& d,
                                         const OnionModel& o) {
  return {onion_pattern(), d, {o.source, o.sink},
          {o.out_paths[0], o.out_paths[1], o.back_path}};
}

inline ImmersionModel to_immersion_model(const MultiDigraph& d,
                                         const OnionStarModel& s) {
  if (s.y_leaves.size() != s.z_leaves.size() || s.y_leaves.empty()) {
    throw contract_violation("onion star model needs t y-leaves and t z-leaves");
  }
  std::vector<VertexId> vmap{s.center};
  vmap.insert(vmap.end(), s.y_leaves.begin(), s.y_leaves.end());
  vmap.insert(vmap.end(), s.z_leaves.begin(), s.z_leaves.end());
  return {onion_star(s.t()).digraph, d, std::move(vmap), s.arc_paths};
}

struct HarvestReport {
  enum class Clause {
    none,
    onion_model,   // the onion is not an immersion model
    root,          // onion not attached to the root as declared
    residual_well_crossing,
    residual_subset,
    residual_disjoint,
    sink_tail,
    residual_size,
    distinct_ends,
  };
  Clause clause = Clause::none;
  std::string detail;

  bool ok() const noexcept { return clause == Clause::none; }
  explicit operator bool() const noexcept { return ok(); }
};

inline const char* to_string(HarvestReport::Clause c) {
  using C = HarvestReport::Clause;
  switch (c) {
    case C::none: return "ok";
    case C::onion_model: return "onion model";
    case C::root: return "root";
    case C::residual_well_crossing: return "residual well-crossing";
    case C::residual_subset: return "residual subset";
    case C::residual_disjoint: return "residual disjoint";
    case C::sink_tail: return "sink tail";
    case C::residual_size: return "residual size";
    case C::distinct_ends: return "distinct ends";
  }
  return "?";
}

namespace detail {

inline std::vector<bool> family_mask(const MultiDigraph& d,
                                     const PathFamily& f) {
  std::vector<bool> m(d.arc_count(), false);
  for (const auto& p : f)
    for (ArcId a : p)
      if (d.has_arc(a)) m[a.index()] = true;
  return m;
}

inline std::vector<Path> onion_paths(const OnionModel& o) {
  return {o.out_paths[0], o.out_paths[1], o.back_path};
}

// Residual checks shared by single and multi harvests. `far_end` is the end
// of each onion that is not the root.
inline HarvestReport check_residual(const MultiDigraph& d,
                                    const WellCrossingPair& input,
                                    const WellCrossingPair& residual,
                                    const std::vector<OnionModel>& onions,
                                    const std::vector<VertexId>& far_ends,
                                    std::size_t n) {
  using C = HarvestReport::Clause;
  if (residual.root != input.root) {
    return {C::root, "residual is rooted elsewhere"};
  }
  if (residual.P.size() < n || residual.Q.size() < n) {
    return {C::residual_size, "residual has " + std::to_string(residual.P.size()) +
                                  " x " + std::to_string(residual.Q.size()) +
                                  " paths, need " + std::to_string(n)};
  }
  if (auto r = is_well_crossing(d, residual); !r) {
    return {C::residual_well_crossing,
            std::string(to_string(r.clause)) + ": " + r.detail};
  }
  auto inP = family_mask(d, input.P);
  auto inQ = family_mask(d, input.Q);
  for (const auto& p : residual.P)
    for (ArcId a : p)
      if (!inP[a.index()]) {
        return {C::residual_subset, "arc " + std::to_string(a.value) +
                                        " of residual P is not on input P"};
      }
  for (const auto& q : residual.Q)
    for (ArcId a : q)
      if (!inQ[a.index()]) {
        return {C::residual_subset, "arc " + std::to_string(a.value) +
                                        " of residual Q is not on input Q"};
      }
  std::vector<bool> taken(d.arc_count(), false);
  for (const auto& o : onions)
    for (const auto& p : onion_paths(o))
      for (ArcId a : p) taken[a.index()] = true;
  for (const auto* fam : {&residual.P, &residual.Q})
    for (const auto& p : *fam)
      for (ArcId a : p)
        if (taken[a.index()]) {
          return {C::residual_disjoint,
                  "residual uses onion arc " + std::to_string(a.value)};
        }
  auto rP = family_mask(d, residual.P);
  auto rQ = family_mask(d, residual.Q);
  for (ArcId a : d.arcs()) {
    if (!rP[a.index()] || !rQ[a.index()]) continue;
    for (VertexId y : far_ends) {
      if (d.tail(a) == y) {
        return {C::sink_tail, "shared residual arc " + std::to_string(a.value) +
                                  " leaves onion end " + std::to_string(y.value)};
      }
    }
  }
  return {};
}

}  // namespace detail

// All invariants of a single harvest: the onion is a model with source at
// the root, and the residual is a well-crossing pair of size >= n inside the
// input, disjoint from the onion, with no shared arc leaving the sink.
inline HarvestReport verify_harvest(const MultiDigraph& d,
                                    const WellCrossingPair& input,
                                    const HarvestResult& r, std::size_t n = 1) {
  using C = HarvestReport::Clause;
  if (auto m = verify_model(to_immersion_model(d, r.onion)); !m) {
    return {C::onion_model, std::string(to_string(m.clause)) + ": " + m.locus};
  }
  if (r.onion.source != input.root) {
    return {C::root, "onion source is not the root"};
  }
  return detail::check_residual(d, input, r.residual, {r.onion},
                                {r.onion.sink}, n);
}

// Invariants of a harvested family: each onion is a model attached to the
// root on the side given by `direction`, the onions are pairwise
// arc-disjoint, their other ends are pairwise distinct, and the residual
// satisfies the single-harvest residual conditions against every onion.
inline HarvestReport verify_harvest_family(const MultiDigraph& d,
                                           const WellCrossingPair& input,
                                           const HarvestFamily& h,
                                           Direction direction,
                                           std::size_t n = 1) {
  using C = HarvestReport::Clause;
  std::vector<bool> taken(d.arc_count(), false);
  std::vector<VertexId> ends;
  for (std::size_t i = 0; i < h.onions.size(); ++i) {
    const auto& o = h.onions[i];
    if (auto m = verify_model(to_immersion_model(d, o)); !m) {
      return {C::onion_model, "onion " + std::to_string(i) + ": " +
                                  to_string(m.clause) + ": " + m.locus};
    }
    bool out = direction == Direction::out;
    if ((out ? o.source : o.sink) != input.root) {
      return {C::root, "onion " + std::to_string(i) + " is not attached at the root"};
    }
    VertexId end = out ? o.sink : o.source;
    if (std::find(ends.begin(), ends.end(), end) != ends.end()) {
      return {C::distinct_ends, "onion end " + std::to_string(end.value) +
                                    " repeats"};
    }
    ends.push_back(end);
    for (const auto& p : detail::onion_paths(o))
      for (ArcId a : p) {
        if (taken[a.index()]) {
          return {C::onion_model, "onions share arc " + std::to_string(a.value)};
        }
        taken[a.index()] = true;
      }
  }
  if (h.onions.empty()) return {};
  // Only the sinks of out-onions (resp. the sources of in-onions, read in
  // the reversed digraph) constrain the tails of shared residual arcs.
  if (direction == Direction::out) {
    return detail::check_residual(d, input, h.residual, h.onions, ends, n);
  }
  auto rd = reverse(d);
  WellCrossingPair rin{reverse(input.Q), reverse(input.P), input.root};
  WellCrossingPair rres{reverse(h.residual.Q), reverse(h.residual.P),
                        h.residual.root};
  return detail::check_residual(rd, rin, rres, h.onions, ends, n);
}

struct HarvestOptions {
  // Upper bound on the size of the returned residual families. Residuals
  // are made as large as possible within [n, residual_cap].
  std::size_t residual_cap = std::numeric_limits<std::size_t>::max();
  // Restricts harvest_single to this Q path instead of trying all in order.
  std::optional<std::size_t> only_q;
};

// e is the <_Q-smallest arc of Q[q] with exactly floor(|P|/3) paths of P
// crossing Q(e->); returns e together with Q[e->).
inline std::pair<ArcId, Path> pivot_arc(const WellCrossingPair& ctx,
                                        std::size_t q) {
  if (q >= ctx.Q.size()) throw contract_violation("q index out of range");
  if (ctx.P.empty()) throw contract_violation("pivot needs a nonempty P");
  CrossingAnalysis an(ctx);
  const Path& Q = ctx.Q[q];
  // last[p]: position on Q of the last crossing with P[p].
  std::vector<long> last(ctx.P.size(), -1);
  for (std::size_t k = 0; k < Q.size(); ++k) {
    if (auto p = an.p_index(Q[k])) last[*p] = static_cast<long>(k);
  }
  const std::size_t target = ctx.P.size() / 3;
  for (std::size_t k = 0; k < Q.size(); ++k) {
    std::size_t after = 0;
    for (long l : last) after += l > static_cast<long>(k);
    if (after == target) return {Q[k], trim(Q, Q[k], Trim::after_closed)};
  }
  throw std::logic_error("no pivot arc; input is not well-crossing");
}

namespace detail {

struct Attempt {
  std::optional<HarvestResult> result;
  std::string stage;
  std::string detail;
};

// Largest m in [n, cap] such that the first m candidates of P and m
// candidates of Q avoid every P-arc with tail y. Candidates are tried in
// the given order.
inline std::optional<WellCrossingPair> select_residual(
    const MultiDigraph& d, const PathFamily& pc, const PathFamily& qc,
    VertexId root, VertexId y, std::size_t n, std::size_t cap) {
  std::size_t hi = std::min({pc.size(), qc.size(), cap});
  for (std::size_t m = hi; m >= n && m > 0; --m) {
    WellCrossingPair w{{pc.begin(), pc.begin() + static_cast<std::ptrdiff_t>(m)},
                       {},
                       root};
    std::vector<bool> bad(d.arc_count(), false);
    for (const auto& p : w.P)
      for (ArcId a : p)
        if (d.tail(a) == y) bad[a.index()] = true;
    for (const auto& q : qc) {
      if (w.Q.size() == m) break;
      bool clean = std::none_of(q.begin(), q.end(),
                                [&](ArcId a) { return bad[a.index()]; });
      if (clean) w.Q.push_back(q);
    }
    if (w.Q.size() == m) return w;
  }
  return std::nullopt;
}

inline bool disjoint_from(const Path& p, const std::vector<bool>& mask) {
  return std::none_of(p.begin(), p.end(),
                      [&](ArcId a) { return mask[a.index()]; });
}

inline std::vector<bool> path_mask(const MultiDigraph& d,
                                   std::initializer_list<const Path*> ps) {
  std::vector<bool> m(d.arc_count(), false);
  for (const Path* p : ps)
    for (ArcId a : *p) m[a.index()] = true;
  return m;
}

inline Attempt case_one(const MultiDigraph& d, const WellCrossingPair& ctx,
                        const CrossingAnalysis& an, std::size_t q,
                        const Path& Qt, std::size_t n, std::size_t cap) {
  const Path& Q = ctx.Q[q];
  // Dangerous crossings on Q, in Q order. Parallel arcs are distinct
  // positions, so <_Q already separates them.
  std::vector<std::size_t> dangerous;
  for (std::size_t k = 0; k < Q.size(); ++k) {
    auto c = an.crossing_at(Q[k]);
    if (c && c->q == q && an.classify(*c) == CrossingClass::dangerous) {
      dangerous.push_back(k);
    }
  }
  ArcId dd = Q[dangerous.back()];
  std::size_t p2 = *an.p_index(dd);
  std::optional<std::size_t> e1pos;
  for (auto it = dangerous.rbegin(); it != dangerous.rend(); ++it) {
    if (*an.p_index(Q[*it]) != p2) {
      e1pos = *it;
      break;
    }
  }
  if (!e1pos) return {std::nullopt, "case1", "only one dangerous path on Q"};
  ArcId e1 = Q[*e1pos];
  std::size_t p1 = *an.p_index(e1);
  const Path& P1 = ctx.P[p1];
  const Path& P2 = ctx.P[p2];

  // d' is the <_{P2}-first (P2, Q)-crossing on a window of Q; the window is
  // Q[e->) first, then Q(e'->).
  auto first_on = [&](std::size_t from_pos) -> std::optional<ArcId> {
    for (ArcId a : P2) {
      auto pos = Q.position(a);
      if (pos && *pos >= from_pos) return a;
    }
    return std::nullopt;
  };
  std::size_t e_pos = Q.size() - Qt.size();
  std::string last_failure = "no usable d'";
  for (std::size_t from : {e_pos, *e1pos + 1}) {
    auto dp = first_on(from);
    if (!dp) continue;
    auto dpos = *Q.position(*dp);
    if (dpos <= *e1pos) {
      last_failure = "d' does not follow e' on Q";
      continue;
    }
    Path prefix1 = trim(P1, e1, Trim::before_closed);
    Path prefix2 = trim(P2, *dp, Trim::before_open);
    Path mid = trim_between(Q, e1, *dp);
    Path back = trim(Q, *dp, Trim::after_closed);
    Path out1;
    try {
      out1 = concatenate(d, prefix1, mid);
    } catch (const contract_violation& ex) {
      last_failure = ex.what();
      continue;
    }
    if (prefix2.empty()) {
      last_failure = "d' is the first arc of P2";
      continue;
    }
    VertexId y = d.tail(*dp);
    OnionModel onion{ctx.root, y, {out1, prefix2}, back};
    if (!verify_model(to_immersion_model(d, onion))) {
      last_failure = "assembled onion does not verify";
      continue;
    }

    Path p2_closed = trim(P2, *dp, Trim::before_closed);
    auto blocked_q = path_mask(d, {&prefix1, &p2_closed});
    PathFamily qc;
    for (std::size_t j = 0; j < ctx.Q.size(); ++j) {
      if (j != q && disjoint_from(ctx.Q[j], blocked_q)) qc.push_back(ctx.Q[j]);
    }
    Path tail_q = trim(Q, e1, Trim::after_closed);
    auto blocked_p = path_mask(d, {&tail_q});
    PathFamily pc;
    for (std::size_t i = 0; i < ctx.P.size(); ++i) {
      if (i != p1 && i != p2 && disjoint_from(ctx.P[i], blocked_p)) {
        pc.push_back(ctx.P[i]);
      }
    }
    auto res = select_residual(d, pc, qc, ctx.root, y, n, cap);
    if (!res) {
      last_failure = "residual below " + std::to_string(n) + " (" +
                     std::to_string(pc.size()) + " P, " +
                     std::to_string(qc.size()) + " Q candidates)";
      continue;
    }
    HarvestResult hr{std::move(onion), std::move(*res)};
    if (!verify_harvest(d, ctx, hr, n)) {
      last_failure = "harvest does not verify";
      continue;
    }
    return {std::move(hr), "", ""};
  }
  return {std::nullopt, "case1", last_failure};
}

inline Attempt case_two(const MultiDigraph& d, const WellCrossingPair& ctx,
                        const CrossingAnalysis& an, std::size_t q,
                        const Path& Qt, std::size_t n, std::size_t cap) {
  const Path& Q = ctx.Q[q];
  std::vector<bool> on_qt(d.arc_count(), false);
  for (ArcId a : Qt) on_qt[a.index()] = true;
  auto dangerous = an.dangerous_paths(q, Qt);

  // S: paths crossing Q[e->) only safely; S~ their prefixes before the first
  // such crossing, anchored at that crossing.
  std::vector<std::size_t> S;
  std::vector<ArcId> anchor;
  PathFamily St;
  for (std::size_t i = 0; i < ctx.P.size(); ++i) {
    if (std::binary_search(dangerous.begin(), dangerous.end(), i)) continue;
    const Path& P = ctx.P[i];
    auto it = std::find_if(P.begin(), P.end(),
                           [&](ArcId a) { return on_qt[a.index()]; });
    if (it == P.end()) continue;
    S.push_back(i);
    anchor.push_back(*it);
    St.push_back(trim(P, *it, Trim::before_open));
  }
  std::vector<std::size_t> rest;
  PathFamily Qrest;
  for (std::size_t j = 0; j < ctx.Q.size(); ++j) {
    if (j == q) continue;
    rest.push_back(j);
    Qrest.push_back(ctx.Q[j]);
  }
  auto G = intersection_graph(St, Qrest);

  std::size_t hi = std::min(cap, std::min(S.size(), Qrest.size()) / 2);
  std::string stage = "same-paths";
  std::string why = "no K_{g,g} in the (S~, Q - Q) intersection graph";
  for (std::size_t s = hi; s >= n && s > 0; --s) {
    const std::size_t g = 2 * s + 2;
    auto big = biclique_search(G, g);
    if (!big) continue;
    stage = "paths";
    why = "no pair admits K_{2s,2s}";
    const auto& Sp = big->left;  // indices into S / St
    PathFamily Stp;
    for (auto i : Sp) Stp.push_back(St[i]);
    for (std::size_t a = 0; a < Sp.size(); ++a) {
      for (std::size_t b = a + 1; b < Sp.size(); ++b) {
        const Path& A = ctx.P[S[Sp[a]]];
        const Path& B = ctx.P[S[Sp[b]]];
        auto ab = path_mask(d, {&A, &B});
        PathFamily Qtp;
        for (auto r : big->right) {
          const Path& R = Qrest[r];
          std::optional<std::size_t> last;
          for (std::size_t k = 0; k < R.size(); ++k)
            if (ab[R[k].index()]) last = k;
          Qtp.push_back(last ? trim(R, R[*last], Trim::after_open) : R);
        }
        auto G2 = intersection_graph(Stp, Qtp);
        auto small = biclique_search(G2, 2 * s);
        if (!small) continue;

        ArcId ea = anchor[Sp[a]], eb = anchor[Sp[b]];
        bool a_first = *Q.position(ea) < *Q.position(eb);
        ArcId e1 = a_first ? ea : eb, e2 = a_first ? eb : ea;
        const Path& P1 = a_first ? A : B;
        const Path& P2 = a_first ? B : A;
        Path out2 = trim(P2, e2, Trim::before_open);
        Path out1;
        try {
          out1 = concatenate(d, trim(P1, e1, Trim::before_closed),
                             trim_between(Q, e1, e2));
        } catch (const contract_violation&) {
          continue;
        }
        if (out2.empty()) continue;
        VertexId y = d.tail(e2);
        OnionModel onion{ctx.root, y, {out2, out1},
                         trim(Q, e2, Trim::after_closed)};
        if (!verify_model(to_immersion_model(d, onion))) continue;

        PathFamily pc, qc;
        for (auto l : small->left) pc.push_back(Stp[l]);
        for (auto r : small->right) qc.push_back(Qtp[r]);
        auto res = select_residual(d, pc, qc, ctx.root, y, n, cap);
        if (!res) {
          stage = "case2-residual";
          why = "sink-tail filtering left fewer than n paths";
          continue;
        }
        HarvestResult hr{std::move(onion), std::move(*res)};
        if (!verify_harvest(d, ctx, hr, n)) continue;
        return {std::move(hr), "", ""};
      }
    }
  }
  return {std::nullopt, stage, why};
}

}  // namespace detail

// One onion with source at the root, plus a residual well-crossing pair of
// size at least n. Q paths are tried in index order.
inline Outcome<HarvestResult> harvest_single(const MultiDigraph& d,
                                             const WellCrossingPair& ctx,
                                             std::size_t n,
                                             HarvestOptions opts = {}) {
  if (n == 0) throw contract_violation("harvest needs n >= 1");
  if (auto r = is_well_crossing(d, ctx); !r) {
    throw contract_violation(std::string("not a well-crossing pair: ") +
                             to_string(r.clause) + ": " + r.detail);
  }
  if (ctx.P.empty() || ctx.Q.empty()) {
    return Inconclusive{"pivot", "empty family"};
  }
  CrossingAnalysis an(ctx);
  std::optional<Inconclusive> first;
  if (opts.only_q && *opts.only_q >= ctx.Q.size()) {
    throw contract_violation("only_q is out of range");
  }
  for (std::size_t q = 0; q < ctx.Q.size(); ++q) {
    if (opts.only_q && q != *opts.only_q) continue;
    auto [e, Qt] = pivot_arc(ctx, q);
    auto dangerous = an.dangerous_paths(q, Qt);
    auto attempt = dangerous.size() >= 2
                       ? detail::case_one(d, ctx, an, q, Qt, n, opts.residual_cap)
                       : detail::case_two(d, ctx, an, q, Qt, n, opts.residual_cap);
    if (attempt.result) return std::move(*attempt.result);
    if (!first) {
      first = Inconclusive{attempt.stage,
                           "Q[" + std::to_string(q) + "]: " + attempt.detail};
    }
  }
  if (!opts.only_q) {
    first->detail += " (all " + std::to_string(ctx.Q.size()) + " Q paths tried)";
  }
  return *first;
}

namespace detail {

inline OnionModel reverse_onion(const OnionModel& o) {
  // An onion x =2=> y, y -> x in the reversed digraph is an onion with
  // source y and sink x in the original.
  return {o.sink, o.source, {reverse(o.out_paths[0]), reverse(o.out_paths[1])},
          reverse(o.back_path)};
}

}  // namespace detail

// t onions sharing the root: as source (out) or as sink (in). The residual
// has size >= n and avoids every onion.
inline Outcome<HarvestFamily> harvest_many(const MultiDigraph& d,
                                           const WellCrossingPair& ctx,
                                           std::size_t t, std::size_t n,
                                           Direction direction,
                                           HarvestOptions opts = {}) {
  if (n == 0) throw contract_violation("harvest needs n >= 1");
  if (auto r = is_well_crossing(d, ctx); !r) {
    throw contract_violation(std::string("not a well-crossing pair: ") +
                             to_string(r.clause) + ": " + r.detail);
  }
  if (t == 0) return HarvestFamily{{}, ctx};

  const bool out = direction == Direction::out;
  MultiDigraph rd;
  if (!out) rd = reverse(d);
  const MultiDigraph& g = out ? d : rd;
  WellCrossingPair cur =
      out ? ctx : WellCrossingPair{reverse(ctx.Q), reverse(ctx.P), ctx.root};

  HarvestFamily h;
  for (std::size_t i = 0; i < t; ++i) {
    auto step = harvest_single(g, cur, n, opts);
    if (auto* inc = std::get_if<Inconclusive>(&step)) {
      inc->detail = "onion " + std::to_string(i + 1) + " of " +
                    std::to_string(t) + ": " + inc->detail;
      return *inc;
    }
    auto& hr = std::get<HarvestResult>(step);
    h.onions.push_back(out ? hr.onion : detail::reverse_onion(hr.onion));
    cur = std::move(hr.residual);
  }
  h.residual = out ? cur
                   : WellCrossingPair{reverse(cur.Q), reverse(cur.P), cur.root};
  if (auto rep = verify_harvest_family(d, ctx, h, direction, n); !rep) {
    return Inconclusive{"verify", std::string(to_string(rep.clause)) + ": " +
                                      rep.detail};
  }
  return h;
}

inline ModelReport verify_onion_star(const MultiDigraph& d,
                                     const OnionStarModel& s) {
  if (s.y_leaves.size() != s.z_leaves.size() || s.y_leaves.empty() ||
      s.arc_paths.size() != 6 * s.t()) {
    return {ModelReport::Clause::shape, "onion star model has inconsistent sizes"};
  }
  return verify_model(to_immersion_model(d, s));
}

// Combines out-onions (sinks y_i) and in-onions (sources z_j) sharing the
// center into a t-onion star, choosing t of each with {y_i} and {z_j}
// disjoint.
inline std::optional<OnionStarModel> assemble_onion_star(
    const MultiDigraph& d, VertexId center, const std::vector<OnionModel>& outs,
    const std::vector<OnionModel>& ins, std::size_t t) {
  if (outs.size() < t || ins.size() < t) return std::nullopt;
  std::vector<std::size_t> I, J;
  for (std::size_t i = 0; i < outs.size() && I.size() < t; ++i) I.push_back(i);
  for (std::size_t j = 0; j < ins.size() && J.size() < t; ++j) {
    bool clash = std::any_of(I.begin(), I.end(), [&](std::size_t i) {
      return outs[i].sink == ins[j].source;
    });
    if (!clash) J.push_back(j);
  }
  if (J.size() < t) return std::nullopt;
  OnionStarModel s;
  s.center = center;
  s.arc_paths.resize(6 * t);
  for (std::size_t k = 0; k < t; ++k) {
    const auto& o = outs[I[k]];
    const auto& in = ins[J[k]];
    s.y_leaves.push_back(o.sink);
    s.z_leaves.push_back(in.source);
    s.arc_paths[star_arc(k, StarArc::center_to_y_first).index()] = o.out_paths[0];
    s.arc_paths[star_arc(k, StarArc::center_to_y_second).index()] = o.out_paths[1];
    s.arc_paths[star_arc(k, StarArc::y_to_center).index()] = o.back_path;
    s.arc_paths[star_arc(k, StarArc::z_to_center_first).index()] = in.out_paths[0];
    s.arc_paths[star_arc(k, StarArc::z_to_center_second).index()] = in.out_paths[1];
    s.arc_paths[star_arc(k, StarArc::center_to_z).index()] = in.back_path;
  }
  if (!verify_onion_star(d, s)) return std::nullopt;
  return s;
}

// 2t out-onions, then 2t in-onions on the residual, then a t-onion star
// centered at the root.
inline Outcome<OnionStarModel> harvest_onion_star(const MultiDigraph& d,
                                                  const WellCrossingPair& ctx,
                                                  std::size_t t,
                                                  HarvestOptions opts = {}) {
  if (t == 0) throw contract_violation("onion star needs t >= 1");
  auto outs = harvest_many(d, ctx, 2 * t, 1, Direction::out, opts);
  if (auto* inc = std::get_if<Inconclusive>(&outs)) {
    inc->stage = "out-onions/" + inc->stage;
    return *inc;
  }
  auto& hout = std::get<HarvestFamily>(outs);
  auto ins = harvest_many(d, hout.residual, 2 * t, 1, Direction::in, opts);
  if (auto* inc = std::get_if<Inconclusive>(&ins)) {
    inc->stage = "in-onions/" + inc->stage;
    return *inc;
  }
  auto& hin = std::get<HarvestFamily>(ins);
  auto star = assemble_onion_star(d, ctx.root, hout.onions, hin.onions, t);
  if (!star) {
    throw std::logic_error("onion star selection failed on distinct-ended onions");
  }
  return *star;
}

}  // namespace onion
