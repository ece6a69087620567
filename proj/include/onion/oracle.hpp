#pragma once

// Ground truth at desk scale: the immersion-model verifier and exhaustive
// searches for immersions, opposite arc-disjoint pairs and disjoint-path
// maxima. Searches refuse instances above their arc cap.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "onion/digraph.hpp"
#include "onion/errors.hpp"

namespace onion {

struct ImmersionModel {
  MultiDigraph pattern;
  MultiDigraph host;
  std::vector<VertexId> vertex_map;  // indexed by pattern vertex
  std::vector<Path> arc_map;         // indexed by pattern arc
};

struct ModelReport {
  enum class Clause {
    none,
    shape,         // map sizes do not match the pattern
    vertex_range,  // image vertex not in host
    injectivity,
    host_arc,      // path uses an arc the host lacks
    path,          // repeated arc or broken chaining
    endpoint,
    disjointness,
  };
  Clause clause = Clause::none;
  std::string locus;

  bool ok() const noexcept { return clause == Clause::none; }
  explicit operator bool() const noexcept { return ok(); }
};

inline const char* to_string(ModelReport::Clause c) {
  using C = ModelReport::Clause;
  switch (c) {
    case C::none: return "ok";
    case C::shape: return "shape";
    case C::vertex_range: return "vertex range";
    case C::injectivity: return "injectivity";
    case C::host_arc: return "host arc";
    case C::path: return "path";
    case C::endpoint: return "endpoint";
    case C::disjointness: return "arc-disjointness";
  }
  return "?";
}

// Checks every clause of the immersion-model definition; reports the first
// violation found.
inline ModelReport verify_model(const ImmersionModel& m) {
  using C = ModelReport::Clause;
  auto fail = [](C c, std::string s) { return ModelReport{c, std::move(s)}; };
  const auto& H = m.pattern;
  const auto& D = m.host;
  if (m.vertex_map.size() != H.vertex_count() ||
      m.arc_map.size() != H.arc_count()) {
    return fail(C::shape, "vertex map " + std::to_string(m.vertex_map.size()) +
                              "/" + std::to_string(H.vertex_count()) +
                              ", arc map " + std::to_string(m.arc_map.size()) +
                              "/" + std::to_string(H.arc_count()));
  }
  std::vector<bool> image(D.vertex_count(), false);
  for (std::size_t i = 0; i < m.vertex_map.size(); ++i) {
    VertexId v = m.vertex_map[i];
    if (!D.has_vertex(v)) {
      return fail(C::vertex_range, "pattern vertex " + std::to_string(i));
    }
    if (image[v.index()]) {
      return fail(C::injectivity, "host vertex " + std::to_string(v.value) +
                                      " is hit twice");
    }
    image[v.index()] = true;
  }
  std::vector<int> owner(D.arc_count(), -1);
  for (std::size_t a = 0; a < m.arc_map.size(); ++a) {
    const Path& p = m.arc_map[a];
    std::string where = "pattern arc " + std::to_string(a);
    for (ArcId x : p) {
      if (!D.has_arc(x)) return fail(C::host_arc, where);
    }
    if (!is_valid_path(D, p)) return fail(C::path, where);
    ArcId pa{a};
    if (p.empty() || path_tail(D, p) != m.vertex_map[H.tail(pa).index()] ||
        path_head(D, p) != m.vertex_map[H.head(pa).index()]) {
      return fail(C::endpoint, where);
    }
    for (ArcId x : p) {
      if (owner[x.index()] >= 0) {
        return fail(C::disjointness,
                    "host arc " + std::to_string(x.value) + " used by " +
                        where + " and pattern arc " +
                        std::to_string(owner[x.index()]));
      }
      owner[x.index()] = static_cast<int>(a);
    }
  }
  return {};
}

struct OracleLimits {
  std::size_t max_host_arcs = 24;
};

namespace detail {

inline void check_cap(const MultiDigraph& d, const OracleLimits& lim,
                      const char* what) {
  if (d.arc_count() > lim.max_host_arcs) {
    throw oracle_refusal(std::string(what) + ": host has " +
                         std::to_string(d.arc_count()) + " arcs, cap is " +
                         std::to_string(lim.max_host_arcs));
  }
}

// Calls visit(path) for every simple s -> t path avoiding `blocked`, in
// lexicographic arc-id order; stops early when visit returns true.
inline bool for_each_simple_path(
    const MultiDigraph& d, VertexId s, VertexId t,
    const std::vector<bool>& blocked,
    const std::function<bool(const std::vector<ArcId>&)>& visit) {
  std::vector<bool> on(d.vertex_count(), false);
  std::vector<ArcId> stack;
  std::function<bool(VertexId)> rec = [&](VertexId u) -> bool {
    if (u == t) return visit(stack);
    on[u.index()] = true;
    for (ArcId a : d.out_arcs(u)) {
      if (blocked[a.index()]) continue;
      VertexId w = d.head(a);
      if (on[w.index()]) continue;
      stack.push_back(a);
      bool stop = rec(w);
      stack.pop_back();
      if (stop) {
        on[u.index()] = false;
        return true;
      }
    }
    on[u.index()] = false;
    return false;
  };
  if (s == t) return false;
  return rec(s);
}

inline std::optional<std::vector<ArcId>> bfs_path(
    const MultiDigraph& d, VertexId s, VertexId t,
    const std::vector<bool>& blocked) {
  std::vector<std::optional<ArcId>> parent(d.vertex_count());
  std::vector<bool> seen(d.vertex_count(), false);
  std::deque<VertexId> queue{s};
  seen[s.index()] = true;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    if (u == t) break;
    for (ArcId a : d.out_arcs(u)) {
      if (blocked[a.index()]) continue;
      VertexId w = d.head(a);
      if (seen[w.index()]) continue;
      seen[w.index()] = true;
      parent[w.index()] = a;
      queue.push_back(w);
    }
  }
  if (!seen[t.index()] || s == t) return std::nullopt;
  std::vector<ArcId> path;
  for (VertexId v = t; v != s; v = d.tail(*parent[v.index()])) {
    path.push_back(*parent[v.index()]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

inline std::vector<std::size_t> distances_from(const MultiDigraph& d,
                                               VertexId s) {
  constexpr auto inf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(d.vertex_count(), inf);
  std::deque<VertexId> queue{s};
  dist[s.index()] = 0;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (ArcId a : d.out_arcs(u)) {
      VertexId w = d.head(a);
      if (dist[w.index()] != inf) continue;
      dist[w.index()] = dist[u.index()] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace detail

// Exact immersion test: injective vertex maps, then arc-disjoint routing of
// pattern arcs one at a time along simple host paths.
inline std::optional<ImmersionModel> immersion_exists(
    const MultiDigraph& pattern, const MultiDigraph& host,
    OracleLimits lim = {}) {
  detail::check_cap(host, lim, "immersion_exists");
  const std::size_t hn = host.vertex_count();
  const std::size_t pn = pattern.vertex_count();
  if (pn > hn) return std::nullopt;

  std::vector<std::vector<std::size_t>> dist(hn);
  for (VertexId v : host.vertices()) dist[v.index()] = detail::distances_from(host, v);

  std::vector<VertexId> vmap(pn);
  std::vector<bool> used_vertex(hn, false);
  std::vector<bool> used_arc(host.arc_count(), false);
  std::vector<Path> amap(pattern.arc_count());
  std::optional<ImmersionModel> result;

  std::function<bool(const std::vector<ArcId>&, std::size_t)> route =
      [&](const std::vector<ArcId>& order, std::size_t k) -> bool {
    if (k == order.size()) return true;
    ArcId pa = order[k];
    VertexId s = vmap[pattern.tail(pa).index()];
    VertexId t = vmap[pattern.head(pa).index()];
    return detail::for_each_simple_path(
        host, s, t, used_arc, [&](const std::vector<ArcId>& p) {
          for (ArcId a : p) used_arc[a.index()] = true;
          amap[pa.index()] = Path(p);
          bool ok = route(order, k + 1);
          for (ArcId a : p) used_arc[a.index()] = false;
          return ok;
        });
  };

  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == pn) {
      // Longest lower bound first; ties by arc id.
      std::vector<ArcId> order = pattern.arcs();
      for (ArcId a : order) {
        auto d = dist[vmap[pattern.tail(a).index()].index()]
                     [vmap[pattern.head(a).index()].index()];
        if (d == static_cast<std::size_t>(-1)) return false;
      }
      std::stable_sort(order.begin(), order.end(), [&](ArcId a, ArcId b) {
        auto da = dist[vmap[pattern.tail(a).index()].index()]
                      [vmap[pattern.head(a).index()].index()];
        auto db = dist[vmap[pattern.tail(b).index()].index()]
                      [vmap[pattern.head(b).index()].index()];
        return da > db;
      });
      if (!route(order, 0)) return false;
      result = ImmersionModel{pattern, host, vmap, amap};
      return true;
    }
    VertexId pv{i};
    for (VertexId hv : host.vertices()) {
      if (used_vertex[hv.index()]) continue;
      if (host.out_degree(hv) < pattern.out_degree(pv) ||
          host.in_degree(hv) < pattern.in_degree(pv)) {
        continue;
      }
      vmap[i] = hv;
      used_vertex[hv.index()] = true;
      bool ok = place(i + 1);
      used_vertex[hv.index()] = false;
      if (ok) return true;
    }
    return false;
  };
  place(0);
  return result;
}

// Exact search for arc-disjoint x -> y and y -> x paths.
inline std::optional<std::pair<Path, Path>> opposite_pair_exists(
    const MultiDigraph& d, VertexId x, VertexId y, OracleLimits lim = {}) {
  detail::check_cap(d, lim, "opposite_pair_exists");
  if (!d.has_vertex(x) || !d.has_vertex(y)) {
    throw structural_error("opposite_pair_exists: unknown vertex");
  }
  if (x == y) throw contract_violation("opposite_pair_exists needs x != y");
  std::optional<std::pair<Path, Path>> found;
  std::vector<bool> blocked(d.arc_count(), false);
  // Any x -> y walk contains a simple path on a subset of its arcs, so simple
  // forward paths suffice; the backward side only needs reachability.
  detail::for_each_simple_path(
      d, x, y, std::vector<bool>(d.arc_count(), false),
      [&](const std::vector<ArcId>& p) {
        for (ArcId a : p) blocked[a.index()] = true;
        auto back = detail::bfs_path(d, y, x, blocked);
        for (ArcId a : p) blocked[a.index()] = false;
        if (back) {
          found.emplace(Path(p), Path(*back));
          return true;
        }
        return false;
      });
  return found;
}

// Exact maximum number of arc-disjoint s -> t paths by exhaustive search
// over families of simple paths (first arcs strictly increasing), memoised
// on the used-arc mask.
inline std::size_t max_disjoint_brute(const MultiDigraph& d, VertexId s,
                                      VertexId t, OracleLimits lim = {}) {
  detail::check_cap(d, lim, "max_disjoint_brute");
  if (d.arc_count() > 64) throw oracle_refusal("max_disjoint_brute: > 64 arcs");
  if (!d.has_vertex(s) || !d.has_vertex(t)) {
    throw structural_error("max_disjoint_brute: unknown vertex");
  }
  if (s == t) throw contract_violation("max_disjoint_brute needs s != t");

  std::unordered_map<std::uint64_t, std::size_t> memo;
  std::function<std::size_t(std::uint64_t, std::uint32_t)> best =
      [&](std::uint64_t mask, std::uint32_t min_first) -> std::size_t {
    std::uint64_t key = mask * 131 + min_first;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<bool> blocked(d.arc_count());
    for (std::size_t a = 0; a < d.arc_count(); ++a) blocked[a] = (mask >> a) & 1;
    for (ArcId a : d.out_arcs(s)) {
      if (a.value < min_first) blocked[a.index()] = true;
    }
    std::size_t result = 0;
    detail::for_each_simple_path(d, s, t, blocked,
                                 [&](const std::vector<ArcId>& p) {
                                   std::uint64_t m2 = mask;
                                   for (ArcId a : p) m2 |= std::uint64_t{1} << a.value;
                                   result = std::max(result,
                                                     1 + best(m2, p.front().value + 1));
                                   return false;
                                 });
    memo.emplace(key, result);
    return result;
  };
  return best(0, 0);
}

}  // namespace onion
