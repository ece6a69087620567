#pragma once

// Unit-capacity max-flow / min-cut over multidigraphs (Menger), with
// vertex-set terminals and flow decomposition into simple paths.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "onion/digraph.hpp"

namespace onion {

struct CutResult {
  std::vector<VertexId> source_side;  // A
  std::vector<VertexId> sink_side;    // B
  std::size_t size = 0;               // |delta^+(A)|
};

struct DisjointPathFamily {
  PathFamily paths;
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;

  std::size_t size() const noexcept { return paths.size(); }
};

namespace detail {

struct UnitFlow {
  std::vector<bool> used;       // per arc: carries one unit
  std::size_t value = 0;
  std::vector<bool> reachable;  // residual reachability from the source
};

// Repeated BFS augmentation. At every vertex the residual arcs are scanned in
// ascending arc id (forward and backward arcs merged), so the result is a
// deterministic function of the digraph.
inline UnitFlow unit_max_flow(const MultiDigraph& d, VertexId s, VertexId t) {
  UnitFlow f;
  f.used.assign(d.arc_count(), false);
  const std::size_t n = d.vertex_count();

  struct Step {
    ArcId arc;
    bool forward;
  };

  while (true) {
    std::vector<bool> seen(n, false);
    std::vector<Step> parent(n);
    std::deque<VertexId> queue{s};
    seen[s.index()] = true;
    while (!queue.empty() && !seen[t.index()]) {
      VertexId u = queue.front();
      queue.pop_front();
      auto outs = d.out_arcs(u);
      auto ins = d.in_arcs(u);
      std::size_t i = 0, j = 0;
      while (i < outs.size() || j < ins.size()) {
        bool take_out = j == ins.size() || (i < outs.size() && outs[i] < ins[j]);
        ArcId a = take_out ? outs[i++] : ins[j++];
        bool residual = take_out ? !f.used[a.index()] : f.used[a.index()];
        if (!residual) continue;
        VertexId w = take_out ? d.head(a) : d.tail(a);
        if (seen[w.index()]) continue;
        seen[w.index()] = true;
        parent[w.index()] = {a, take_out};
        queue.push_back(w);
      }
    }
    if (!seen[t.index()]) {
      f.reachable = std::move(seen);
      return f;
    }
    for (VertexId v = t; v != s;) {
      Step st = parent[v.index()];
      f.used[st.arc.index()] = st.forward;
      v = st.forward ? d.tail(st.arc) : d.head(st.arc);
    }
    ++f.value;
  }
}

// Walks the support from s, cutting out any closed sub-walk as it appears;
// every emitted path is therefore simple. Assumes conservation was checked.
inline PathFamily decompose_single(const MultiDigraph& d,
                                   const std::vector<bool>& support,
                                   VertexId s, VertexId t) {
  std::vector<bool> spent(d.arc_count(), false);
  std::vector<std::size_t> next_out(d.vertex_count(), 0);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> on_walk(d.vertex_count(), kNone);

  auto next_arc = [&](VertexId u) -> std::optional<ArcId> {
    auto outs = d.out_arcs(u);
    auto& k = next_out[u.index()];
    while (k < outs.size()) {
      ArcId a = outs[k];
      if (support[a.index()] && !spent[a.index()]) return a;
      ++k;
    }
    return std::nullopt;
  };

  PathFamily paths;
  while (true) {
    std::vector<VertexId> walk{s};
    std::vector<ArcId> arcs;
    on_walk[s.index()] = 0;
    bool finished = false;
    while (true) {
      VertexId cur = walk.back();
      if (cur == t && !arcs.empty()) {
        finished = true;
        break;
      }
      auto a = next_arc(cur);
      if (!a) break;
      spent[a->index()] = true;
      VertexId w = d.head(*a);
      if (on_walk[w.index()] != kNone) {
        // Closed sub-walk: drop it, its arcs stay spent.
        std::size_t keep = on_walk[w.index()];
        for (std::size_t i = keep + 1; i < walk.size(); ++i) {
          on_walk[walk[i].index()] = kNone;
        }
        walk.resize(keep + 1);
        arcs.resize(keep);
        continue;
      }
      on_walk[w.index()] = walk.size();
      walk.push_back(w);
      arcs.push_back(*a);
    }
    for (VertexId v : walk) on_walk[v.index()] = kNone;
    if (!finished) {
      if (walk.size() > 1) {
        throw contract_violation("arc set is not the support of a flow");
      }
      return paths;
    }
    paths.emplace_back(std::move(arcs));
  }
}

inline std::vector<VertexId> dedupe(std::span<const VertexId> xs) {
  std::vector<VertexId> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline void check_terminals(const MultiDigraph& d,
                            std::span<const VertexId> sources,
                            std::span<const VertexId> sinks) {
  if (sources.empty() || sinks.empty()) {
    throw contract_violation("source and sink sets must be nonempty");
  }
  auto in_src = membership(d, sources);
  for (VertexId v : sinks) {
    if (!d.has_vertex(v)) throw structural_error("sink is not a vertex");
    if (in_src[v.index()]) {
      throw contract_violation("source and sink sets intersect at vertex " +
                               std::to_string(v.value));
    }
  }
}

}  // namespace detail

// Cut (A, B) with A the residual-reachable side of a maximum flow.
inline CutResult min_cut(const MultiDigraph& d, VertexId source,
                         VertexId sink) {
  if (source == sink) throw contract_violation("min_cut needs source != sink");
  if (!d.has_vertex(source) || !d.has_vertex(sink)) {
    throw structural_error("min_cut terminal is not a vertex");
  }
  auto flow = detail::unit_max_flow(d, source, sink);
  CutResult cut;
  for (VertexId v : d.vertices()) {
    (flow.reachable[v.index()] ? cut.source_side : cut.sink_side).push_back(v);
  }
  cut.size = boundary(d, cut.source_side, Direction::out).size();
  return cut;
}

// Splits the support of a unit flow into arc-disjoint simple paths from
// `sources` to `sinks`; circulations in the support are dropped.
inline PathFamily decompose_flow(const MultiDigraph& d,
                                 std::span<const ArcId> support,
                                 std::span<const VertexId> sources,
                                 std::span<const VertexId> sinks) {
  detail::check_terminals(d, sources, sinks);
  std::vector<bool> in_support(d.arc_count(), false);
  for (ArcId a : support) {
    if (!d.has_arc(a)) throw structural_error("support arc is not in digraph");
    if (in_support[a.index()]) {
      throw contract_violation("support lists an arc twice");
    }
    in_support[a.index()] = true;
  }
  auto is_src = membership(d, sources);
  auto is_snk = membership(d, sinks);
  std::vector<long> net(d.vertex_count(), 0);  // out minus in
  for (ArcId a : support) {
    ++net[d.tail(a).index()];
    --net[d.head(a).index()];
  }
  for (VertexId v : d.vertices()) {
    long x = net[v.index()];
    bool ok = is_src[v.index()] ? x >= 0 : is_snk[v.index()] ? x <= 0 : x == 0;
    if (!ok) {
      throw contract_violation("flow conservation fails at vertex " +
                               std::to_string(v.value));
    }
  }

  // Reduce to a single source and sink with one super-arc per unit of
  // terminal excess, then strip the super-arcs.
  MultiDigraph aug = d;
  VertexId s = aug.add_vertex();
  VertexId t = aug.add_vertex();
  std::vector<bool> aug_support = in_support;
  for (VertexId v : d.vertices()) {
    long x = net[v.index()];
    for (long i = 0; i < x; ++i) {
      aug.add_arc(s, v);
      aug_support.push_back(true);
    }
    for (long i = 0; i < -x; ++i) {
      aug.add_arc(v, t);
      aug_support.push_back(true);
    }
  }
  auto raw = detail::decompose_single(aug, aug_support, s, t);
  PathFamily out;
  for (auto& p : raw) {
    std::vector<ArcId> inner(p.arcs().begin() + 1, p.arcs().end() - 1);
    out.emplace_back(std::move(inner));
  }
  return out;
}

inline PathFamily decompose_flow(const MultiDigraph& d,
                                 std::span<const ArcId> support,
                                 VertexId source, VertexId sink) {
  return decompose_flow(d, support, std::span<const VertexId>(&source, 1),
                        std::span<const VertexId>(&sink, 1));
}

// Maximum family of pairwise arc-disjoint simple paths from the source set
// to the sink set. Each set is attached to a super-vertex by |A(d)|+1
// parallel arcs.
inline DisjointPathFamily max_disjoint_paths(const MultiDigraph& d,
                                             std::span<const VertexId> sources,
                                             std::span<const VertexId> sinks) {
  detail::check_terminals(d, sources, sinks);
  auto src = detail::dedupe(sources);
  auto snk = detail::dedupe(sinks);

  MultiDigraph aug = d;
  VertexId s = aug.add_vertex();
  VertexId t = aug.add_vertex();
  const std::size_t multiplicity = d.arc_count() + 1;
  for (VertexId v : src) {
    for (std::size_t i = 0; i < multiplicity; ++i) aug.add_arc(s, v);
  }
  for (VertexId v : snk) {
    for (std::size_t i = 0; i < multiplicity; ++i) aug.add_arc(v, t);
  }

  auto flow = detail::unit_max_flow(aug, s, t);
  std::vector<VertexId> side;
  for (VertexId v : aug.vertices()) {
    if (flow.reachable[v.index()]) side.push_back(v);
  }
  if (boundary(aug, side, Direction::out).size() != flow.value) {
    throw std::logic_error("max flow and residual cut disagree");
  }

  auto raw = detail::decompose_single(aug, flow.used, s, t);
  if (raw.size() != flow.value) {
    throw std::logic_error("flow decomposition lost a unit");
  }
  DisjointPathFamily out{{}, src, snk};
  for (auto& p : raw) {
    out.paths.emplace_back(
        std::vector<ArcId>(p.arcs().begin() + 1, p.arcs().end() - 1));
  }
  return out;
}

inline DisjointPathFamily max_disjoint_paths(const MultiDigraph& d,
                                             VertexId source, VertexId sink) {
  return max_disjoint_paths(d, std::span<const VertexId>(&source, 1),
                            std::span<const VertexId>(&sink, 1));
}

// mu(x, y).
inline std::size_t mu(const MultiDigraph& d, VertexId x, VertexId y) {
  return max_disjoint_paths(d, x, y).size();
}

}  // namespace onion
