#pragma once

// Well-crossing pairs of path families: crossings, intersection graphs and
// the safe/dangerous classification of crossings.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "onion/digraph.hpp"
#include "onion/extremal.hpp"

namespace onion {

// P starts at `root`, Q ends at `root`; see is_well_crossing for the rest.
struct WellCrossingPair {
  PathFamily P;
  PathFamily Q;
  VertexId root;
};

struct Crossing {
  ArcId arc;
  std::size_t p;  // index into P
  std::size_t q;  // index into Q
};

enum class CrossingClass { safe, dangerous };

inline const char* to_string(CrossingClass c) {
  return c == CrossingClass::safe ? "safe" : "dangerous";
}

using IntersectionGraph = BipartiteGraph;

inline IntersectionGraph intersection_graph(const PathFamily& P,
                                            const PathFamily& Q) {
  std::unordered_map<std::uint32_t, std::vector<std::size_t>> on_q;
  for (std::size_t j = 0; j < Q.size(); ++j) {
    for (ArcId a : Q[j]) on_q[a.value].push_back(j);
  }
  IntersectionGraph g(P.size(), Q.size());
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (ArcId a : P[i]) {
      auto it = on_q.find(a.value);
      if (it == on_q.end()) continue;
      for (auto j : it->second) g.add_edge(i, j);
    }
  }
  return g;
}

struct WellCrossingReport {
  enum class Clause {
    none,
    empty_path,
    path_structure,  // arc missing, repeated, or not chained
    simple,
    disjoint,        // two paths in one family share an arc
    endpoint,        // P not starting at / Q not ending at the root
    complete,        // some (P, Q) pair shares no arc
  };
  Clause clause = Clause::none;
  std::string detail;

  bool ok() const noexcept { return clause == Clause::none; }
  explicit operator bool() const noexcept { return ok(); }
};

inline const char* to_string(WellCrossingReport::Clause c) {
  using C = WellCrossingReport::Clause;
  switch (c) {
    case C::none: return "ok";
    case C::empty_path: return "empty path";
    case C::path_structure: return "path structure";
    case C::simple: return "simple";
    case C::disjoint: return "arc-disjoint";
    case C::endpoint: return "endpoint";
    case C::complete: return "complete intersection";
  }
  return "?";
}

// Diagnostic only; never throws on bad input.
inline WellCrossingReport is_well_crossing(const MultiDigraph& d,
                                           const PathFamily& P,
                                           const PathFamily& Q,
                                           VertexId root) {
  using C = WellCrossingReport::Clause;
  auto fail = [](C c, std::string s) { return WellCrossingReport{c, std::move(s)}; };

  auto check_family = [&](const PathFamily& F, const char* name,
                          bool starts) -> std::optional<WellCrossingReport> {
    for (std::size_t i = 0; i < F.size(); ++i) {
      std::string where = std::string(name) + "[" + std::to_string(i) + "]";
      if (F[i].empty()) return fail(C::empty_path, where);
      if (!is_valid_path(d, F[i])) return fail(C::path_structure, where);
      if (!is_simple(d, F[i])) return fail(C::simple, where);
      VertexId end = starts ? path_tail(d, F[i]) : path_head(d, F[i]);
      if (end != root) {
        return fail(C::endpoint, where + (starts ? " does not start" : " does not end") +
                                     " at the root");
      }
    }
    if (!pairwise_arc_disjoint(F)) {
      return fail(C::disjoint, std::string(name) + " is not arc-disjoint");
    }
    return std::nullopt;
  };
  if (!d.has_vertex(root)) return fail(C::endpoint, "root is not a vertex");
  if (auto r = check_family(P, "P", true)) return *r;
  if (auto r = check_family(Q, "Q", false)) return *r;

  auto g = intersection_graph(P, Q);
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (std::size_t j = 0; j < Q.size(); ++j) {
      if (!g.has_edge(i, j)) {
        return fail(C::complete, "P[" + std::to_string(i) + "] and Q[" +
                                     std::to_string(j) + "] share no arc");
      }
    }
  }
  return {};
}

inline WellCrossingReport is_well_crossing(const MultiDigraph& d,
                                           const WellCrossingPair& w) {
  return is_well_crossing(d, w.P, w.Q, w.root);
}

// Precomputed positions for classifying crossings of a fixed pair. Only the
// arc-level structure of P and Q is used; the digraph is not needed.
class CrossingAnalysis {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit CrossingAnalysis(const WellCrossingPair& w) : w_(&w) {
    for (std::size_t i = 0; i < w.P.size(); ++i) {
      for (std::size_t k = 0; k < w.P[i].size(); ++k) {
        p_of_[w.P[i][k].value] = {i, k};
      }
    }
    for (std::size_t j = 0; j < w.Q.size(); ++j) {
      for (std::size_t k = 0; k < w.Q[j].size(); ++k) {
        q_of_[w.Q[j][k].value] = {j, k};
      }
    }
    first_.assign(w.P.size(), std::vector<std::size_t>(w.Q.size(), npos));
    for (std::size_t i = 0; i < w.P.size(); ++i) {
      for (std::size_t k = 0; k < w.P[i].size(); ++k) {
        auto it = q_of_.find(w.P[i][k].value);
        if (it == q_of_.end()) continue;
        auto& slot = first_[i][it->second.path];
        slot = std::min(slot, k);
      }
    }
  }

  const WellCrossingPair& pair() const noexcept { return *w_; }

  // Index of the P path (resp. Q path) containing `a`, if any.
  std::optional<std::size_t> p_index(ArcId a) const { return lookup(p_of_, a); }
  std::optional<std::size_t> q_index(ArcId a) const { return lookup(q_of_, a); }

  std::size_t position_on_p(ArcId a) const { return p_of_.at(a.value).pos; }
  std::size_t position_on_q(ArcId a) const { return q_of_.at(a.value).pos; }

  // Position on P[p] of its <_P-minimal crossing with Q[q], or npos.
  std::size_t first_crossing(std::size_t p, std::size_t q) const {
    return first_[p][q];
  }

  bool is_crossing(const Crossing& c) const {
    auto pi = p_index(c.arc);
    auto qi = q_index(c.arc);
    return pi && qi && *pi == c.p && *qi == c.q;
  }

  std::size_t threshold() const {
    return (w_->Q.size() + 2) / 3;  // ceil(|Q| / 3)
  }

  // Number of paths R in Q \ {Q[c.q]} whose first crossing with P[c.p]
  // strictly precedes c.arc on P[c.p].
  std::size_t earlier_paths(const Crossing& c) const {
    if (!is_crossing(c)) {
      throw contract_violation("arc " + std::to_string(c.arc.value) +
                               " is not a crossing of the given paths");
    }
    std::size_t pos = position_on_p(c.arc);
    std::size_t count = 0;
    for (std::size_t r = 0; r < w_->Q.size(); ++r) {
      if (r != c.q && first_[c.p][r] < pos) ++count;
    }
    return count;
  }

  CrossingClass classify(const Crossing& c) const {
    return earlier_paths(c) >= threshold() ? CrossingClass::safe
                                           : CrossingClass::dangerous;
  }

  // Crossing located at arc `a` (which must lie on both families).
  std::optional<Crossing> crossing_at(ArcId a) const {
    auto pi = p_index(a);
    auto qi = q_index(a);
    if (!pi || !qi) return std::nullopt;
    return Crossing{a, *pi, *qi};
  }

  // All crossings, ordered by (q, position on Q[q]).
  std::vector<Crossing> crossings() const {
    std::vector<Crossing> out;
    for (std::size_t j = 0; j < w_->Q.size(); ++j) {
      for (ArcId a : w_->Q[j]) {
        if (auto pi = p_index(a)) out.push_back({a, *pi, j});
      }
    }
    return out;
  }

  // Indices of P paths with a dangerous crossing on `suffix`, which must be
  // a contiguous piece of Q[q]. Ascending.
  std::vector<std::size_t> dangerous_paths(std::size_t q,
                                           const Path& suffix) const {
    if (q >= w_->Q.size()) throw contract_violation("q index out of range");
    if (suffix.empty()) return {};
    const Path& Qq = w_->Q[q];
    auto start = Qq.position(suffix.front());
    if (!start || *start + suffix.size() > Qq.size() ||
        !std::equal(suffix.begin(), suffix.end(),
                    Qq.begin() + static_cast<std::ptrdiff_t>(*start))) {
      throw contract_violation("suffix is not a contiguous trimming of Q[" +
                               std::to_string(q) + "]");
    }
    std::vector<std::size_t> out;
    for (ArcId a : suffix) {
      auto pi = p_index(a);
      if (!pi) continue;
      if (classify({a, *pi, q}) == CrossingClass::dangerous) out.push_back(*pi);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  struct Slot {
    std::size_t path;
    std::size_t pos;
  };

  static std::optional<std::size_t> lookup(
      const std::unordered_map<std::uint32_t, Slot>& m, ArcId a) {
    auto it = m.find(a.value);
    if (it == m.end()) return std::nullopt;
    return it->second.path;
  }

  const WellCrossingPair* w_;
  std::unordered_map<std::uint32_t, Slot> p_of_;
  std::unordered_map<std::uint32_t, Slot> q_of_;
  std::vector<std::vector<std::size_t>> first_;
};

inline CrossingClass classify_crossing(const Crossing& e,
                                       const WellCrossingPair& ctx) {
  return CrossingAnalysis(ctx).classify(e);
}

inline std::vector<std::size_t> dangerous_paths(const WellCrossingPair& ctx,
                                                std::size_t q,
                                                const Path& suffix) {
  return CrossingAnalysis(ctx).dangerous_paths(q, suffix);
}

}  // namespace onion
