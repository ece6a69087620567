#pragma once

// Multidigraphs with identity-carrying arcs, and the path calculus
// (trimming, concatenation, reversal, boundaries) built on arc identities.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "onion/errors.hpp"

namespace onion {

template <class Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t v) : value(v) {}
  constexpr explicit Id(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
  constexpr explicit Id(int v) : value(static_cast<std::uint32_t>(v)) {}

  constexpr std::size_t index() const noexcept { return value; }
  constexpr auto operator<=>(const Id&) const = default;
};

using VertexId = Id<struct VertexTag>;
using ArcId = Id<struct ArcTag>;

enum class Direction { out, in };

// Directed multigraph. Vertices and arcs are numbered densely in insertion
// order; parallel arcs are distinct arcs, loops are rejected.
class MultiDigraph {
 public:
  struct Endpoints {
    VertexId tail;
    VertexId head;
    bool operator==(const Endpoints&) const = default;
  };

  MultiDigraph() = default;
  explicit MultiDigraph(std::size_t vertex_count)
      : out_(vertex_count), in_(vertex_count) {}

  VertexId add_vertex() {
    out_.emplace_back();
    in_.emplace_back();
    return VertexId{out_.size() - 1};
  }

  ArcId add_arc(VertexId tail, VertexId head) {
    if (!has_vertex(tail) || !has_vertex(head)) {
      throw structural_error("arc endpoint is not a vertex of the digraph");
    }
    if (tail == head) {
      throw contract_violation("loops are not allowed (vertex " +
                               std::to_string(tail.value) + ")");
    }
    ArcId id{arcs_.size()};
    arcs_.push_back({tail, head});
    out_[tail.index()].push_back(id);
    in_[head.index()].push_back(id);
    return id;
  }

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  bool has_vertex(VertexId v) const noexcept {
    return v.index() < out_.size();
  }
  bool has_arc(ArcId a) const noexcept { return a.index() < arcs_.size(); }

  VertexId tail(ArcId a) const { return endpoints(a).tail; }
  VertexId head(ArcId a) const { return endpoints(a).head; }

  const Endpoints& endpoints(ArcId a) const {
    if (!has_arc(a)) {
      throw structural_error("arc " + std::to_string(a.value) +
                             " is not in the digraph");
    }
    return arcs_[a.index()];
  }

  // Arc lists are in ascending id order.
  std::span<const ArcId> out_arcs(VertexId v) const {
    check_vertex(v);
    return out_[v.index()];
  }
  std::span<const ArcId> in_arcs(VertexId v) const {
    check_vertex(v);
    return in_[v.index()];
  }

  std::size_t out_degree(VertexId v) const { return out_arcs(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_arcs(v).size(); }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> vs;
    vs.reserve(vertex_count());
    for (std::size_t i = 0; i < vertex_count(); ++i) vs.emplace_back(i);
    return vs;
  }

  std::vector<ArcId> arcs() const {
    std::vector<ArcId> as;
    as.reserve(arc_count());
    for (std::size_t i = 0; i < arc_count(); ++i) as.emplace_back(i);
    return as;
  }

  bool operator==(const MultiDigraph& other) const {
    return vertex_count() == other.vertex_count() && arcs_ == other.arcs_;
  }

 private:
  void check_vertex(VertexId v) const {
    if (!has_vertex(v)) {
      throw structural_error("vertex " + std::to_string(v.value) +
                             " is not in the digraph");
    }
  }

  std::vector<Endpoints> arcs_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
};

// A sequence of pairwise distinct arcs. The empty path is a legal value
// (it is what trimming returns when nothing remains).
class Path {
 public:
  Path() = default;
  Path(std::vector<ArcId> arcs) : arcs_(std::move(arcs)) {}  // NOLINT
  Path(std::initializer_list<ArcId> arcs) : arcs_(arcs) {}

  const std::vector<ArcId>& arcs() const noexcept { return arcs_; }
  std::size_t size() const noexcept { return arcs_.size(); }
  bool empty() const noexcept { return arcs_.empty(); }
  ArcId front() const { return arcs_.at(0); }
  ArcId back() const { return arcs_.at(arcs_.size() - 1); }
  ArcId operator[](std::size_t i) const { return arcs_[i]; }

  auto begin() const noexcept { return arcs_.begin(); }
  auto end() const noexcept { return arcs_.end(); }

  std::optional<std::size_t> position(ArcId a) const {
    auto it = std::find(arcs_.begin(), arcs_.end(), a);
    if (it == arcs_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - arcs_.begin());
  }
  bool contains(ArcId a) const { return position(a).has_value(); }

  bool operator==(const Path&) const = default;

 private:
  std::vector<ArcId> arcs_;
};

using PathFamily = std::vector<Path>;

// --- validation ---------------------------------------------------------

// Throws structural_error for unknown arcs and contract_violation for
// repeated arcs or broken chaining.
inline void validate_path(const MultiDigraph& d, const Path& p) {
  std::unordered_set<std::uint32_t> seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!d.has_arc(p[i])) {
      throw structural_error("path arc " + std::to_string(p[i].value) +
                             " is not in the digraph");
    }
    if (!seen.insert(p[i].value).second) {
      throw contract_violation("path repeats arc " +
                               std::to_string(p[i].value));
    }
    if (i > 0 && d.head(p[i - 1]) != d.tail(p[i])) {
      throw contract_violation("path arcs " + std::to_string(p[i - 1].value) +
                               " and " + std::to_string(p[i].value) +
                               " do not chain");
    }
  }
}

inline bool is_valid_path(const MultiDigraph& d, const Path& p) {
  try {
    validate_path(d, p);
    return true;
  } catch (const contract_violation&) {
    return false;
  }
}

inline VertexId path_tail(const MultiDigraph& d, const Path& p) {
  if (p.empty()) throw contract_violation("empty path has no tail");
  return d.tail(p.front());
}

inline VertexId path_head(const MultiDigraph& d, const Path& p) {
  if (p.empty()) throw contract_violation("empty path has no head");
  return d.head(p.back());
}

// Visited vertices: tail of the first arc followed by every head.
inline std::vector<VertexId> path_vertices(const MultiDigraph& d,
                                           const Path& p) {
  std::vector<VertexId> vs;
  if (p.empty()) return vs;
  vs.reserve(p.size() + 1);
  vs.push_back(d.tail(p.front()));
  for (ArcId a : p) vs.push_back(d.head(a));
  return vs;
}

// True iff the k+1 visited vertices are pairwise distinct.
inline bool is_simple(const MultiDigraph& d, const Path& p) {
  for (ArcId a : p) {
    if (!d.has_arc(a)) {
      throw structural_error("path arc " + std::to_string(a.value) +
                             " is not in the digraph");
    }
  }
  auto vs = path_vertices(d, p);
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

// --- trimming -----------------------------------------------------------

enum class Trim {
  before_open,    // P(-> a)
  before_closed,  // P(-> a]
  after_open,     // P(a ->)
  after_closed,   // P[a ->)
};

inline Path trim(const Path& p, ArcId anchor, Trim mode) {
  auto pos = p.position(anchor);
  if (!pos) {
    throw not_found_error("anchor arc " + std::to_string(anchor.value) +
                          " is not on the path");
  }
  const auto& as = p.arcs();
  auto at = as.begin() + static_cast<std::ptrdiff_t>(*pos);
  switch (mode) {
    case Trim::before_open:
      return Path(std::vector<ArcId>(as.begin(), at));
    case Trim::before_closed:
      return Path(std::vector<ArcId>(as.begin(), at + 1));
    case Trim::after_open:
      return Path(std::vector<ArcId>(at + 1, as.end()));
    case Trim::after_closed:
      return Path(std::vector<ArcId>(at, as.end()));
  }
  return {};
}

// P(a, b): the arcs strictly between a and b. Requires a <_P b.
inline Path trim_between(const Path& p, ArcId a, ArcId b) {
  auto pa = p.position(a);
  auto pb = p.position(b);
  if (!pa || !pb) {
    throw not_found_error("trim_between anchor is not on the path");
  }
  if (*pa >= *pb) {
    throw contract_violation("trim_between requires a to precede b");
  }
  const auto& as = p.arcs();
  return Path(std::vector<ArcId>(as.begin() + static_cast<std::ptrdiff_t>(*pa) + 1,
                                 as.begin() + static_cast<std::ptrdiff_t>(*pb)));
}

// PQ. The empty path is neutral.
inline Path concatenate(const MultiDigraph& d, const Path& p, const Path& q) {
  if (p.empty()) return q;
  if (q.empty()) return p;
  if (d.head(p.back()) != d.tail(q.front())) {
    throw contract_violation("concatenation endpoints do not match");
  }
  std::unordered_set<std::uint32_t> seen;
  for (ArcId a : p) seen.insert(a.value);
  std::vector<ArcId> out = p.arcs();
  for (ArcId a : q) {
    if (seen.contains(a.value)) {
      throw contract_violation("concatenated paths share arc " +
                               std::to_string(a.value));
    }
    out.push_back(a);
  }
  return Path(std::move(out));
}

// --- reversal -----------------------------------------------------------

inline MultiDigraph reverse(const MultiDigraph& d) {
  MultiDigraph r(d.vertex_count());
  for (ArcId a : d.arcs()) r.add_arc(d.head(a), d.tail(a));
  return r;
}

inline Path reverse(const Path& p) {
  std::vector<ArcId> as(p.arcs().rbegin(), p.arcs().rend());
  return Path(std::move(as));
}

inline PathFamily reverse(const PathFamily& f) {
  PathFamily out;
  out.reserve(f.size());
  for (const auto& p : f) out.push_back(reverse(p));
  return out;
}

// --- sets and boundaries ------------------------------------------------

inline std::vector<bool> membership(const MultiDigraph& d,
                                    std::span<const VertexId> xs) {
  std::vector<bool> in(d.vertex_count(), false);
  for (VertexId v : xs) {
    if (!d.has_vertex(v)) {
      throw structural_error("vertex " + std::to_string(v.value) +
                             " is not in the digraph");
    }
    in[v.index()] = true;
  }
  return in;
}

// delta^+(X) or delta^-(X), ascending by arc id.
inline std::vector<ArcId> boundary(const MultiDigraph& d,
                                   std::span<const VertexId> xs,
                                   Direction dir) {
  auto in = membership(d, xs);
  std::vector<ArcId> out;
  for (ArcId a : d.arcs()) {
    bool t = in[d.tail(a).index()];
    bool h = in[d.head(a).index()];
    if (dir == Direction::out ? (t && !h) : (!t && h)) out.push_back(a);
  }
  return out;
}

inline std::vector<VertexId> complement(const MultiDigraph& d,
                                        std::span<const VertexId> xs) {
  auto in = membership(d, xs);
  std::vector<VertexId> out;
  for (VertexId v : d.vertices()) {
    if (!in[v.index()]) out.push_back(v);
  }
  return out;
}

// A(F) as a membership vector indexed by arc id.
inline std::vector<bool> arc_mask(const MultiDigraph& d,
                                  const PathFamily& family) {
  std::vector<bool> mask(d.arc_count(), false);
  for (const auto& p : family) {
    for (ArcId a : p) mask.at(a.index()) = true;
  }
  return mask;
}

inline bool share_arc(const Path& p, const Path& q) {
  std::unordered_set<std::uint32_t> seen;
  for (ArcId a : p) seen.insert(a.value);
  return std::any_of(q.begin(), q.end(),
                     [&](ArcId a) { return seen.contains(a.value); });
}

// True iff no arc occurs twice across (or within) the given paths.
inline bool pairwise_arc_disjoint(std::span<const Path> paths) {
  std::unordered_set<std::uint32_t> seen;
  for (const auto& p : paths) {
    for (ArcId a : p) {
      if (!seen.insert(a.value).second) return false;
    }
  }
  return true;
}

}  // namespace onion

template <class Tag>
struct std::hash<onion::Id<Tag>> {
  std::size_t operator()(const onion::Id<Tag>& id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
