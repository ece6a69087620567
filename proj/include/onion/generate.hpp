#pragma once

// Instance generators: onion and onion-star patterns, the crossing-grid
// family with large opposite flows but no opposite arc-disjoint pair, random
// multidigraphs and random well-crossing pairs.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "onion/crossing.hpp"
#include "onion/digraph.hpp"

namespace onion {

// Bounded draw that is identical on every standard library.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

// Onion pattern: vertex 0 is the source, 1 the sink; arcs 0 and 1 run
// source -> sink, arc 2 runs sink -> source.
inline MultiDigraph onion_pattern() {
  MultiDigraph d(2);
  d.add_arc(VertexId{0}, VertexId{1});
  d.add_arc(VertexId{0}, VertexId{1});
  d.add_arc(VertexId{1}, VertexId{0});
  return d;
}

struct OnionStarInstance {
  MultiDigraph digraph;
  VertexId center;
  std::vector<VertexId> y_leaves;
  std::vector<VertexId> z_leaves;
};

// Arc slots of leaf pair i in the t-onion star, in id order.
enum class StarArc : std::size_t {
  center_to_y_first = 0,
  center_to_y_second = 1,
  y_to_center = 2,
  z_to_center_first = 3,
  z_to_center_second = 4,
  center_to_z = 5,
};

inline ArcId star_arc(std::size_t leaf, StarArc slot) {
  return ArcId{6 * leaf + static_cast<std::size_t>(slot)};
}

// t-onion star: center 0, y_i = i, z_i = t + i (1-based i). For leaf pair
// i the arcs 6(i-1) .. 6(i-1)+5 are x->y_i twice, y_i->x, z_i->x twice,
// x->z_i.
inline OnionStarInstance onion_star(std::size_t t) {
  if (t == 0) throw contract_violation("onion star needs t >= 1");
  OnionStarInstance s{MultiDigraph(2 * t + 1), VertexId{0}, {}, {}};
  for (std::size_t i = 1; i <= t; ++i) {
    s.y_leaves.emplace_back(i);
    s.z_leaves.emplace_back(t + i);
  }
  for (std::size_t i = 0; i < t; ++i) {
    VertexId x = s.center, y = s.y_leaves[i], z = s.z_leaves[i];
    s.digraph.add_arc(x, y);
    s.digraph.add_arc(x, y);
    s.digraph.add_arc(y, x);
    s.digraph.add_arc(z, x);
    s.digraph.add_arc(z, x);
    s.digraph.add_arc(x, z);
  }
  return s;
}

struct CounterexampleInstance {
  MultiDigraph digraph;
  VertexId x;
  VertexId y;
  PathFamily x_to_y;  // the k row paths
  PathFamily y_to_x;  // the k column paths
};

// k x k grid of merge cells. Cell (i, j) is a single arc u_ij -> v_ij; every
// arc entering the cell enters u_ij and every arc leaving it leaves v_ij.
// Row i runs x -> (i,1) -> ... -> (i,k) -> y, column j runs
// y -> (1,j) -> ... -> (k,j) -> x. A left-to-right staircase and a
// top-to-bottom staircase always meet in a cell, so they share its arc.
inline CounterexampleInstance counterexample(std::size_t k) {
  if (k == 0) throw contract_violation("counterexample needs k >= 1");
  CounterexampleInstance c;
  auto& d = c.digraph;
  c.x = d.add_vertex();
  c.y = d.add_vertex();
  std::vector<std::vector<VertexId>> u(k, std::vector<VertexId>(k));
  std::vector<std::vector<VertexId>> v(k, std::vector<VertexId>(k));
  std::vector<std::vector<ArcId>> cell(k, std::vector<ArcId>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      u[i][j] = d.add_vertex();
      v[i][j] = d.add_vertex();
      cell[i][j] = d.add_arc(u[i][j], v[i][j]);
    }
  }
  std::vector<std::vector<ArcId>> rows(k), cols(k);
  for (std::size_t i = 0; i < k; ++i) {
    rows[i].push_back(d.add_arc(c.x, u[i][0]));
    for (std::size_t j = 0; j < k; ++j) {
      rows[i].push_back(cell[i][j]);
      if (j + 1 < k) rows[i].push_back(d.add_arc(v[i][j], u[i][j + 1]));
    }
    rows[i].push_back(d.add_arc(v[i][k - 1], c.y));
  }
  for (std::size_t j = 0; j < k; ++j) {
    cols[j].push_back(d.add_arc(c.y, u[0][j]));
    for (std::size_t i = 0; i < k; ++i) {
      cols[j].push_back(cell[i][j]);
      if (i + 1 < k) cols[j].push_back(d.add_arc(v[i][j], u[i + 1][j]));
    }
    cols[j].push_back(d.add_arc(v[k - 1][j], c.x));
  }
  for (auto& r : rows) c.x_to_y.emplace_back(std::move(r));
  for (auto& col : cols) c.y_to_x.emplace_back(std::move(col));
  return c;
}

// n vertices, m arcs with uniformly random distinct endpoints.
inline MultiDigraph random_digraph(std::size_t n, std::size_t m,
                                   std::uint64_t seed) {
  MultiDigraph d(n);
  if (n < 2) {
    if (m > 0) throw contract_violation("random digraph needs n >= 2 for arcs");
    return d;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < m; ++i) {
    auto t = draw(rng, n);
    auto h = draw(rng, n - 1);
    if (h >= t) ++h;
    d.add_arc(VertexId{t}, VertexId{h});
  }
  return d;
}

struct WellCrossingInstance {
  MultiDigraph digraph;
  WellCrossingPair pair;
};

struct GridGadgetOptions {
  std::size_t p_count = 3;
  std::size_t q_count = 3;
  // When set, every P path meets the Q paths in index order and every Q
  // path meets the P paths in index order; otherwise both orders are
  // shuffled per path.
  bool ordered = false;
  // Probability (percent) that a (P, Q) pair gets a second crossing arc.
  unsigned double_crossing_percent = 0;
  // Random vertex identifications attempted after construction; one is kept
  // only if the pair stays well-crossing.
  std::size_t merge_attempts = 0;
  std::uint64_t seed = 0;
};

// Well-crossing pair built from dedicated crossing arcs: every (P_i, Q_j)
// pair shares one (or two) arcs of its own, joined by fresh connector arcs.
inline WellCrossingInstance grid_gadget(const GridGadgetOptions& o) {
  if (o.p_count == 0 || o.q_count == 0) {
    throw contract_violation("grid gadget needs nonempty families");
  }
  std::mt19937_64 rng(o.seed);
  auto shuffled = [&](std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    if (!o.ordered) {
      for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
    }
    return v;
  };

  // Abstract structure first: crossing arcs as (u, v) vertex pairs.
  struct Cross {
    std::size_t u, v;
  };
  std::size_t next_vertex = 1;  // 0 is the root
  std::vector<std::vector<std::vector<Cross>>> cross(
      o.p_count, std::vector<std::vector<Cross>>(o.q_count));
  for (std::size_t i = 0; i < o.p_count; ++i) {
    for (std::size_t j = 0; j < o.q_count; ++j) {
      std::size_t count =
          draw(rng, 100) < o.double_crossing_percent ? 2 : 1;
      for (std::size_t c = 0; c < count; ++c) {
        cross[i][j].push_back({next_vertex, next_vertex + 1});
        next_vertex += 2;
      }
    }
  }
  std::size_t vertex_count = next_vertex;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  std::vector<std::vector<std::size_t>> cross_arc(o.p_count * o.q_count);
  for (std::size_t i = 0; i < o.p_count; ++i) {
    for (std::size_t j = 0; j < o.q_count; ++j) {
      for (auto& c : cross[i][j]) {
        cross_arc[i * o.q_count + j].push_back(arcs.size());
        arcs.push_back({c.u, c.v});
      }
    }
  }
  std::vector<std::vector<std::size_t>> p_paths(o.p_count), q_paths(o.q_count);
  // P_i: root -> crossings in its order -> private end vertex.
  for (std::size_t i = 0; i < o.p_count; ++i) {
    std::size_t at = 0;
    auto order = shuffled(o.q_count);
    for (auto j : order) {
      for (std::size_t c = 0; c < cross[i][j].size(); ++c) {
        arcs.push_back({at, cross[i][j][c].u});
        p_paths[i].push_back(arcs.size() - 1);
        p_paths[i].push_back(cross_arc[i * o.q_count + j][c]);
        at = cross[i][j][c].v;
      }
    }
    arcs.push_back({at, vertex_count++});
    p_paths[i].push_back(arcs.size() - 1);
  }
  // Q_j: private start vertex -> crossings in its order -> root. The two
  // crossings of a doubled pair are visited by Q in the same order as by P.
  for (std::size_t j = 0; j < o.q_count; ++j) {
    std::size_t at = vertex_count++;
    auto order = shuffled(o.p_count);
    for (auto i : order) {
      for (std::size_t c = 0; c < cross[i][j].size(); ++c) {
        arcs.push_back({at, cross[i][j][c].u});
        q_paths[j].push_back(arcs.size() - 1);
        q_paths[j].push_back(cross_arc[i * o.q_count + j][c]);
        at = cross[i][j][c].v;
      }
    }
    arcs.push_back({at, 0});
    q_paths[j].push_back(arcs.size() - 1);
  }

  auto build = [&](const std::vector<std::size_t>& rep) {
    MultiDigraph d(vertex_count);
    for (auto [t, h] : arcs) {
      if (rep[t] == rep[h]) return std::optional<MultiDigraph>{};
      d.add_arc(VertexId{rep[t]}, VertexId{rep[h]});
    }
    return std::optional<MultiDigraph>{std::move(d)};
  };
  auto to_family = [](const std::vector<std::vector<std::size_t>>& ps) {
    PathFamily f;
    for (auto& p : ps) {
      std::vector<ArcId> as;
      for (auto a : p) as.emplace_back(a);
      f.emplace_back(std::move(as));
    }
    return f;
  };
  WellCrossingPair pair{to_family(p_paths), to_family(q_paths), VertexId{0}};

  std::vector<std::size_t> rep(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) rep[i] = i;
  for (std::size_t attempt = 0; attempt < o.merge_attempts; ++attempt) {
    std::size_t a = 1 + draw(rng, vertex_count - 1);
    std::size_t b = draw(rng, vertex_count);
    if (rep[a] == rep[b]) continue;
    auto trial = rep;
    std::size_t from = trial[a], to = trial[b];
    for (auto& r : trial) {
      if (r == from) r = to;
    }
    auto d = build(trial);
    if (d && is_well_crossing(*d, pair)) rep = std::move(trial);
  }
  return {*build(rep), std::move(pair)};
}

}  // namespace onion
