#pragma once

// Text formats: the edge-list digraph file, path-family files, JSON views of
// results and Graphviz DOT export.
//
// Edge list: a header line "n m", then m lines "tail head" with 0-based
// vertex ids; arc i is the i-th arc line. Blank lines and lines starting with
// '#' are skipped. Path-family file: one path per line, arc ids separated by
// whitespace.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "onion/crossing.hpp"
#include "onion/digraph.hpp"
#include "onion/duality.hpp"
#include "onion/errors.hpp"
#include "onion/harvest.hpp"
#include "onion/oracle.hpp"

namespace onion {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

// Reads the next line that carries content. Returns false at end of input.
inline bool next_content_line(std::istream& in, std::string& line,
                              std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

inline std::vector<std::uint64_t> parse_numbers(const std::string& line,
                                                std::size_t lineno) {
  std::istringstream ss(line);
  std::vector<std::uint64_t> out;
  std::string tok;
  while (ss >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos) {
      throw parse_error(lineno, "expected a nonnegative integer, got '" + tok + "'");
    }
    try {
      out.push_back(std::stoull(tok));
    } catch (const std::out_of_range&) {
      throw parse_error(lineno, "integer out of range: " + tok);
    }
  }
  return out;
}

}  // namespace detail

inline MultiDigraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!detail::next_content_line(in, line, lineno)) {
    throw parse_error(lineno + 1, "missing header 'n m'");
  }
  auto header = detail::parse_numbers(line, lineno);
  if (header.size() != 2) throw parse_error(lineno, "header must be 'n m'");
  constexpr auto kMax = std::numeric_limits<std::uint32_t>::max();
  if (header[0] > kMax || header[1] > kMax) {
    throw parse_error(lineno, "digraph too large");
  }
  MultiDigraph d(header[0]);
  for (std::uint64_t i = 0; i < header[1]; ++i) {
    if (!detail::next_content_line(in, line, lineno)) {
      throw parse_error(lineno + 1, "expected " + std::to_string(header[1]) +
                                        " arcs, found " + std::to_string(i));
    }
    auto arc = detail::parse_numbers(line, lineno);
    if (arc.size() != 2) throw parse_error(lineno, "arc line must be 'tail head'");
    if (arc[0] >= header[0] || arc[1] >= header[0]) {
      throw parse_error(lineno, "vertex id out of range");
    }
    if (arc[0] == arc[1]) throw parse_error(lineno, "loop arc");
    d.add_arc(VertexId{arc[0]}, VertexId{arc[1]});
  }
  if (detail::next_content_line(in, line, lineno)) {
    throw parse_error(lineno, "trailing content after the last arc");
  }
  return d;
}

inline MultiDigraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const MultiDigraph& d) {
  out << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (ArcId a : d.arcs()) {
    out << d.tail(a).value << ' ' << d.head(a).value << '\n';
  }
}

inline std::string format_edge_list(const MultiDigraph& d) {
  std::ostringstream out;
  write_edge_list(out, d);
  return out.str();
}

// Paths are checked against d when one is given.
inline PathFamily read_path_family(std::istream& in,
                                   const MultiDigraph* d = nullptr) {
  PathFamily f;
  std::string line;
  std::size_t lineno = 0;
  while (detail::next_content_line(in, line, lineno)) {
    std::vector<ArcId> arcs;
    for (auto v : detail::parse_numbers(line, lineno)) {
      if (v > std::numeric_limits<std::uint32_t>::max()) {
        throw parse_error(lineno, "arc id out of range");
      }
      arcs.emplace_back(static_cast<std::uint32_t>(v));
    }
    Path p(std::move(arcs));
    if (d) {
      try {
        validate_path(*d, p);
      } catch (const contract_violation& e) {
        throw parse_error(lineno, e.what());
      }
    }
    f.push_back(std::move(p));
  }
  return f;
}

inline PathFamily parse_path_family(const std::string& text,
                                    const MultiDigraph* d = nullptr) {
  std::istringstream in(text);
  return read_path_family(in, d);
}

inline void write_path_family(std::ostream& out, const PathFamily& f) {
  for (const auto& p : f) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out << ' ';
      out << p[i].value;
    }
    out << '\n';
  }
}

// --- JSON -----------------------------------------------------------------

inline json to_json(const Path& p) {
  json a = json::array();
  for (ArcId x : p) a.push_back(x.value);
  return a;
}

inline json to_json(const PathFamily& f) {
  json a = json::array();
  for (const auto& p : f) a.push_back(to_json(p));
  return a;
}

inline json to_json(const std::vector<VertexId>& vs) {
  json a = json::array();
  for (VertexId v : vs) a.push_back(v.value);
  return a;
}

inline json to_json(const MultiDigraph& d) {
  json arcs = json::array();
  for (ArcId a : d.arcs()) arcs.push_back({d.tail(a).value, d.head(a).value});
  return {{"vertices", d.vertex_count()}, {"arcs", std::move(arcs)}};
}

inline json to_json(const OnionModel& o) {
  return {{"type", "onion"},
          {"source", o.source.value},
          {"sink", o.sink.value},
          {"out_paths", json::array({to_json(o.out_paths[0]), to_json(o.out_paths[1])})},
          {"back_path", to_json(o.back_path)}};
}

inline json to_json(const OnionStarModel& s) {
  return {{"type", "onion-star"},
          {"t", s.t()},
          {"center", s.center.value},
          {"y_leaves", to_json(s.y_leaves)},
          {"z_leaves", to_json(s.z_leaves)},
          {"arc_paths", to_json(s.arc_paths)}};
}

inline json to_json(const WellCrossingPair& w) {
  return {{"root", w.root.value}, {"P", to_json(w.P)}, {"Q", to_json(w.Q)}};
}

inline json to_json(const HarvestResult& r) {
  return {{"onion", to_json(r.onion)}, {"residual", to_json(r.residual)}};
}

inline json to_json(const HarvestFamily& h) {
  json os = json::array();
  for (const auto& o : h.onions) os.push_back(to_json(o));
  return {{"onions", std::move(os)}, {"residual", to_json(h.residual)}};
}

inline json to_json(const ImmersionModel& m) {
  return {{"type", "immersion"},
          {"pattern", to_json(m.pattern)},
          {"vertex_map", to_json(m.vertex_map)},
          {"arc_map", to_json(m.arc_map)}};
}

inline json to_json(const Inconclusive& i) {
  return {{"result", "inconclusive"}, {"stage", i.stage}, {"detail", i.detail}};
}

inline json to_json(const DichotomyOutcome& o) {
  json j = {{"tag", to_string(o.tag)}};
  if (o.star) j["star"] = to_json(*o.star);
  if (o.families) {
    j["P"] = to_json(o.families->first);
    j["Q"] = to_json(o.families->second);
  }
  if (o.tag == DichotomyOutcome::Tag::inconclusive) {
    j["stage"] = o.stage;
    j["detail"] = o.detail;
  }
  return j;
}

inline json crossings_json(const WellCrossingPair& w) {
  CrossingAnalysis an(w);
  json out = json::array();
  for (const auto& c : an.crossings()) {
    out.push_back({{"arc", c.arc.value},
                   {"p", c.p},
                   {"q", c.q},
                   {"earlier", an.earlier_paths(c)},
                   {"class", to_string(an.classify(c))}});
  }
  return out;
}

// Top-level document: the payload object with the schema version added.
inline json document(json payload) {
  payload["schema"] = kSchemaVersion;
  return payload;
}

// --- DOT ------------------------------------------------------------------

struct DotHighlight {
  std::vector<Path> paths;           // colored one color per entry
  std::vector<VertexId> vertices;    // drawn bold
};

inline const char* dot_color(std::size_t i) {
  static const char* palette[] = {"red",   "blue",   "darkgreen", "orange",
                                  "purple", "brown", "magenta",   "cyan4",
                                  "gold3",  "navy",  "olivedrab", "deeppink"};
  return palette[i % (sizeof(palette) / sizeof(palette[0]))];
}

// Every arc is labelled with its id, so parallel arcs stay distinguishable.
inline void write_dot(std::ostream& out, const MultiDigraph& d,
                      const DotHighlight& hl = {}) {
  std::vector<int> color(d.arc_count(), -1);
  for (std::size_t i = 0; i < hl.paths.size(); ++i)
    for (ArcId a : hl.paths[i])
      if (d.has_arc(a)) color[a.index()] = static_cast<int>(i);
  std::vector<bool> bold(d.vertex_count(), false);
  for (VertexId v : hl.vertices)
    if (d.has_vertex(v)) bold[v.index()] = true;

  out << "digraph D {\n";
  for (VertexId v : d.vertices()) {
    out << "  " << v.value;
    if (bold[v.index()]) out << " [penwidth=2.5]";
    out << ";\n";
  }
  for (ArcId a : d.arcs()) {
    out << "  " << d.tail(a).value << " -> " << d.head(a).value << " [label=\"a"
        << a.value << '"';
    if (color[a.index()] >= 0) {
      out << ", color=" << dot_color(static_cast<std::size_t>(color[a.index()]))
          << ", penwidth=2";
    }
    out << "];\n";
  }
  out << "}\n";
}

inline std::string format_dot(const MultiDigraph& d, const DotHighlight& hl = {}) {
  std::ostringstream out;
  write_dot(out, d, hl);
  return out.str();
}

inline DotHighlight highlight(const ImmersionModel& m) {
  return {m.arc_map, m.vertex_map};
}

}  // namespace onion
