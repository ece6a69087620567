// onion_cli: command-line front end. JSON results go to stdout; exit status
// is 0 for a conclusive answer, 2 for Inconclusive, 1 for any error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "onion/onion.hpp"

namespace {

using namespace onion;

constexpr int kConclusive = 0;
constexpr int kError = 1;
constexpr int kInconclusive = 2;

MultiDigraph load_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

PathFamily load_family(const std::string& path, const MultiDigraph& d) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_path_family(in, &d);
}

std::vector<VertexId> to_vertices(const std::vector<std::uint32_t>& ids) {
  std::vector<VertexId> out;
  for (auto v : ids) out.emplace_back(v);
  return out;
}

std::size_t digit_cap(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ONION_DIGIT_CAP")) {
    std::size_t pos = 0;
    std::string s(env);
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || v == 0) {
      throw contract_violation("ONION_DIGIT_CAP must be a positive integer");
    }
    return static_cast<std::size_t>(v);
  }
  return kDefaultDigitCap;
}

void emit(const json& payload) { std::cout << document(payload).dump(2) << '\n'; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct Options {
  std::string input;
  std::string out;
  std::string dot;
  // generate
  std::string kind;
  std::size_t t = 1;
  std::size_t k = 1;
  std::size_t n = 1;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  // queries
  std::uint32_t from = 0, to = 1;
  std::string name;
  std::vector<std::string> args;
  std::optional<std::size_t> cap;
  std::string p_file, q_file;
  std::uint32_t root = 0;
  std::string mode = "single";
  std::string direction = "out";
  std::uint32_t y = 0;
  std::vector<std::uint32_t> Z, X;
  std::size_t nw = 1;
  std::size_t budget = 2;
  std::string pattern, host;
  std::size_t oracle_cap = 24;
  std::string paths;
};

int cmd_generate(const Options& o) {
  MultiDigraph d;
  std::ostringstream text;
  if (o.kind == "onion-star") {
    auto s = onion_star(o.t);
    text << "# onion star t=" << o.t << ", center " << s.center.value << "\n";
    d = std::move(s.digraph);
  } else if (o.kind == "counterexample") {
    auto c = counterexample(o.k);
    text << "# counterexample k=" << o.k << ", x " << c.x.value << ", y "
         << c.y.value << "\n";
    d = std::move(c.digraph);
  } else if (o.kind == "random") {
    text << "# random n=" << o.n << " m=" << o.m << " seed=" << o.seed << "\n";
    d = random_digraph(o.n, o.m, o.seed);
  } else {
    throw contract_violation("unknown kind '" + o.kind + "'");
  }
  write_edge_list(text, d);
  if (o.out.empty()) {
    std::cout << text.str();
  } else {
    write_text(o.out, text.str());
  }
  return kConclusive;
}

int cmd_mu(const Options& o) {
  auto d = load_digraph(o.input);
  VertexId s{o.from}, t{o.to};
  auto fwd = max_disjoint_paths(d, s, t);
  auto cut = min_cut(d, s, t);
  emit({{"from", o.from},
        {"to", o.to},
        {"mu", fwd.size()},
        {"mu_reverse", mu(d, t, s)},
        {"paths", to_json(fwd.paths)},
        {"cut_source_side", to_json(cut.source_side)}});
  return kConclusive;
}

int cmd_bounds(const Options& o) {
  std::vector<BigInt> args;
  for (const auto& a : o.args) {
    if (a.empty() || a.find_first_not_of("0123456789") != std::string::npos) {
      throw contract_violation("bound argument '" + a + "' is not a nonnegative integer");
    }
    args.emplace_back(a);
  }
  auto v = bounds(o.name, args, digit_cap(o.cap));
  json j = {{"name", o.name}, {"args", o.args}, {"overflow", v.is_overflow()},
            {"digit_cap", v.cap()}};
  if (v.is_overflow()) {
    j["value"] = nullptr;
  } else {
    j["value"] = v.value().str();
    j["digits"] = BigBound::digits(v.value());
  }
  if (auto r = v.residue_mod3()) j["mod3"] = *r;
  emit(j);
  return kConclusive;
}

WellCrossingPair load_pair(const Options& o, const MultiDigraph& d) {
  WellCrossingPair w{load_family(o.p_file, d), load_family(o.q_file, d),
                     VertexId{o.root}};
  if (auto r = is_well_crossing(d, w); !r) {
    throw contract_violation(std::string("not a well-crossing pair: ") +
                             to_string(r.clause) + ": " + r.detail);
  }
  return w;
}

int cmd_crossings(const Options& o) {
  auto d = load_digraph(o.input);
  auto w = load_pair(o, d);
  CrossingAnalysis an(w);
  emit({{"threshold", an.threshold()}, {"crossings", crossings_json(w)}});
  return kConclusive;
}

int cmd_harvest(const Options& o) {
  auto d = load_digraph(o.input);
  auto w = load_pair(o, d);
  Direction dir;
  if (o.direction == "out") {
    dir = Direction::out;
  } else if (o.direction == "in") {
    dir = Direction::in;
  } else {
    throw contract_violation("direction must be 'out' or 'in'");
  }
  auto finish = [&](const auto& outcome, auto&& to_doc, auto&& highlight_of) {
    using T = std::decay_t<decltype(std::get<0>(outcome))>;
    if (auto* inc = std::get_if<Inconclusive>(&outcome)) {
      emit(to_json(*inc));
      return kInconclusive;
    }
    const T& v = std::get<T>(outcome);
    if (!o.dot.empty()) write_text(o.dot, format_dot(d, highlight_of(v)));
    emit(to_doc(v));
    return kConclusive;
  };
  auto onion_hl = [](const std::vector<OnionModel>& os) {
    DotHighlight hl;
    for (const auto& x : os) {
      hl.paths.push_back(x.out_paths[0]);
      hl.paths.push_back(x.out_paths[1]);
      hl.paths.push_back(x.back_path);
      hl.vertices.push_back(x.source);
      hl.vertices.push_back(x.sink);
    }
    return hl;
  };
  if (o.mode == "star") {
    return finish(
        harvest_onion_star(d, w, o.t),
        [](const OnionStarModel& s) { return to_json(s); },
        [&](const OnionStarModel& s) { return highlight(to_immersion_model(d, s)); });
  }
  if (o.mode == "many") {
    return finish(
        harvest_many(d, w, o.t, o.n, dir),
        [](const HarvestFamily& h) { return to_json(h); },
        [&](const HarvestFamily& h) { return onion_hl(h.onions); });
  }
  if (o.mode == "single") {
    if (dir == Direction::in) {
      throw contract_violation("single mode harvests out-onions; use --mode many");
    }
    return finish(
        harvest_single(d, w, o.n),
        [](const HarvestResult& r) { return to_json(r); },
        [&](const HarvestResult& r) { return onion_hl({r.onion}); });
  }
  throw contract_violation("mode must be single, many or star");
}

int cmd_dichotomy(const Options& o) {
  auto d = load_digraph(o.input);
  auto Z = to_vertices(o.Z);
  auto out = onion_or_uncross(d, VertexId{o.y}, Z, o.t, o.k, o.nw);
  if (!o.dot.empty() && out.star) {
    write_text(o.dot, format_dot(d, highlight(to_immersion_model(d, *out.star))));
  }
  emit(to_json(out));
  return out.tag == DichotomyOutcome::Tag::inconclusive ? kInconclusive
                                                       : kConclusive;
}

int cmd_nocut(const Options& o) {
  LinkedSetInstance inst{load_digraph(o.input), to_vertices(o.X), o.t};
  auto out = no_cut_to_onion_star(inst, o.budget);
  if (auto* inc = std::get_if<Inconclusive>(&out)) {
    emit(to_json(*inc));
    return kInconclusive;
  }
  const auto& s = std::get<OnionStarModel>(out);
  if (!o.dot.empty()) {
    write_text(o.dot, format_dot(inst.d, highlight(to_immersion_model(inst.d, s))));
  }
  emit(to_json(s));
  return kConclusive;
}

int cmd_embed(const Options& o) {
  auto h = load_digraph(o.pattern);
  auto m = embed_degree_bounded(h, o.t);
  if (!o.dot.empty()) write_text(o.dot, format_dot(m.host, highlight(m)));
  emit(to_json(m));
  return kConclusive;
}

int cmd_oracle(const Options& o) {
  OracleLimits lim{o.oracle_cap};
  if (o.mode == "immersion") {
    auto pattern = load_digraph(o.pattern);
    auto host = load_digraph(o.host);
    auto m = immersion_exists(pattern, host, lim);
    json j = {{"query", "immersion"}, {"found", m.has_value()}};
    if (m) {
      j["model"] = to_json(*m);
      if (!o.dot.empty()) write_text(o.dot, format_dot(host, highlight(*m)));
    }
    emit(j);
    return kConclusive;
  }
  auto d = load_digraph(o.input);
  if (o.mode == "opposite") {
    auto pr = opposite_pair_exists(d, VertexId{o.from}, VertexId{o.to}, lim);
    json j = {{"query", "opposite"}, {"x", o.from}, {"y", o.to},
              {"found", pr.has_value()}};
    if (pr) {
      j["forward"] = to_json(pr->first);
      j["backward"] = to_json(pr->second);
    }
    emit(j);
    return kConclusive;
  }
  if (o.mode == "maxflow") {
    auto v = max_disjoint_brute(d, VertexId{o.from}, VertexId{o.to}, lim);
    emit({{"query", "maxflow"}, {"from", o.from}, {"to", o.to}, {"mu", v}});
    return kConclusive;
  }
  throw contract_violation("oracle query must be immersion, opposite or maxflow");
}

int cmd_dot(const Options& o) {
  auto d = load_digraph(o.input);
  DotHighlight hl;
  if (!o.paths.empty()) hl.paths = load_family(o.paths, d);
  std::string text = format_dot(d, hl);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text(o.out, text);
  }
  return kConclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Onion-star immersion toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "Write a generated digraph as an edge list");
  gen->add_option("--kind", o.kind, "onion-star | counterexample | random")->required();
  gen->add_option("--t", o.t, "onion-star size");
  gen->add_option("--k", o.k, "counterexample size");
  gen->add_option("--n", o.n, "random: vertices");
  gen->add_option("--m", o.m, "random: arcs");
  gen->add_option("--seed", o.seed, "random: seed");
  gen->add_option("-o,--out", o.out, "output file (default stdout)");

  auto* mu_cmd = app.add_subcommand("mu", "Maximum number of arc-disjoint paths");
  mu_cmd->add_option("input", o.input)->required();
  mu_cmd->add_option("--from", o.from)->required();
  mu_cmd->add_option("--to", o.to)->required();

  auto* bnd = app.add_subcommand("bounds", "Evaluate a bound function exactly");
  bnd->add_option("--name", o.name, "b | c | g | f | F | g_tk | f_thm")->required();
  bnd->add_option("--args", o.args)->required();
  bnd->add_option("--cap", o.cap, "digit cap (default $ONION_DIGIT_CAP or 1000000)");

  auto* crs = app.add_subcommand("crossings", "Classify the crossings of a well-crossing pair");
  crs->add_option("input", o.input)->required();
  crs->add_option("--P", o.p_file, "path family file for P")->required();
  crs->add_option("--Q", o.q_file, "path family file for Q")->required();
  crs->add_option("--root", o.root)->required();

  auto* hv = app.add_subcommand("harvest", "Harvest onions from a well-crossing pair");
  hv->add_option("input", o.input)->required();
  hv->add_option("--P", o.p_file)->required();
  hv->add_option("--Q", o.q_file)->required();
  hv->add_option("--root", o.root)->required();
  hv->add_option("--mode", o.mode, "single | many | star");
  hv->add_option("--t", o.t, "onion count (many) or star size (star)");
  hv->add_option("--n", o.n, "minimum residual size");
  hv->add_option("--direction", o.direction, "out | in");
  hv->add_option("--dot", o.dot, "also write a DOT rendering here");

  auto* dich = app.add_subcommand("dichotomy", "Onion star or uncrossed flows");
  dich->add_option("input", o.input)->required();
  dich->add_option("--y", o.y)->required();
  dich->add_option("--Z", o.Z)->required()->delimiter(',');
  dich->add_option("--t", o.t);
  dich->add_option("--k", o.k);
  dich->add_option("--nw", o.nw, "working threshold replacing max{k, F(t)}");
  dich->add_option("--dot", o.dot);

  auto* nc = app.add_subcommand("nocut", "Linked set to onion star");
  nc->add_option("input", o.input)->required();
  nc->add_option("--X", o.X)->required()->delimiter(',');
  nc->add_option("--t", o.t);
  nc->add_option("--budget", o.budget, "per-leaf multiplicity B");
  nc->add_option("--dot", o.dot);

  auto* emb = app.add_subcommand("embed", "Embed a degree-bounded digraph into the t-onion star");
  emb->add_option("--pattern", o.pattern)->required();
  emb->add_option("--t", o.t);
  emb->add_option("--dot", o.dot);

  auto* orc = app.add_subcommand("oracle", "Exact brute-force queries");
  orc->add_option("query", o.mode, "immersion | opposite | maxflow")->required();
  orc->add_option("input", o.input, "digraph for opposite / maxflow");
  orc->add_option("--pattern", o.pattern);
  orc->add_option("--host", o.host);
  orc->add_option("--from", o.from);
  orc->add_option("--to", o.to);
  orc->add_option("--cap", o.oracle_cap, "arc cap");
  orc->add_option("--dot", o.dot);

  auto* dot = app.add_subcommand("dot", "Graphviz rendering of a digraph");
  dot->add_option("input", o.input)->required();
  dot->add_option("--paths", o.paths, "path family to color");
  dot->add_option("-o,--out", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*gen) return cmd_generate(o);
    if (*mu_cmd) return cmd_mu(o);
    if (*bnd) return cmd_bounds(o);
    if (*crs) return cmd_crossings(o);
    if (*hv) return cmd_harvest(o);
    if (*dich) return cmd_dichotomy(o);
    if (*nc) return cmd_nocut(o);
    if (*emb) return cmd_embed(o);
    if (*orc) return cmd_oracle(o);
    if (*dot) return cmd_dot(o);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kError;
}
