#include <gtest/gtest.h>

#include "onion/generate.hpp"
#include "onion/io.hpp"

using namespace onion;

TEST(EdgeList, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto d = random_digraph(2 + seed % 7, seed % 15, seed);
    EXPECT_EQ(parse_edge_list(format_edge_list(d)), d);
  }
}

TEST(EdgeList, CommentsAndBlankLines) {
  auto d = parse_edge_list("# onion\n\n2 3\n0 1\n  # parallel\n0 1\n1 0\n\n");
  EXPECT_EQ(d, onion_pattern());
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_edge_list(text);
    } catch (const parse_error& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of(""), 1u);
  EXPECT_EQ(line_of("2\n"), 1u);
  EXPECT_EQ(line_of("2 1\n0 0\n"), 2u);
  EXPECT_EQ(line_of("2 1\n0 5\n"), 2u);
  EXPECT_EQ(line_of("2 2\n0 1\n"), 3u);
  EXPECT_EQ(line_of("2 1\n0 1\n1 0\n"), 3u);
  EXPECT_EQ(line_of("2 1\n0 x\n"), 2u);
  EXPECT_EQ(line_of("2 1\n0 -1\n"), 2u);
}

TEST(PathFamily, RoundTripAndValidation) {
  auto d = onion_pattern();
  PathFamily f{Path{ArcId{0}}, Path{ArcId{1}, ArcId{2}}};
  std::ostringstream out;
  write_path_family(out, f);
  EXPECT_EQ(out.str(), "0\n1 2\n");
  EXPECT_EQ(parse_path_family(out.str(), &d), f);
  EXPECT_THROW(parse_path_family("0 1\n", &d), parse_error);
  EXPECT_THROW(parse_path_family("7\n", &d), parse_error);
  EXPECT_EQ(parse_path_family("7\n").size(), 1u);
}

TEST(Json, DocumentsCarrySchema) {
  auto j = document(to_json(onion_pattern()));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["vertices"], 2);
  EXPECT_EQ(j["arcs"].size(), 3u);
  auto inc = to_json(Inconclusive{"pivot", "why"});
  EXPECT_EQ(inc["result"], "inconclusive");
  EXPECT_EQ(inc["stage"], "pivot");
}

TEST(Json, CrossingsListClasses) {
  GridGadgetOptions o;
  o.p_count = o.q_count = 3;
  o.ordered = true;
  auto g = grid_gadget(o);
  auto j = crossings_json(g.pair);
  EXPECT_EQ(j.size(), 9u);
  for (const auto& c : j) {
    EXPECT_EQ(c["earlier"], c["q"]);
    EXPECT_EQ(c["class"], c["q"].get<int>() >= 1 ? "safe" : "dangerous");
  }
}

TEST(Dot, LabelsAndColors) {
  auto d = onion_pattern();
  DotHighlight hl{{Path{ArcId{1}}}, {VertexId{0}}};
  auto s = format_dot(d, hl);
  EXPECT_NE(s.find("digraph D {"), std::string::npos);
  EXPECT_NE(s.find("0 -> 1 [label=\"a0\"];"), std::string::npos);
  EXPECT_NE(s.find("0 -> 1 [label=\"a1\", color=red, penwidth=2];"), std::string::npos);
  EXPECT_NE(s.find("0 [penwidth=2.5];"), std::string::npos);
}
