// Builds a crossing-grid well-crossing pair, harvests a 1-onion star out of
// it and prints the star together with a DOT rendering.

#include <iostream>

#include "onion/onion.hpp"

int main() {
  using namespace onion;
  GridGadgetOptions opts;
  opts.p_count = 12;
  opts.q_count = 12;
  opts.ordered = true;
  auto g = grid_gadget(opts);
  std::cout << "digraph: " << g.digraph.vertex_count() << " vertices, "
            << g.digraph.arc_count() << " arcs\n";

  auto star = harvest_onion_star(g.digraph, g.pair, 1);
  if (auto* inc = std::get_if<Inconclusive>(&star)) {
    std::cout << "inconclusive at " << inc->stage << ": " << inc->detail << '\n';
    return 2;
  }
  const auto& s = std::get<OnionStarModel>(star);
  std::cout << document(to_json(s)).dump(2) << '\n';
  std::cout << format_dot(g.digraph, highlight(to_immersion_model(g.digraph, s)));
  return 0;
}
