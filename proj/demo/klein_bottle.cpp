// Completes <a, b | bab = a> into a coherent presentation, then removes the
// superfluous rule and cells again.

#include <iostream>

#include "polyrw.hpp"

int main() {
  using namespace polyrw;
  TwoPolygraph x = catalog::klein_bottle();
  const Alphabet& ab = x.alphabet();
  HomotopicalCompletion hc = homotopical_completion(x, WordOrder::deglex({ab.index("a"), ab.index("b")}));
  std::cout << "coherent presentation:\n" << io::serialize(hc.polygraph) << '\n';

  std::cout << "normal form of 'b b a b a': " << ab.format(normalize(hc.polygraph.two(), ab.parse("b b a b a")).word)
            << "\n\n";

  // The cell on the alpha/alpha branching collapses with the added rule; the
  // other one is removed along a sphere built from the triple branchings.
  const std::string a_cell = hc.polygraph.cells()[0].label, b_cell = hc.polygraph.cells()[1].label;
  CollapsiblePart g;
  g.cells.push_back({a_cell, "kb:1"});
  g.rule_rank["kb:1"] = 1;
  g.cell_rank[b_cell] = 1;
  std::vector<Word> sources;
  for (const auto& t : critical_triple_branchings(hc.polygraph.two())) sources.push_back(t.source);
  auto spheres = find_spheres(hc.polygraph, sources, {{a_cell, 0}, {b_cell, 1}}, {b_cell});
  g.spheres.push_back({b_cell, spheres.at(b_cell)});
  std::cout << "after reduction:\n" << io::serialize(homotopical_reduce(hc.polygraph, g));
}
