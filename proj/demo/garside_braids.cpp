// Builds the Garside presentations of the simple braids on three strands and
// checks that the reduction of underline_gar3 lands on gar3.

#include <iostream>
#include <map>

#include "polyrw.hpp"

int main() {
  using namespace polyrw;
  garside::GarsideDatum d = catalog::braid_simple_datum(3);
  garside::require_valid(d);

  std::cout << "gar2:\n" << io::serialize(garside::gar2(d)) << '\n';

  ThreeOnePolygraph u3 = garside::underline_gar3(d);
  std::map<std::string, int> per_family;
  for (const ThreeCell& c : u3.cells()) ++per_family[c.family];
  std::cout << "underline_gar3 cells by family:";
  for (const auto& [f, n] : per_family) std::cout << ' ' << f << '=' << n;
  std::cout << "\n\n";

  garside::GarsideRewriter rw(d);
  const Alphabet& s = rw.polygraph().alphabet();
  Word w = s.parse("s1 s2 s2 s1 s2");
  std::cout << "S-normal form of '" << s.format(w) << "': " << s.format(rw.s_normalize(w)) << "\n\n";

  garside::Gar3Reduction r = garside::reduce_to_gar3(d);
  std::cout << "reduction reaches gar3: " << (r.matches_gar3 ? "yes" : "no") << '\n' << io::serialize(r.result);
}
