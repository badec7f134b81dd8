#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polyrw/error.hpp"
#include "polyrw/garside/datum.hpp"
#include "polyrw/garside/presentations.hpp"
#include "polyrw/reduction.hpp"
#include "polyrw/rewriting.hpp"
#include "polyrw/sphere.hpp"

namespace polyrw::garside {

/// Ranks used to reduce underline_gar3: beta rules above alpha rules; A and B
/// cells lowest, then C < D < E < F < G < H < I < E' < F' < G', ties broken
/// by position in the cell list.
inline std::map<std::string, long> gar3_cell_ranks(const ThreeOnePolygraph& x) {
  std::map<std::string, long> rank;
  const long n = static_cast<long>(x.cells().size());
  for (long i = 0; i < n; ++i) {
    const ThreeCell& c = x.cells()[static_cast<std::size_t>(i)];
    const long f = static_cast<long>(family_index(c.family));
    rank[c.label] = f <= 1 ? 0 : (f - 1) * n + i + 1;
  }
  return rank;
}

/// Spheres for the H, E', F' and G' cells, written out as diagrams of
/// whiskered A, B, C and H cells.  Returns nothing for other families.
inline std::optional<ThreeSphere> template_sphere(const GarsideDatum& d, const ThreeCell& c,
                                                  const std::vector<element>& ps) {
  auto m = [&](element a, element b) { return d.product(a, b).value(); };
  auto a = [&](element u, element v, std::size_t p) { return fwd(alpha_label(d, u, v), p); };
  auto b = [&](element u, element v, element w, std::size_t p) { return fwd(beta_label(d, u, v, w), p); };
  auto lbl = [&](const char* f, std::vector<element> q) { return detail::cell_label(d, f, q); };
  using M = SphereMove;
  if (c.family == "H") {
    // on u|v|x|y both sides end at u|v|alpha ; u|alpha ; beta
    const element u = ps[0], v = ps[1], x = ps[2], y = ps[3];
    const element uv = m(u, v), vx = m(v, x), xy = m(x, y);
    RewritePath p{word_of({u, v, x, y}), {a(u, v, 0), a(uv, x, 0)}};
    ThreeSphere s;
    s.lhs = {p, {M::apply(lbl("A", {u, v, x}), 0), M::apply(lbl("B", {u, vx, y}), 1),
                 M::apply(lbl("A", {v, x, y}), 0, 1)}};
    s.rhs = {p, {M::apply(lbl("B", {uv, x, y}), 1), M::exchange(0), M::apply(lbl("B", {u, v, xy}), 1),
                 M::apply(c.label, 2)}};
    return s;
  }
  if (c.family == "E'") {
    const element u = ps[0], v = ps[1], w = ps[2], x = ps[3];
    const element uv = m(u, v), wx = m(w, x);
    RewritePath p{word_of({u, v, w, x}), {a(u, v, 0), a(w, x, 1), a(uv, wx, 0)}};
    ThreeSphere s;
    s.lhs = {p, {M::apply(lbl("B", {u, v, w}), 0), M::apply(c.label, 1), M::apply(lbl("A", {v, w, x}), 0, 1)}};
    s.rhs = {p, {M::exchange(0), M::apply(lbl("A", {u, v, wx}), 1)}};
    return s;
  }
  if (c.family == "F'") {
    const element u = ps[0], v = ps[1], w = ps[2], x = ps[3], y = ps[4];
    const element uv = m(u, v), wx = m(w, x), xy = m(x, y);
    RewritePath p{word_of({u, v, w, xy}), {a(u, v, 0), a(w, xy, 1), b(uv, wx, y, 0)}};
    ThreeSphere s;
    s.lhs = {p, {M::apply(lbl("B", {u, v, w}), 0), M::apply(c.label, 1), M::apply(lbl("B", {v, w, xy}), 0, 1),
                 M::apply(lbl("H", {v, w, x, y}), 1, 1)}};
    s.rhs = {p, {M::exchange(0), M::apply(lbl("C", {u, v, wx, y}), 1)}};
    return s;
  }
  if (c.family == "G'") {
    const element u = ps[0], v = ps[1], w = ps[2], x = ps[3], y = ps[4];
    const element uv = m(u, v), wx = m(w, x), xy = m(x, y);
    RewritePath p{word_of({u, v, w, xy}), {a(u, v, 0), b(w, x, y, 1), a(uv, wx, 0)}};
    ThreeSphere s;
    s.lhs = {p, {M::apply(lbl("B", {u, v, w}), 0), M::apply(c.label, 1), M::apply(lbl("C", {v, w, x, y}), 0, 1)}};
    s.rhs = {p, {M::exchange(0), M::apply(lbl("A", {u, v, wx}), 1)}};
    return s;
  }
  return std::nullopt;
}

struct Gar3Reduction {
  ThreeOnePolygraph underline;  // the input, underline_gar3
  ThreeOnePolygraph result;
  CollapsiblePart collapsible;
  std::size_t template_spheres = 0;
  std::size_t searched_spheres = 0;
  std::vector<std::string> uncertified;  // removed without a sphere
  std::vector<std::string> warnings;
  bool matches_gar3 = false;
};

/// Reduces underline_gar3 to gar3: every B cell collapses its beta rule and
/// every other non-A cell is removed along a 3-sphere whose other cells are
/// of lower rank.  H, E', F' and G' use fixed diagrams; the remaining spheres
/// are found among the normalising paths of critical triple branchings.
inline Gar3Reduction reduce_to_gar3(const GarsideDatum& d) {
  Gar3Reduction out{underline_gar3(d), {}, {}, 0, 0, {}, {}, false};
  const ThreeOnePolygraph& x = out.underline;
  CollapsiblePart& g = out.collapsible;
  g.cell_rank = gar3_cell_ranks(x);
  for (const Rule& r : x.rules()) g.rule_rank[r.label] = r.label.rfind("beta:", 0) == 0 ? 1 : 0;

  // parameters of every cell, recovered from the classification
  std::map<std::string, std::vector<element>> params;
  for (const auto& c : classify_branchings(d, x.two())) params[c.cell.label] = c.params;

  std::set<std::string> targets;
  for (const ThreeCell& c : x.cells()) {
    if (c.family == "A") continue;
    if (c.family == "B") {
      const auto& p = params.at(c.label);
      g.cells.push_back({c.label, beta_label(d, p[0], p[1], p[2])});
      continue;
    }
    std::optional<ThreeSphere> s;
    try {
      s = template_sphere(d, c, params.at(c.label));
      if (s) check_sphere(x, *s);
    } catch (const error& e) {
      out.warnings.push_back("fixed sphere for " + c.label + " rejected: " + e.what());
      s.reset();
    }
    if (s) {
      g.spheres.push_back({c.label, std::move(*s)});
      ++out.template_spheres;
    } else {
      targets.insert(c.label);
    }
  }

  if (!targets.empty()) {
    std::vector<Word> sources;
    std::set<Word> seen;
    for (const auto& t : critical_triple_branchings(x.two()))
      if (seen.insert(t.source).second) sources.push_back(t.source);
    auto found = find_spheres(x, sources, g.cell_rank, targets);
    for (const ThreeCell& c : x.cells()) {
      if (!targets.count(c.label)) continue;
      auto it = found.find(c.label);
      if (it == found.end()) {
        out.uncertified.push_back(c.label);
        out.warnings.push_back("no sphere found for " + c.label + "; removed without a certificate");
        continue;
      }
      g.spheres.push_back({c.label, std::move(it->second)});
      ++out.searched_spheres;
    }
  }

  ThreeOnePolygraph reduced = homotopical_reduce(x, g);
  if (!out.uncertified.empty()) {
    std::set<std::string> drop(out.uncertified.begin(), out.uncertified.end());
    std::vector<ThreeCell> kept;
    for (const ThreeCell& c : reduced.cells())
      if (!drop.count(c.label)) kept.push_back(c);
    reduced = ThreeOnePolygraph(reduced.two(), std::move(kept));
  }
  out.result = std::move(reduced);
  out.matches_gar3 = out.result == gar3(d);
  return out;
}

/// Like `reduce_to_gar3` but throws MismatchWithGar3 when the result is not
/// gar3 and SphereCheckFailed when some cell was removed without a sphere.
inline ThreeOnePolygraph reduce_to_gar3_checked(const GarsideDatum& d) {
  Gar3Reduction r = reduce_to_gar3(d);
  if (!r.uncertified.empty())
    throw error(errc::sphere_check_failed, std::to_string(r.uncertified.size()) + " cells have no sphere, first " +
                                               r.uncertified.front());
  if (!r.matches_gar3) throw error(errc::mismatch_with_gar3, "reduced presentation differs from gar3");
  return r.result;
}

}  // namespace polyrw::garside
