#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyrw/error.hpp"
#include "polyrw/polygraph.hpp"
#include "polyrw/sphere.hpp"

namespace polyrw {

/// The three levels of a collapsible part with the well-founded rankings that
/// justify it.  Cells, rules and generators missing from a ranking have rank 0.
struct CollapsiblePart {
  struct SphereCollapse {
    std::string cell;  // removed, certified by `sphere`
    ThreeSphere sphere;
  };
  struct CellCollapse {
    std::string cell;  // removed together with `rule`
    std::string rule;
  };
  struct RuleCollapse {
    std::string rule;  // removed together with `generator`
    std::string generator;
  };

  std::vector<SphereCollapse> spheres;
  std::vector<CellCollapse> cells;
  std::vector<RuleCollapse> rules;
  std::map<std::string, long> cell_rank;
  std::map<std::string, long> rule_rank;
  std::map<std::string, long> generator_rank;
};

namespace detail {

inline long rank_of(const std::map<std::string, long>& m, const std::string& k) {
  auto it = m.find(k);
  return it == m.end() ? 0 : it->second;
}

struct Occurrence {
  bool in_rhs;
  std::size_t index;
};

/// Replaces every step of a rule in `witness` by its witness path, whiskered
/// and oriented like the step.
inline RewritePath substitute_rules(const TwoPolygraph& x, const RewritePath& p,
                                    const std::map<std::string, RewritePath>& witness) {
  RewritePath out{p.start, {}};
  for (const RewriteStep& s : p.steps) {
    auto it = witness.find(s.rule);
    if (it == witness.end()) {
      out.steps.push_back(s);
      continue;
    }
    RewritePath w = s.orientation == Orientation::forward ? it->second : invert(x, it->second);
    for (RewriteStep t : w.steps) {
      t.position += s.position;
      out.steps.push_back(std::move(t));
    }
  }
  return cancel_inverse_pairs(std::move(out));
}

}  // namespace detail

/// Quotient of a (3,1)-polygraph by a collapsible part, with the Nielsen
/// substitutions applied to the surviving cells and rules.
inline ThreeOnePolygraph homotopical_reduce(const ThreeOnePolygraph& x, const CollapsiblePart& g) {
  const TwoPolygraph& two = x.two();
  std::set<std::string> dead_cells, dead_rules, dead_gens;

  // spheres -> cells
  for (const auto& s : g.spheres) {
    x.cell(s.cell);
    if (!dead_cells.insert(s.cell).second)
      throw error(errc::not_collapsible, "cell '" + s.cell + "' is collapsed twice");
    SphereCheck chk = check_sphere(x, s.sphere);
    auto it = chk.occurrences.find(s.cell);
    if (it == chk.occurrences.end() || it->second != 1)
      throw error(errc::not_collapsible, "cell '" + s.cell + "' does not occur exactly once in its sphere");
    const long r = detail::rank_of(g.cell_rank, s.cell);
    for (const auto& [c, n] : chk.occurrences)
      if (c != s.cell && detail::rank_of(g.cell_rank, c) >= r)
        throw error(errc::not_collapsible, "sphere of '" + s.cell + "' uses '" + c + "' which is not of lower rank");
  }

  // cells -> rules, with witness paths
  std::map<std::string, RewritePath> witness;
  std::vector<std::pair<std::string, long>> order;
  for (const auto& c : g.cells) {
    const ThreeCell& cell = x.cell(c.cell);
    two.rule(c.rule);
    if (dead_cells.count(c.cell))
      throw error(errc::not_collapsible, "cell '" + c.cell + "' is already collapsed");
    dead_cells.insert(c.cell);
    if (!dead_rules.insert(c.rule).second)
      throw error(errc::not_collapsible, "rule '" + c.rule + "' is collapsed twice");
    std::vector<detail::Occurrence> occ;
    const long r = detail::rank_of(g.rule_rank, c.rule);
    for (bool in_rhs : {false, true}) {
      const RewritePath& p = in_rhs ? cell.rhs : cell.lhs;
      for (std::size_t i = 0; i < p.steps.size(); ++i) {
        if (p.steps[i].rule == c.rule)
          occ.push_back({in_rhs, i});
        else if (detail::rank_of(g.rule_rank, p.steps[i].rule) >= r)
          throw error(errc::not_collapsible, "cell '" + c.cell + "' uses rule '" + p.steps[i].rule +
                                                 "' which is not of lower rank than '" + c.rule + "'");
      }
    }
    if (occ.size() != 1)
      throw error(errc::not_collapsible, "rule '" + c.rule + "' does not occur exactly once in cell '" + c.cell + "'");
    const RewritePath& here = occ[0].in_rhs ? cell.rhs : cell.lhs;
    const RewritePath& there = occ[0].in_rhs ? cell.lhs : cell.rhs;
    const std::size_t k = occ[0].index;
    const RewriteStep& step = here.steps[k];
    std::vector<Word> words = replay(two, here);
    const Rule& rule = two.rule(c.rule);
    const Word& at = words[k];
    if (step.position != 0 || at != (step.orientation == Orientation::forward ? rule.source : rule.target))
      throw error(errc::substitution_out_of_scope, "rule '" + c.rule + "' occurs in context in cell '" + c.cell + "'");
    // here = H1 ; step ; H2 and there is parallel to it
    RewritePath h1{here.start, {here.steps.begin(), here.steps.begin() + static_cast<std::ptrdiff_t>(k)}};
    RewritePath h2{words[k + 1], {here.steps.begin() + static_cast<std::ptrdiff_t>(k + 1), here.steps.end()}};
    RewritePath w = compose(two, compose(two, invert(two, h1), there), invert(two, h2));
    if (step.orientation == Orientation::backward) w = invert(two, w);
    witness.emplace(c.rule, std::move(w));
    order.emplace_back(c.rule, r);
  }
  // a witness may mention other collapsed rules of lower rank; resolve those
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  std::map<std::string, RewritePath> resolved;
  for (const auto& [rule, r] : order) resolved[rule] = detail::substitute_rules(two, witness.at(rule), resolved);

  // rules -> generators
  std::map<letter, Word> image;
  std::vector<std::pair<letter, long>> gen_order;
  for (const auto& c : g.rules) {
    const Rule& rule = two.rule(c.rule);
    const letter a = two.alphabet().index(c.generator);
    if (dead_rules.count(c.rule)) throw error(errc::not_collapsible, "rule '" + c.rule + "' is already collapsed");
    dead_rules.insert(c.rule);
    if (!dead_gens.insert(c.generator).second)
      throw error(errc::not_collapsible, "generator '" + c.generator + "' is collapsed twice");
    const Word single{a};
    const Word* other = nullptr;
    if (rule.target == single) other = &rule.source;
    else if (rule.source == single) other = &rule.target;
    else throw error(errc::not_collapsible, "rule '" + c.rule + "' does not have '" + c.generator + "' as a side");
    const long r = detail::rank_of(g.generator_rank, c.generator);
    for (letter b : *other)
      if (b == a || detail::rank_of(g.generator_rank, two.alphabet().name(b)) >= r)
        throw error(errc::not_collapsible, "rule '" + c.rule + "' mentions a generator not below '" + c.generator + "'");
    image.emplace(a, *other);
    gen_order.emplace_back(a, r);
  }
  std::sort(gen_order.begin(), gen_order.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  for (const auto& [a, r] : gen_order) {
    Word w;
    for (letter b : image[a]) {
      auto it = image.find(b);
      if (it != image.end()) w.insert(w.end(), it->second.begin(), it->second.end());
      else w.push_back(b);
    }
    image[a] = std::move(w);
  }

  // build the quotient
  std::vector<std::string> names;
  std::map<letter, letter> renum;
  for (letter a = 0; a < two.alphabet().size(); ++a)
    if (!image.count(a)) {
      renum[a] = static_cast<letter>(names.size());
      names.push_back(two.alphabet().name(a));
    }
  auto map_word = [&](const Word& w) {
    Word out;
    for (letter b : w) {
      auto it = image.find(b);
      if (it == image.end()) out.push_back(renum.at(b));
      else for (letter c : it->second) out.push_back(renum.at(c));
    }
    return out;
  };
  auto map_path = [&](const RewritePath& p) {
    RewritePath out{map_word(p.start), {}};
    std::vector<Word> words = replay(two, p);
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
      const RewriteStep& s = p.steps[i];
      if (dead_rules.count(s.rule)) {
        if (map_word(words[i]) != map_word(words[i + 1]))
          throw error(errc::substitution_out_of_scope, "step of '" + s.rule + "' survives the substitution");
        continue;
      }
      out.steps.push_back({s.rule, map_word(subword(words[i], 0, s.position)).size(), s.orientation});
    }
    return cancel_inverse_pairs(std::move(out));
  };

  TwoPolygraph reduced{Alphabet(names)};
  for (const Rule& r : two.rules()) {
    if (dead_rules.count(r.label)) continue;
    Rule q{r.label, map_word(r.source), map_word(r.target)};
    if (q.source == q.target)
      throw error(errc::substitution_out_of_scope, "rule '" + r.label + "' becomes trivial after substitution");
    reduced.add_rule(std::move(q));
  }
  ThreeOnePolygraph out(std::move(reduced));
  for (const ThreeCell& c : x.cells()) {
    if (dead_cells.count(c.label)) continue;
    RewritePath l = map_path(detail::substitute_rules(two, c.lhs, resolved));
    RewritePath r = map_path(detail::substitute_rules(two, c.rhs, resolved));
    out.add_cell({c.label, std::move(l), std::move(r), c.family});
  }
  return out;
}

}  // namespace polyrw
