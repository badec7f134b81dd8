#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <tuple>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polyrw/error.hpp"
#include "polyrw/word.hpp"

namespace polyrw {

/// A generating 2-cell.  An empty source is allowed (the unit rule of a
/// standard presentation); such rules never take part in redex search.
struct Rule {
  std::string label;
  Word source;
  Word target;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// A string rewriting system: generators plus labelled rules.
class TwoPolygraph {
 public:
  TwoPolygraph() = default;

  explicit TwoPolygraph(Alphabet alphabet, std::vector<Rule> rules = {})
      : alphabet_(std::move(alphabet)) {
    for (auto& r : rules) add_rule(std::move(r));
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  std::size_t size() const noexcept { return rules_.size(); }

  std::optional<std::size_t> find_rule(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const Rule& rule(const std::string& label) const {
    auto i = find_rule(label);
    if (!i) throw error(errc::unknown_rule, "no rule labelled '" + label + "'");
    return rules_[*i];
  }

  void add_rule(Rule r) {
    if (!is_token(r.label)) throw error(errc::invalid_polygraph, "bad rule label '" + r.label + "'");
    if (index_.count(r.label)) throw error(errc::invalid_polygraph, "duplicate rule label '" + r.label + "'");
    if (!alphabet_.contains(r.source) || !alphabet_.contains(r.target))
      throw error(errc::invalid_polygraph, "rule '" + r.label + "' uses an unknown generator");
    if (r.source == r.target)
      throw error(errc::invalid_polygraph, "rule '" + r.label + "' has equal source and target");
    index_.emplace(r.label, rules_.size());
    rules_.push_back(std::move(r));
  }

  void relabel_rule(const std::string& from, const std::string& to) {
    auto i = find_rule(from);
    if (!i) throw error(errc::unknown_rule, "no rule labelled '" + from + "'");
    if (from == to) return;
    if (!is_token(to) || index_.count(to)) throw error(errc::invalid_polygraph, "cannot relabel to '" + to + "'");
    index_.erase(from);
    rules_[*i].label = to;
    index_.emplace(to, *i);
  }

  void remove_rules(const std::set<std::string>& labels) {
    std::vector<Rule> kept;
    for (auto& r : rules_)
      if (!labels.count(r.label)) kept.push_back(std::move(r));
    rules_.clear();
    index_.clear();
    for (auto& r : kept) add_rule(std::move(r));
  }

  friend bool operator==(const TwoPolygraph& a, const TwoPolygraph& b) {
    return a.alphabet_ == b.alphabet_ && a.rules_ == b.rules_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Rule> rules_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class Orientation { forward, backward };

inline Orientation flip(Orientation o) {
  return o == Orientation::forward ? Orientation::backward : Orientation::forward;
}

/// One application of a rule (or its inverse) inside a word, `position`
/// being the length of the left context.
struct RewriteStep {
  std::string rule;
  std::size_t position = 0;
  Orientation orientation = Orientation::forward;

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
  friend auto operator<=>(const RewriteStep& a, const RewriteStep& b) {
    return std::tie(a.rule, a.position, a.orientation) <=> std::tie(b.rule, b.position, b.orientation);
  }
};

inline RewriteStep fwd(std::string rule, std::size_t pos) {
  return {std::move(rule), pos, Orientation::forward};
}
inline RewriteStep bwd(std::string rule, std::size_t pos) {
  return {std::move(rule), pos, Orientation::backward};
}

/// A 2-path in the free (2,1)-category: a start word and a sequence of steps.
struct RewritePath {
  Word start;
  std::vector<RewriteStep> steps;

  bool empty() const noexcept { return steps.empty(); }
  std::size_t size() const noexcept { return steps.size(); }

  friend bool operator==(const RewritePath&, const RewritePath&) = default;
};

/// Source and target words of a step, taking orientation into account.
inline std::pair<const Word&, const Word&> step_sides(const Rule& r, Orientation o) {
  if (o == Orientation::forward) return {r.source, r.target};
  return {r.target, r.source};
}

inline Word apply_step(const TwoPolygraph& x, const Word& w, const RewriteStep& s) {
  const Rule& r = x.rule(s.rule);
  auto [from, to] = step_sides(r, s.orientation);
  if (!occurs_at(w, from, s.position))
    throw error(errc::redex_mismatch, "rule '" + s.rule + "' does not apply at position " +
                                          std::to_string(s.position) + " of '" +
                                          x.alphabet().format(w) + "'");
  Word out;
  out.reserve(w.size() - from.size() + to.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s.position));
  out.insert(out.end(), to.begin(), to.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(s.position + from.size()), w.end());
  return out;
}

/// All words visited by a path, start first.  Throws RedexMismatch naming the
/// offending step index.
inline std::vector<Word> replay(const TwoPolygraph& x, const RewritePath& p) {
  std::vector<Word> words{p.start};
  words.reserve(p.steps.size() + 1);
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    try {
      words.push_back(apply_step(x, words.back(), p.steps[i]));
    } catch (const error& e) {
      throw error(e.code(), "step " + std::to_string(i) + ": " + e.what());
    }
  }
  return words;
}

inline Word end_word(const TwoPolygraph& x, const RewritePath& p) {
  Word w = p.start;
  for (const auto& s : p.steps) w = apply_step(x, w, s);
  return w;
}

inline RewritePath invert(const TwoPolygraph& x, const RewritePath& p) {
  RewritePath q{end_word(x, p), {}};
  q.steps.reserve(p.steps.size());
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it)
    q.steps.push_back({it->rule, it->position, flip(it->orientation)});
  return q;
}

/// Removes adjacent pairs `s ; s^-1`, which are identities in the free
/// (2,1)-category.
inline RewritePath cancel_inverse_pairs(RewritePath p) {
  std::vector<RewriteStep> out;
  for (auto& s : p.steps) {
    if (!out.empty() && out.back().rule == s.rule && out.back().position == s.position &&
        out.back().orientation != s.orientation)
      out.pop_back();
    else
      out.push_back(std::move(s));
  }
  p.steps = std::move(out);
  return p;
}

inline RewritePath whisker(const Word& left, const RewritePath& p, const Word& right) {
  RewritePath q{concat(left, p.start, right), p.steps};
  for (auto& s : q.steps) s.position += left.size();
  return q;
}

inline RewritePath compose(const TwoPolygraph& x, const RewritePath& p, const RewritePath& q) {
  if (end_word(x, p) != q.start)
    throw error(errc::not_parallel, "cannot compose paths: end of first is not start of second");
  RewritePath r = p;
  r.steps.insert(r.steps.end(), q.steps.begin(), q.steps.end());
  return r;
}

/// A generating 3-cell between two parallel 2-paths.  `family` carries the
/// Garside family tag when there is one.
struct ThreeCell {
  std::string label;
  RewritePath lhs;
  RewritePath rhs;
  std::string family;

  friend bool operator==(const ThreeCell&, const ThreeCell&) = default;
};

/// A (3,1)-polygraph: a 2-polygraph plus generating 3-cells.
class ThreeOnePolygraph {
 public:
  ThreeOnePolygraph() = default;
  explicit ThreeOnePolygraph(TwoPolygraph two, std::vector<ThreeCell> cells = {}) : two_(std::move(two)) {
    for (auto& c : cells) add_cell(std::move(c));
  }

  const TwoPolygraph& two() const noexcept { return two_; }
  const Alphabet& alphabet() const noexcept { return two_.alphabet(); }
  const std::vector<Rule>& rules() const noexcept { return two_.rules(); }
  const std::vector<ThreeCell>& cells() const noexcept { return cells_; }

  std::optional<std::size_t> find_cell(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const ThreeCell& cell(const std::string& label) const {
    auto i = find_cell(label);
    if (!i) throw error(errc::unknown_cell, "no 3-cell labelled '" + label + "'");
    return cells_[*i];
  }

  /// Checks that both boundaries replay and are parallel.
  void add_cell(ThreeCell c) {
    if (!is_token(c.label)) throw error(errc::invalid_polygraph, "bad cell label '" + c.label + "'");
    if (index_.count(c.label)) throw error(errc::invalid_polygraph, "duplicate cell label '" + c.label + "'");
    if (c.lhs.start != c.rhs.start || end_word(two_, c.lhs) != end_word(two_, c.rhs))
      throw error(errc::not_parallel, "boundaries of cell '" + c.label + "' are not parallel");
    index_.emplace(c.label, cells_.size());
    cells_.push_back(std::move(c));
  }

  void relabel_cell(const std::string& from, const std::string& to) {
    auto i = find_cell(from);
    if (!i) throw error(errc::unknown_cell, "no 3-cell labelled '" + from + "'");
    if (from == to) return;
    if (!is_token(to) || index_.count(to)) throw error(errc::invalid_polygraph, "cannot relabel to '" + to + "'");
    index_.erase(from);
    cells_[*i].label = to;
    index_.emplace(to, *i);
  }

  /// Renames a rule everywhere, including inside cell boundaries.
  void relabel_rule(const std::string& from, const std::string& to) {
    two_.relabel_rule(from, to);
    for (auto& c : cells_)
      for (auto* p : {&c.lhs, &c.rhs})
        for (auto& s : p->steps)
          if (s.rule == from) s.rule = to;
  }

  friend bool operator==(const ThreeOnePolygraph& a, const ThreeOnePolygraph& b) {
    return a.two_ == b.two_ && a.cells_ == b.cells_;
  }

 private:
  TwoPolygraph two_;
  std::vector<ThreeCell> cells_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace polyrw
