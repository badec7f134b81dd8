#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyrw/error.hpp"
#include "polyrw/order.hpp"
#include "polyrw/polygraph.hpp"
#include "polyrw/rewriting.hpp"

namespace polyrw {

struct CompletionOptions {
  std::size_t max_rules = 10'000;
  std::size_t max_rounds = 1'000;
  std::size_t step_budget = default_step_budget;
  std::string label_prefix = "kb:";
};

/// One examined critical branching.  `added_rule` is set when its two normal
/// forms differed and a rule was oriented from them.
struct CompletionEvent {
  std::size_t round = 0;
  Branching branching;
  Word left_normal;
  Word right_normal;
  std::optional<std::string> added_rule;
};

struct CompletionResult {
  TwoPolygraph polygraph;
  std::vector<CompletionEvent> trace;
  std::size_t rounds = 0;

  std::vector<std::string> added_rules() const {
    std::vector<std::string> out;
    for (const auto& e : trace)
      if (e.added_rule) out.push_back(*e.added_rule);
    return out;
  }
};

/// Round-based Knuth-Bendix completion.  Each round examines every critical
/// branching of the current system, normalises both legs with the rules
/// present at the start of the round, and adds the oriented non-joinable pairs
/// all at once.  Completion stops after a round that adds nothing.
inline CompletionResult knuth_bendix(const TwoPolygraph& x, const WordOrder& order,
                                     const CompletionOptions& opt = {}) {
  for (const Rule& r : x.rules())
    if (order.compare(r.source, r.target) != Comparison::greater)
      throw error(errc::orientation_failure, "rule '" + r.label + "' is not decreasing for " +
                                                 order.describe(x.alphabet()));
  CompletionResult res{x, {}, 0};
  std::size_t counter = 0;
  auto fresh_label = [&] {
    std::string l;
    do l = opt.label_prefix + std::to_string(++counter);
    while (res.polygraph.find_rule(l));
    return l;
  };
  for (;;) {
    if (res.rounds >= opt.max_rounds)
      throw error(errc::budget_exceeded, "completion did not stop within " + std::to_string(opt.max_rounds) + " rounds");
    ++res.rounds;
    const TwoPolygraph current = res.polygraph;
    const Rewriter rw(current);
    std::set<std::pair<Word, Word>> pending;
    std::vector<Rule> added;
    for (Branching& b : critical_branchings(current)) {
      Confluence c = join_branching(rw, b, opt.step_budget);
      CompletionEvent ev{res.rounds, std::move(b), c.left_normal, c.right_normal, std::nullopt};
      if (!c.joined()) {
        Word hi = c.left_normal, lo = c.right_normal;
        switch (order.compare(hi, lo)) {
          case Comparison::greater: break;
          case Comparison::less: std::swap(hi, lo); break;
          default:
            throw error(errc::orientation_failure,
                        "cannot orient '" + current.alphabet().format(hi) + "' against '" +
                            current.alphabet().format(lo) + "' with " + order.describe(current.alphabet()));
        }
        if (pending.emplace(hi, lo).second) {
          if (res.polygraph.size() + added.size() >= opt.max_rules)
            throw error(errc::budget_exceeded, "completion exceeded " + std::to_string(opt.max_rules) + " rules");
          Rule r{fresh_label(), hi, lo};
          ev.added_rule = r.label;
          added.push_back(r);
          res.polygraph.add_rule(std::move(r));
        }
      }
      res.trace.push_back(std::move(ev));
    }
    if (added.empty()) break;
  }
  return res;
}

/// Label given by `squier_completion` to the cell of a branching.
inline std::string squier_label(const Branching& b) {
  return "sq:" + b.left.rule + "/" + b.right.rule + "/" + std::to_string(b.right.position);
}

/// One 3-cell per critical branching, each leg continued by leftmost
/// normalisation.  Requires local confluence.
inline ThreeOnePolygraph squier_completion(const TwoPolygraph& x, std::size_t budget = default_step_budget) {
  ThreeOnePolygraph out(x);
  const Rewriter rw(x);
  for (const Branching& b : critical_branchings(x)) {
    Confluence c = join_branching(rw, b, budget);
    if (!c.joined())
      throw error(errc::not_locally_confluent,
                  "branching on '" + x.alphabet().format(b.source) + "' (" + b.left.rule + ", " + b.right.rule +
                      "@" + std::to_string(b.right.position) + ") does not join");
    out.add_cell({squier_label(b), std::move(c.left), std::move(c.right), {}});
  }
  return out;
}

struct HomotopicalCompletion {
  ThreeOnePolygraph polygraph;
  CompletionResult completion;
};

inline HomotopicalCompletion homotopical_completion(const TwoPolygraph& x, const WordOrder& order,
                                                    const CompletionOptions& opt = {}) {
  CompletionResult kb = knuth_bendix(x, order, opt);
  ThreeOnePolygraph p = squier_completion(kb.polygraph, opt.step_budget);
  return {std::move(p), std::move(kb)};
}

}  // namespace polyrw
