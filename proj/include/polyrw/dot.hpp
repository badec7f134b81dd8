#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "polyrw/completion.hpp"
#include "polyrw/io.hpp"
#include "polyrw/polygraph.hpp"
#include "polyrw/rewriting.hpp"
#include "polyrw/sphere.hpp"

namespace polyrw::dot {

namespace detail {

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Collects nodes and edges in first-seen order so the output is stable.
class Graph {
 public:
  std::size_t node(const std::string& label) {
    auto [it, fresh] = ids_.emplace(label, nodes_.size());
    if (fresh) nodes_.push_back(label);
    return it->second;
  }

  void edge(std::size_t a, std::size_t b, const std::string& label) {
    if (seen_.emplace(a, b, label).second) edges_.push_back({a, b, label});
  }

  void path(const TwoPolygraph& x, const RewritePath& p) {
    std::vector<Word> ws = replay(x, p);
    std::size_t prev = node(x.alphabet().format(ws[0]));
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
      std::size_t next = node(x.alphabet().format(ws[i + 1]));
      const RewriteStep& s = p.steps[i];
      std::string l = s.rule + "@" + std::to_string(s.position);
      if (s.orientation == Orientation::backward) edge(next, prev, l);
      else edge(prev, next, l);
      prev = next;
    }
  }

  std::string str(const std::string& name = "polyrw") const {
    std::ostringstream os;
    os << "digraph " << quote(name) << " {\n";
    if (!nodes_.empty()) os << "  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < nodes_.size(); ++i) os << "  n" << i << " [label=" << quote(nodes_[i]) << "];\n";
    for (const auto& e : edges_) os << "  n" << e.from << " -> n" << e.to << " [label=" << quote(e.label) << "];\n";
    os << "}\n";
    return os.str();
  }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

 private:
  struct Edge {
    std::size_t from, to;
    std::string label;
  };
  std::map<std::string, std::size_t> ids_;
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::set<std::tuple<std::size_t, std::size_t, std::string>> seen_;
};

}  // namespace detail

/// Both boundaries of each 3-cell, drawn over shared word nodes.
inline std::string render_cells(const ThreeOnePolygraph& x) {
  detail::Graph g;
  for (const ThreeCell& c : x.cells()) {
    g.path(x.two(), c.lhs);
    g.path(x.two(), c.rhs);
  }
  return g.str();
}

inline std::string render_cell(const ThreeOnePolygraph& x, const ThreeCell& c) {
  detail::Graph g;
  g.path(x.two(), c.lhs);
  g.path(x.two(), c.rhs);
  return g.str(c.label);
}

/// Each critical branching with its two normalising legs.
inline std::string render_branchings(const TwoPolygraph& x) {
  detail::Graph g;
  const Rewriter rw(x);
  for (const Branching& b : critical_branchings(x)) {
    Confluence c = join_branching(rw, b);
    g.path(x, c.left);
    g.path(x, c.right);
  }
  return g.str();
}

/// The branchings examined by completion, with the rules it added as edges
/// between the two normal forms.
inline std::string render_trace(const CompletionResult& r) {
  detail::Graph g;
  const TwoPolygraph& x = r.polygraph;
  for (const CompletionEvent& e : r.trace) {
    std::size_t s = g.node(x.alphabet().format(e.branching.source));
    std::size_t a = g.node(x.alphabet().format(e.left_normal));
    std::size_t b = g.node(x.alphabet().format(e.right_normal));
    g.edge(s, a, e.branching.left.rule + "@" + std::to_string(e.branching.left.position) + " ; nf");
    g.edge(s, b, e.branching.right.rule + "@" + std::to_string(e.branching.right.position) + " ; nf");
    if (e.added_rule) {
      const Rule& rule = x.rule(*e.added_rule);
      g.edge(g.node(x.alphabet().format(rule.source)), g.node(x.alphabet().format(rule.target)), *e.added_rule);
    }
  }
  return g.str();
}

/// The 2-paths visited by both sides of a sphere, joined by the moves.
inline std::string render_sphere(const ThreeOnePolygraph& x, const ThreeSphere& s) {
  detail::Graph g;
  for (const SphereSide* side : {&s.lhs, &s.rhs}) {
    RewritePath p = side->start;
    std::size_t prev = g.node(io::format_path(x.alphabet(), p));
    for (const SphereMove& m : side->moves) {
      p = apply_move(x, p, m);
      std::size_t next = g.node(io::format_path(x.alphabet(), p));
      std::string l = m.kind == SphereMove::Kind::exchange
                          ? "exchange@" + std::to_string(m.index)
                          : m.cell + (m.orientation == Orientation::backward ? "~" : "") + "@" + std::to_string(m.index);
      g.edge(prev, next, l);
      prev = next;
    }
  }
  return g.str();
}

}  // namespace polyrw::dot
