#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polyrw/error.hpp"
#include "polyrw/polygraph.hpp"
#include "polyrw/rewriting.hpp"

namespace polyrw {

/// An elementary move between two 2-paths.
///
/// `apply` rewrites the steps `index .. index+|side|-1` of the current path,
/// which must be the chosen boundary of `cell` whiskered on the left by
/// `offset` letters, into the other boundary.  Forward orientation goes from
/// the cell's lhs to its rhs.  `exchange` swaps the independent steps at
/// `index` and `index+1`.
struct SphereMove {
  enum class Kind { apply, exchange };

  Kind kind = Kind::apply;
  std::string cell;
  Orientation orientation = Orientation::forward;
  std::size_t index = 0;
  std::size_t offset = 0;

  static SphereMove apply(std::string cell, std::size_t index, std::size_t offset = 0,
                          Orientation o = Orientation::forward) {
    return {Kind::apply, std::move(cell), o, index, offset};
  }
  static SphereMove exchange(std::size_t index) { return {Kind::exchange, {}, Orientation::forward, index, 0}; }

  friend bool operator==(const SphereMove&, const SphereMove&) = default;
};

/// One side of a 3-sphere: a 2-path and the moves turning it into the final
/// 2-path of that side.
struct SphereSide {
  RewritePath start;
  std::vector<SphereMove> moves;
};

/// A pair of 3-paths.  It is a sphere when both sides start at the same
/// 2-path and end at the same 2-path.
struct ThreeSphere {
  SphereSide lhs;
  SphereSide rhs;
};

/// Swaps two adjacent independent steps.
inline RewritePath exchange_steps(const TwoPolygraph& x, const RewritePath& p, std::size_t k) {
  if (k + 1 >= p.steps.size()) throw error(errc::sphere_check_failed, "exchange index out of range");
  RewritePath q = p;
  RewriteStep s1 = p.steps[k], s2 = p.steps[k + 1];
  auto [from1, to1] = step_sides(x.rule(s1.rule), s1.orientation);
  auto [from2, to2] = step_sides(x.rule(s2.rule), s2.orientation);
  const std::size_t a = from1.size(), b = to1.size(), c = from2.size(), d = to2.size();
  if (s2.position + c <= s1.position) {
    s1.position = s1.position - c + d;
  } else if (s2.position >= s1.position + b) {
    s2.position = s2.position - b + a;
  } else {
    throw error(errc::sphere_check_failed, "steps " + std::to_string(k) + " and " + std::to_string(k + 1) +
                                               " are not independent");
  }
  q.steps[k] = s2;
  q.steps[k + 1] = s1;
  replay(x, q);
  return q;
}

/// Applies one move; throws SphereCheckFailed when it does not fit.
inline RewritePath apply_move(const ThreeOnePolygraph& x, const RewritePath& p, const SphereMove& m) {
  if (m.kind == SphereMove::Kind::exchange) return exchange_steps(x.two(), p, m.index);
  const ThreeCell& c = x.cell(m.cell);
  const RewritePath& from = m.orientation == Orientation::forward ? c.lhs : c.rhs;
  const RewritePath& to = m.orientation == Orientation::forward ? c.rhs : c.lhs;
  auto fail = [&](const std::string& why) {
    throw error(errc::sphere_check_failed, "cannot apply cell '" + m.cell + "' at step " + std::to_string(m.index) + ": " + why);
  };
  if (m.index + from.steps.size() > p.steps.size()) fail("path too short");
  Word w = p.start;
  for (std::size_t i = 0; i < m.index; ++i) w = apply_step(x.two(), w, p.steps[i]);
  if (!occurs_at(w, from.start, m.offset)) fail("context does not match");
  for (std::size_t i = 0; i < from.steps.size(); ++i) {
    RewriteStep s = from.steps[i];
    s.position += m.offset;
    if (!(p.steps[m.index + i] == s)) fail("steps do not match");
  }
  RewritePath q{p.start, {}};
  q.steps.assign(p.steps.begin(), p.steps.begin() + static_cast<std::ptrdiff_t>(m.index));
  for (RewriteStep s : to.steps) {
    s.position += m.offset;
    q.steps.push_back(std::move(s));
  }
  q.steps.insert(q.steps.end(), p.steps.begin() + static_cast<std::ptrdiff_t>(m.index + from.steps.size()),
                 p.steps.end());
  return q;
}

inline RewritePath run_side(const ThreeOnePolygraph& x, const SphereSide& side) {
  replay(x.two(), side.start);
  RewritePath p = side.start;
  for (std::size_t i = 0; i < side.moves.size(); ++i) {
    try {
      p = apply_move(x, p, side.moves[i]);
    } catch (const error& e) {
      throw error(errc::sphere_check_failed, "move " + std::to_string(i) + ": " + e.what());
    }
  }
  return p;
}

struct SphereCheck {
  RewritePath source;
  RewritePath target;
  /// How often each cell is used, both sides together.
  std::map<std::string, std::size_t> occurrences;

  /// Cells used exactly once.
  std::vector<std::string> single_cells() const {
    std::vector<std::string> out;
    for (const auto& [c, n] : occurrences)
      if (n == 1) out.push_back(c);
    return out;
  }
};

/// Replays both sides and checks that they are parallel 3-paths.
inline SphereCheck check_sphere(const ThreeOnePolygraph& x, const ThreeSphere& s) {
  if (!(s.lhs.start == s.rhs.start)) {
    if (s.lhs.start.start != s.rhs.start.start)
      throw error(errc::not_parallel, "sphere sides start from different words");
    throw error(errc::not_parallel, "sphere sides start from different 2-paths");
  }
  RewritePath a = run_side(x, s.lhs);
  RewritePath b = run_side(x, s.rhs);
  if (end_word(x.two(), a) != end_word(x.two(), b))
    throw error(errc::not_parallel, "sphere sides end at different words");
  if (!(a == b)) throw error(errc::not_parallel, "sphere sides end at different 2-paths");
  SphereCheck out{s.lhs.start, a, {}};
  for (const auto* side : {&s.lhs, &s.rhs})
    for (const auto& m : side->moves)
      if (m.kind == SphereMove::Kind::apply) ++out.occurrences[m.cell];
  return out;
}

struct SphereSearchLimits {
  std::size_t max_paths_per_source = 200'000;
};

namespace detail {

struct PathGraphEdge {
  std::size_t from;
  std::size_t to;
  SphereMove move;  // from -> to
  long rank;        // exchanges have the lowest rank
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

struct StepsHash {
  std::size_t operator()(const std::vector<RewriteStep>& v) const {
    std::size_t h = v.size();
    for (const auto& s : v)
      h = h * 1000003u ^ (std::hash<std::string>{}(s.rule) + 31 * s.position + (s.orientation == Orientation::backward));
    return h;
  }
};

inline void all_normalizing_paths(const Rewriter& rw, const Word& w, std::vector<RewriteStep>& prefix,
                                  std::vector<std::vector<RewriteStep>>& out, std::size_t limit) {
  if (out.size() > limit) return;
  auto rs = rw.redexes(w);
  if (rs.empty()) {
    out.push_back(prefix);
    return;
  }
  for (const Redex& r : rs) {
    const Rule& rule = rw.polygraph().rules()[r.rule];
    prefix.push_back(fwd(rule.label, r.position));
    all_normalizing_paths(rw, apply_step(rw.polygraph(), w, prefix.back()), prefix, out, limit);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Searches 3-spheres certifying that each cell in `targets` is redundant.
///
/// For every word in `sources` the graph of forward normalising 2-paths is
/// built, with edges given by exchanges and by whiskered applications of
/// ranked cells.  Edges are merged into a union-find structure in increasing
/// rank; a target cell is certified as soon as one of its edges joins two paths
/// that are already connected by strictly lower edges, and the connecting
/// moves are recovered by breadth-first search.  Cells absent from `rank` are
/// not used.  Cells with an empty boundary are never matched.
inline std::map<std::string, ThreeSphere> find_spheres(const ThreeOnePolygraph& x, const std::vector<Word>& sources,
                                                       const std::map<std::string, long>& rank,
                                                       const std::set<std::string>& targets,
                                                       SphereSearchLimits limits = {}) {
  std::map<std::string, ThreeSphere> found;
  const Rewriter rw(x.two());
  struct Pattern {
    const ThreeCell* cell;
    long rank;
  };
  std::unordered_map<std::string, std::vector<Pattern>> by_first_rule;
  for (const ThreeCell& c : x.cells()) {
    auto it = rank.find(c.label);
    if (it == rank.end()) continue;
    // nodes are forward paths, so every edge is found from its lhs end
    if (!c.lhs.steps.empty()) by_first_rule[c.lhs.steps[0].rule].push_back({&c, it->second});
  }
  const long exchange_rank = std::numeric_limits<long>::min();

  for (const Word& src : sources) {
    if (found.size() == targets.size()) break;
    std::vector<std::vector<RewriteStep>> paths;
    std::vector<RewriteStep> prefix;
    detail::all_normalizing_paths(rw, src, prefix, paths, limits.max_paths_per_source);
    if (paths.size() > limits.max_paths_per_source) continue;
    std::unordered_map<std::vector<RewriteStep>, std::size_t, detail::StepsHash> id;
    for (std::size_t i = 0; i < paths.size(); ++i) id.emplace(paths[i], i);

    std::vector<detail::PathGraphEdge> edges;
    for (std::size_t n = 0; n < paths.size(); ++n) {
      const RewritePath p{src, paths[n]};
      std::vector<Word> words = replay(x.two(), p);
      for (std::size_t k = 0; k + 1 < p.steps.size(); ++k) {
        try {
          RewritePath q = exchange_steps(x.two(), p, k);
          auto it = id.find(q.steps);
          if (it != id.end() && n < it->second) edges.push_back({n, it->second, SphereMove::exchange(k), exchange_rank});
        } catch (const error&) {
        }
      }
      for (std::size_t k = 0; k < p.steps.size(); ++k) {
        auto pit = by_first_rule.find(p.steps[k].rule);
        if (pit == by_first_rule.end()) continue;
        for (const Pattern& pat : pit->second) {
          const RewritePath& from = pat.cell->lhs;
          if (p.steps[k].position < from.steps[0].position) continue;
          const std::size_t offset = p.steps[k].position - from.steps[0].position;
          if (!occurs_at(words[k], from.start, offset)) continue;
          SphereMove m = SphereMove::apply(pat.cell->label, k, offset, Orientation::forward);
          RewritePath q;
          try {
            q = apply_move(x, p, m);
          } catch (const error&) {
            continue;
          }
          auto it = id.find(q.steps);
          if (it == id.end()) continue;
          edges.push_back({n, it->second, std::move(m), pat.rank});
        }
      }
    }
    std::stable_sort(edges.begin(), edges.end(),
                     [](const auto& a, const auto& b) { return a.rank < b.rank; });

    detail::UnionFind uf(paths.size());
    std::size_t lo = 0;
    while (lo < edges.size()) {
      std::size_t hi = lo;
      while (hi < edges.size() && edges[hi].rank == edges[lo].rank) ++hi;
      for (std::size_t e = lo; e < hi; ++e) {
        const auto& edge = edges[e];
        if (edge.move.kind != SphereMove::Kind::apply) continue;
        if (!targets.count(edge.move.cell) || found.count(edge.move.cell)) continue;
        if (uf.find(edge.from) != uf.find(edge.to)) continue;
        // breadth-first search over the strictly lower edges
        std::vector<std::vector<std::pair<std::size_t, SphereMove>>> adj(paths.size());
        for (std::size_t f = 0; f < lo; ++f) {
          const auto& g = edges[f];
          adj[g.from].push_back({g.to, g.move});
          SphereMove back = g.move;
          if (back.kind == SphereMove::Kind::apply) back.orientation = flip(back.orientation);
          adj[g.to].push_back({g.from, back});
        }
        std::vector<std::optional<std::pair<std::size_t, SphereMove>>> prev(paths.size());
        std::vector<bool> seen(paths.size());
        std::deque<std::size_t> queue{edge.from};
        seen[edge.from] = true;
        while (!queue.empty() && !seen[edge.to]) {
          std::size_t a = queue.front();
          queue.pop_front();
          for (const auto& [b, mv] : adj[a])
            if (!seen[b]) {
              seen[b] = true;
              prev[b] = std::pair{a, mv};
              queue.push_back(b);
            }
        }
        std::vector<SphereMove> moves;
        for (std::size_t b = edge.to; b != edge.from; b = prev[b]->first) moves.push_back(prev[b]->second);
        std::reverse(moves.begin(), moves.end());
        ThreeSphere s{{{src, paths[edge.from]}, {edge.move}}, {{src, paths[edge.from]}, std::move(moves)}};
        check_sphere(x, s);
        found.emplace(edge.move.cell, std::move(s));
      }
      for (std::size_t e = lo; e < hi; ++e) uf.unite(edges[e].from, edges[e].to);
      lo = hi;
    }
  }
  return found;
}

}  // namespace polyrw
