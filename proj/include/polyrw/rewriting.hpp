#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "polyrw/error.hpp"
#include "polyrw/polygraph.hpp"

namespace polyrw {

enum class Strategy { leftmost, rightmost };

inline constexpr std::size_t default_step_budget = 1'000'000;

struct Redex {
  std::size_t rule;  // index into TwoPolygraph::rules()
  std::size_t position;

  friend bool operator==(const Redex&, const Redex&) = default;
};

struct NormalForm {
  Word word;
  RewritePath path;
};

/// Redex search and normalisation over a fixed 2-polygraph.  Keeps a
/// first-letter index so repeated calls stay cheap.
class Rewriter {
 public:
  explicit Rewriter(const TwoPolygraph& x) : x_(&x), by_first_(x.alphabet().size()) {
    for (std::size_t i = 0; i < x.rules().size(); ++i)
      if (!x.rules()[i].source.empty()) by_first_[x.rules()[i].source.front()].push_back(i);
  }

  const TwoPolygraph& polygraph() const noexcept { return *x_; }

  /// All forward redexes, by position then rule index.
  std::vector<Redex> redexes(const Word& w) const {
    std::vector<Redex> out;
    for (std::size_t p = 0; p < w.size(); ++p)
      for (std::size_t r : by_first_[w[p]])
        if (occurs_at(w, x_->rules()[r].source, p)) out.push_back({r, p});
    return out;
  }

  std::optional<Redex> first_redex(const Word& w, Strategy s) const {
    auto at = [&](std::size_t p) -> std::optional<Redex> {
      for (std::size_t r : by_first_[w[p]])
        if (occurs_at(w, x_->rules()[r].source, p)) return Redex{r, p};
      return std::nullopt;
    };
    if (s == Strategy::leftmost) {
      for (std::size_t p = 0; p < w.size(); ++p)
        if (auto r = at(p)) return r;
    } else {
      for (std::size_t p = w.size(); p-- > 0;)
        if (auto r = at(p)) return r;
    }
    return std::nullopt;
  }

  bool is_normal(const Word& w) const { return !first_redex(w, Strategy::leftmost); }

  NormalForm normalize(const Word& w, Strategy s = Strategy::leftmost,
                       std::size_t budget = default_step_budget) const {
    NormalForm nf{w, {w, {}}};
    while (auto r = first_redex(nf.word, s)) {
      if (nf.path.steps.size() >= budget)
        throw error(errc::step_budget_exceeded,
                    "no normal form of '" + x_->alphabet().format(w) + "' within " + std::to_string(budget) + " steps");
      const Rule& rule = x_->rules()[r->rule];
      RewriteStep step = fwd(rule.label, r->position);
      Word next = subword(nf.word, 0, r->position);
      next.insert(next.end(), rule.target.begin(), rule.target.end());
      next.insert(next.end(), nf.word.begin() + static_cast<std::ptrdiff_t>(r->position + rule.source.size()),
                  nf.word.end());
      nf.word = std::move(next);
      nf.path.steps.push_back(std::move(step));
    }
    return nf;
  }

 private:
  const TwoPolygraph* x_;
  std::vector<std::vector<std::size_t>> by_first_;
};

inline NormalForm normalize(const TwoPolygraph& x, const Word& w, Strategy s = Strategy::leftmost,
                            std::size_t budget = default_step_budget) {
  return Rewriter(x).normalize(w, s, budget);
}

enum class BranchingShape { overlap, inclusion, equal_source };

inline const char* shape_name(BranchingShape s) {
  switch (s) {
    case BranchingShape::overlap: return "overlap";
    case BranchingShape::inclusion: return "inclusion";
    case BranchingShape::equal_source: return "equal_source";
  }
  return "?";
}

/// A critical branching: two distinct forward steps on `source`, the left one
/// at position 0, whose redexes together cover `source`.
struct Branching {
  Word source;
  RewriteStep left;
  RewriteStep right;
  BranchingShape shape = BranchingShape::overlap;

  friend bool operator==(const Branching&, const Branching&) = default;
};

namespace detail {

inline bool intervals_meet(std::size_t p1, std::size_t l1, std::size_t p2, std::size_t l2) {
  return p1 < p2 + l2 && p2 < p1 + l1;
}

inline bool step_before(const RewriteStep& a, const RewriteStep& b) {
  return std::tie(a.position, a.rule) < std::tie(b.position, b.rule);
}

}  // namespace detail

/// Every critical branching, sorted by (left label, left position, right
/// label, right position).
inline std::vector<Branching> critical_branchings(const TwoPolygraph& x) {
  std::vector<Branching> out;
  std::set<std::tuple<Word, RewriteStep, RewriteStep>> seen;
  auto emit = [&](Word src, RewriteStep a, RewriteStep b, BranchingShape shape) {
    if (detail::step_before(b, a)) std::swap(a, b);
    if (seen.emplace(src, a, b).second) out.push_back({std::move(src), std::move(a), std::move(b), shape});
  };
  const auto& rs = x.rules();
  for (const auto& r1 : rs) {
    if (r1.source.empty()) continue;
    for (const auto& r2 : rs) {
      if (r2.source.empty()) continue;
      const Word& s1 = r1.source;
      const Word& s2 = r2.source;
      if (&r1 != &r2 && s1 == s2) emit(s1, fwd(r1.label, 0), fwd(r2.label, 0), BranchingShape::equal_source);
      // r2 strictly inside r1
      if (s2.size() <= s1.size()) {
        for (std::size_t k = 0; k + s2.size() <= s1.size(); ++k) {
          if (&r1 == &r2 && k == 0) continue;
          if (s2.size() == s1.size()) continue;
          if (occurs_at(s1, s2, k)) emit(s1, fwd(r1.label, 0), fwd(r2.label, k), BranchingShape::inclusion);
        }
      }
      // proper suffix of s1 equal to a proper prefix of s2
      for (std::size_t l = 1; l < s1.size() && l < s2.size(); ++l) {
        if (!occurs_at(s1, subword(s2, 0, l), s1.size() - l)) continue;
        Word src = concat(s1, subword(s2, l, s2.size() - l));
        emit(std::move(src), fwd(r1.label, 0), fwd(r2.label, s1.size() - l), BranchingShape::overlap);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Branching& a, const Branching& b) {
    return std::tie(a.left.rule, a.left.position, a.right.rule, a.right.position, a.source) <
           std::tie(b.left.rule, b.left.position, b.right.rule, b.right.position, b.source);
  });
  return out;
}

/// The two legs of a branching continued by leftmost normalisation.
struct Confluence {
  RewritePath left;
  RewritePath right;
  Word left_normal;
  Word right_normal;

  bool joined() const { return left_normal == right_normal; }
};

inline Confluence join_branching(const Rewriter& rw, const Branching& b,
                                 std::size_t budget = default_step_budget) {
  const TwoPolygraph& x = rw.polygraph();
  Confluence c;
  for (auto [step, path, nf] : {std::tuple{&b.left, &c.left, &c.left_normal},
                                std::tuple{&b.right, &c.right, &c.right_normal}}) {
    Word w = apply_step(x, b.source, *step);
    NormalForm n = rw.normalize(w, Strategy::leftmost, budget);
    path->start = b.source;
    path->steps.push_back(*step);
    path->steps.insert(path->steps.end(), n.path.steps.begin(), n.path.steps.end());
    *nf = std::move(n.word);
  }
  return c;
}

inline Confluence join_branching(const TwoPolygraph& x, const Branching& b,
                                 std::size_t budget = default_step_budget) {
  return join_branching(Rewriter(x), b, budget);
}

/// A critical triple branching: three pairwise distinct forward steps, sorted
/// by position then label, whose redexes cover `source` and where every redex
/// meets at least one of the other two.
struct TripleBranching {
  Word source;
  std::array<RewriteStep, 3> steps;

  friend bool operator==(const TripleBranching&, const TripleBranching&) = default;
};

inline std::vector<TripleBranching> critical_triple_branchings(const TwoPolygraph& x) {
  std::set<std::pair<Word, std::array<RewriteStep, 3>>> found;
  for (const Branching& b : critical_branchings(x)) {
    const std::size_t n = b.source.size();
    for (const Rule& r : x.rules()) {
      const Word& s = r.source;
      if (s.empty()) continue;
      for (long o = 1 - static_cast<long>(s.size()); o < static_cast<long>(n); ++o) {
        const long lo = std::min(0L, o);
        const long hi = std::max(static_cast<long>(n), o + static_cast<long>(s.size()));
        Word u(static_cast<std::size_t>(hi - lo));
        bool ok = true;
        for (long i = lo; i < hi && ok; ++i) {
          const bool in_b = i >= 0 && i < static_cast<long>(n);
          const bool in_s = i >= o && i < o + static_cast<long>(s.size());
          letter a = in_b ? b.source[static_cast<std::size_t>(i)] : s[static_cast<std::size_t>(i - o)];
          if (in_b && in_s && a != s[static_cast<std::size_t>(i - o)]) ok = false;
          u[static_cast<std::size_t>(i - lo)] = a;
        }
        if (!ok) continue;
        const std::size_t shift = static_cast<std::size_t>(-lo);
        std::array<RewriteStep, 3> st{fwd(b.left.rule, b.left.position + shift),
                                      fwd(b.right.rule, b.right.position + shift),
                                      fwd(r.label, static_cast<std::size_t>(o - lo))};
        if (st[2] == st[0] || st[2] == st[1]) continue;
        std::sort(st.begin(), st.end(), detail::step_before);
        std::array<std::size_t, 3> len{};
        for (int i = 0; i < 3; ++i) len[i] = x.rule(st[i].rule).source.size();
        bool nontrivial = true;
        for (int i = 0; i < 3 && nontrivial; ++i) {
          bool meets = false;
          for (int j = 0; j < 3; ++j)
            if (i != j && detail::intervals_meet(st[i].position, len[i], st[j].position, len[j])) meets = true;
          nontrivial = meets;
        }
        if (nontrivial) found.emplace(std::move(u), st);
      }
    }
  }
  std::vector<TripleBranching> out;
  for (auto& [w, st] : found) out.push_back({w, st});
  std::sort(out.begin(), out.end(), [](const TripleBranching& a, const TripleBranching& b) {
    return std::tie(a.steps, a.source) < std::tie(b.steps, b.source);
  });
  return out;
}

}  // namespace polyrw
