#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "polyrw/completion.hpp"
#include "polyrw/error.hpp"
#include "polyrw/family.hpp"
#include "polyrw/garside/datum.hpp"
#include "polyrw/polygraph.hpp"
#include "polyrw/rewriting.hpp"

namespace polyrw::garside {

inline std::string alpha_label(const GarsideDatum& d, element u, element v) {
  return "alpha:" + d.name(u) + "," + d.name(v);
}

inline std::string beta_label(const GarsideDatum& d, element u, element v, element w) {
  return "beta:" + d.name(u) + "," + d.name(v) + "," + d.name(w);
}

inline Alphabet generators(const GarsideDatum& d) {
  return Alphabet(std::vector<std::string>(d.names().begin() + 1, d.names().end()));
}

/// Maps non-unit elements to one-letter words and drops the unit.
inline Word word_of(std::initializer_list<element> es) {
  Word w;
  for (element e : es)
    if (e != unit) w.push_back(GarsideDatum::letter_of(e));
  return w;
}

/// gar2: one generator per non-unit element, alpha:u,v : u|v -> uv whenever
/// uv is in the family.
inline TwoPolygraph gar2(const GarsideDatum& d) {
  TwoPolygraph x{generators(d)};
  for (const auto& p : d.products()) x.add_rule({alpha_label(d, p.left, p.right), word_of({p.left, p.right}), word_of({p.result})});
  return x;
}

/// gar2 plus beta:u,v,w : u|vw -> uv|w whenever uv and vw are in the family
/// but uvw is not.
inline TwoPolygraph underline_gar2(const GarsideDatum& d) {
  TwoPolygraph x = gar2(d);
  for (element u = 1; u < d.size(); ++u)
    for (element v = 1; v < d.size(); ++v)
      for (element w = 1; w < d.size(); ++w) {
        auto uv = d.product(u, v), vw = d.product(v, w);
        if (uv && vw && !d.product(*uv, w)) x.add_rule({beta_label(d, u, v, w), word_of({u, *vw}), word_of({*uv, w})});
      }
  return x;
}

/// Rules of underline_gar2 indexed by label, with their parameters.
struct RuleInfo {
  bool beta = false;
  element u = unit, v = unit, w = unit;
};

inline std::unordered_map<std::string, RuleInfo> rule_infos(const GarsideDatum& d) {
  std::unordered_map<std::string, RuleInfo> out;
  for (element u = 1; u < d.size(); ++u)
    for (element v = 1; v < d.size(); ++v) {
      auto uv = d.product(u, v);
      if (uv) out.emplace(alpha_label(d, u, v), RuleInfo{false, u, v, unit});
      for (element w = 1; w < d.size(); ++w) {
        auto vw = d.product(v, w);
        if (uv && vw && !d.product(*uv, w)) out.emplace(beta_label(d, u, v, w), RuleInfo{true, u, v, w});
      }
    }
  return out;
}

/// Leftmost normalisation in underline_gar2, reused across calls.
class GarsideRewriter {
 public:
  explicit GarsideRewriter(const GarsideDatum& d) : d_(&d), x_(underline_gar2(d)), rw_(x_) {}

  const GarsideDatum& datum() const noexcept { return *d_; }
  const TwoPolygraph& polygraph() const noexcept { return x_; }
  const Rewriter& rewriter() const noexcept { return rw_; }

  /// The first letter of the S-normal form of u|v.
  element head2(element u, element v) const {
    if (auto p = d_->product(u, v)) return *p;
    if (const auto& h = d_->head_table()) return (*h).at(u).at(v);
    Word nf = rw_.normalize(word_of({u, v})).word;
    if (nf.empty()) return unit;
    return GarsideDatum::element_of(nf.front());
  }

  bool is_s_normal(const Word& w) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (head2(GarsideDatum::element_of(w[i]), GarsideDatum::element_of(w[i + 1])) != GarsideDatum::element_of(w[i]))
        return false;
    return true;
  }

  Word s_normalize(const Word& w, Strategy s = Strategy::leftmost) const {
    Word nf = rw_.normalize(w, s).word;
    if (!is_s_normal(nf))
      throw error(errc::normalization_failure, "'" + x_.alphabet().format(nf) + "' is irreducible but not S-normal");
    return nf;
  }

 private:
  const GarsideDatum* d_;
  TwoPolygraph x_;
  Rewriter rw_;
};

inline element head2(const GarsideDatum& d, element u, element v) { return GarsideRewriter(d).head2(u, v); }

inline Word s_normalize(const GarsideDatum& d, const Word& w) { return GarsideRewriter(d).s_normalize(w); }

// ---------------------------------------------------------------------------
// underline_gar3

/// A critical branching of underline_gar2 together with its family cell.
struct ClassifiedBranching {
  Branching branching;
  std::string family;
  std::vector<element> params;
  ThreeCell cell;
};

namespace detail {

struct Candidate {
  std::string family;
  std::vector<element> params;
  std::vector<RewriteStep> lhs;
  std::vector<RewriteStep> rhs;
};

/// Every family whose shape and membership conditions fit the branching.
inline std::vector<Candidate> family_candidates(const GarsideDatum& d,
                                                const std::unordered_map<std::string, RuleInfo>& info,
                                                const Branching& b) {
  std::vector<Candidate> out;
  const RuleInfo& l = info.at(b.left.rule);
  const RuleInfo& r = info.at(b.right.rule);
  auto m = [&](auto a, auto c) { return d.product(a, c); };
  auto alpha = [&](std::optional<element> u, std::optional<element> v, std::size_t pos) {
    return fwd(alpha_label(d, u.value_or(unit), v.value_or(unit)), pos);
  };
  auto beta = [&](std::optional<element> u, std::optional<element> v, std::optional<element> w, std::size_t pos) {
    return fwd(beta_label(d, u.value_or(unit), v.value_or(unit), w.value_or(unit)), pos);
  };

  if (b.right.position == 1 && !l.beta && !r.beta) {
    const element u = l.u, v = l.v, w = r.v;
    auto uv = m(u, v), vw = m(v, w), uvw = m(uv, w);
    if (uvw)
      out.push_back({"A", {u, v, w}, {alpha(u, v, 0), alpha(uv, w, 0)}, {alpha(v, w, 1), alpha(u, vw, 0)}});
    else
      out.push_back({"B", {u, v, w}, {alpha(u, v, 0)}, {alpha(v, w, 1), beta(u, v, w, 0)}});
  }
  if (b.right.position == 1 && !l.beta && r.beta) {
    const element u = l.u, v = l.v, w = r.v, x = r.w;
    auto uv = m(u, v), vw = m(v, w);
    if (m(uv, w))
      out.push_back({"C", {u, v, w, x}, {alpha(u, v, 0), beta(uv, w, x, 0)}, {beta(v, w, x, 1), alpha(u, vw, 0)}});
    else
      out.push_back({"D", {u, v, w, x}, {alpha(u, v, 0)}, {beta(v, w, x, 1), beta(u, v, w, 0), alpha(w, x, 1)}});
  }
  if (b.right.position == 1 && l.beta && !r.beta) {
    const element u = l.u, v = l.v, w = l.w, x = r.v;
    auto uv = m(u, v), vw = m(v, w), wx = m(w, x), vwx = m(vw, x);
    if (m(uv, wx))
      out.push_back({"E'", {u, v, w, x},
                     {beta(u, v, w, 0), alpha(w, x, 1), alpha(uv, wx, 0)},
                     {alpha(vw, x, 1), alpha(u, vwx, 0)}});
    else
      out.push_back({"E", {u, v, w, x}, {beta(u, v, w, 0), alpha(w, x, 1)}, {alpha(vw, x, 1), beta(u, v, wx, 0)}});
  }
  if (b.right.position == 1 && l.beta && r.beta) {
    const element u = l.u, v = l.v, w = l.w, x = r.v, y = r.w;
    auto uv = m(u, v), vw = m(v, w), xy = m(x, y), wx = m(w, x), vwx = m(vw, x);
    auto wxy = m(w, xy), uvwx = m(u, vwx);
    std::vector<element> ps{u, v, w, x, y};
    if (wxy && !uvwx)
      out.push_back({"F", ps, {beta(u, v, w, 0), alpha(w, xy, 1)},
                     {beta(vw, x, y, 1), beta(u, v, wx, 0), alpha(wx, y, 1)}});
    if (wxy && uvwx)
      out.push_back({"F'", ps, {beta(u, v, w, 0), alpha(w, xy, 1), beta(uv, wx, y, 0)},
                     {beta(vw, x, y, 1), alpha(u, vwx, 0)}});
    if (!wxy && !uvwx)
      out.push_back({"G", ps, {beta(u, v, w, 0), beta(w, x, y, 1)}, {beta(vw, x, y, 1), beta(u, v, wx, 0)}});
    if (!wxy && uvwx)
      out.push_back({"G'", ps, {beta(u, v, w, 0), beta(w, x, y, 1), alpha(uv, wx, 0)},
                     {beta(vw, x, y, 1), alpha(u, vwx, 0)}});
  }
  if (b.right.position == 0 && l.beta && r.beta && l.u == r.u) {
    const element u = l.u, v1 = l.v, w1 = l.w, v2 = r.v, w2 = r.w;
    auto top = m(v1, w1);
    if (top && top == m(v2, w2)) {
      std::optional<element> vp;
      for (element c : right_mcms(d, v1, v2))
        if (left_divides(d, c, *top)) {
          vp = c;
          break;
        }
      if (vp) {
        const element x1 = complement(d, v1, *vp), x2 = complement(d, v2, *vp), y = complement(d, *vp, *top);
        auto uv1 = m(u, v1), uv2 = m(u, v2);
        if (x2 == unit && x1 != unit)
          out.push_back({"H", {u, v1, x1, y}, {beta(u, v1, w1, 0), beta(uv1, x1, y, 0)}, {beta(u, v2, w2, 0)}});
        if (x1 == unit && x2 != unit)
          out.push_back({"H", {u, v2, x2, y}, {beta(u, v2, w2, 0), beta(uv2, x2, y, 0)}, {beta(u, v1, w1, 0)}});
        if (x1 != unit && x2 != unit)
          out.push_back({"I", {u, v1, w1, v2, w2}, {beta(u, v1, w1, 0), beta(uv1, x1, y, 0)},
                         {beta(u, v2, w2, 0), beta(uv2, x2, y, 0)}});
      }
    }
  }
  return out;
}

inline std::string cell_label(const GarsideDatum& d, const std::string& family, const std::vector<element>& ps) {
  std::string s = family + ":";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + d.name(ps[i]);
  return s;
}

}  // namespace detail

/// Assigns every critical branching of underline_gar2 to exactly one family
/// and instantiates the family cell.  Throws UnclassifiedBranching when no
/// family fits (or a template needs a rule that does not exist) and
/// AmbiguousClassification when several do.
inline std::vector<ClassifiedBranching> classify_branchings(const GarsideDatum& d, const TwoPolygraph& ugar2) {
  const auto info = rule_infos(d);
  std::vector<ClassifiedBranching> out;
  for (const Branching& b : critical_branchings(ugar2)) {
    auto cands = detail::family_candidates(d, info, b);
    const auto where = [&] {
      return "'" + ugar2.alphabet().format(b.source, "|") + "' (" + b.left.rule + ", " + b.right.rule + "@" +
             std::to_string(b.right.position) + ")";
    };
    if (cands.empty()) throw error(errc::unclassified_branching, "no family fits the branching on " + where());
    if (cands.size() > 1)
      throw error(errc::ambiguous_classification,
                  "families " + cands[0].family + " and " + cands[1].family + " both fit the branching on " + where());
    auto& c = cands.front();
    ThreeCell cell{detail::cell_label(d, c.family, c.params), {b.source, c.lhs}, {b.source, c.rhs}, c.family};
    for (const auto& s : c.lhs)
      if (!ugar2.find_rule(s.rule))
        throw error(errc::unclassified_branching, "family " + c.family + " on " + where() + " needs missing rule " + s.rule);
    for (const auto& s : c.rhs)
      if (!ugar2.find_rule(s.rule))
        throw error(errc::unclassified_branching, "family " + c.family + " on " + where() + " needs missing rule " + s.rule);
    bool fits = false;
    try {
      fits = end_word(ugar2, cell.lhs) == end_word(ugar2, cell.rhs);
    } catch (const error&) {
    }
    const auto& f0 = cell.lhs.steps.front();
    const auto& g0 = cell.rhs.steps.front();
    if (!fits || !((f0 == b.left && g0 == b.right) || (f0 == b.right && g0 == b.left)))
      throw error(errc::unclassified_branching, "family " + c.family + " template does not fit the branching on " + where());
    out.push_back({b, c.family, c.params, std::move(cell)});
  }
  return out;
}

/// The coherent convergent presentation: underline_gar2 plus one family cell
/// per critical branching, ordered by family and parameters.
inline ThreeOnePolygraph underline_gar3(const GarsideDatum& d) {
  TwoPolygraph two = underline_gar2(d);
  auto cls = classify_branchings(d, two);
  std::stable_sort(cls.begin(), cls.end(), [](const ClassifiedBranching& a, const ClassifiedBranching& b) {
    return std::forward_as_tuple(family_index(a.family), a.params) <
           std::forward_as_tuple(family_index(b.family), b.params);
  });
  ThreeOnePolygraph x(std::move(two));
  for (auto& c : cls) x.add_cell(std::move(c.cell));
  return x;
}

/// gar2 plus the associativity cells A:u,v,w for uv, vw, uvw in the family.
inline ThreeOnePolygraph gar3(const GarsideDatum& d) {
  ThreeOnePolygraph x(gar2(d));
  for (element u = 1; u < d.size(); ++u)
    for (element v = 1; v < d.size(); ++v)
      for (element w = 1; w < d.size(); ++w) {
        auto uv = d.product(u, v), vw = d.product(v, w);
        if (!uv || !vw || !d.product(*uv, w)) continue;
        Word src = word_of({u, v, w});
        x.add_cell({detail::cell_label(d, "A", {u, v, w}),
                    {src, {fwd(alpha_label(d, u, v), 0), fwd(alpha_label(d, *uv, w), 0)}},
                    {src, {fwd(alpha_label(d, v, w), 1), fwd(alpha_label(d, u, *vw), 0)}},
                    "A"});
      }
  return x;
}

}  // namespace polyrw::garside
