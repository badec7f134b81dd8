#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "polyrw/error.hpp"
#include "polyrw/garside/datum.hpp"
#include "polyrw/polygraph.hpp"
#include "polyrw/standard.hpp"

namespace polyrw::catalog {

/// <a, b | bab = a>, the rule labelled "alpha".
inline TwoPolygraph klein_bottle() {
  Alphabet ab({"a", "b"});
  return TwoPolygraph(ab, {{"alpha", ab.parse("b a b"), ab.parse("a")}});
}

/// Commutation rules x_j x_i -> x_i x_j (j > i) on the first n letters,
/// labelled alpha, beta, gamma, ... in the order (b,a), (c,b), (c,a), (d,c), ...
inline TwoPolygraph free_abelian_presentation(std::size_t n) {
  static constexpr std::array<const char*, 10> greek{"alpha", "beta", "gamma", "delta", "epsilon",
                                                      "zeta",  "eta",  "theta", "iota",  "kappa"};
  if (n < 1 || n > 5) throw error(errc::bad_parameter, "free_abelian_presentation supports 1 <= n <= 5");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  TwoPolygraph x{Alphabet(names)};
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = j; i-- > 0;)
      x.add_rule({greek[k++], {letter(j), letter(i)}, {letter(i), letter(j)}});
  return x;
}

/// The cyclic group Z/n as a multiplication table, elements "0" .. "n-1".
inline MonoidTable cyclic_group(std::size_t n) {
  if (n < 1 || n > 64) throw error(errc::bad_parameter, "cyclic_group supports 1 <= n <= 64");
  MonoidTable m;
  for (std::size_t i = 0; i < n; ++i) m.elements.push_back(std::to_string(i));
  m.product.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.product[i][j] = (i + j) % n;
  return m;
}

/// Non-empty subsets of {1..n} under disjoint union.  An element is named by
/// its members as letters ("a", "b", "ab", ...).
inline garside::GarsideDatum free_abelian_datum(std::size_t n) {
  if (n < 1 || n > 5) throw error(errc::bad_parameter, "free_abelian_datum supports 1 <= n <= 5");
  std::vector<unsigned> sets;
  for (unsigned s = 1; s < (1u << n); ++s) sets.push_back(s);
  std::stable_sort(sets.begin(), sets.end(), [](unsigned a, unsigned b) {
    if (__builtin_popcount(a) != __builtin_popcount(b)) return __builtin_popcount(a) < __builtin_popcount(b);
    for (unsigned i = 0;; ++i) {  // lexicographic on the sorted members
      bool x = a & (1u << i), y = b & (1u << i);
      if (x != y) return x;
    }
  });
  std::vector<std::string> names{"1"};
  std::map<unsigned, garside::element> index{{0u, 0}};
  for (unsigned s : sets) {
    std::string name;
    for (unsigned i = 0; i < n; ++i)
      if (s & (1u << i)) name += static_cast<char>('a' + i);
    index[s] = names.size();
    names.push_back(name);
  }
  std::vector<garside::GarsideDatum::Product> ps;
  for (unsigned a : sets)
    for (unsigned b : sets)
      if (!(a & b)) ps.push_back({index[a], index[b], index[a | b]});
  return garside::GarsideDatum(std::move(names), ps);
}

namespace detail {

using perm = std::vector<std::size_t>;

inline std::size_t inversions(const perm& p) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) k += p[i] > p[j];
  return k;
}

inline perm compose(const perm& u, const perm& v) {
  perm w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[v[i]];
  return w;
}

inline perm transposition(std::size_t n, std::size_t i) {
  perm s(n);
  std::iota(s.begin(), s.end(), 0);
  std::swap(s[i], s[i + 1]);
  return s;
}

/// Lexicographically least reduced word, as generator numbers 1..n-1.
inline std::vector<std::size_t> min_reduced_word(perm p) {
  std::vector<std::size_t> word;
  const std::size_t n = p.size();
  while (inversions(p) > 0) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      perm q = compose(transposition(n, i), p);
      if (inversions(q) < inversions(p)) {
        word.push_back(i + 1);
        p = std::move(q);
        break;
      }
    }
  }
  return word;
}

}  // namespace detail

/// Permutations of n points (the simple braids) with u * v defined when the
/// lengths add.  Elements are named by their least reduced word, e.g. "s1s2".
inline garside::GarsideDatum braid_simple_datum(std::size_t n) {
  if (n < 2 || n > 5) throw error(errc::bad_parameter, "braid_simple_datum supports 2 <= n <= 5");
  std::vector<detail::perm> perms;
  detail::perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::pair<std::vector<std::size_t>, detail::perm>> named;
  for (const auto& q : perms) named.emplace_back(detail::min_reduced_word(q), q);
  std::stable_sort(named.begin(), named.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.first.size(), a.first) < std::make_pair(b.first.size(), b.first);
  });
  std::vector<std::string> names;
  std::map<detail::perm, garside::element> index;
  for (const auto& [w, q] : named) {
    std::string s;
    for (auto i : w) s += "s" + std::to_string(i);
    index[q] = names.size();
    names.push_back(s.empty() ? "1" : s);
  }
  std::vector<garside::GarsideDatum::Product> ps;
  for (const auto& [wu, u] : named)
    for (const auto& [wv, v] : named) {
      if (wu.empty() || wv.empty()) continue;
      detail::perm uv = detail::compose(u, v);
      if (detail::inversions(uv) == wu.size() + wv.size()) ps.push_back({index[u], index[v], index[uv]});
    }
  return garside::GarsideDatum(std::move(names), ps);
}

/// The 16 simple elements of the affine Artin monoid of type A~2 with their 27
/// products in the family.
inline garside::GarsideDatum atilde2_datum() {
  std::vector<std::string> names{"1",    "s1",     "s2",     "s3",       "s1s2",     "s2s1",
                                 "s2s3", "s3s2",   "s3s1",   "s1s3",     "s1s2s1",   "s2s3s2",
                                 "s3s1s3", "s3s1s2s1", "s1s2s3s2", "s2s3s1s3"};
  auto e = [&](const std::string& s) {
    return static_cast<garside::element>(std::find(names.begin(), names.end(), s) - names.begin());
  };
  const std::vector<std::array<const char*, 3>> table{
      {"s1", "s2", "s1s2"},         {"s1", "s3", "s1s3"},         {"s1", "s2s1", "s1s2s1"},
      {"s1", "s3s1", "s3s1s3"},     {"s1", "s2s3s2", "s1s2s3s2"}, {"s2", "s1", "s2s1"},
      {"s2", "s3", "s2s3"},         {"s2", "s1s2", "s1s2s1"},     {"s2", "s3s2", "s2s3s2"},
      {"s2", "s3s1s3", "s2s3s1s3"}, {"s3", "s1", "s3s1"},         {"s3", "s2", "s3s2"},
      {"s3", "s1s3", "s3s1s3"},     {"s3", "s2s3", "s2s3s2"},     {"s3", "s1s2s1", "s3s1s2s1"},
      {"s1s2", "s1", "s1s2s1"},     {"s1s2", "s3s2", "s1s2s3s2"}, {"s1s3", "s1", "s3s1s3"},
      {"s1s3", "s2s3", "s1s2s3s2"}, {"s2s1", "s2", "s1s2s1"},     {"s2s1", "s3s1", "s2s3s1s3"},
      {"s2s3", "s2", "s2s3s2"},     {"s2s3", "s1s3", "s2s3s1s3"}, {"s3s1", "s3", "s3s1s3"},
      {"s3s1", "s2s1", "s3s1s2s1"}, {"s3s2", "s3", "s2s3s2"},     {"s3s2", "s1s2", "s3s1s2s1"},
  };
  std::vector<garside::GarsideDatum::Product> ps;
  for (const auto& [u, v, w] : table) ps.push_back({e(u), e(v), e(w)});
  return garside::GarsideDatum(std::move(names), ps);
}

/// Names accepted by `polyrw catalog`.
inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"klein_bottle",       "free_abelian_presentation", "free_abelian_datum",
                                          "braid_simple_datum", "atilde2_datum",             "cyclic_group"};
  return n;
}

}  // namespace polyrw::catalog
