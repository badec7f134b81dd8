#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polyrw/error.hpp"
#include "polyrw/polygraph.hpp"

namespace polyrw {

/// A finite monoid given by its full multiplication table.
struct MonoidTable {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> product;
};

/// Validates the table and returns the index of the unit.
inline std::size_t monoid_unit(const MonoidTable& m) {
  const std::size_t n = m.elements.size();
  if (n == 0) throw error(errc::no_unit, "empty monoid");
  if (m.product.size() != n)
    throw error(errc::bad_parameter, "multiplication table has the wrong number of rows");
  for (const auto& row : m.product) {
    if (row.size() != n) throw error(errc::bad_parameter, "multiplication table is not square");
    for (auto e : row)
      if (e >= n) throw error(errc::bad_parameter, "multiplication table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (m.product[m.product[a][b]][c] != m.product[a][m.product[b][c]])
          throw error(errc::table_not_associative, "(" + m.elements[a] + " " + m.elements[b] + ") " +
                                                       m.elements[c] + " differs from " + m.elements[a] +
                                                       " (" + m.elements[b] + " " + m.elements[c] + ")");
  for (std::size_t e = 0; e < n; ++e) {
    bool unit = true;
    for (std::size_t a = 0; a < n && unit; ++a) unit = m.product[e][a] == a && m.product[a][e] == a;
    if (unit) return e;
  }
  throw error(errc::no_unit, "no two-sided unit in the table");
}

namespace detail {

inline std::string hat(const std::string& element) { return "^" + element; }

inline std::string gamma_label(const MonoidTable& m, std::size_t u, std::size_t v) {
  return "gamma:" + m.elements[u] + "," + m.elements[v];
}

}  // namespace detail

/// The standard presentation: a generator ^u per element, a rule
/// gamma:u,v : ^u ^v -> ^(uv) per pair and iota : 1 -> ^1.
inline TwoPolygraph standard_2(const MonoidTable& m) {
  const std::size_t e = monoid_unit(m);
  const std::size_t n = m.elements.size();
  std::vector<std::string> names;
  for (const auto& name : m.elements) names.push_back(detail::hat(name));
  TwoPolygraph x{Alphabet(std::move(names))};
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      x.add_rule({detail::gamma_label(m, u, v), {letter(u), letter(v)}, {letter(m.product[u][v])}});
  x.add_rule({"iota", {}, {letter(e)}});
  return x;
}

/// The standard coherent presentation: associativity cells A:u,v,w and unit
/// cells L:u, R:u on top of `standard_2`.
inline ThreeOnePolygraph standard_3(const MonoidTable& m) {
  const std::size_t e = monoid_unit(m);
  const std::size_t n = m.elements.size();
  ThreeOnePolygraph x(standard_2(m));
  const auto& p = m.product;
  auto g = [&](std::size_t u, std::size_t v) { return detail::gamma_label(m, u, v); };
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        Word src{letter(u), letter(v), letter(w)};
        x.add_cell({"A:" + m.elements[u] + "," + m.elements[v] + "," + m.elements[w],
                    {src, {fwd(g(u, v), 0), fwd(g(p[u][v], w), 0)}},
                    {src, {fwd(g(v, w), 1), fwd(g(u, p[v][w]), 0)}},
                    "A"});
      }
  for (std::size_t u = 0; u < n; ++u) {
    Word src{letter(u)};
    x.add_cell({"L:" + m.elements[u], {src, {fwd("iota", 0), fwd(g(e, u), 0)}}, {src, {}}, {}});
    x.add_cell({"R:" + m.elements[u], {src, {fwd("iota", 1), fwd(g(u, e), 0)}}, {src, {}}, {}});
  }
  return x;
}

}  // namespace polyrw
