#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "polyrw/error.hpp"
#include "polyrw/order.hpp"
#include "polyrw/word.hpp"

namespace polyrw::garside {

using element = std::size_t;

inline constexpr element unit = 0;

/// A finite Garside family given by its partial multiplication table.
///
/// Element 0 is the unit "1".  `product(u, v)` is defined exactly when the
/// product uv lies in the family; products with the unit are implicit.
class GarsideDatum {
 public:
  struct Product {
    element left;
    element right;
    element result;
  };

  GarsideDatum() : GarsideDatum({"1"}, {}) {}

  GarsideDatum(std::vector<std::string> names, const std::vector<Product>& products)
      : names_(std::move(names)), mul_(names_.size(), std::vector<std::optional<element>>(names_.size())) {
    if (names_.empty() || names_[0] != "1") throw error(errc::invalid_datum, "element 0 must be the unit '1'");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (i > 0 && !is_generator_name(names_[i]))
        throw error(errc::invalid_datum, "bad element name '" + names_[i] + "'");
      if (!index_.emplace(names_[i], i).second)
        throw error(errc::invalid_datum, "duplicate element '" + names_[i] + "'");
    }
    for (const auto& p : products) {
      if (p.left == unit || p.right == unit || p.left >= size() || p.right >= size() || p.result >= size())
        throw error(errc::invalid_datum, "product entry out of range");
      if (mul_[p.left][p.right])
        throw error(errc::invalid_datum, "product " + names_[p.left] + " * " + names_[p.right] + " given twice");
      mul_[p.left][p.right] = p.result;
    }
  }

  /// Number of elements, the unit included.
  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(element e) const { return names_.at(e); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<element> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  element index(const std::string& name) const {
    auto e = find(name);
    if (!e) throw error(errc::bad_parameter, "unknown element '" + name + "'");
    return *e;
  }

  std::optional<element> product(element u, element v) const {
    if (u == unit) return v;
    if (v == unit) return u;
    return mul_.at(u).at(v);
  }

  /// The product as an element when both factors and the result exist.
  std::optional<element> product(std::optional<element> u, std::optional<element> v) const {
    if (!u || !v) return std::nullopt;
    return product(*u, *v);
  }

  /// Non-unit products in table order.
  std::vector<Product> products() const {
    std::vector<Product> out;
    for (element u = 1; u < size(); ++u)
      for (element v = 1; v < size(); ++v)
        if (mul_[u][v]) out.push_back({u, v, *mul_[u][v]});
    return out;
  }

  /// Optional precomputed heads of two-letter words, used instead of
  /// normalisation when present.
  void set_head_table(std::vector<std::vector<element>> heads) { heads_ = std::move(heads); }
  const std::optional<std::vector<std::vector<element>>>& head_table() const noexcept { return heads_; }

  /// Generator letter of a non-unit element in the presentations built from
  /// this datum.
  static letter letter_of(element e) { return static_cast<letter>(e - 1); }
  static element element_of(letter a) { return static_cast<element>(a) + 1; }

  friend bool operator==(const GarsideDatum& a, const GarsideDatum& b) {
    return a.names_ == b.names_ && a.mul_ == b.mul_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::optional<element>>> mul_;
  std::unordered_map<std::string, element> index_;
  std::optional<std::vector<std::vector<element>>> heads_;
};

/// Does `a` left-divide `b` inside the table (a x = b for some x, possibly 1)?
inline bool left_divides(const GarsideDatum& d, element a, element b) {
  if (a == b || a == unit) return true;
  for (element x = 1; x < d.size(); ++x)
    if (d.product(a, x) == b) return true;
  return false;
}

struct DatumCheck {
  std::string name;
  bool ok = true;
  std::string detail;  // first violation found
};

struct DatumReport {
  std::vector<DatumCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }

  std::string failures() const {
    std::string s;
    for (const auto& c : checks)
      if (!c.ok) s += (s.empty() ? "" : "; ") + c.name + ": " + c.detail;
    return s;
  }
};

/// Right common multiples of f and g within the table.
inline std::vector<element> right_common_multiples(const GarsideDatum& d, element f, element g) {
  std::vector<element> out;
  for (element h = 0; h < d.size(); ++h)
    if (left_divides(d, f, h) && left_divides(d, g, h)) out.push_back(h);
  return out;
}

/// Minimal right common multiples of f and g in the family, in index order.
inline std::vector<element> right_mcms(const GarsideDatum& d, element f, element g) {
  std::vector<element> crm = right_common_multiples(d, f, g);
  std::vector<element> out;
  for (element h : crm) {
    bool minimal = true;
    for (element k : crm)
      if (k != h && left_divides(d, k, h)) minimal = false;
    if (minimal) out.push_back(h);
  }
  return out;
}

/// The unique x with f x = g.
inline element complement(const GarsideDatum& d, element f, element g) {
  if (f == g) return unit;
  if (f == unit) return g;
  for (element x = 1; x < d.size(); ++x)
    if (d.product(f, x) == g) return x;
  throw error(errc::not_a_divisor, d.name(f) + " does not left-divide " + d.name(g));
}

inline DatumReport validate_datum(const GarsideDatum& d) {
  DatumReport rep;
  const std::size_t n = d.size();
  auto nm = [&](element e) { return d.name(e); };

  DatumCheck assoc{"associativity", true, {}};
  for (element u = 1; u < n && assoc.ok; ++u)
    for (element v = 1; v < n && assoc.ok; ++v)
      for (element w = 1; w < n && assoc.ok; ++w) {
        auto uv = d.product(u, v), vw = d.product(v, w);
        if (!uv || !vw) continue;
        auto l = d.product(*uv, w), r = d.product(u, *vw);
        if (l != r) {
          assoc.ok = false;
          assoc.detail = "(" + nm(u) + " " + nm(v) + ") " + nm(w) + " and " + nm(u) + " (" + nm(v) + " " + nm(w) +
                         ") disagree";
        }
      }
  rep.checks.push_back(assoc);

  DatumCheck cancel{"left-cancellativity", true, {}};
  for (element u = 1; u < n && cancel.ok; ++u)
    for (element v = 0; v < n && cancel.ok; ++v)
      for (element w = v + 1; w < n && cancel.ok; ++w) {
        auto a = d.product(u, v), b = d.product(u, w);
        if (a && a == b) {
          cancel.ok = false;
          cancel.detail = nm(u) + " " + nm(v) + " = " + nm(u) + " " + nm(w);
        }
      }
  rep.checks.push_back(cancel);

  DatumCheck inv{"no invertible elements", true, {}};
  for (element u = 1; u < n && inv.ok; ++u)
    for (element v = 1; v < n && inv.ok; ++v)
      if (d.product(u, v) == unit) {
        inv.ok = false;
        inv.detail = nm(u) + " " + nm(v) + " = 1";
      }
  rep.checks.push_back(inv);

  DatumCheck mcm{"mcm closure", true, {}};
  for (element f = 1; f < n && mcm.ok; ++f)
    for (element g = 1; g < n && mcm.ok; ++g) {
      auto crm = right_common_multiples(d, f, g);
      auto mins = right_mcms(d, f, g);
      for (element h : crm) {
        bool covered = false;
        for (element m : mins) covered = covered || left_divides(d, m, h);
        if (!covered) {
          mcm.ok = false;
          mcm.detail = "common multiple " + nm(h) + " of " + nm(f) + " and " + nm(g) + " is above no mcm";
          break;
        }
      }
    }
  rep.checks.push_back(mcm);

  // finite and without invertibles: proper division must be acyclic
  DatumCheck noeth{"right-noetherianity", true, {}};
  for (element u = 1; u < n && noeth.ok; ++u)
    for (element v = 1; v < n && noeth.ok; ++v)
      if (u != v && left_divides(d, u, v) && left_divides(d, v, u)) {
        noeth.ok = false;
        noeth.detail = nm(u) + " and " + nm(v) + " divide each other";
      }
  rep.checks.push_back(noeth);
  return rep;
}

inline void require_valid(const GarsideDatum& d) {
  DatumReport rep = validate_datum(d);
  if (!rep.ok()) throw error(errc::invalid_datum, rep.failures());
}

/// The divlex order on the generators of gar2: a > b on the first letter
/// where a properly left-divides b (transitively closed).
inline WordOrder divlex_order(const GarsideDatum& d) {
  const std::size_t g = d.size() - 1;
  std::vector<std::vector<bool>> rel(g, std::vector<bool>(g));
  for (element a = 1; a < d.size(); ++a)
    for (element b = 1; b < d.size(); ++b)
      if (a != b && left_divides(d, a, b)) rel[a - 1][b - 1] = true;
  for (std::size_t k = 0; k < g; ++k)
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  return WordOrder::divlex(std::move(rel));
}

}  // namespace polyrw::garside
