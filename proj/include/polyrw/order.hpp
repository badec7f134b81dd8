#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polyrw/error.hpp"
#include "polyrw/word.hpp"

namespace polyrw {

enum class Comparison { less, equal, greater, incomparable };

/// A monomial order on words used to orient rules during completion.
///
/// deglex compares lengths, then the first differing letter by rank.  divlex
/// also compares lengths first; for equal lengths the word whose first
/// differing letter properly left-divides the other's is the greater one, and
/// words differing at letters that are not related by division are
/// incomparable.
class WordOrder {
 public:
  enum class Kind { deglex, divlex };

  /// `ascending` lists every generator once, smallest first.
  static WordOrder deglex(const std::vector<letter>& ascending) {
    WordOrder o;
    o.kind_ = Kind::deglex;
    o.rank_.assign(ascending.size(), npos);
    for (std::size_t i = 0; i < ascending.size(); ++i) {
      letter a = ascending[i];
      if (a >= ascending.size() || o.rank_[a] != npos)
        throw error(errc::invalid_order, "deglex ranking must list every generator exactly once");
      o.rank_[a] = i;
    }
    return o;
  }

  /// `divides[a][b]` is true when generator a properly left-divides b.  The
  /// relation must be a strict order.
  static WordOrder divlex(std::vector<std::vector<bool>> divides) {
    const std::size_t n = divides.size();
    for (const auto& row : divides)
      if (row.size() != n) throw error(errc::invalid_order, "divisibility relation is not square");
    for (std::size_t a = 0; a < n; ++a) {
      if (divides[a][a]) throw error(errc::invalid_order, "divisibility relation is not irreflexive");
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n && divides[a][b]; ++c)
          if (divides[b][c] && !divides[a][c])
            throw error(errc::invalid_order, "divisibility relation is not transitive");
    }
    WordOrder o;
    o.kind_ = Kind::divlex;
    o.divides_ = std::move(divides);
    return o;
  }

  Kind kind() const noexcept { return kind_; }

  Comparison compare(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() > b.size() ? Comparison::greater : Comparison::less;
    std::size_t i = 0;
    while (i < a.size() && a[i] == b[i]) ++i;
    if (i == a.size()) return Comparison::equal;
    const letter x = a[i], y = b[i];
    if (kind_ == Kind::deglex) {
      if (x >= rank_.size() || y >= rank_.size()) throw error(errc::invalid_order, "letter outside the ranking");
      return rank_[x] > rank_[y] ? Comparison::greater : Comparison::less;
    }
    if (x >= divides_.size() || y >= divides_.size()) throw error(errc::invalid_order, "letter outside the relation");
    if (divides_[x][y]) return Comparison::greater;
    if (divides_[y][x]) return Comparison::less;
    return Comparison::incomparable;
  }

  std::string describe(const Alphabet& alphabet) const {
    if (kind_ == Kind::divlex) return "divlex";
    std::vector<letter> asc(rank_.size());
    for (std::size_t a = 0; a < rank_.size(); ++a) asc[rank_[a]] = static_cast<letter>(a);
    std::string s = "deglex:";
    for (std::size_t i = 0; i < asc.size(); ++i) s += (i ? "," : "") + alphabet.name(asc[i]);
    return s;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Kind kind_ = Kind::deglex;
  std::vector<std::size_t> rank_;
  std::vector<std::vector<bool>> divides_;
};

}  // namespace polyrw
