#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polyrw/error.hpp"

namespace polyrw {

using letter = std::uint32_t;
/// A word over an alphabet, stored as generator indices.  The empty vector is
/// the identity 1-cell.
using Word = std::vector<letter>;

inline Word concat(const Word& a, const Word& b) {
  Word r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline Word concat(const Word& a, const Word& b, const Word& c) { return concat(concat(a, b), c); }

inline Word subword(const Word& w, std::size_t pos, std::size_t len) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(pos),
              w.begin() + static_cast<std::ptrdiff_t>(pos + len));
}

inline bool occurs_at(const Word& w, const Word& pattern, std::size_t pos) {
  if (pos + pattern.size() > w.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    if (w[pos + i] != pattern[i]) return false;
  return true;
}

/// Is `name` usable as a generator or label token in the text formats?
inline bool is_token(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u <= ' ' || c == '[' || c == ']' || c == ';' || c == '@' || c == '~' || c == '#' ||
        c == '|')
      return false;
  }
  return name != "->" && name != "==" && name != "*" && name != "=" && name != "_";
}

/// Generator names additionally exclude "1", which spells the empty word.
inline bool is_generator_name(std::string_view name) { return is_token(name) && name != "1"; }

/// Named generators.  Index order is the order given at construction.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_generator_name(names_[i]))
        throw error(errc::invalid_polygraph, "bad generator name '" + names_[i] + "'");
      if (!index_.emplace(names_[i], static_cast<letter>(i)).second)
        throw error(errc::invalid_polygraph, "duplicate generator '" + names_[i] + "'");
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(letter a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<letter> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  letter index(std::string_view name) const {
    auto a = find(name);
    if (!a) throw error(errc::invalid_polygraph, "unknown generator '" + std::string(name) + "'");
    return *a;
  }

  bool contains(const Word& w) const {
    for (letter a : w)
      if (a >= names_.size()) return false;
    return true;
  }

  /// Space separated generator names, "1" for the empty word.
  std::string format(const Word& w, std::string_view sep = " ") const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += sep;
      out += name(w[i]);
    }
    return out;
  }

  /// Inverse of `format` with the default separator; also accepts "" for 1.
  Word parse(std::string_view text) const {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && text[i] == ' ') ++i;
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ') ++j;
      if (j > i) {
        auto tok = text.substr(i, j - i);
        if (tok != "1") w.push_back(index(tok));
      }
      i = j;
    }
    return w;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, letter> index_;
};

}  // namespace polyrw
