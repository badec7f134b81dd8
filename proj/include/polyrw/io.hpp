#pragma once

// Text documents.
//
//   # comment
//   gens: a b
//   rule alpha: b a b -> a
//   cell A: b a b a b [ alpha@0 ] == b a b a b [ alpha@2 ; beta@0 ]
//
// A word is a space separated list of generator names, "1" for the empty
// word.  A step is label@position, with a trailing '~' for the inverse.
//
//   elems: 1 a b ab
//   a * b = ab
//   a * a = _
//   head a * ab = ab        (optional)
//
// A datum document lists every ordered pair of non-unit elements once; "_"
// marks a product outside the family.  Parsed data are validated unless the
// caller asks for the raw table.

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polyrw/error.hpp"
#include "polyrw/family.hpp"
#include "polyrw/garside/datum.hpp"
#include "polyrw/polygraph.hpp"

namespace polyrw::io {

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t j = i;
    if (line[i] == '[' || line[i] == ']' || line[i] == ';') {
      j = i + 1;
    } else {
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '[' &&
             line[j] != ']' && line[j] != ';' && line[j] != '#')
        ++j;
    }
    out.push_back({std::string(line.substr(i, j - i)), i + 1});
    i = j;
  }
  return out;
}

class LineReader {
 public:
  LineReader(std::size_t line, std::vector<Token> toks) : line_(line), toks_(std::move(toks)) {}

  bool done() const { return pos_ >= toks_.size(); }
  const Token* peek() const { return done() ? nullptr : &toks_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t col = done() ? (toks_.empty() ? 1 : toks_.back().column + toks_.back().text.size()) : toks_[pos_].column;
    throw parse_error(line_, col, what);
  }
  [[noreturn]] void fail_at(const Token& t, const std::string& what) const { throw parse_error(line_, t.column, what); }

  const Token& next(const std::string& expecting) {
    if (done()) fail("expected " + expecting);
    return toks_[pos_++];
  }

  void expect(const std::string& text) {
    const Token& t = next("'" + text + "'");
    if (t.text != text) fail_at(t, "expected '" + text + "', found '" + t.text + "'");
  }

  bool accept(const std::string& text) {
    if (!done() && toks_[pos_].text == text) {
      ++pos_;
      return true;
    }
    return false;
  }

  /// A label token followed by ':' (either attached or separate).
  std::string label() {
    const Token& t = next("a label");
    std::string s = t.text;
    if (s.size() > 1 && s.back() == ':') {
      s.pop_back();
    } else {
      expect(":");
    }
    if (!is_token(s)) fail_at(t, "bad label '" + s + "'");
    return s;
  }

  /// Words stop at any of the given terminators.
  Word word(const Alphabet& a, std::initializer_list<std::string_view> stops) {
    Word w;
    while (!done()) {
      const Token& t = toks_[pos_];
      bool stop = false;
      for (auto s : stops) stop = stop || t.text == s;
      if (stop) break;
      ++pos_;
      if (t.text == "1") continue;
      auto g = a.find(t.text);
      if (!g) fail_at(t, "unknown generator '" + t.text + "'");
      w.push_back(*g);
    }
    return w;
  }

  RewritePath path(const Alphabet& a) {
    RewritePath p;
    p.start = word(a, {"["});
    expect("[");
    if (accept("]")) return p;
    for (;;) {
      const Token& t = next("a step");
      std::string s = t.text;
      RewriteStep step;
      if (!s.empty() && s.back() == '~') {
        step.orientation = Orientation::backward;
        s.pop_back();
      }
      auto at = s.rfind('@');
      if (at == std::string::npos || at == 0 || at + 1 == s.size()) fail_at(t, "expected label@position");
      step.rule = s.substr(0, at);
      const std::string num = s.substr(at + 1);
      if (num.find_first_not_of("0123456789") != std::string::npos || num.size() > 9)
        fail_at(t, "bad position '" + num + "'");
      step.position = std::stoul(num);
      p.steps.push_back(std::move(step));
      if (accept("]")) return p;
      expect(";");
    }
  }

  void end() {
    if (!done()) fail("unexpected '" + toks_[pos_].text + "'");
  }

 private:
  std::size_t line_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line = 0, i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find('\n', i);
    if (j == std::string_view::npos) j = text.size();
    ++line;
    auto toks = tokenize(text.substr(i, j - i));
    if (!toks.empty()) f(line, std::move(toks));
    i = j + 1;
  }
}

/// Converts semantic failures inside a line into parse errors at that line.
template <class F>
void at_line(std::size_t line, F&& f) {
  try {
    f();
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    throw parse_error(line, 1, e.what());
  }
}

}  // namespace detail

inline ThreeOnePolygraph parse_polygraph(std::string_view text) {
  std::optional<TwoPolygraph> two;
  std::vector<std::pair<std::size_t, ThreeCell>> cells;
  detail::for_each_line(text, [&](std::size_t line, std::vector<detail::Token> toks) {
    detail::LineReader r(line, std::move(toks));
    const detail::Token& head = r.next("a directive");
    if (head.text == "gens:" || head.text == "gens") {
      if (head.text == "gens") r.expect(":");
      if (two) r.fail_at(head, "second 'gens' line");
      std::vector<std::string> names;
      while (!r.done()) names.push_back(r.next("a generator").text);
      detail::at_line(line, [&] { two.emplace(Alphabet(names)); });
    } else if (head.text == "rule") {
      if (!two) r.fail_at(head, "'rule' before 'gens'");
      Rule rule;
      rule.label = r.label();
      rule.source = r.word(two->alphabet(), {"->"});
      r.expect("->");
      rule.target = r.word(two->alphabet(), {});
      r.end();
      detail::at_line(line, [&] { two->add_rule(std::move(rule)); });
    } else if (head.text == "cell") {
      if (!two) r.fail_at(head, "'cell' before 'gens'");
      ThreeCell c;
      c.label = r.label();
      c.lhs = r.path(two->alphabet());
      r.expect("==");
      c.rhs = r.path(two->alphabet());
      r.end();
      c.family = family_of_label(c.label);
      cells.emplace_back(line, std::move(c));
    } else {
      r.fail_at(head, "unknown directive '" + head.text + "'");
    }
  });
  if (!two) throw parse_error(1, 1, "missing 'gens' line");
  ThreeOnePolygraph x(std::move(*two));
  for (auto& [line, c] : cells) {
    const std::size_t l = line;
    detail::at_line(l, [&] {
      replay(x.two(), c.lhs);
      replay(x.two(), c.rhs);
      x.add_cell(std::move(c));
    });
  }
  return x;
}

inline std::string format_path(const Alphabet& a, const RewritePath& p) {
  std::string s = a.format(p.start) + " [";
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    s += i ? " ; " : " ";
    s += p.steps[i].rule + "@" + std::to_string(p.steps[i].position);
    if (p.steps[i].orientation == Orientation::backward) s += "~";
  }
  return s + " ]";
}

inline std::string serialize(const TwoPolygraph& x) {
  std::ostringstream os;
  os << "gens:";
  for (const auto& n : x.alphabet().names()) os << ' ' << n;
  os << '\n';
  for (const Rule& r : x.rules())
    os << "rule " << r.label << ": " << x.alphabet().format(r.source) << " -> " << x.alphabet().format(r.target) << '\n';
  return os.str();
}

inline std::string serialize(const ThreeOnePolygraph& x) {
  std::string s = serialize(x.two());
  for (const ThreeCell& c : x.cells())
    s += "cell " + c.label + ": " + format_path(x.alphabet(), c.lhs) + " == " + format_path(x.alphabet(), c.rhs) + "\n";
  return s;
}

inline garside::GarsideDatum parse_datum(std::string_view text, bool validate = true) {
  std::vector<std::string> names;
  std::map<std::string, garside::element> index;
  std::vector<garside::GarsideDatum::Product> products;
  std::map<std::pair<garside::element, garside::element>, std::size_t> seen;
  std::vector<std::vector<garside::element>> heads;
  bool has_heads = false;
  std::size_t last_line = 0;
  detail::for_each_line(text, [&](std::size_t line, std::vector<detail::Token> toks) {
    last_line = line;
    detail::LineReader r(line, std::move(toks));
    const detail::Token& head = r.next("a directive");
    if (head.text == "elems:" || head.text == "elems") {
      if (head.text == "elems") r.expect(":");
      if (!names.empty()) r.fail_at(head, "second 'elems' line");
      while (!r.done()) {
        const detail::Token& t = r.next("an element");
        if (names.empty() && t.text != "1") r.fail_at(t, "the first element must be the unit '1'");
        if (!names.empty() && !is_generator_name(t.text)) r.fail_at(t, "bad element name '" + t.text + "'");
        if (!index.emplace(t.text, names.size()).second) r.fail_at(t, "duplicate element '" + t.text + "'");
        names.push_back(t.text);
      }
      if (names.empty()) r.fail("no elements");
      heads.assign(names.size(), std::vector<garside::element>(names.size(), garside::unit));
      return;
    }
    if (names.empty()) r.fail_at(head, "'elems' line must come first");
    const bool is_head = head.text == "head";
    const detail::Token& ut = is_head ? r.next("an element") : head;
    auto elem = [&](const detail::Token& t, bool allow_unit) {
      auto it = index.find(t.text);
      if (it == index.end()) r.fail_at(t, "unknown element '" + t.text + "'");
      if (!allow_unit && it->second == garside::unit) r.fail_at(t, "the unit has no table entries");
      return it->second;
    };
    const garside::element u = elem(ut, false);
    r.expect("*");
    const garside::element v = elem(r.next("an element"), false);
    r.expect("=");
    const detail::Token& wt = r.next("a product or '_'");
    if (is_head) {
      heads[u][v] = elem(wt, false);
      has_heads = true;
      r.end();
      return;
    }
    if (!seen.emplace(std::pair{u, v}, line).second) r.fail_at(ut, "pair listed twice");
    if (wt.text != "_") products.push_back({u, v, elem(wt, true)});
    r.end();
  });
  if (names.empty()) throw parse_error(1, 1, "missing 'elems' line");
  for (garside::element u = 1; u < names.size(); ++u)
    for (garside::element v = 1; v < names.size(); ++v)
      if (!seen.count({u, v}))
        throw parse_error(last_line + 1, 1, "missing entry for " + names[u] + " * " + names[v]);
  garside::GarsideDatum d;
  detail::at_line(1, [&] { d = garside::GarsideDatum(names, products); });
  if (has_heads) d.set_head_table(std::move(heads));
  if (validate) garside::require_valid(d);
  return d;
}

inline std::string serialize(const garside::GarsideDatum& d) {
  std::ostringstream os;
  os << "elems:";
  for (const auto& n : d.names()) os << ' ' << n;
  os << '\n';
  for (garside::element u = 1; u < d.size(); ++u)
    for (garside::element v = 1; v < d.size(); ++v) {
      auto w = d.product(u, v);
      os << d.name(u) << " * " << d.name(v) << " = " << (w ? d.name(*w) : "_") << '\n';
    }
  if (const auto& h = d.head_table())
    for (garside::element u = 1; u < d.size(); ++u)
      for (garside::element v = 1; v < d.size(); ++v)
        if (!d.product(u, v)) os << "head " << d.name(u) << " * " << d.name(v) << " = " << d.name((*h)[u][v]) << '\n';
  return os.str();
}

}  // namespace polyrw::io
