#include <gtest/gtest.h>

#include "polyrw.hpp"

using namespace polyrw;

namespace {

template <class F>
errc code_of(F&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return errc::parse_error;
}

TwoPolygraph klein() { return catalog::klein_bottle(); }

}  // namespace

TEST(Word, ConcatSubwordOccurs) {
  Word a{0, 1}, b{2};
  EXPECT_EQ(concat(a, b), (Word{0, 1, 2}));
  EXPECT_EQ(concat(a, b, a), (Word{0, 1, 2, 0, 1}));
  EXPECT_EQ(subword(Word{0, 1, 2, 3}, 1, 2), (Word{1, 2}));
  EXPECT_TRUE(occurs_at(Word{0, 1, 0, 1}, Word{0, 1}, 2));
  EXPECT_FALSE(occurs_at(Word{0, 1, 0}, Word{0, 1}, 2));
  EXPECT_TRUE(occurs_at(Word{0}, Word{}, 1));
}

TEST(Word, TokenRules) {
  EXPECT_TRUE(is_generator_name("s1s2"));
  EXPECT_TRUE(is_generator_name("^ab"));
  EXPECT_FALSE(is_generator_name("1"));
  EXPECT_TRUE(is_token("1"));
  for (const char* bad : {"", "a b", "a[", "x;", "a@", "b~", "#c", "u|v", "->", "==", "*", "=", "_"})
    EXPECT_FALSE(is_token(bad)) << bad;
}

TEST(Alphabet, FormatParseRoundTrip) {
  Alphabet a({"a", "b", "ab"});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a.format({}), "1");
  EXPECT_EQ(a.format({2, 0, 1}), "ab a b");
  EXPECT_EQ(a.format({2, 0}, "|"), "ab|a");
  EXPECT_EQ(a.parse("ab a b"), (Word{2, 0, 1}));
  EXPECT_EQ(a.parse("1"), Word{});
  EXPECT_EQ(a.parse(""), Word{});
  EXPECT_EQ(a.index("b"), 1u);
  EXPECT_FALSE(a.find("c"));
  EXPECT_TRUE(a.contains({0, 2}));
  EXPECT_FALSE(a.contains({3}));
}

TEST(Alphabet, RejectsBadNames) {
  EXPECT_EQ(code_of([] { Alphabet({"a", "a"}); }), errc::invalid_polygraph);
  EXPECT_EQ(code_of([] { Alphabet({"1"}); }), errc::invalid_polygraph);
  EXPECT_EQ(code_of([] { Alphabet({"a b"}); }), errc::invalid_polygraph);
  EXPECT_EQ(code_of([] { Alphabet({"a"}).index("z"); }), errc::invalid_polygraph);
}

TEST(TwoPolygraph, Validation) {
  Alphabet a({"a", "b"});
  TwoPolygraph x(a);
  x.add_rule({"r", {0, 1}, {1}});
  EXPECT_EQ(x.size(), 1u);
  EXPECT_EQ(code_of([&] { x.add_rule({"r", {0}, {1}}); }), errc::invalid_polygraph);
  EXPECT_EQ(code_of([&] { x.add_rule({"s", {0}, {0}}); }), errc::invalid_polygraph);
  EXPECT_EQ(code_of([&] { x.add_rule({"s", {5}, {0}}); }), errc::invalid_polygraph);
  EXPECT_EQ(code_of([&] { x.add_rule({"a b", {0}, {1}}); }), errc::invalid_polygraph);
  EXPECT_EQ(code_of([&] { x.rule("nope"); }), errc::unknown_rule);
  x.relabel_rule("r", "q");
  EXPECT_TRUE(x.find_rule("q"));
  EXPECT_FALSE(x.find_rule("r"));
  x.add_rule({"t", {1, 1}, {}});
  x.remove_rules({"q"});
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x.rules()[0].label, "t");
}

TEST(Paths, ApplyReplayInvert) {
  TwoPolygraph x = klein();
  const Alphabet& ab = x.alphabet();
  Word w = ab.parse("b a b a b");
  EXPECT_EQ(apply_step(x, w, fwd("alpha", 0)), ab.parse("a a b"));
  EXPECT_EQ(apply_step(x, w, fwd("alpha", 2)), ab.parse("b a a"));
  EXPECT_EQ(apply_step(x, ab.parse("a a b"), bwd("alpha", 0)), w);
  EXPECT_EQ(code_of([&] { apply_step(x, w, fwd("alpha", 1)); }), errc::redex_mismatch);
  EXPECT_EQ(code_of([&] { apply_step(x, w, fwd("alpha", 4)); }), errc::redex_mismatch);
  EXPECT_EQ(code_of([&] { apply_step(x, w, fwd("beta", 0)); }), errc::unknown_rule);

  RewritePath p{ab.parse("b a b a b a b"), {fwd("alpha", 0), fwd("alpha", 2)}};
  auto ws = replay(x, p);
  ASSERT_EQ(ws.size(), 3u);
  EXPECT_EQ(ab.format(ws[1]), "a a b a b");
  EXPECT_EQ(ab.format(end_word(x, p)), "a a a");
  RewritePath q = invert(x, p);
  EXPECT_EQ(q.start, ab.parse("a a a"));
  EXPECT_EQ(q.steps, (std::vector<RewriteStep>{bwd("alpha", 2), bwd("alpha", 0)}));
  EXPECT_EQ(end_word(x, q), p.start);
  EXPECT_TRUE(cancel_inverse_pairs(compose(x, p, q)).empty());
}

TEST(Paths, WhiskerAndCompose) {
  TwoPolygraph x = klein();
  const Alphabet& ab = x.alphabet();
  RewritePath p{ab.parse("b a b"), {fwd("alpha", 0)}};
  RewritePath w = whisker(ab.parse("a"), p, ab.parse("b b"));
  EXPECT_EQ(w.start, ab.parse("a b a b b b"));
  EXPECT_EQ(w.steps, std::vector<RewriteStep>{fwd("alpha", 1)});
  RewritePath bad{ab.parse("b"), {}};
  EXPECT_EQ(code_of([&] { compose(x, p, bad); }), errc::not_parallel);
}

TEST(ThreeOnePolygraph, CellsMustBeParallel) {
  TwoPolygraph x = klein();
  const Alphabet& ab = x.alphabet();
  ThreeOnePolygraph t(x);
  Word src = ab.parse("b a b a b");
  EXPECT_EQ(code_of([&] {
              t.add_cell({"A", {src, {fwd("alpha", 0)}}, {src, {fwd("alpha", 2)}}, ""});
            }),
            errc::not_parallel);
  t.add_cell({"C", {src, {fwd("alpha", 0)}}, {src, {fwd("alpha", 0)}}, ""});
  EXPECT_EQ(code_of([&] { t.add_cell({"C", {src, {}}, {src, {}}, ""}); }), errc::invalid_polygraph);
  EXPECT_EQ(code_of([&] { t.cell("D"); }), errc::unknown_cell);
  t.relabel_cell("C", "D");
  EXPECT_EQ(t.cell("D").label, "D");
  t.relabel_rule("alpha", "a1");
  EXPECT_EQ(t.cell("D").lhs.steps[0].rule, "a1");
}

TEST(Standard, TrivialMonoid) {
  MonoidTable m{{"e"}, {{0}}};
  EXPECT_EQ(monoid_unit(m), 0u);
  TwoPolygraph s2 = standard_2(m);
  EXPECT_EQ(s2.alphabet().size(), 1u);
  EXPECT_EQ(s2.size(), 2u);  // gamma:e,e and iota
  ThreeOnePolygraph s3 = standard_3(m);
  EXPECT_EQ(s3.cells().size(), 3u);  // one A, one L, one R
}

TEST(Standard, CyclicGroups) {
  auto z2 = standard_3(catalog::cyclic_group(2));
  EXPECT_EQ(z2.alphabet().size(), 2u);
  EXPECT_EQ(z2.rules().size(), 5u);
  EXPECT_EQ(z2.cells().size(), 12u);  // 8 A + 2 L + 2 R
  EXPECT_EQ(z2.alphabet().names()[1], "^1");
  const Rule& g = z2.two().rule("gamma:1,1");
  EXPECT_EQ(z2.alphabet().format(g.source), "^1 ^1");
  EXPECT_EQ(z2.alphabet().format(g.target), "^0");
  EXPECT_TRUE(z2.two().rule("iota").source.empty());
  EXPECT_EQ(z2.cell("A:0,1,1").family, "A");
  EXPECT_EQ(standard_2(catalog::cyclic_group(3)).size(), 10u);
}

TEST(Standard, RejectsBadTables) {
  MonoidTable no_unit{{"x", "y"}, {{0, 0}, {0, 0}}};
  EXPECT_EQ(code_of([&] { monoid_unit(no_unit); }), errc::no_unit);
  // (x x) x = y but x (x x) = x
  MonoidTable bad{{"e", "x", "y"}, {{0, 1, 2}, {1, 2, 1}, {2, 2, 2}}};
  EXPECT_EQ(code_of([&] { standard_2(bad); }), errc::table_not_associative);
  MonoidTable ragged{{"e", "x"}, {{0, 1}}};
  EXPECT_EQ(code_of([&] { monoid_unit(ragged); }), errc::bad_parameter);
}

TEST(Errors, NamesAndParseErrorPosition) {
  EXPECT_EQ(errc_name(errc::step_budget_exceeded), "StepBudgetExceeded");
  EXPECT_EQ(errc_name(errc::mismatch_with_gar3), "MismatchWithGar3");
  parse_error e(3, 7, "boom");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 7u);
  EXPECT_EQ(e.code(), errc::parse_error);
  EXPECT_NE(std::string(e.what()).find("line 3, column 7"), std::string::npos);
}
