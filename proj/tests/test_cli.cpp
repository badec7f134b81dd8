#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

namespace {

struct Output {
  int rc;
  std::string out;
};

Output run(const std::string& args, const std::string& input = "") {
  std::string cmd = std::string(POLYRW_CLI) + " " + args + " 2>/dev/null";
  if (!input.empty()) cmd = "printf '" + input + "' | " + cmd;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string data = POLYRW_DATA_DIR;

}  // namespace

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check catalog:free_abelian_presentation").rc, 0);
  Output k = run("check catalog:klein_bottle");
  EXPECT_EQ(k.rc, 1);
  EXPECT_NE(k.out.find("confluent no"), std::string::npos);
  Output d = run("check " + data + "/atilde2.datum");
  EXPECT_EQ(d.rc, 0);
  EXPECT_NE(d.out.find("mcm closure: ok"), std::string::npos);
  EXPECT_EQ(run("check - ", "elems: 1 a b\\na * a = _\\na * b = 1\\nb * a = 1\\nb * b = _\\n").rc, 1);
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run("check -", "gens: a\\nrule r: a -> zz\\n").rc, 2);
  EXPECT_EQ(run("bogus").rc, 2);
  EXPECT_EQ(run("normalize").rc, 2);
  EXPECT_EQ(run("--help").rc, 0);
  EXPECT_EQ(run("catalog nope").rc, 1);
  EXPECT_EQ(run("check /nonexistent/file").rc, 1);
}

TEST(Cli, Normalize) {
  EXPECT_EQ(run("normalize --strategy rightmost catalog:klein_bottle b a b a b").out, "b a a\n");
  EXPECT_EQ(run("normalize catalog:free_abelian_presentation c b a").out, "a b c\n");
  EXPECT_EQ(run("normalize --path catalog:free_abelian_presentation c b a").out,
            "a b c\nc b a [ beta@0 ; gamma@1 ; alpha@0 ]\n");
  EXPECT_EQ(run("normalize catalog:braid_simple_datum s1 s2 s2 s1 s2").out, "s1s2s1 s2s1\n");
  EXPECT_EQ(run("normalize " + data + "/klein_bottle_coherent.pg b a b a b").out, "a a b\n");
}

TEST(Cli, CompletionIsByteStable) {
  Output hc = run("hc " + data + "/klein_bottle.pg");
  EXPECT_EQ(hc.rc, 0);
  std::FILE* f = std::fopen((data + "/klein_bottle_coherent.pg").c_str(), "r");
  ASSERT_TRUE(f);
  std::string expected;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, f)) expected.append(buf, n);
  std::fclose(f);
  EXPECT_EQ(hc.out, expected);
  EXPECT_EQ(run("hc " + data + "/klein_bottle.pg").out, hc.out);
  Output sq = run("squier catalog:free_abelian_presentation");
  EXPECT_NE(sq.out.find("cell sq:beta/alpha/1: c b a [ beta@0 ; gamma@1 ; alpha@0 ] == c b a [ alpha@1 ; gamma@0 ; beta@1 ]"),
            std::string::npos);
  EXPECT_EQ(run("squier catalog:klein_bottle").rc, 1);
}

TEST(Cli, KleinReduction) {
  Output r = run("reduce " + data + "/klein_bottle_coherent.pg --gamma4 sq:alpha/kb:1/2 --gamma3 sq:alpha/alpha/2=kb:1");
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(r.out, "gens: a b\nrule alpha: b a b -> a\n");
}

TEST(Cli, GarsideCommands) {
  Output g3 = run("gar3 catalog:braid_simple_datum");
  EXPECT_EQ(g3.rc, 0);
  std::size_t cells = 0;
  for (auto p = g3.out.find("\ncell "); p != std::string::npos; p = g3.out.find("\ncell ", p + 1)) ++cells;
  EXPECT_EQ(cells, 2u);
  Output red = run("reduce-gar3 catalog:free_abelian_datum:2");
  EXPECT_EQ(red.rc, 0);
  EXPECT_NE(red.out.find("# matches gar3 yes"), std::string::npos);
  EXPECT_EQ(run("gar2 catalog:klein_bottle").rc, 1);
  EXPECT_EQ(run("catalog braid_simple_datum 3").out, run("catalog braid_simple_datum").out);
}

TEST(Cli, Render) {
  Output r = run("render " + data + "/klein_bottle_coherent.pg --cell sq:alpha/alpha/2");
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(r.out.rfind("digraph \"sq:alpha/alpha/2\" {", 0), 0u);
  EXPECT_EQ(run("render " + data + "/klein_bottle_coherent.pg --cell nope").rc, 1);
}
