// polyrw: command line front end over the header-only library.
//
// Exit codes: 0 success, 1 validation or library failure, 2 parse error
// (including malformed command lines).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polyrw.hpp"

namespace {

using namespace polyrw;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_parse = 2;

/// What a SOURCE argument resolved to.  A datum also fills `poly` with gar2 so
/// that presentation commands apply to it.
struct Source {
  std::string name;
  std::optional<ThreeOnePolygraph> poly;
  std::optional<garside::GarsideDatum> datum;
};

struct Options {
  std::string order;
  std::size_t budget = default_step_budget;
  std::string format = "text";
  std::string strategy = "leftmost";
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::bad_parameter, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool looks_like_datum(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    return tok.rfind("elems", 0) == 0;
  }
  return false;
}

std::size_t parse_count(const std::string& s) {
  if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos)
    throw error(errc::bad_parameter, "bad parameter '" + s + "'");
  return std::stoul(s);
}

Source from_catalog(const std::string& name, std::optional<std::size_t> n) {
  Source s{name, {}, {}};
  if (name == "klein_bottle") {
    s.poly.emplace(catalog::klein_bottle());
  } else if (name == "free_abelian_presentation") {
    s.poly.emplace(catalog::free_abelian_presentation(n.value_or(3)));
  } else if (name == "cyclic_group") {
    s.poly.emplace(standard_3(catalog::cyclic_group(n.value_or(2))));
  } else if (name == "free_abelian_datum") {
    s.datum.emplace(catalog::free_abelian_datum(n.value_or(3)));
  } else if (name == "braid_simple_datum") {
    s.datum.emplace(catalog::braid_simple_datum(n.value_or(3)));
  } else if (name == "atilde2_datum") {
    s.datum.emplace(catalog::atilde2_datum());
  } else {
    std::string all;
    for (const auto& c : catalog::names()) all += " " + c;
    throw error(errc::bad_parameter, "unknown catalog entry '" + name + "'; known:" + all);
  }
  if (s.datum) s.poly.emplace(garside::gar2(*s.datum));
  return s;
}

/// SOURCE is a path, "-" for standard input, or catalog:<name>[:<n>].
Source load(const std::string& arg, bool validate = true) {
  if (arg.rfind("catalog:", 0) == 0) {
    std::string rest = arg.substr(8);
    std::optional<std::size_t> n;
    if (auto c = rest.find(':'); c != std::string::npos) {
      n = parse_count(rest.substr(c + 1));
      rest = rest.substr(0, c);
    }
    return from_catalog(rest, n);
  }
  const std::string text = read_text(arg);
  Source s{arg, {}, {}};
  if (looks_like_datum(text)) {
    s.datum.emplace(io::parse_datum(text, validate));
    if (validate) s.poly.emplace(garside::gar2(*s.datum));
  } else {
    s.poly.emplace(io::parse_polygraph(text));
  }
  return s;
}

const garside::GarsideDatum& need_datum(const Source& s) {
  if (!s.datum) throw error(errc::bad_parameter, "'" + s.name + "' is a presentation, this command needs a datum");
  return *s.datum;
}

Strategy strategy_of(const Options& o) {
  if (o.strategy == "leftmost") return Strategy::leftmost;
  if (o.strategy == "rightmost") return Strategy::rightmost;
  throw error(errc::bad_parameter, "unknown strategy '" + o.strategy + "'");
}

/// --order deglex[:a,b,...] lists generators in increasing order; divlex
/// needs a datum.  The default is deglex in alphabet order for presentations
/// and divlex for data.
WordOrder order_of(const Options& o, const Source& s) {
  const Alphabet& a = s.poly->alphabet();
  std::string spec = o.order.empty() ? (s.datum ? "divlex" : "deglex") : o.order;
  if (spec == "divlex") return garside::divlex_order(need_datum(s));
  if (spec.rfind("deglex", 0) != 0) throw error(errc::invalid_order, "unknown order '" + spec + "'");
  std::vector<letter> asc;
  if (spec == "deglex") {
    for (letter i = 0; i < a.size(); ++i) asc.push_back(i);
  } else {
    if (spec[6] != ':') throw error(errc::invalid_order, "expected deglex:<a,b,...>");
    std::string list = spec.substr(7);
    std::istringstream in(list);
    std::string g;
    while (std::getline(in, g, ','))
      if (!g.empty()) asc.push_back(a.index(g));
  }
  return WordOrder::deglex(asc);
}

std::string step_text(const RewriteStep& s) {
  return s.rule + "@" + std::to_string(s.position) + (s.orientation == Orientation::backward ? "~" : "");
}

void print_polygraph(const ThreeOnePolygraph& x, const Options& o) {
  if (o.format == "dot")
    std::cout << (x.cells().empty() ? dot::render_branchings(x.two()) : dot::render_cells(x));
  else
    std::cout << io::serialize(x);
}

// ---------------------------------------------------------------------------

int cmd_check(const std::string& src, const Options& o) {
  Source s = load(src, false);
  if (s.datum) {
    garside::DatumReport rep = garside::validate_datum(*s.datum);
    std::cout << "elements " << s.datum->size() << '\n';
    for (const auto& c : rep.checks)
      std::cout << c.name << ": " << (c.ok ? "ok" : "FAIL " + c.detail) << '\n';
    return rep.ok() ? exit_ok : exit_invalid;
  }
  const ThreeOnePolygraph& x = *s.poly;
  const WordOrder ord = order_of(o, s);
  bool ok = true;
  std::cout << "generators " << x.alphabet().size() << "\nrules " << x.rules().size() << "\ncells "
            << x.cells().size() << "\norder " << ord.describe(x.alphabet()) << '\n';
  for (const Rule& r : x.rules())
    if (ord.compare(r.source, r.target) != Comparison::greater) {
      std::cout << "not decreasing: " << r.label << '\n';
      ok = false;
    }
  std::cout << "terminating " << (ok ? "yes" : "no") << '\n';
  const Rewriter rw(x.two());
  std::size_t n = 0, joined = 0;
  if (ok) {
    for (const Branching& b : critical_branchings(x.two())) {
      ++n;
      if (join_branching(rw, b, o.budget).joined()) ++joined;
    }
    std::cout << "critical branchings " << n << "\nconfluent " << (joined == n ? "yes" : "no") << '\n';
  }
  return ok && joined == n ? exit_ok : exit_invalid;
}

int cmd_normalize(const std::string& src, const std::vector<std::string>& words, bool show_path, const Options& o) {
  Source s = load(src);
  std::string text;
  for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
  if (s.datum) {
    // a datum normalises through its convergent presentation underline_gar2
    garside::GarsideRewriter g(*s.datum);
    const Alphabet& a = g.polygraph().alphabet();
    Word w = a.parse(text);
    std::cout << a.format(g.s_normalize(w, strategy_of(o))) << '\n';
    if (show_path) std::cout << io::format_path(a, Rewriter(g.polygraph()).normalize(w, strategy_of(o), o.budget).path) << '\n';
    return exit_ok;
  }
  const Alphabet& a = s.poly->alphabet();
  NormalForm nf = normalize(s.poly->two(), a.parse(text), strategy_of(o), o.budget);
  std::cout << a.format(nf.word) << '\n';
  if (show_path) std::cout << io::format_path(a, nf.path) << '\n';
  return exit_ok;
}

int cmd_branchings(const std::string& src, const Options& o) {
  Source s = load(src);
  const TwoPolygraph& x = s.poly->two();
  if (o.format == "dot") {
    std::cout << dot::render_branchings(x);
    return exit_ok;
  }
  const Rewriter rw(x);
  bool all = true;
  for (const Branching& b : critical_branchings(x)) {
    Confluence c = join_branching(rw, b, o.budget);
    all = all && c.joined();
    std::cout << x.alphabet().format(b.source) << " : " << step_text(b.left) << " , " << step_text(b.right) << " ("
              << shape_name(b.shape) << ") ";
    if (c.joined())
      std::cout << "joins at " << x.alphabet().format(c.left_normal) << '\n';
    else
      std::cout << "diverges to " << x.alphabet().format(c.left_normal) << " / " << x.alphabet().format(c.right_normal)
                << '\n';
  }
  return all ? exit_ok : exit_invalid;
}

int cmd_complete(const std::string& src, const Options& o) {
  Source s = load(src);
  CompletionOptions opt;
  opt.step_budget = o.budget;
  CompletionResult r = knuth_bendix(s.poly->two(), order_of(o, s), opt);
  if (o.format == "dot") {
    std::cout << dot::render_trace(r);
    return exit_ok;
  }
  std::cout << "# rounds " << r.rounds << ", added " << r.added_rules().size() << '\n' << io::serialize(r.polygraph);
  return exit_ok;
}

int cmd_squier(const std::string& src, const Options& o) {
  Source s = load(src);
  print_polygraph(squier_completion(s.poly->two(), o.budget), o);
  return exit_ok;
}

int cmd_hc(const std::string& src, const Options& o) {
  Source s = load(src);
  CompletionOptions opt;
  opt.step_budget = o.budget;
  HomotopicalCompletion h = homotopical_completion(s.poly->two(), order_of(o, s), opt);
  print_polygraph(h.polygraph, o);
  return exit_ok;
}

std::pair<std::string, std::string> split_pair(const std::string& s, const char* flag) {
  auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == s.size())
    throw error(errc::bad_parameter, std::string(flag) + " expects A=B, got '" + s + "'");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

/// Γ3 pairs collapse a cell with a rule, Γ2 pairs a rule with a generator and
/// every Γ4 cell is removed along a sphere found among the critical triple
/// branchings.  Collapsed items are ranked in the order given, above the rest.
int cmd_reduce(const std::string& src, const std::vector<std::string>& g4, const std::vector<std::string>& g3,
               const std::vector<std::string>& g2, const Options& o) {
  Source s = load(src);
  const ThreeOnePolygraph& x = *s.poly;
  CollapsiblePart g;
  long k = 0;
  for (const auto& c : g4) g.cell_rank[c] = ++k;
  for (const auto& p : g3) {
    auto [cell, rule] = split_pair(p, "--gamma3");
    g.cells.push_back({cell, rule});
    g.rule_rank[rule] = ++k;
  }
  for (const auto& p : g2) {
    auto [rule, gen] = split_pair(p, "--gamma2");
    g.rules.push_back({rule, gen});
    g.generator_rank[gen] = ++k;
  }
  for (const ThreeCell& c : x.cells()) g.cell_rank.emplace(c.label, 0);
  if (!g4.empty()) {
    std::vector<Word> sources;
    std::set<Word> seen;
    for (const auto& t : critical_triple_branchings(x.two()))
      if (seen.insert(t.source).second) sources.push_back(t.source);
    const std::set<std::string> targets(g4.begin(), g4.end());
    auto found = find_spheres(x, sources, g.cell_rank, targets);
    for (const auto& c : g4) {
      auto it = found.find(c);
      if (it == found.end()) throw error(errc::sphere_check_failed, "no sphere found for " + c);
      g.spheres.push_back({c, it->second});
    }
  }
  print_polygraph(homotopical_reduce(x, g), o);
  return exit_ok;
}

int cmd_garside(const std::string& which, const std::string& src, const Options& o) {
  const Source s = load(src);
  const garside::GarsideDatum& d = need_datum(s);
  if (which == "gar2") print_polygraph(ThreeOnePolygraph(garside::gar2(d)), o);
  if (which == "ugar2") print_polygraph(ThreeOnePolygraph(garside::underline_gar2(d)), o);
  if (which == "gar3") print_polygraph(garside::gar3(d), o);
  if (which == "ugar3") print_polygraph(garside::underline_gar3(d), o);
  return exit_ok;
}

int cmd_reduce_gar3(const std::string& src, const Options& o) {
  Source s = load(src);
  garside::Gar3Reduction r = garside::reduce_to_gar3(need_datum(s));
  std::map<std::string, std::size_t> fam;
  for (const ThreeCell& c : r.underline.cells()) ++fam[c.family];
  std::cout << "# underline cells " << r.underline.cells().size() << ":";
  for (const auto& f : family_names)
    if (fam.count(f)) std::cout << ' ' << f << '=' << fam[f];
  std::cout << "\n# collapsed with beta rules " << r.collapsible.cells.size() << ", fixed spheres "
            << r.template_spheres << ", searched spheres " << r.searched_spheres << ", uncertified "
            << r.uncertified.size() << "\n# matches gar3 " << (r.matches_gar3 ? "yes" : "no") << '\n';
  for (const auto& w : r.warnings) std::cout << "# warning: " << w << '\n';
  print_polygraph(r.result, o);
  return r.matches_gar3 && r.uncertified.empty() ? exit_ok : exit_invalid;
}

int cmd_catalog(const std::string& name, std::optional<std::size_t> n, const Options& o) {
  Source s = from_catalog(name, n);
  if (s.datum)
    std::cout << io::serialize(*s.datum);
  else
    print_polygraph(*s.poly, o);
  return exit_ok;
}

int cmd_render(const std::string& src, const std::string& cell) {
  Source s = load(src);
  const ThreeOnePolygraph& x = *s.poly;
  if (!cell.empty())
    std::cout << dot::render_cell(x, x.cell(cell));
  else if (x.cells().empty())
    std::cout << dot::render_branchings(x.two());
  else
    std::cout << dot::render_cells(x);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyrw: string rewriting, coherent presentations and Garside families"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--order", o.order, "deglex[:<a,b,...>] (ascending) or divlex");
  app.add_option("--budget", o.budget, "rewriting step budget per normalisation");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "dot"}));
  app.add_option("--strategy", o.strategy, "normalisation strategy")->check(CLI::IsMember({"leftmost", "rightmost"}));

  std::string src, cell, cat_name;
  std::vector<std::string> words, g4, g3, g2;
  std::optional<std::size_t> cat_n;
  bool show_path = false;
  int rc = exit_ok;
  std::function<int()> run;

  auto with_source = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("source", src, "file, '-' for stdin, or catalog:<name>[:<n>]")->required();
    return c;
  };

  with_source("check", "validate a presentation (termination, confluence) or a datum")->callback([&] {
    run = [&] { return cmd_check(src, o); };
  });
  auto* norm = with_source("normalize", "normal form of a word");
  norm->add_option("word", words, "generator names, '1' for the empty word")->required();
  norm->add_flag("--path", show_path, "also print the rewriting path");
  norm->callback([&] { run = [&] { return cmd_normalize(src, words, show_path, o); }; });
  with_source("branchings", "critical branchings and how they join")->callback([&] {
    run = [&] { return cmd_branchings(src, o); };
  });
  with_source("complete", "Knuth-Bendix completion")->callback([&] { run = [&] { return cmd_complete(src, o); }; });
  with_source("squier", "one 3-cell per critical branching")->callback([&] {
    run = [&] { return cmd_squier(src, o); };
  });
  with_source("hc", "homotopical completion: Knuth-Bendix then Squier")->callback([&] {
    run = [&] { return cmd_hc(src, o); };
  });
  auto* red = with_source("reduce", "homotopical reduction along a collapsible part");
  red->add_option("--gamma4", g4, "remove CELL along a sphere found automatically");
  red->add_option("--gamma3", g3, "CELL=RULE, collapse a cell with a rule");
  red->add_option("--gamma2", g2, "RULE=GEN, collapse a rule with a generator");
  red->callback([&] { run = [&] { return cmd_reduce(src, g4, g3, g2, o); }; });
  for (const char* g : {"gar2", "gar3", "ugar2", "ugar3"}) {
    const std::string which = g;
    with_source(g, "Garside presentation of a datum")->callback([&, which] {
      run = [&, which] { return cmd_garside(which, src, o); };
    });
  }
  with_source("reduce-gar3", "reduce underline_gar3 to gar3 and report")->callback([&] {
    run = [&] { return cmd_reduce_gar3(src, o); };
  });
  auto* cat = app.add_subcommand("catalog", "print a built-in example");
  cat->add_option("name", cat_name)->required();
  cat->add_option("n", cat_n, "size parameter");
  cat->callback([&] { run = [&] { return cmd_catalog(cat_name, cat_n, o); }; });
  auto* ren = with_source("render", "DOT drawing of the cells (or branchings)");
  ren->add_option("--cell", cell, "only this cell");
  ren->callback([&] { run = [&] { return cmd_render(src, cell); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_parse;
  }
  try {
    rc = run();
  } catch (const parse_error& e) {
    std::cerr << "polyrw: " << e.what() << '\n';
    return exit_parse;
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "polyrw: " << e.what() << '\n';
    return exit_invalid;
  }
  return rc;
}
