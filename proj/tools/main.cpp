// Command-line front end: automaton algebra, free-reduction, cone checking,
// graph-product geodesics, and the Z^2 example, over the shared text formats.
//
// Exit codes: 0 success / IsCone / true / equal, 1 NotCone / false /
// not-equal, 2 input error, 3 inconclusive.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "regcone/automaton_io.hpp"
#include "regcone/conecheck.hpp"
#include "regcone/freegroup.hpp"
#include "regcone/graphprod.hpp"
#include "regcone/orders.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kInconclusive = 3;

std::string show_word(const regcone::Alphabet& alphabet, const regcone::Word& w) {
  if (w.empty()) return "(epsilon)";
  return regcone::format_word(alphabet, w);
}

int run(int argc, char** argv) {
  using namespace regcone;

  CLI::App app{"regular-language toolkit for group alphabets"};
  app.require_subcommand(1);

  // reduce
  std::string in_path, in_path_b, out_path;
  auto* reduce = app.add_subcommand("reduce", "write the freely reduced image of a language");
  reduce->add_option("input", in_path, "automaton file")->required();
  reduce->add_option("output", out_path, "output automaton file")->required();

  // cone-check
  auto* cone = app.add_subcommand("cone-check", "decide the positive cone axioms");
  cone->add_option("input", in_path, "automaton file")->required();

  // refute
  std::size_t ball = 3, tmax = 6;
  auto* refute = app.add_subcommand("refute", "search for a pumping-style certificate");
  refute->add_option("input", in_path, "automaton file")->required();
  refute->add_option("--ball", ball, "dominance ball radius bound")->capture_default_str();
  refute->add_option("--tmax", tmax, "conjugator length bound")->capture_default_str();

  // z2-verify
  long long radius = 4;
  auto* z2v = app.add_subcommand("z2-verify", "compare a language against the lexicographic cone");
  z2v->add_option("input", in_path, "automaton file")->required();
  z2v->add_option("--radius", radius, "lattice box radius")->capture_default_str();

  // geo
  std::string graph_path, word_text, vt, vu, xname, yname;
  auto* geo = app.add_subcommand("geo", "graph-product geodesic operations");
  geo->require_subcommand(1);
  auto* geo_check = geo->add_subcommand("check", "is the word geodesic?");
  geo_check->add_option("graph", graph_path, "graph file")->required();
  geo_check->add_option("word", word_text, "word, space-separated in one argument")->required();
  auto* geo_build = geo->add_subcommand("build", "write the automaton of all geodesics");
  geo_build->add_option("graph", graph_path, "graph file")->required();
  geo_build->add_option("output", out_path, "output automaton file")->required();
  auto* geo_wit = geo->add_subcommand("witness", "conjugate witness pair over a geodesic");
  geo_wit->add_option("graph", graph_path, "graph file")->required();
  geo_wit->add_option("word", word_text, "geodesic word")->required();
  geo_wit->add_option("t", vt, "first vertex")->required();
  geo_wit->add_option("u", vu, "second vertex")->required();
  geo_wit->add_option("x", xname, "letter of t")->required();
  geo_wit->add_option("y", yname, "letter of u")->required();

  // generic automaton algebra
  auto* op_and = app.add_subcommand("and", "intersection");
  auto* op_or = app.add_subcommand("or", "union");
  auto* op_cat = app.add_subcommand("cat", "concatenation");
  for (auto* op : {op_and, op_or, op_cat}) {
    op->add_option("a", in_path, "automaton file")->required();
    op->add_option("b", in_path_b, "automaton file")->required();
    op->add_option("output", out_path, "output automaton file")->required();
  }
  std::string universe_path;
  auto* op_not = app.add_subcommand("not", "complement over all words");
  op_not->add_option("--universe", universe_path, "intersect the complement with this language");
  auto* op_star = app.add_subcommand("star", "Kleene star");
  auto* op_rev = app.add_subcommand("rev", "reversal");
  auto* op_pref = app.add_subcommand("pref", "prefix closure");
  for (auto* op : {op_not, op_star, op_rev, op_pref}) {
    op->add_option("a", in_path, "automaton file")->required();
    op->add_option("output", out_path, "output automaton file")->required();
  }
  auto* op_eq = app.add_subcommand("eq", "language equivalence");
  op_eq->add_option("a", in_path, "automaton file")->required();
  op_eq->add_option("b", in_path_b, "automaton file")->required();
  std::size_t max_len = 0;
  auto* op_enum = app.add_subcommand("enum", "accepted words up to a length, shortlex");
  op_enum->add_option("a", in_path, "automaton file")->required();
  op_enum->add_option("maxlen", max_len, "length bound")->required();

  CLI11_PARSE(app, argc, argv);

  if (reduce->parsed()) {
    Automaton a = parse_automaton_file(in_path);
    GroupAlphabet ga = GroupAlphabet::from_full_alphabet(a.alphabet());
    ReducedLang r = benois_reduce(ga, a);
    write_automaton_file(out_path, r.automaton());
    std::cout << "states: " << r.automaton().state_count() << '\n';
    auto w = shortest_word(r.automaton());
    if (w) {
      std::cout << "shortest: " << show_word(ga.full(), *w) << '\n';
    } else {
      std::cout << "empty\n";
    }
    return kOk;
  }

  if (cone->parsed()) {
    Automaton a = parse_automaton_file(in_path);
    GroupAlphabet ga = GroupAlphabet::from_full_alphabet(a.alphabet());
    ConeVerdict verdict = check_cone_axioms(ga, a);
    write_verdict(std::cout, ga, verdict);
    return verdict.status == ConeStatus::IsCone ? kOk : kNegative;
  }

  if (refute->parsed()) {
    Automaton a = parse_automaton_file(in_path);
    GroupAlphabet ga = GroupAlphabet::from_full_alphabet(a.alphabet());
    RefuteConfig cfg{ball, tmax};
    auto verdict = pumping_witness(ga, a, cfg);
    if (!verdict) {
      std::cout << "inconclusive\n";
      return kInconclusive;
    }
    write_verdict(std::cout, ga, *verdict);
    return kNegative;
  }

  if (z2v->parsed()) {
    Automaton a = parse_automaton_file(in_path);
    Z2VerifyResult res = z2_bounded_verify(a, radius);
    if (res.ok) {
      std::cout << "pass\n";
      return kOk;
    }
    std::cout << "fail at: " << res.counterexample.x << ' ' << res.counterexample.y << '\n';
    return kNegative;
  }

  if (geo->parsed()) {
    GraphPresentation gp = GraphPresentation::parse_file(graph_path);
    if (geo_check->parsed()) {
      Word w = parse_word(gp.combined_alphabet(), word_text);
      bool ok = is_geodesic(gp, w);
      std::cout << (ok ? "true" : "false") << '\n';
      return ok ? kOk : kNegative;
    }
    if (geo_build->parsed()) {
      Automaton g = geo_automaton(gp);
      write_automaton_file(out_path, g);
      std::cout << "states: " << g.state_count() << '\n';
      return kOk;
    }
    Word w = parse_word(gp.combined_alphabet(), word_text);
    std::size_t t = gp.vertex_index(vt);
    std::size_t u = gp.vertex_index(vu);
    SymbolId x = gp.combined_alphabet().require(xname);
    SymbolId y = gp.combined_alphabet().require(yname);
    auto [plus, minus] = conjugate_witness_pair(gp, w, t, u, x, y);
    std::cout << "witness: " << show_word(gp.combined_alphabet(), plus) << '\n';
    std::cout << "witness: " << show_word(gp.combined_alphabet(), minus) << '\n';
    std::cout << "geodesic: " << (is_geodesic(gp, plus) ? "true" : "false") << ' '
              << (is_geodesic(gp, minus) ? "true" : "false") << '\n';
    return kOk;
  }

  auto write_result = [&](const Automaton& a) {
    write_automaton_file(out_path, a);
    std::cout << "states: " << a.state_count() << '\n';
    return kOk;
  };
  if (op_and->parsed()) {
    return write_result(intersect(parse_automaton_file(in_path), parse_automaton_file(in_path_b)));
  }
  if (op_or->parsed()) {
    return write_result(
        union_langs(parse_automaton_file(in_path), parse_automaton_file(in_path_b)));
  }
  if (op_cat->parsed()) {
    return write_result(concat(parse_automaton_file(in_path), parse_automaton_file(in_path_b)));
  }
  if (op_not->parsed()) {
    Automaton a = parse_automaton_file(in_path);
    if (universe_path.empty()) return write_result(complement(a));
    return write_result(complement(a, parse_automaton_file(universe_path)));
  }
  if (op_star->parsed()) return write_result(star(parse_automaton_file(in_path)));
  if (op_rev->parsed()) return write_result(reverse(parse_automaton_file(in_path)));
  if (op_pref->parsed()) return write_result(prefix_closure(parse_automaton_file(in_path)));
  if (op_eq->parsed()) {
    bool eq = equivalent(parse_automaton_file(in_path), parse_automaton_file(in_path_b));
    std::cout << (eq ? "equal" : "not-equal") << '\n';
    return eq ? kOk : kNegative;
  }
  if (op_enum->parsed()) {
    Automaton a = parse_automaton_file(in_path);
    for (const Word& w : enumerate_words(a, max_len)) {
      std::cout << show_word(a.alphabet(), w) << '\n';
    }
    return kOk;
  }
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const regcone::SearchExhausted& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const regcone::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInputError;
  }
}
