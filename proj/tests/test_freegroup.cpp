#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "regcone/freegroup.hpp"
#include "test_util.hpp"

using namespace regcone;
using testutil::bounded_reduction_image;
using testutil::random_automaton;
using testutil::random_word;

namespace {

GroupAlphabet f2() { return GroupAlphabet({"x", "y"}); }

Word w(const GroupAlphabet& ga, const std::string& text) { return parse_word(ga.full(), text); }

std::set<Word> word_set(const std::vector<Word>& ws) { return {ws.begin(), ws.end()}; }

// x (y y^)* x
Automaton x_noise_x(const GroupAlphabet& ga) {
  SymbolId x = ga.generator(0), y = ga.generator(1);
  return Automaton(ga.full(), 4, {0}, {3},
                   {{0, x, 1}, {1, y, 2}, {2, ga.inverse(y), 1}, {1, x, 3}});
}

ReducedLang random_reduced(std::mt19937& rng, const GroupAlphabet& ga) {
  return benois_reduce(ga, random_automaton(rng, ga.full(), 4));
}

}  // namespace

TEST_CASE("group alphabet construction and validation") {
  GroupAlphabet ga = f2();
  CHECK(ga.rank() == 2);
  CHECK(ga.full().symbols() == std::vector<std::string>{"x", "x^", "y", "y^"});
  CHECK(ga.inverse(ga.generator(0)) == ga.full().require("x^"));
  CHECK(ga.inverse(ga.full().require("x^")) == ga.generator(0));

  CHECK_THROWS_AS(GroupAlphabet({"x^"}), std::invalid_argument);
  CHECK_THROWS_AS(GroupAlphabet::from_full_alphabet(Alphabet({"x", "y", "y^"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(GroupAlphabet::from_full_alphabet(Alphabet({"x", "x^", "x^^"})),
                  std::invalid_argument);
  // Pairing in any declared order is fine.
  GroupAlphabet scrambled = GroupAlphabet::from_full_alphabet(Alphabet({"y^", "x", "y", "x^"}));
  CHECK(scrambled.rank() == 2);
  CHECK(scrambled.inverse(scrambled.full().require("y^")) == scrambled.full().require("y"));
}

TEST_CASE("free reduction") {
  GroupAlphabet ga = f2();
  CHECK(free_reduce_word(ga, w(ga, "x x^ y")) == w(ga, "y"));
  CHECK(free_reduce_word(ga, w(ga, "x y y^ x^")).empty());

  // Confluence: every cancellation order agrees with the stack result.
  Word tricky = w(ga, "x y x^ x y^");
  auto all = testutil::all_cancellation_results(ga, tricky);
  REQUIRE(all.size() == 1);
  CHECK(*all.begin() == w(ga, "x"));
  CHECK(free_reduce_word(ga, tricky) == w(ga, "x"));

  std::mt19937 rng(8201);
  for (int i = 0; i < 50; ++i) {
    Word rw = random_word(rng, ga.full(), 10);
    Word red = free_reduce_word(ga, rw);
    CHECK(free_reduce_word(ga, red) == red);
    CHECK(red.size() <= rw.size());
    auto oracle = testutil::all_cancellation_results(ga, rw);
    REQUIRE(oracle.size() == 1);
    CHECK(*oracle.begin() == red);
  }
}

TEST_CASE("word and element inverses") {
  GroupAlphabet ga = f2();
  CHECK(word_inverse(ga, w(ga, "x y")) == w(ga, "y^ x^"));
  CHECK(word_inverse(ga, {}).empty());

  std::mt19937 rng(8202);
  for (int i = 0; i < 40; ++i) {
    GroupElement g = GroupElement::reduce(ga, random_word(rng, ga.full(), 8));
    CHECK(elem_inverse(ga, elem_inverse(ga, g)) == g);
    CHECK(elem_mul(ga, g, elem_inverse(ga, g)).is_identity());
  }
}

TEST_CASE("every word times its inverse reduces to the identity, exhaustively") {
  GroupAlphabet ga = f2();
  Automaton all = Automaton::all_words(ga.full());
  walk_words(all, 6, [&](const Word& word, bool) {
    Word probe = word;
    Word inv = word_inverse(ga, word);
    probe.insert(probe.end(), inv.begin(), inv.end());
    CHECK(free_reduce_word(ga, probe).empty());
  });
}

TEST_CASE("reduced universe") {
  GroupAlphabet ga = f2();
  Automaton ru = reduced_universe(ga);
  CHECK(accepts(ru, w(ga, "x y x^")));
  CHECK_FALSE(accepts(ru, w(ga, "x x^")));

  // 1, 4, 12, 36 reduced words at lengths 0..3: 4 * 3^(n-1).
  std::vector<std::size_t> counts(4, 0);
  for (const Word& word : enumerate_words(ru, 3)) ++counts[word.size()];
  CHECK(counts == std::vector<std::size_t>{1, 4, 12, 36});
}

TEST_CASE("benois reduction examples") {
  GroupAlphabet ga = f2();

  ReducedLang one = benois_reduce(ga, Automaton::single_word(ga.full(), w(ga, "x x^ y")));
  CHECK(equivalent(one.automaton(), Automaton::single_word(ga.full(), w(ga, "y"))));

  // (x x^)* reduces to the identity alone.
  Automaton pump(ga.full(), 2, {0}, {0}, {{0, ga.generator(0), 1}, {1, ga.inverse(ga.generator(0)), 0}});
  ReducedLang pumped = benois_reduce(ga, pump);
  CHECK(equivalent(pumped.automaton(), Automaton::epsilon_only(ga.full())));

  ReducedLang xx = benois_reduce(ga, x_noise_x(ga));
  CHECK(equivalent(xx.automaton(), Automaton::single_word(ga.full(), w(ga, "x x"))));
  // Enumeration oracle: reduce every accepted word of length <= 8.
  std::set<Word> expected;
  for (const Word& word : enumerate_words(x_noise_x(ga), 8)) {
    expected.insert(free_reduce_word(ga, word));
  }
  CHECK(word_set(enumerate_words(xx.automaton(), 8)) == expected);
}

TEST_CASE("benois reduction against the bounded oracle") {
  GroupAlphabet ga = f2();
  std::mt19937 rng(8203);
  for (int round = 0; round < 20; ++round) {
    Automaton a = random_automaton(rng, ga.full(), 3);
    ReducedLang reduced = benois_reduce(ga, a);
    std::size_t word_bound = 10 + 2 * a.state_count();
    std::set<Word> oracle = bounded_reduction_image(ga, a, word_bound, 4);
    std::set<Word> got;
    for (const Word& word : enumerate_words(reduced.automaton(), 4)) got.insert(word);
    CHECK(got == oracle);
  }
}

TEST_CASE("benois reduction is a closure") {
  GroupAlphabet ga = f2();
  std::mt19937 rng(8204);
  for (int round = 0; round < 10; ++round) {
    ReducedLang s = random_reduced(rng, ga);
    ReducedLang again = benois_reduce(ga, s.automaton());
    CHECK(rs_equal(s, again));
  }
}

TEST_CASE("certification rejects unreduced languages") {
  GroupAlphabet ga = f2();
  CHECK_THROWS_AS(
      ReducedLang::certify(ga, Automaton::single_word(ga.full(), w(ga, "x x^"))),
      std::invalid_argument);
  CHECK_NOTHROW(ReducedLang::certify(ga, Automaton::single_word(ga.full(), w(ga, "x y"))));
}

TEST_CASE("rational subset algebra") {
  GroupAlphabet ga = f2();
  ReducedLang x_lang = ReducedLang::certify(ga, Automaton::single_word(ga.full(), w(ga, "x")));
  ReducedLang xinv_lang =
      ReducedLang::certify(ga, Automaton::single_word(ga.full(), w(ga, "x^")));
  ReducedLang prod = rs_product(x_lang, xinv_lang);
  CHECK(equivalent(prod.automaton(), Automaton::epsilon_only(ga.full())));

  std::mt19937 rng(8205);
  for (int round = 0; round < 8; ++round) {
    ReducedLang s = random_reduced(rng, ga);
    CHECK(rs_equal(rs_inverse(rs_inverse(s)), s));
  }
}

TEST_CASE("intersection of a set with its inverse, by bounded enumeration") {
  GroupAlphabet ga = f2();
  // Reduced words starting with x.
  Automaton ru = reduced_universe(ga);
  Automaton prefix_x = concat(Automaton::single_word(ga.full(), w(ga, "x")),
                              Automaton::all_words(ga.full()));
  ReducedLang starts_x = ReducedLang::certify(ga, trim(intersect(ru, prefix_x)));
  ReducedLang meet = rs_intersect(starts_x, rs_inverse(starts_x));

  CHECK(element_in(meet, GroupElement::reduce(ga, w(ga, "x y x^"))));
  std::set<Word> expected;
  for (const Word& word : enumerate_words(ru, 5)) {
    if (word.size() >= 2 && word.front() == ga.generator(0) &&
        word.back() == ga.inverse(ga.generator(0))) {
      expected.insert(word);
    }
  }
  CHECK(word_set(enumerate_words(meet.automaton(), 5)) == expected);
}

TEST_CASE("element membership") {
  GroupAlphabet ga = f2();
  ReducedLang universe = reduced_universe_lang(ga);
  std::mt19937 rng(8206);
  for (int i = 0; i < 20; ++i) {
    GroupElement g = GroupElement::reduce(ga, random_word(rng, ga.full(), 6));
    CHECK(element_in(universe, g));
  }
  ReducedLang xx = benois_reduce(ga, x_noise_x(ga));
  CHECK(element_in(xx, GroupElement::reduce(ga, w(ga, "x x"))));
  CHECK_FALSE(element_in(xx, GroupElement::reduce(ga, w(ga, "x"))));
}

TEST_CASE("boolean laws on rational subsets") {
  GroupAlphabet ga = f2();
  std::mt19937 rng(8207);
  for (int round = 0; round < 6; ++round) {
    ReducedLang s = random_reduced(rng, ga);
    ReducedLang t = random_reduced(rng, ga);
    ReducedLang u = random_reduced(rng, ga);
    CHECK(rs_equal(rs_complement(rs_complement(s)), s));
    CHECK(rs_equal(rs_complement(rs_union(s, t)),
                   rs_intersect(rs_complement(s), rs_complement(t))));
    CHECK(rs_equal(rs_complement(rs_intersect(s, t)),
                   rs_union(rs_complement(s), rs_complement(t))));
    CHECK(rs_equal(rs_intersect(s, rs_union(t, u)),
                   rs_union(rs_intersect(s, t), rs_intersect(s, u))));
    CHECK(rs_equal(rs_product(rs_product(s, t), u), rs_product(s, rs_product(t, u))));
  }
}

TEST_CASE("translate") {
  GroupAlphabet src({"x"});
  GroupAlphabet dst({"p", "q"});
  Automaton xs(src.full(), 1, {0}, {0}, {{0, src.generator(0), 0}});

  Automaton moved = translate(src, xs, dst, {parse_word(dst.full(), "p q")});
  CHECK(accepts(moved, parse_word(dst.full(), "p q p q")));
  CHECK_FALSE(accepts(moved, parse_word(dst.full(), "p")));

  // The inverse letter goes to the formal inverse of the image.
  Automaton inv_word = translate(src, Automaton::single_word(src.full(), {src.inverse(src.generator(0))}),
                                 dst, {parse_word(dst.full(), "p q")});
  CHECK(equivalent(inv_word, Automaton::single_word(dst.full(), parse_word(dst.full(), "q^ p^"))));

  GroupAlphabet same = f2();
  std::mt19937 rng(8208);
  Automaton a = random_automaton(rng, same.full(), 4);
  Automaton ident = translate(same, a, same,
                              {Word{same.generator(0)}, Word{same.generator(1)}});
  CHECK(equivalent(ident, a));
}

TEST_CASE("word retrieval through the saturation trace") {
  GroupAlphabet ga = f2();
  std::mt19937 rng(8209);
  int retrieved = 0;
  for (int round = 0; round < 15; ++round) {
    Automaton a = random_automaton(rng, ga.full(), 4);
    SaturationTrace trace = benois_saturate(ga, a);
    ReducedLang p = benois_reduce(ga, a);
    for (const Word& target : enumerate_words(p.automaton(), 3)) {
      GroupElement g = GroupElement::from_reduced(ga, target);
      auto rw = find_word_reducing_to(ga, a, trace, g);
      REQUIRE(rw.has_value());
      CHECK(accepts(a, rw->word));
      CHECK(free_reduce_word(ga, rw->word) == target);
      ++retrieved;
    }
    // Elements outside the image are never "retrieved".
    ReducedLang missing = rs_complement(p);
    if (auto mw = shortest_word(missing.automaton())) {
      CHECK_FALSE(
          find_word_reducing_to(ga, a, trace, GroupElement::from_reduced(ga, *mw)).has_value());
    }
  }
  CHECK(retrieved > 10);
}
