#include "regcone/orders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace regcone {

Ordering z2_lex_compare(Z2 g, Z2 h) {
  long long n = h.x - g.x;
  long long m = h.y - g.y;
  if (n == 0 && m == 0) return Ordering::Equal;
  if (n >= 1 || (n == 0 && m >= 1)) return Ordering::Less;
  return Ordering::Greater;
}

GroupAlphabet z2_group_alphabet() { return GroupAlphabet({"x", "y"}); }

Automaton z2_cone_language() {
  GroupAlphabet ga = z2_group_alphabet();
  SymbolId x = ga.generator(0);
  SymbolId y = ga.generator(1), yinv = ga.inverse(y);
  // 0: initial, 1: reading x's, 2: y's after x, 3: y^'s after x, 4: bare y's
  std::vector<Transition> trans = {
      {0, x, 1}, {1, x, 1}, {1, y, 2},    {2, y, 2},
      {1, yinv, 3}, {3, yinv, 3}, {0, y, 4}, {4, y, 4},
  };
  return Automaton(ga.full(), 5, {0}, {1, 2, 3, 4}, std::move(trans));
}

Z2 abelianize(const GroupAlphabet& ga, const Word& w) {
  if (ga.rank() != 2) throw std::invalid_argument("abelianize expects a rank-2 alphabet");
  Z2 sums;
  for (SymbolId s : w) {
    long long delta = ga.is_generator(s) ? 1 : -1;
    if (ga.generator_index(s) == 0) {
      sums.x += delta;
    } else {
      sums.y += delta;
    }
  }
  return sums;
}

namespace {

// Canonical word x^n y^m for a lattice point, with negative exponents spelled
// by inverse letters. Scanning points in shortlex order of these words makes
// the reported counterexample reproducible.
Word canonical_z2_word(const GroupAlphabet& ga, long long n, long long m) {
  Word w;
  SymbolId x = n >= 0 ? ga.generator(0) : ga.inverse(ga.generator(0));
  SymbolId y = m >= 0 ? ga.generator(1) : ga.inverse(ga.generator(1));
  for (long long i = 0; i < (n < 0 ? -n : n); ++i) w.push_back(x);
  for (long long i = 0; i < (m < 0 ? -m : m); ++i) w.push_back(y);
  return w;
}

}  // namespace

Z2VerifyResult z2_bounded_verify(const Automaton& a, long long radius) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  GroupAlphabet ga = GroupAlphabet::from_full_alphabet(a.alphabet());
  if (ga.rank() != 2) throw std::invalid_argument("expected a rank-2 group alphabet");

  std::set<std::pair<long long, long long>> image;
  std::size_t max_len = static_cast<std::size_t>(2 * radius + 2);
  for (const Word& w : enumerate_words(a, max_len)) {
    Z2 p = abelianize(ga, w);
    image.insert({p.x, p.y});
  }

  std::vector<std::pair<Word, Z2>> points;
  for (long long n = -radius; n <= radius; ++n) {
    for (long long m = -radius; m <= radius; ++m) {
      points.emplace_back(canonical_z2_word(ga, n, m), Z2{n, m});
    }
  }
  std::sort(points.begin(), points.end(),
            [](const auto& a2, const auto& b2) { return shortlex_less(a2.first, b2.first); });

  for (const auto& [word, p] : points) {
    bool in_image = image.count({p.x, p.y}) > 0;
    bool positive = z2_lex_compare(Z2{0, 0}, p) == Ordering::Less;
    if (in_image != positive) {
      return {false, p};
    }
  }
  return {true, {}};
}

OrderResult DerivedOrder::compare(const GroupElement& g, const GroupElement& h) const {
  if (g == h) return OrderResult::Equal;
  const GroupAlphabet& ga = cone_.group_alphabet();
  GroupElement diff = elem_mul(ga, elem_inverse(ga, g), h);
  bool less = element_in(cone_, diff);
  bool greater = element_in(cone_, elem_inverse(ga, diff));
  if (less && !greater) return OrderResult::Less;
  if (greater && !less) return OrderResult::Greater;
  return OrderResult::Inconsistent;
}

}  // namespace regcone
