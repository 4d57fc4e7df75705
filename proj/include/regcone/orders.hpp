#ifndef REGCONE_ORDERS_HPP
#define REGCONE_ORDERS_HPP

#include <cstdint>

#include "regcone/freegroup.hpp"

namespace regcone {

enum class Ordering { Less, Equal, Greater };

// Comparison backed by a claimed cone; Inconsistent signals that the backing
// language is not actually a cone (both or neither direction positive).
enum class OrderResult { Less, Equal, Greater, Inconsistent };

struct Z2 {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const Z2&, const Z2&) = default;
};

// Lexicographic order on Z^2: h exceeds g iff h - g = (n, m) with n >= 1, or
// n = 0 and m >= 1.
Ordering z2_lex_compare(Z2 g, Z2 h);

GroupAlphabet z2_group_alphabet();  // generators x, y

// The cone language of the lexicographic order on Z^2 over x x^ y y^:
// x^n y^m with n >= 1 and m ranging over all integers, plus y^m with m >= 1.
Automaton z2_cone_language();

// Exponent sums (of the first and second generator) of a word over a rank-2
// group alphabet.
Z2 abelianize(const GroupAlphabet& ga, const Word& w);

struct Z2VerifyResult {
  bool ok = true;
  Z2 counterexample;
};

// Checks, for every lattice point with |n|, |m| <= radius, that the point is
// hit by the abelianized image of a exactly when it is lexicographically
// positive. The image is sampled from accepted words of length at most
// 2*radius + 2, which suffices for cone languages shaped like the one above
// but is a heuristic for arbitrary input. Scans points in lexicographic
// order and reports the first failure.
Z2VerifyResult z2_bounded_verify(const Automaton& a, long long radius);

// The left order induced by a claimed positive cone: g < h iff g^-1 h lies
// in the cone. Total and consistent only when the backing language passes
// the cone axioms.
class DerivedOrder {
 public:
  explicit DerivedOrder(ReducedLang cone) : cone_(std::move(cone)) {}
  OrderResult compare(const GroupElement& g, const GroupElement& h) const;
  const ReducedLang& cone() const { return cone_; }

 private:
  ReducedLang cone_;
};

}  // namespace regcone

#endif
