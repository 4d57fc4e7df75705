#ifndef REGCONE_CONECHECK_HPP
#define REGCONE_CONECHECK_HPP

#include <iosfwd>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "regcone/freegroup.hpp"

namespace regcone {

enum class ConeStatus { IsCone, NotCone };

enum class ConeViolation {
  None,
  IdentityInCone,    // witness: one accepted word reducing to the identity
  DisjointnessFail,  // witnesses: two accepted words with mutually inverse reductions
  TotalityFail,      // witness: one reduced word in neither the image nor its inverses
  SemigroupFail,     // witnesses: two accepted words whose product leaves the image
};

// Result of the cone-axiom checker. Every witness is a plain word that can
// be re-checked with free reduction and membership tests alone.
struct ConeVerdict {
  ConeStatus status = ConeStatus::IsCone;
  ConeViolation violation = ConeViolation::None;
  std::vector<Word> witnesses;

  static ConeVerdict cone() { return {}; }
  static ConeVerdict violated(ConeViolation v, std::vector<Word> ws) {
    return {ConeStatus::NotCone, v, std::move(ws)};
  }
};

const char* to_string(ConeViolation v);

// Line format: "verdict: ...", then for NotCone "violation: ..." and one
// "witness: ..." line per witness word.
void write_verdict(std::ostream& out, const GroupAlphabet& ga, const ConeVerdict& verdict);

// Independent re-check of a NotCone verdict against the original automaton,
// using only free reduction, acceptance, and reduced-language membership.
bool verify_verdict(const GroupAlphabet& ga, const Automaton& a, const ConeVerdict& verdict);

// Decides whether L(a) represents a positive cone of the free group on the
// given alphabet. Checks run in a fixed order — identity, disjointness,
// totality, subsemigroup — and the first failure is reported with a
// shortlex-least underlying witness element, so verdicts are reproducible.
ConeVerdict check_cone_axioms(const GroupAlphabet& ga, const Automaton& a);

// A free product A * B of two free groups, presented as a partition of the
// generators of one group alphabet into the two factors.
class FreeProductAlphabet {
 public:
  // parts[i] in {0, 1} assigns generator i to factor A or B; both factors
  // must be non-empty.
  FreeProductAlphabet(GroupAlphabet ga, std::vector<int> parts);
  // A = first generator, B = the rest; the default factorization used by the
  // cone procedures (rank >= 2).
  static FreeProductAlphabet split_first_generator(const GroupAlphabet& ga);

  const GroupAlphabet& group_alphabet() const { return ga_; }
  int part_of(SymbolId s) const { return parts_.at(ga_.generator_index(s)); }

 private:
  GroupAlphabet ga_;
  std::vector<int> parts_;
};

// Maximal alternating factor runs of a reduced word: the syllables of the
// free-product element it represents.
struct SyllableSplit {
  std::vector<Word> syllables;  // each a reduced word within one factor
  std::vector<int> parts;       // factor of each syllable
};
SyllableSplit syllables_of(const FreeProductAlphabet& fp, const Word& reduced);

// Names the element g as the partial product a_1 b_1 ... a_i \hat b_i of its
// own reduced factorization: returns (i, include_b). g must be nontrivial.
std::pair<std::size_t, bool> syllable_target(const FreeProductAlphabet& fp, const Word& reduced);

// A prefix of w whose value equals the partial product a_1 b_1 ... a_i
// (include_b false) or a_1 b_1 ... a_i b_i (include_b true) of the reduced
// factorization of w's value. Works by evaluating the maximal A/B blocks of
// w, merging away trivial blocks, and cutting w at the block boundary that
// completes the requested syllable. 1 <= i <= pair count.
Word prefix_for_element(const FreeProductAlphabet& fp, const Word& w, std::size_t i,
                        bool include_b);

// One step of the coverage argument: pick a letter extending g's syllable
// length, test the two conjugates g x g^-1 and g x^-1 g^-1 against the
// represented set, and either cut a prefix representing g out of a word for
// the positive conjugate, or surface the axiom violation the test exposed.
std::variant<Word, ConeVerdict> cover_by_prefixes(const GroupAlphabet& ga, const Automaton& a,
                                                  const GroupElement& g);

struct RefuteConfig {
  std::size_t max_ball_radius = 3;      // stand-in for the radius-(k-1) ball
  std::size_t max_t_search_length = 6;  // bound on conjugator length in the t search
};

// Constructive refutation in the style of the unboundedness argument: search
// for a positive conjugate t dominating a ball, walk a prefix representing
// t^-1, pump a short completion, and return the inverse pair this produces.
// Any order inconsistency met along the way becomes an immediate verdict.
// nullopt means the search bounds were exhausted; check_cone_axioms remains
// the authoritative decision.
std::optional<ConeVerdict> pumping_witness(const GroupAlphabet& ga, const Automaton& a,
                                           const RefuteConfig& cfg);

// L(a), the empty word, and the formal inverses of L(a): a language
// representing the whole group whenever a represents a positive cone.
Automaton cone_to_full_language(const GroupAlphabet& ga, const Automaton& a);

}  // namespace regcone

#endif
