#ifndef REGCONE_FREEGROUP_HPP
#define REGCONE_FREEGROUP_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "regcone/automaton.hpp"

namespace regcone {

// Raised when a bounded witness search runs out of budget. Distinct from a
// negative answer: it means "could not conclude", never "no".
struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A symbol set closed under a formal-inverse involution. By convention the
// inverse of generator g is the token g^, and generator names themselves
// never end in '^'.
class GroupAlphabet {
 public:
  // Builds the full alphabet g0 g0^ g1 g1^ ... from the generator list.
  explicit GroupAlphabet(std::vector<std::string> generators);

  // Accepts any alphabet whose symbols pair up completely under the g/g^
  // convention, in whatever order the file declared them.
  static GroupAlphabet from_full_alphabet(const Alphabet& full);

  const Alphabet& full() const { return full_; }
  std::size_t rank() const { return generators_.size(); }

  SymbolId inverse(SymbolId s) const { return inverse_.at(s); }
  bool is_generator(SymbolId s) const { return is_generator_.at(s); }
  // Full-alphabet id of the i-th generator.
  SymbolId generator(std::size_t i) const { return generators_.at(i); }
  // Index of the generator underlying s (same for g and g^).
  std::size_t generator_index(SymbolId s) const { return generator_index_.at(s); }

  bool operator==(const GroupAlphabet& o) const { return full_ == o.full_; }

 private:
  GroupAlphabet() : full_({}) {}
  Alphabet full_;
  std::vector<SymbolId> inverse_;
  std::vector<char> is_generator_;
  std::vector<std::size_t> generator_index_;
  std::vector<SymbolId> generators_;
};

// Iterated cancellation of adjacent x x^ pairs; the result is the unique
// freely reduced form.
Word free_reduce_word(const GroupAlphabet& ga, const Word& w);

// Reverse and apply the involution letterwise.
Word word_inverse(const GroupAlphabet& ga, const Word& w);

// A free-group element, stored as its freely reduced word. Equality is word
// equality of the normal forms.
class GroupElement {
 public:
  GroupElement() = default;  // identity
  static GroupElement reduce(const GroupAlphabet& ga, const Word& w);
  // Validates that w is already freely reduced.
  static GroupElement from_reduced(const GroupAlphabet& ga, Word w);

  const Word& word() const { return word_; }
  bool is_identity() const { return word_.empty(); }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  explicit GroupElement(Word w) : word_(std::move(w)) {}
  Word word_;
};

GroupElement elem_inverse(const GroupAlphabet& ga, const GroupElement& g);
GroupElement elem_mul(const GroupAlphabet& ga, const GroupElement& g, const GroupElement& h);

// Accepts exactly the freely reduced words over the full alphabet.
Automaton reduced_universe(const GroupAlphabet& ga);

// Benois saturation: the input automaton plus every epsilon move (p, q)
// justified by a word that freely reduces to the empty word along a p->q
// path. Each added move remembers its derivation so that accepted reduced
// words can be expanded back into concrete words of the original language.
struct SaturationTrace {
  struct EpsEdge {
    State from = 0;
    State to = 0;
    bool original = false;
    // Derived edges record from -sym-> mid_from, an eps path mid_from..mid_to
    // given by earlier edge ids in `via`, then mid_to -inv_sym-> to.
    SymbolId sym = 0;
    SymbolId inv_sym = 0;
    State mid_from = 0;
    State mid_to = 0;
    std::vector<std::uint32_t> via;
  };

  // One concrete automaton move: a letter transition or an original epsilon.
  struct PathStep {
    bool is_letter = false;
    State from = 0;
    SymbolId symbol = 0;
    State to = 0;
  };

  Automaton saturated;
  std::vector<EpsEdge> eps_edges;

  // Expands an eps edge into the original-move path it abbreviates. The word
  // spelled by the letters of that path freely reduces to the empty word.
  void expand_edge(std::uint32_t edge_id, std::vector<PathStep>& out,
                   std::size_t step_cap) const;
};

SaturationTrace benois_saturate(const GroupAlphabet& ga, const Automaton& a);

// An automaton certified to accept only freely reduced words: the canonical
// representation of a rational subset of the free group.
class ReducedLang {
 public:
  // Verifies L(aut) contains no reducible word; throws std::invalid_argument
  // otherwise.
  static ReducedLang certify(GroupAlphabet ga, Automaton aut);

  const GroupAlphabet& group_alphabet() const { return ga_; }
  const Automaton& automaton() const { return aut_; }

 private:
  ReducedLang(GroupAlphabet ga, Automaton aut) : ga_(std::move(ga)), aut_(std::move(aut)) {}
  GroupAlphabet ga_;
  Automaton aut_;
};

// Accepts exactly { free_reduce(w) : w in L(a) }.
ReducedLang benois_reduce(const GroupAlphabet& ga, const Automaton& a);

ReducedLang reduced_universe_lang(const GroupAlphabet& ga);

// Effective boolean algebra on rational subsets, valid because reduced words
// are unique normal forms. Complement is always relative to the reduced
// universe.
ReducedLang rs_inverse(const ReducedLang& s);
ReducedLang rs_product(const ReducedLang& s, const ReducedLang& t);
ReducedLang rs_union(const ReducedLang& s, const ReducedLang& t);
ReducedLang rs_intersect(const ReducedLang& s, const ReducedLang& t);
ReducedLang rs_complement(const ReducedLang& s);
bool rs_subset(const ReducedLang& s, const ReducedLang& t);
bool rs_equal(const ReducedLang& s, const ReducedLang& t);

bool element_in(const ReducedLang& s, const GroupElement& g);

// Alphabet change: each generator of `src` is sent to a word over the full
// alphabet of `dst`; inverses follow automatically. The image represents the
// same subset whenever the assignment respects the evaluation maps, which is
// the caller's responsibility.
Automaton translate(const GroupAlphabet& src, const Automaton& a, const GroupAlphabet& dst,
                    const std::vector<Word>& generator_images);

// A word of L(a) that freely reduces to g, together with the original-move
// path realizing it, or nullopt when g is not represented. Deterministic.
struct RetrievedWord {
  Word word;
  std::vector<SaturationTrace::PathStep> path;
};
std::optional<RetrievedWord> find_word_reducing_to(const GroupAlphabet& ga, const Automaton& a,
                                                   const SaturationTrace& trace,
                                                   const GroupElement& g,
                                                   std::size_t step_cap = 1u << 20);

}  // namespace regcone

#endif
