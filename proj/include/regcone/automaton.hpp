#ifndef REGCONE_AUTOMATON_HPP
#define REGCONE_AUTOMATON_HPP

#include <compare>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "regcone/alphabet.hpp"

namespace regcone {

struct Transition {
  State from;
  SymbolId symbol;
  State to;
  auto operator<=>(const Transition&) const = default;
};

// Nondeterministic finite acceptor with optional epsilon moves, the carrier
// of every language in this library. Immutable after construction; all
// operations below are pure and return new values, so automata can be shared
// freely across threads.
//
// An automaton with zero states is legal and denotes the empty language.
class Automaton {
 public:
  Automaton(Alphabet alphabet, State state_count, std::vector<State> starts,
            std::vector<State> accepts, std::vector<Transition> transitions,
            std::vector<std::pair<State, State>> epsilons = {});

  static Automaton empty_language(Alphabet alphabet);
  static Automaton epsilon_only(Alphabet alphabet);
  static Automaton single_word(Alphabet alphabet, const Word& word);
  static Automaton all_words(Alphabet alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  State state_count() const { return state_count_; }
  const std::vector<State>& starts() const { return starts_; }
  const std::vector<State>& accepts() const { return accepts_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const std::vector<std::pair<State, State>>& epsilons() const { return epsilons_; }

 private:
  Alphabet alphabet_;
  State state_count_ = 0;
  std::vector<State> starts_;                      // sorted, unique
  std::vector<State> accepts_;                     // sorted, unique
  std::vector<Transition> transitions_;            // sorted, unique
  std::vector<std::pair<State, State>> epsilons_;  // sorted, unique
};

// Membership test; throws std::invalid_argument if the word mentions a
// symbol outside the automaton's alphabet.
bool accepts(const Automaton& a, const Word& w);

// Boolean and rational operations. Binary operations require both arguments
// to share one alphabet.
Automaton union_langs(const Automaton& a, const Automaton& b);
Automaton intersect(const Automaton& a, const Automaton& b);
// Complement relative to all words over the alphabet.
Automaton complement(const Automaton& a);
// Complement relative to all words, then intersected with `universe`.
Automaton complement(const Automaton& a, const Automaton& universe);
Automaton concat(const Automaton& a, const Automaton& b);
Automaton star(const Automaton& a);
Automaton reverse(const Automaton& a);

// Image under the monoid homomorphism sending source symbol s to
// letter_map[s], a word over `target`.
Automaton hom_image(const Automaton& a, const Alphabet& target,
                    const std::vector<Word>& letter_map);

// Preimage: accepts exactly the words w over `source` whose image under the
// induced homomorphism (letter_map[s] is a word over a's alphabet) lies in
// L(a). The result has no epsilon moves.
Automaton hom_preimage(const Automaton& a, const Alphabet& source,
                       const std::vector<Word>& letter_map);

// Accepts exactly the prefixes of accepted words: restricts to accessible
// states and marks every co-accessible state accepting.
Automaton prefix_closure(const Automaton& a);

Automaton eliminate_epsilons(const Automaton& a);

// Restriction to states that are both accessible and co-accessible.
Automaton trim(const Automaton& a);

bool is_empty(const Automaton& a);

// Shortlex-least accepted word, or nullopt for the empty language.
std::optional<Word> shortest_word(const Automaton& a);

// Exact language equivalence over a shared alphabet.
bool equivalent(const Automaton& a, const Automaton& b);

// All accepted words of length <= max_len, in shortlex order.
std::vector<Word> enumerate_words(const Automaton& a, std::size_t max_len);

// Visits every word over the alphabet of length <= max_len in depth-first
// symbol order, reporting whether it is accepted. Useful for exhaustive
// comparisons without re-running the acceptor from scratch per word.
void walk_words(const Automaton& a, std::size_t max_len,
                const std::function<void(const Word&, bool)>& visit);

}  // namespace regcone

#endif
