#ifndef REGCONE_ALPHABET_HPP
#define REGCONE_ALPHABET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace regcone {

using SymbolId = std::uint32_t;
using State = std::uint32_t;

// A word is a sequence of symbol indices into some Alphabet. The empty
// vector is the empty word.
using Word = std::vector<SymbolId>;

// Finite ordered symbol set. The declared order is fixed at construction
// and induces the shortlex order used for tie-breaking everywhere.
class Alphabet {
 public:
  // Symbol names must be distinct, non-empty, printable ASCII without
  // whitespace or '#'.
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& name(SymbolId id) const { return symbols_.at(id); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  std::optional<SymbolId> find(std::string_view symbol) const;
  // Like find() but throws std::invalid_argument for unknown symbols.
  SymbolId require(std::string_view symbol) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, SymbolId> index_;
};

// Length-major, then lexicographic by symbol index.
bool shortlex_less(const Word& a, const Word& b);

// Whitespace-separated symbol tokens; blank input is the empty word.
Word parse_word(const Alphabet& alphabet, std::string_view text);
std::string format_word(const Alphabet& alphabet, const Word& word);

}  // namespace regcone

#endif
