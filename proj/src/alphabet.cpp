#include "regcone/alphabet.hpp"

#include <sstream>
#include <stdexcept>

namespace regcone {

namespace {

bool valid_symbol_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c <= 0x20 || c >= 0x7f || c == '#') return false;
  }
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  for (SymbolId id = 0; id < symbols_.size(); ++id) {
    const std::string& s = symbols_[id];
    if (!valid_symbol_name(s)) {
      throw std::invalid_argument("invalid symbol name: '" + s + "'");
    }
    if (!index_.emplace(s, id).second) {
      throw std::invalid_argument("duplicate symbol: '" + s + "'");
    }
  }
}

std::optional<SymbolId> Alphabet::find(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SymbolId Alphabet::require(std::string_view symbol) const {
  auto id = find(symbol);
  if (!id) throw std::invalid_argument("symbol not in alphabet: '" + std::string(symbol) + "'");
  return *id;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word word;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) word.push_back(alphabet.require(token));
  return word;
}

std::string format_word(const Alphabet& alphabet, const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ' ';
    out += alphabet.name(word[i]);
  }
  return out;
}

}  // namespace regcone
