#ifndef REGCONE_AUTOMATON_IO_HPP
#define REGCONE_AUTOMATON_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "regcone/automaton.hpp"

namespace regcone {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Line-oriented text format:
//
//   alphabet: x x^ y y^
//   states: 4
//   start: 0
//   accept: 3
//   trans: 0 x 1
//   eps: 1 2
//
// '#' starts a comment, fields are whitespace-separated. `alphabet:` and
// `states:` must appear (once each) before any line that refers to them.
// Unknown keys, out-of-range state indices and undeclared symbols are
// rejected.
Automaton parse_automaton(std::istream& in);
Automaton parse_automaton_file(const std::filesystem::path& path);

void write_automaton(std::ostream& out, const Automaton& a);
void write_automaton_file(const std::filesystem::path& path, const Automaton& a);

}  // namespace regcone

#endif
