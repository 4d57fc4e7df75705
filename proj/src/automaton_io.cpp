#include "regcone/automaton_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace regcone {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

State parse_state(const std::string& token, State state_count, std::size_t line_no) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad state index '" + token + "'");
  }
  if (value >= state_count) {
    throw ParseError("line " + std::to_string(line_no) + ": state index " + token +
                     " out of range");
  }
  return value;
}

}  // namespace

Automaton parse_automaton(std::istream& in) {
  std::optional<Alphabet> alphabet;
  std::optional<State> state_count;
  std::vector<State> starts, accepts;
  std::vector<Transition> transitions;
  std::vector<std::pair<State, State>> epsilons;

  auto need_header = [&](std::size_t line_no) {
    if (!alphabet || !state_count) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": 'alphabet:' and 'states:' must come first");
    }
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& key = tok[0];

    if (key == "alphabet:") {
      if (alphabet) throw ParseError("line " + std::to_string(line_no) + ": duplicate alphabet");
      try {
        alphabet.emplace(std::vector<std::string>(tok.begin() + 1, tok.end()));
      } catch (const std::invalid_argument& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    } else if (key == "states:") {
      if (state_count) throw ParseError("line " + std::to_string(line_no) + ": duplicate states");
      if (tok.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": states: N");
      std::uint32_t n = 0;
      auto [ptr, ec] = std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), n);
      if (ec != std::errc{} || ptr != tok[1].data() + tok[1].size()) {
        throw ParseError("line " + std::to_string(line_no) + ": bad state count");
      }
      state_count = n;
    } else if (key == "start:" || key == "accept:") {
      need_header(line_no);
      if (tok.size() < 2) throw ParseError("line " + std::to_string(line_no) + ": missing index");
      auto& dst = key == "start:" ? starts : accepts;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        dst.push_back(parse_state(tok[i], *state_count, line_no));
      }
    } else if (key == "trans:") {
      need_header(line_no);
      if (tok.size() != 4) {
        throw ParseError("line " + std::to_string(line_no) + ": trans: FROM SYMBOL TO");
      }
      State from = parse_state(tok[1], *state_count, line_no);
      auto sym = alphabet->find(tok[2]);
      if (!sym) {
        throw ParseError("line " + std::to_string(line_no) + ": undeclared symbol '" + tok[2] +
                         "'");
      }
      State to = parse_state(tok[3], *state_count, line_no);
      transitions.push_back({from, *sym, to});
    } else if (key == "eps:") {
      need_header(line_no);
      if (tok.size() != 3) throw ParseError("line " + std::to_string(line_no) + ": eps: FROM TO");
      epsilons.emplace_back(parse_state(tok[1], *state_count, line_no),
                            parse_state(tok[2], *state_count, line_no));
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (!alphabet) throw ParseError("missing 'alphabet:' line");
  if (!state_count) throw ParseError("missing 'states:' line");
  return Automaton(std::move(*alphabet), *state_count, std::move(starts), std::move(accepts),
                   std::move(transitions), std::move(epsilons));
}

Automaton parse_automaton_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path.string());
  return parse_automaton(in);
}

void write_automaton(std::ostream& out, const Automaton& a) {
  out << "alphabet:";
  for (const std::string& s : a.alphabet().symbols()) out << ' ' << s;
  out << '\n';
  out << "states: " << a.state_count() << '\n';
  for (State s : a.starts()) out << "start: " << s << '\n';
  for (State s : a.accepts()) out << "accept: " << s << '\n';
  for (const Transition& t : a.transitions()) {
    out << "trans: " << t.from << ' ' << a.alphabet().name(t.symbol) << ' ' << t.to << '\n';
  }
  for (const auto& [p, q] : a.epsilons()) out << "eps: " << p << ' ' << q << '\n';
}

void write_automaton_file(const std::filesystem::path& path, const Automaton& a) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path.string());
  write_automaton(out, a);
}

}  // namespace regcone
