#include "regcone/automaton.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

namespace regcone {

namespace {

void sort_unique(std::vector<State>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <typename T>
void sort_unique_t(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void require_same_alphabet(const Automaton& a, const Automaton& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw std::invalid_argument("alphabet mismatch between operand automata");
  }
}

// Letter/epsilon stepping over state-set masks.
struct Stepper {
  const Automaton& a;
  std::vector<std::vector<std::pair<SymbolId, State>>> out;  // per state
  std::vector<std::vector<State>> eps;
  std::vector<char> accept_mask;

  explicit Stepper(const Automaton& aut)
      : a(aut), out(aut.state_count()), eps(aut.state_count()),
        accept_mask(aut.state_count(), 0) {
    for (const Transition& t : aut.transitions()) out[t.from].emplace_back(t.symbol, t.to);
    for (const auto& [p, q] : aut.epsilons()) eps[p].push_back(q);
    for (State s : aut.accepts()) accept_mask[s] = 1;
  }

  void close(std::vector<char>& mask) const {
    std::vector<State> stack;
    for (State s = 0; s < mask.size(); ++s)
      if (mask[s]) stack.push_back(s);
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (State q : eps[s]) {
        if (!mask[q]) {
          mask[q] = 1;
          stack.push_back(q);
        }
      }
    }
  }

  std::vector<char> start_set() const {
    std::vector<char> mask(a.state_count(), 0);
    for (State s : a.starts()) mask[s] = 1;
    close(mask);
    return mask;
  }

  std::vector<char> step(const std::vector<char>& cur, SymbolId x) const {
    std::vector<char> next(a.state_count(), 0);
    for (State s = 0; s < cur.size(); ++s) {
      if (!cur[s]) continue;
      for (const auto& [sym, to] : out[s])
        if (sym == x) next[to] = 1;
    }
    close(next);
    return next;
  }

  bool accepting(const std::vector<char>& cur) const {
    for (State s = 0; s < cur.size(); ++s)
      if (cur[s] && accept_mask[s]) return true;
    return false;
  }

  bool alive(const std::vector<char>& cur) const {
    for (char c : cur)
      if (c) return true;
    return false;
  }
};

std::vector<State> mask_to_states(const std::vector<char>& mask) {
  std::vector<State> v;
  for (State s = 0; s < mask.size(); ++s)
    if (mask[s]) v.push_back(s);
  return v;
}

// Complete deterministic table built by the subset construction.
// State 0 is the start subset; the empty subset acts as the sink.
struct Dfa {
  std::size_t symbol_count = 0;
  std::vector<std::vector<std::uint32_t>> next;  // [state][symbol]
  std::vector<char> accept;
};

Dfa determinize(const Automaton& a) {
  Stepper st(a);
  Dfa d;
  d.symbol_count = a.alphabet().size();
  std::map<std::vector<State>, std::uint32_t> ids;
  std::vector<std::vector<char>> masks;

  auto intern = [&](const std::vector<char>& mask) -> std::uint32_t {
    std::vector<State> key = mask_to_states(mask);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(masks.size());
    ids.emplace(std::move(key), id);
    masks.push_back(mask);
    d.next.emplace_back(d.symbol_count, 0);
    d.accept.push_back(st.accepting(mask) ? 1 : 0);
    return id;
  };

  intern(st.start_set());
  for (std::uint32_t q = 0; q < masks.size(); ++q) {
    for (SymbolId x = 0; x < d.symbol_count; ++x) {
      std::vector<char> nxt = st.step(masks[q], x);
      d.next[q][x] = intern(nxt);
    }
  }
  return d;
}

Automaton dfa_to_automaton(const Dfa& d, const Alphabet& alphabet) {
  std::vector<Transition> trans;
  std::vector<State> accepts;
  for (State q = 0; q < d.next.size(); ++q) {
    for (SymbolId x = 0; x < d.symbol_count; ++x)
      trans.push_back({q, x, d.next[q][x]});
    if (d.accept[q]) accepts.push_back(q);
  }
  return Automaton(alphabet, static_cast<State>(d.next.size()), {0}, std::move(accepts),
                   std::move(trans));
}

std::vector<char> accessible_states(const Automaton& a) {
  std::vector<char> seen(a.state_count(), 0);
  std::vector<State> stack(a.starts().begin(), a.starts().end());
  for (State s : stack) seen[s] = 1;
  std::vector<std::vector<State>> adj(a.state_count());
  for (const Transition& t : a.transitions()) adj[t.from].push_back(t.to);
  for (const auto& [p, q] : a.epsilons()) adj[p].push_back(q);
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State q : adj[s]) {
      if (!seen[q]) {
        seen[q] = 1;
        stack.push_back(q);
      }
    }
  }
  return seen;
}

std::vector<char> coaccessible_states(const Automaton& a) {
  std::vector<char> seen(a.state_count(), 0);
  std::vector<State> stack(a.accepts().begin(), a.accepts().end());
  for (State s : stack) seen[s] = 1;
  std::vector<std::vector<State>> radj(a.state_count());
  for (const Transition& t : a.transitions()) radj[t.to].push_back(t.from);
  for (const auto& [p, q] : a.epsilons()) radj[q].push_back(p);
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State q : radj[s]) {
      if (!seen[q]) {
        seen[q] = 1;
        stack.push_back(q);
      }
    }
  }
  return seen;
}

Automaton restrict_states(const Automaton& a, const std::vector<char>& keep) {
  std::vector<State> remap(a.state_count(), 0);
  State next_id = 0;
  for (State s = 0; s < a.state_count(); ++s)
    if (keep[s]) remap[s] = next_id++;
  std::vector<State> starts, accepts;
  for (State s : a.starts())
    if (keep[s]) starts.push_back(remap[s]);
  for (State s : a.accepts())
    if (keep[s]) accepts.push_back(remap[s]);
  std::vector<Transition> trans;
  for (const Transition& t : a.transitions())
    if (keep[t.from] && keep[t.to]) trans.push_back({remap[t.from], t.symbol, remap[t.to]});
  std::vector<std::pair<State, State>> eps;
  for (const auto& [p, q] : a.epsilons())
    if (keep[p] && keep[q]) eps.emplace_back(remap[p], remap[q]);
  return Automaton(a.alphabet(), next_id, std::move(starts), std::move(accepts),
                   std::move(trans), std::move(eps));
}

}  // namespace

Automaton::Automaton(Alphabet alphabet, State state_count, std::vector<State> starts,
                     std::vector<State> accepts, std::vector<Transition> transitions,
                     std::vector<std::pair<State, State>> epsilons)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      starts_(std::move(starts)),
      accepts_(std::move(accepts)),
      transitions_(std::move(transitions)),
      epsilons_(std::move(epsilons)) {
  sort_unique(starts_);
  sort_unique(accepts_);
  sort_unique_t(transitions_);
  sort_unique_t(epsilons_);
  auto check_state = [&](State s) {
    if (s >= state_count_) {
      throw std::invalid_argument("state index " + std::to_string(s) + " out of range");
    }
  };
  for (State s : starts_) check_state(s);
  for (State s : accepts_) check_state(s);
  for (const Transition& t : transitions_) {
    check_state(t.from);
    check_state(t.to);
    if (t.symbol >= alphabet_.size()) {
      throw std::invalid_argument("transition symbol out of range");
    }
  }
  for (const auto& [p, q] : epsilons_) {
    check_state(p);
    check_state(q);
  }
}

Automaton Automaton::empty_language(Alphabet alphabet) {
  return Automaton(std::move(alphabet), 0, {}, {}, {});
}

Automaton Automaton::epsilon_only(Alphabet alphabet) {
  return Automaton(std::move(alphabet), 1, {0}, {0}, {});
}

Automaton Automaton::single_word(Alphabet alphabet, const Word& word) {
  std::vector<Transition> trans;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] >= alphabet.size()) throw std::invalid_argument("word symbol out of range");
    trans.push_back({static_cast<State>(i), word[i], static_cast<State>(i + 1)});
  }
  State n = static_cast<State>(word.size() + 1);
  return Automaton(std::move(alphabet), n, {0}, {static_cast<State>(word.size())},
                   std::move(trans));
}

Automaton Automaton::all_words(Alphabet alphabet) {
  std::vector<Transition> trans;
  for (SymbolId x = 0; x < alphabet.size(); ++x) trans.push_back({0, x, 0});
  return Automaton(std::move(alphabet), 1, {0}, {0}, std::move(trans));
}

bool accepts(const Automaton& a, const Word& w) {
  for (SymbolId x : w) {
    if (x >= a.alphabet().size()) throw std::invalid_argument("word symbol not in alphabet");
  }
  if (a.state_count() == 0) return false;
  Stepper st(a);
  std::vector<char> cur = st.start_set();
  for (SymbolId x : w) {
    if (!st.alive(cur)) return false;
    cur = st.step(cur, x);
  }
  return st.accepting(cur);
}

Automaton union_langs(const Automaton& a, const Automaton& b) {
  require_same_alphabet(a, b);
  State n = a.state_count();
  std::vector<State> starts(a.starts()), accepts(a.accepts());
  std::vector<Transition> trans(a.transitions());
  std::vector<std::pair<State, State>> eps(a.epsilons());
  for (State s : b.starts()) starts.push_back(s + n);
  for (State s : b.accepts()) accepts.push_back(s + n);
  for (const Transition& t : b.transitions()) trans.push_back({t.from + n, t.symbol, t.to + n});
  for (const auto& [p, q] : b.epsilons()) eps.emplace_back(p + n, q + n);
  return Automaton(a.alphabet(), n + b.state_count(), std::move(starts), std::move(accepts),
                   std::move(trans), std::move(eps));
}

Automaton intersect(const Automaton& a, const Automaton& b) {
  require_same_alphabet(a, b);
  Automaton ea = eliminate_epsilons(a);
  Automaton eb = eliminate_epsilons(b);

  std::vector<std::vector<std::pair<SymbolId, State>>> outa(ea.state_count()),
      outb(eb.state_count());
  for (const Transition& t : ea.transitions()) outa[t.from].emplace_back(t.symbol, t.to);
  for (const Transition& t : eb.transitions()) outb[t.from].emplace_back(t.symbol, t.to);

  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State p, State q) -> State {
    auto it = ids.find({p, q});
    if (it != ids.end()) return it->second;
    State id = static_cast<State>(pairs.size());
    ids.emplace(std::make_pair(p, q), id);
    pairs.emplace_back(p, q);
    return id;
  };

  std::vector<State> starts;
  for (State p : ea.starts())
    for (State q : eb.starts()) starts.push_back(intern(p, q));

  std::vector<Transition> trans;
  for (State id = 0; id < pairs.size(); ++id) {
    auto [p, q] = pairs[id];
    for (const auto& [x, p2] : outa[p]) {
      for (const auto& [y, q2] : outb[q]) {
        if (x == y) trans.push_back({id, x, intern(p2, q2)});
      }
    }
  }

  std::vector<char> amask(ea.state_count(), 0), bmask(eb.state_count(), 0);
  for (State s : ea.accepts()) amask[s] = 1;
  for (State s : eb.accepts()) bmask[s] = 1;
  std::vector<State> accepts;
  for (State id = 0; id < pairs.size(); ++id) {
    if (amask[pairs[id].first] && bmask[pairs[id].second]) accepts.push_back(id);
  }
  return Automaton(a.alphabet(), static_cast<State>(pairs.size()), std::move(starts),
                   std::move(accepts), std::move(trans));
}

Automaton complement(const Automaton& a) {
  Dfa d = determinize(a);
  for (char& c : d.accept) c = c ? 0 : 1;
  return trim(dfa_to_automaton(d, a.alphabet()));
}

Automaton complement(const Automaton& a, const Automaton& universe) {
  return trim(intersect(complement(a), universe));
}

Automaton concat(const Automaton& a, const Automaton& b) {
  require_same_alphabet(a, b);
  State n = a.state_count();
  std::vector<State> starts(a.starts()), accepts;
  std::vector<Transition> trans(a.transitions());
  std::vector<std::pair<State, State>> eps(a.epsilons());
  for (State s : b.accepts()) accepts.push_back(s + n);
  for (const Transition& t : b.transitions()) trans.push_back({t.from + n, t.symbol, t.to + n});
  for (const auto& [p, q] : b.epsilons()) eps.emplace_back(p + n, q + n);
  for (State f : a.accepts())
    for (State s : b.starts()) eps.emplace_back(f, s + n);
  return Automaton(a.alphabet(), n + b.state_count(), std::move(starts), std::move(accepts),
                   std::move(trans), std::move(eps));
}

Automaton star(const Automaton& a) {
  State hub = a.state_count();
  std::vector<std::pair<State, State>> eps(a.epsilons());
  for (State s : a.starts()) eps.emplace_back(hub, s);
  for (State f : a.accepts()) eps.emplace_back(f, hub);
  return Automaton(a.alphabet(), hub + 1, {hub}, {hub}, a.transitions(), std::move(eps));
}

Automaton reverse(const Automaton& a) {
  std::vector<Transition> trans;
  trans.reserve(a.transitions().size());
  for (const Transition& t : a.transitions()) trans.push_back({t.to, t.symbol, t.from});
  std::vector<std::pair<State, State>> eps;
  eps.reserve(a.epsilons().size());
  for (const auto& [p, q] : a.epsilons()) eps.emplace_back(q, p);
  return Automaton(a.alphabet(), a.state_count(), a.accepts(), a.starts(), std::move(trans),
                   std::move(eps));
}

Automaton hom_image(const Automaton& a, const Alphabet& target,
                    const std::vector<Word>& letter_map) {
  if (letter_map.size() != a.alphabet().size()) {
    throw std::invalid_argument("letter map must cover the source alphabet");
  }
  for (const Word& w : letter_map) {
    for (SymbolId y : w) {
      if (y >= target.size()) throw std::invalid_argument("letter map image symbol out of range");
    }
  }
  State n = a.state_count();
  State fresh = n;
  std::vector<Transition> trans;
  std::vector<std::pair<State, State>> eps(a.epsilons());
  for (const Transition& t : a.transitions()) {
    const Word& w = letter_map[t.symbol];
    if (w.empty()) {
      eps.emplace_back(t.from, t.to);
    } else if (w.size() == 1) {
      trans.push_back({t.from, w[0], t.to});
    } else {
      State prev = t.from;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        trans.push_back({prev, w[i], fresh});
        prev = fresh++;
      }
      trans.push_back({prev, w.back(), t.to});
    }
  }
  return Automaton(target, fresh, a.starts(), a.accepts(), std::move(trans), std::move(eps));
}

namespace {

// Dense boolean relations over the state set, one 64-bit block row per state.
struct Relation {
  std::size_t n = 0;
  std::size_t blocks = 0;
  std::vector<std::uint64_t> bits;

  explicit Relation(std::size_t size)
      : n(size), blocks((size + 63) / 64), bits(n * blocks, 0) {}

  void set(std::size_t i, std::size_t j) { bits[i * blocks + j / 64] |= 1ull << (j % 64); }
  bool get(std::size_t i, std::size_t j) const {
    return (bits[i * blocks + j / 64] >> (j % 64)) & 1u;
  }

  Relation compose(const Relation& other) const {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t b = 0; b < blocks; ++b) {
        std::uint64_t row = bits[i * blocks + b];
        while (row) {
          std::size_t j = b * 64 + static_cast<std::size_t>(__builtin_ctzll(row));
          row &= row - 1;
          for (std::size_t c = 0; c < blocks; ++c)
            r.bits[i * blocks + c] |= other.bits[j * blocks + c];
        }
      }
    }
    return r;
  }
};

Relation epsilon_closure_relation(const Automaton& a) {
  std::size_t n = a.state_count();
  Relation e(n);
  std::vector<std::vector<State>> adj(n);
  for (const auto& [p, q] : a.epsilons()) adj[p].push_back(q);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<char> seen(n, 0);
    std::vector<State> stack{static_cast<State>(s)};
    seen[s] = 1;
    while (!stack.empty()) {
      State u = stack.back();
      stack.pop_back();
      e.set(s, u);
      for (State v : adj[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  return e;
}

}  // namespace

Automaton hom_preimage(const Automaton& a, const Alphabet& source,
                       const std::vector<Word>& letter_map) {
  if (letter_map.size() != source.size()) {
    throw std::invalid_argument("letter map must cover the source alphabet");
  }
  for (const Word& w : letter_map) {
    for (SymbolId y : w) {
      if (y >= a.alphabet().size()) {
        throw std::invalid_argument("letter map image symbol out of range");
      }
    }
  }
  std::size_t n = a.state_count();
  if (n == 0) return Automaton::empty_language(source);

  Relation e = epsilon_closure_relation(a);
  std::vector<Relation> letter_rel(a.alphabet().size(), Relation(n));
  for (const Transition& t : a.transitions()) letter_rel[t.symbol].set(t.from, t.to);

  std::vector<Transition> trans;
  for (SymbolId s = 0; s < source.size(); ++s) {
    Relation r = e;
    for (SymbolId y : letter_map[s]) r = r.compose(letter_rel[y]).compose(e);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (r.get(p, q)) {
          trans.push_back({static_cast<State>(p), s, static_cast<State>(q)});
        }
      }
    }
  }

  std::vector<char> amask(n, 0);
  for (State s : a.accepts()) amask[s] = 1;
  std::vector<State> accepts;
  for (std::size_t q = 0; q < n; ++q) {
    bool ok = false;
    for (std::size_t j = 0; j < n && !ok; ++j) ok = e.get(q, j) && amask[j];
    if (ok) accepts.push_back(static_cast<State>(q));
  }
  return Automaton(source, static_cast<State>(n), a.starts(), std::move(accepts),
                   std::move(trans));
}

Automaton prefix_closure(const Automaton& a) {
  Automaton acc = restrict_states(a, accessible_states(a));
  std::vector<char> co = coaccessible_states(acc);
  std::vector<State> accepts;
  for (State s = 0; s < acc.state_count(); ++s)
    if (co[s]) accepts.push_back(s);
  return Automaton(acc.alphabet(), acc.state_count(), acc.starts(), std::move(accepts),
                   acc.transitions(), acc.epsilons());
}

Automaton eliminate_epsilons(const Automaton& a) {
  Stepper st(a);
  std::vector<char> smask = st.start_set();
  std::vector<std::vector<State>> adj(a.state_count());
  for (const auto& [p, q] : a.epsilons()) adj[p].push_back(q);

  std::vector<Transition> trans;
  for (const Transition& t : a.transitions()) {
    std::vector<char> mask(a.state_count(), 0);
    mask[t.to] = 1;
    st.close(mask);
    for (State q = 0; q < a.state_count(); ++q)
      if (mask[q]) trans.push_back({t.from, t.symbol, q});
  }
  return Automaton(a.alphabet(), a.state_count(), mask_to_states(smask), a.accepts(),
                   std::move(trans));
}

Automaton trim(const Automaton& a) {
  std::vector<char> acc = accessible_states(a);
  std::vector<char> co = coaccessible_states(a);
  std::vector<char> keep(a.state_count(), 0);
  for (State s = 0; s < a.state_count(); ++s) keep[s] = acc[s] && co[s];
  return restrict_states(a, keep);
}

bool is_empty(const Automaton& a) {
  std::vector<char> acc = accessible_states(a);
  for (State s : a.accepts())
    if (acc[s]) return false;
  return true;
}

std::optional<Word> shortest_word(const Automaton& a) {
  Dfa d = determinize(a);
  std::vector<char> seen(d.next.size(), 0);
  std::vector<std::pair<std::uint32_t, SymbolId>> parent(d.next.size(), {0, 0});
  std::queue<std::uint32_t> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    std::uint32_t s = q.front();
    q.pop();
    if (d.accept[s]) {
      Word w;
      std::uint32_t cur = s;
      while (cur != 0) {
        w.push_back(parent[cur].second);
        cur = parent[cur].first;
      }
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (SymbolId x = 0; x < d.symbol_count; ++x) {
      std::uint32_t t = d.next[s][x];
      if (!seen[t]) {
        seen[t] = 1;
        parent[t] = {s, x};
        q.push(t);
      }
    }
  }
  return std::nullopt;
}

bool equivalent(const Automaton& a, const Automaton& b) {
  require_same_alphabet(a, b);
  Dfa da = determinize(a);
  Dfa db = determinize(b);
  std::map<std::pair<std::uint32_t, std::uint32_t>, char> seen;
  std::queue<std::pair<std::uint32_t, std::uint32_t>> q;
  q.push({0, 0});
  seen[{0, 0}] = 1;
  while (!q.empty()) {
    auto [p, r] = q.front();
    q.pop();
    if (da.accept[p] != db.accept[r]) return false;
    for (SymbolId x = 0; x < da.symbol_count; ++x) {
      std::pair<std::uint32_t, std::uint32_t> nxt{da.next[p][x], db.next[r][x]};
      if (seen.emplace(nxt, 1).second) q.push(nxt);
    }
  }
  return true;
}

std::vector<Word> enumerate_words(const Automaton& a, std::size_t max_len) {
  std::vector<Word> result;
  if (a.state_count() == 0) return result;
  Stepper st(a);

  // Level lists stay in lexicographic order because children are generated
  // symbol-major, so the concatenated output is shortlex.
  std::vector<std::pair<std::vector<char>, Word>> level;
  level.emplace_back(st.start_set(), Word{});
  for (std::size_t len = 0;; ++len) {
    for (const auto& [mask, word] : level) {
      if (st.accepting(mask)) result.push_back(word);
    }
    if (len == max_len) break;
    std::vector<std::pair<std::vector<char>, Word>> next;
    for (const auto& [mask, word] : level) {
      for (SymbolId x = 0; x < a.alphabet().size(); ++x) {
        std::vector<char> nmask = st.step(mask, x);
        if (!st.alive(nmask)) continue;
        Word nword = word;
        nword.push_back(x);
        next.emplace_back(std::move(nmask), std::move(nword));
      }
    }
    if (next.empty()) break;
    level = std::move(next);
  }
  return result;
}

void walk_words(const Automaton& a, std::size_t max_len,
                const std::function<void(const Word&, bool)>& visit) {
  Stepper st(a);
  std::vector<std::vector<char>> sets(max_len + 1);
  sets[0] = a.state_count() ? st.start_set() : std::vector<char>{};
  Word word;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    visit(word, a.state_count() ? st.accepting(sets[depth]) : false);
    if (depth == max_len) return;
    for (SymbolId x = 0; x < a.alphabet().size(); ++x) {
      if (a.state_count()) sets[depth + 1] = st.step(sets[depth], x);
      word.push_back(x);
      self(self, depth + 1);
      word.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace regcone
