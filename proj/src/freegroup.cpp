#include "regcone/freegroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

namespace regcone {

namespace {

bool ends_with_hat(const std::string& s) { return !s.empty() && s.back() == '^'; }

}  // namespace

GroupAlphabet::GroupAlphabet(std::vector<std::string> generators) : full_({}) {
  std::vector<std::string> symbols;
  for (const std::string& g : generators) {
    if (ends_with_hat(g)) {
      throw std::invalid_argument("generator name must not end in '^': '" + g + "'");
    }
    symbols.push_back(g);
    symbols.push_back(g + "^");
  }
  full_ = Alphabet(std::move(symbols));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    SymbolId g = static_cast<SymbolId>(2 * i);
    generators_.push_back(g);
    inverse_.push_back(g + 1);
    inverse_.push_back(g);
    is_generator_.push_back(1);
    is_generator_.push_back(0);
    generator_index_.push_back(i);
    generator_index_.push_back(i);
  }
}

GroupAlphabet GroupAlphabet::from_full_alphabet(const Alphabet& full) {
  GroupAlphabet ga;
  ga.full_ = full;
  ga.inverse_.assign(full.size(), 0);
  ga.is_generator_.assign(full.size(), 0);
  ga.generator_index_.assign(full.size(), 0);
  for (SymbolId s = 0; s < full.size(); ++s) {
    const std::string& name = full.name(s);
    if (ends_with_hat(name)) {
      std::string base = name.substr(0, name.size() - 1);
      if (ends_with_hat(base)) {
        throw std::invalid_argument("symbol '" + name + "' is a double inverse");
      }
      auto partner = full.find(base);
      if (!partner) {
        throw std::invalid_argument("inverse symbol '" + name + "' has no generator '" + base +
                                    "'");
      }
      ga.inverse_[s] = *partner;
    } else {
      auto partner = full.find(name + "^");
      if (!partner) {
        throw std::invalid_argument("generator '" + name + "' has no inverse '" + name + "^'");
      }
      ga.inverse_[s] = *partner;
      ga.is_generator_[s] = 1;
      ga.generator_index_[s] = ga.generators_.size();
      ga.generators_.push_back(s);
    }
  }
  for (SymbolId s = 0; s < full.size(); ++s) {
    if (!ga.is_generator_[s]) ga.generator_index_[s] = ga.generator_index_[ga.inverse_[s]];
  }
  return ga;
}

Word free_reduce_word(const GroupAlphabet& ga, const Word& w) {
  Word out;
  for (SymbolId x : w) {
    if (x >= ga.full().size()) throw std::invalid_argument("letter outside the group alphabet");
    if (!out.empty() && out.back() == ga.inverse(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word word_inverse(const GroupAlphabet& ga, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(ga.inverse(*it));
  return out;
}

GroupElement GroupElement::reduce(const GroupAlphabet& ga, const Word& w) {
  return GroupElement(free_reduce_word(ga, w));
}

GroupElement GroupElement::from_reduced(const GroupAlphabet& ga, Word w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i + 1] == ga.inverse(w[i])) {
      throw std::invalid_argument("word is not freely reduced");
    }
  }
  return GroupElement(std::move(w));
}

GroupElement elem_inverse(const GroupAlphabet& ga, const GroupElement& g) {
  return GroupElement::reduce(ga, word_inverse(ga, g.word()));
}

GroupElement elem_mul(const GroupAlphabet& ga, const GroupElement& g, const GroupElement& h) {
  Word w = g.word();
  w.insert(w.end(), h.word().begin(), h.word().end());
  return GroupElement::reduce(ga, w);
}

Automaton reduced_universe(const GroupAlphabet& ga) {
  // State 0 is initial; state 1+x remembers the last letter x.
  std::size_t k = ga.full().size();
  std::vector<Transition> trans;
  std::vector<State> accepts;
  accepts.push_back(0);
  for (SymbolId x = 0; x < k; ++x) {
    trans.push_back({0, x, static_cast<State>(1 + x)});
    accepts.push_back(static_cast<State>(1 + x));
    for (SymbolId y = 0; y < k; ++y) {
      if (ga.inverse(x) != y) trans.push_back({static_cast<State>(1 + x), y,
                                               static_cast<State>(1 + y)});
    }
  }
  return Automaton(ga.full(), static_cast<State>(1 + k), {0}, std::move(accepts),
                   std::move(trans));
}

namespace {

// Epsilon-path between two states via the current edge list, as edge ids.
std::optional<std::vector<std::uint32_t>> eps_path(
    const std::vector<SaturationTrace::EpsEdge>& edges, State n, State from, State to) {
  if (from == to) return std::vector<std::uint32_t>{};
  std::vector<std::vector<std::pair<State, std::uint32_t>>> adj(n);
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].from].emplace_back(edges[i].to, i);
  }
  std::vector<std::int64_t> parent_edge(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<State> q;
  q.push(from);
  seen[from] = 1;
  while (!q.empty()) {
    State s = q.front();
    q.pop();
    for (const auto& [t, id] : adj[s]) {
      if (!seen[t]) {
        seen[t] = 1;
        parent_edge[t] = id;
        if (t == to) {
          std::vector<std::uint32_t> path;
          State cur = to;
          while (cur != from) {
            std::uint32_t e = static_cast<std::uint32_t>(parent_edge[cur]);
            path.push_back(e);
            cur = edges[e].from;
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        q.push(t);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SaturationTrace benois_saturate(const GroupAlphabet& ga, const Automaton& a) {
  if (!(a.alphabet() == ga.full())) {
    throw std::invalid_argument("automaton alphabet does not match the group alphabet");
  }
  State n = a.state_count();
  SaturationTrace trace{Automaton::empty_language(ga.full()), {}};
  for (const auto& [p, q] : a.epsilons()) {
    trace.eps_edges.push_back({p, q, true, 0, 0, 0, 0, {}});
  }

  std::vector<char> present(static_cast<std::size_t>(n) * n, 0);
  auto has_edge = [&](State p, State q) { return present[static_cast<std::size_t>(p) * n + q]; };
  auto mark_edge = [&](State p, State q) { present[static_cast<std::size_t>(p) * n + q] = 1; };
  for (const auto& e : trace.eps_edges) mark_edge(e.from, e.to);

  // Transitions grouped by symbol, and the reversed lists grouped by the
  // symbol they cancel with.
  std::vector<std::vector<Transition>> by_symbol(ga.full().size());
  for (const Transition& t : a.transitions()) by_symbol[t.symbol].push_back(t);

  bool changed = n > 0;
  while (changed) {
    changed = false;
    // Reflexive-transitive closure of the current eps edges.
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    {
      std::vector<std::vector<State>> adj(n);
      for (const auto& e : trace.eps_edges) adj[e.from].push_back(e.to);
      for (State s = 0; s < n; ++s) {
        std::vector<State> stack{s};
        reach[s][s] = 1;
        while (!stack.empty()) {
          State u = stack.back();
          stack.pop_back();
          for (State v : adj[u]) {
            if (!reach[s][v]) {
              reach[s][v] = 1;
              stack.push_back(v);
            }
          }
        }
      }
    }
    for (SymbolId x = 0; x < ga.full().size(); ++x) {
      const auto& firsts = by_symbol[x];
      const auto& seconds = by_symbol[ga.inverse(x)];
      for (const Transition& t1 : firsts) {
        for (const Transition& t2 : seconds) {
          if (!reach[t1.to][t2.from]) continue;
          if (t1.from == t2.to || has_edge(t1.from, t2.to)) continue;
          auto via = eps_path(trace.eps_edges, n, t1.to, t2.from);
          if (!via) throw std::logic_error("saturation lost an epsilon path");
          trace.eps_edges.push_back(
              {t1.from, t2.to, false, x, ga.inverse(x), t1.to, t2.from, std::move(*via)});
          mark_edge(t1.from, t2.to);
          changed = true;
        }
      }
    }
  }

  std::vector<std::pair<State, State>> all_eps;
  all_eps.reserve(trace.eps_edges.size());
  for (const auto& e : trace.eps_edges) all_eps.emplace_back(e.from, e.to);
  trace.saturated = Automaton(ga.full(), n, a.starts(), a.accepts(), a.transitions(),
                              std::move(all_eps));
  return trace;
}

void SaturationTrace::expand_edge(std::uint32_t edge_id, std::vector<PathStep>& out,
                                  std::size_t step_cap) const {
  const EpsEdge& e = eps_edges.at(edge_id);
  if (out.size() >= step_cap) {
    throw SearchExhausted("witness expansion exceeded the step budget");
  }
  if (e.original) {
    out.push_back({false, e.from, 0, e.to});
    return;
  }
  // Derivations only reference strictly earlier edges, so this terminates.
  out.push_back({true, e.from, e.sym, e.mid_from});
  for (std::uint32_t id : e.via) expand_edge(id, out, step_cap);
  out.push_back({true, e.mid_to, e.inv_sym, e.to});
  if (out.size() > step_cap) {
    throw SearchExhausted("witness expansion exceeded the step budget");
  }
}

ReducedLang ReducedLang::certify(GroupAlphabet ga, Automaton aut) {
  if (!(aut.alphabet() == ga.full())) {
    throw std::invalid_argument("automaton alphabet does not match the group alphabet");
  }
  Automaton universe = reduced_universe(ga);
  if (!is_empty(intersect(aut, complement(universe)))) {
    throw std::invalid_argument("language contains words that are not freely reduced");
  }
  return ReducedLang(std::move(ga), std::move(aut));
}

ReducedLang benois_reduce(const GroupAlphabet& ga, const Automaton& a) {
  SaturationTrace trace = benois_saturate(ga, a);
  Automaton result = trim(intersect(trace.saturated, reduced_universe(ga)));
  return ReducedLang::certify(ga, std::move(result));
}

ReducedLang reduced_universe_lang(const GroupAlphabet& ga) {
  return ReducedLang::certify(ga, reduced_universe(ga));
}

namespace {

std::vector<Word> involution_map(const GroupAlphabet& ga) {
  std::vector<Word> map(ga.full().size());
  for (SymbolId s = 0; s < ga.full().size(); ++s) map[s] = Word{ga.inverse(s)};
  return map;
}

void require_same_group(const ReducedLang& s, const ReducedLang& t) {
  if (!(s.group_alphabet() == t.group_alphabet())) {
    throw std::invalid_argument("group alphabet mismatch");
  }
}

}  // namespace

ReducedLang rs_inverse(const ReducedLang& s) {
  const GroupAlphabet& ga = s.group_alphabet();
  Automaton img = hom_image(reverse(s.automaton()), ga.full(), involution_map(ga));
  return benois_reduce(ga, img);
}

ReducedLang rs_product(const ReducedLang& s, const ReducedLang& t) {
  require_same_group(s, t);
  return benois_reduce(s.group_alphabet(), concat(s.automaton(), t.automaton()));
}

ReducedLang rs_union(const ReducedLang& s, const ReducedLang& t) {
  require_same_group(s, t);
  return ReducedLang::certify(s.group_alphabet(),
                              union_langs(s.automaton(), t.automaton()));
}

ReducedLang rs_intersect(const ReducedLang& s, const ReducedLang& t) {
  require_same_group(s, t);
  return ReducedLang::certify(s.group_alphabet(),
                              trim(intersect(s.automaton(), t.automaton())));
}

ReducedLang rs_complement(const ReducedLang& s) {
  const GroupAlphabet& ga = s.group_alphabet();
  return ReducedLang::certify(ga,
                              trim(complement(s.automaton(), reduced_universe(ga))));
}

bool rs_subset(const ReducedLang& s, const ReducedLang& t) {
  require_same_group(s, t);
  return is_empty(intersect(s.automaton(), complement(t.automaton())));
}

bool rs_equal(const ReducedLang& s, const ReducedLang& t) {
  return rs_subset(s, t) && rs_subset(t, s);
}

bool element_in(const ReducedLang& s, const GroupElement& g) {
  return accepts(s.automaton(), g.word());
}

Automaton translate(const GroupAlphabet& src, const Automaton& a, const GroupAlphabet& dst,
                    const std::vector<Word>& generator_images) {
  if (!(a.alphabet() == src.full())) {
    throw std::invalid_argument("automaton alphabet does not match the source group alphabet");
  }
  if (generator_images.size() != src.rank()) {
    throw std::invalid_argument("need one image word per generator");
  }
  std::vector<Word> map(src.full().size());
  for (std::size_t i = 0; i < src.rank(); ++i) {
    SymbolId g = src.generator(i);
    map[g] = generator_images[i];
    map[src.inverse(g)] = word_inverse(dst, generator_images[i]);
  }
  return hom_image(a, dst.full(), map);
}

std::optional<RetrievedWord> find_word_reducing_to(const GroupAlphabet& ga, const Automaton& a,
                                                   const SaturationTrace& trace,
                                                   const GroupElement& g, std::size_t step_cap) {
  State n = a.state_count();
  if (n == 0) return std::nullopt;
  const Word& target = g.word();
  std::size_t len = target.size();

  // BFS over (state, position in target); moves are letter transitions that
  // spell the next target letter, or any saturation eps edge.
  std::vector<std::vector<std::pair<State, std::uint32_t>>> eps_adj(n);
  for (std::uint32_t i = 0; i < trace.eps_edges.size(); ++i) {
    eps_adj[trace.eps_edges[i].from].emplace_back(trace.eps_edges[i].to, i);
  }
  std::vector<std::vector<std::pair<SymbolId, State>>> out(n);
  for (const Transition& t : a.transitions()) out[t.from].emplace_back(t.symbol, t.to);

  auto node = [&](State s, std::size_t pos) { return pos * n + s; };
  std::size_t total = (len + 1) * n;
  // parent move: -1 none; even = eps edge id * 2; odd = transition encoded.
  std::vector<std::int64_t> parent(total, -2);
  std::vector<std::uint32_t> parent_node(total, 0);
  std::deque<std::uint32_t> q;
  for (State s : a.starts()) {
    parent[node(s, 0)] = -1;
    q.push_back(static_cast<std::uint32_t>(node(s, 0)));
  }

  std::vector<char> accept_mask(n, 0);
  for (State s : a.accepts()) accept_mask[s] = 1;

  std::int64_t goal = -1;
  while (!q.empty() && goal < 0) {
    std::uint32_t cur = q.front();
    q.pop_front();
    State s = static_cast<State>(cur % n);
    std::size_t pos = cur / n;
    if (pos == len && accept_mask[s]) {
      goal = cur;
      break;
    }
    for (const auto& [t, id] : eps_adj[s]) {
      std::size_t nn = node(t, pos);
      if (parent[nn] == -2) {
        parent[nn] = 2 * static_cast<std::int64_t>(id);
        parent_node[nn] = cur;
        q.push_back(static_cast<std::uint32_t>(nn));
      }
    }
    if (pos < len) {
      for (const auto& [sym, t] : out[s]) {
        if (sym != target[pos]) continue;
        std::size_t nn = node(t, pos + 1);
        if (parent[nn] == -2) {
          parent[nn] = 2 * (static_cast<std::int64_t>(sym) * n + t) + 1;
          parent_node[nn] = cur;
          q.push_back(static_cast<std::uint32_t>(nn));
        }
      }
    }
  }
  if (goal < 0) return std::nullopt;

  // Reconstruct the abstract move sequence, then expand eps edges into
  // original moves.
  struct Move {
    bool is_eps;
    std::uint32_t eps_id;
    State from;
    SymbolId sym;
    State to;
  };
  std::vector<Move> moves;
  std::uint32_t cur = static_cast<std::uint32_t>(goal);
  while (parent[cur] != -1) {
    std::int64_t code = parent[cur];
    State to = static_cast<State>(cur % n);
    std::uint32_t prev = parent_node[cur];
    State from = static_cast<State>(prev % n);
    if (code % 2 == 0) {
      moves.push_back({true, static_cast<std::uint32_t>(code / 2), from, 0, to});
    } else {
      SymbolId sym = static_cast<SymbolId>((code / 2) / n);
      moves.push_back({false, 0, from, sym, to});
    }
    cur = prev;
  }
  std::reverse(moves.begin(), moves.end());

  RetrievedWord result;
  for (const Move& m : moves) {
    if (m.is_eps) {
      trace.expand_edge(m.eps_id, result.path, step_cap);
    } else {
      result.path.push_back({true, m.from, m.sym, m.to});
    }
    if (result.path.size() > step_cap) {
      throw SearchExhausted("witness expansion exceeded the step budget");
    }
  }
  for (const auto& step : result.path) {
    if (step.is_letter) result.word.push_back(step.symbol);
  }
  // The expansion inserts only cancelling detours, so this always holds.
  if (free_reduce_word(ga, result.word) != target) {
    throw std::logic_error("retrieved word does not reduce to the requested element");
  }
  return result;
}

}  // namespace regcone
