#include "regcone/conecheck.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace regcone {

namespace {

ReducedLang reduced_of(const GroupAlphabet& ga, const SaturationTrace& trace) {
  return ReducedLang::certify(ga, trim(intersect(trace.saturated, reduced_universe(ga))));
}

std::vector<Word> involution_map(const GroupAlphabet& ga) {
  std::vector<Word> map(ga.full().size());
  for (SymbolId s = 0; s < ga.full().size(); ++s) map[s] = Word{ga.inverse(s)};
  return map;
}

GroupElement conjugate_by(const GroupAlphabet& ga, const GroupElement& g, SymbolId letter) {
  Word w = g.word();
  w.push_back(letter);
  Word inv = word_inverse(ga, g.word());
  w.insert(w.end(), inv.begin(), inv.end());
  return GroupElement::reduce(ga, w);
}

Word must_retrieve(const GroupAlphabet& ga, const Automaton& a, const SaturationTrace& trace,
                   const GroupElement& g) {
  auto rw = find_word_reducing_to(ga, a, trace, g);
  if (!rw) throw std::logic_error("membership held but no witness word was found");
  return rw->word;
}

// States of a reachable by reading w from the start states, epsilon-closed.
std::vector<State> states_after(const Automaton& a, const Word& w) {
  std::vector<std::vector<std::pair<SymbolId, State>>> out(a.state_count());
  std::vector<std::vector<State>> eps(a.state_count());
  for (const Transition& t : a.transitions()) out[t.from].emplace_back(t.symbol, t.to);
  for (const auto& [p, q] : a.epsilons()) eps[p].push_back(q);
  auto close = [&](std::vector<char>& mask) {
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
  };
  std::vector<char> cur(a.state_count(), 0);
  for (State s : a.starts()) cur[s] = 1;
  close(cur);
  for (SymbolId letter : w) {
    std::vector<char> next(a.state_count(), 0);
    for (State s = 0; s < cur.size(); ++s) {
      if (!cur[s]) continue;
      for (const auto& [sym, to] : out[s])
        if (sym == letter) next[to] = 1;
    }
    close(next);
    cur = next;
  }
  std::vector<State> seeds;
  for (State s = 0; s < cur.size(); ++s)
    if (cur[s]) seeds.push_back(s);
  return seeds;
}

// Letter whose factor differs from the last syllable of g, so that
// multiplying on the right strictly grows the syllable length. For the
// identity any letter qualifies; the first generator is used. Rank one is
// abelian and the conjugate pair is the generator pair no matter the letter.
SymbolId extending_letter(const GroupAlphabet& ga, const GroupElement& g) {
  if (g.is_identity() || ga.rank() < 2) return ga.generator(0);
  FreeProductAlphabet fp = FreeProductAlphabet::split_first_generator(ga);
  int last_part = fp.part_of(g.word().back());
  for (std::size_t i = 0; i < ga.rank(); ++i) {
    SymbolId gen = ga.generator(i);
    if (fp.part_of(gen) != last_part) return gen;
  }
  throw std::logic_error("no generator in the opposite factor");
}

std::variant<Word, ConeVerdict> cover_impl(const GroupAlphabet& ga, const Automaton& a,
                                           const SaturationTrace& trace, const ReducedLang& p,
                                           const GroupElement& g) {
  SymbolId x = extending_letter(ga, g);
  GroupElement c_plus = conjugate_by(ga, g, x);
  GroupElement c_minus = conjugate_by(ga, g, ga.inverse(x));
  bool mp = element_in(p, c_plus);
  bool mm = element_in(p, c_minus);
  if (mp && mm) {
    return ConeVerdict::violated(
        ConeViolation::DisjointnessFail,
        {must_retrieve(ga, a, trace, c_plus), must_retrieve(ga, a, trace, c_minus)});
  }
  if (!mp && !mm) {
    return ConeVerdict::violated(ConeViolation::TotalityFail, {c_plus.word()});
  }
  const GroupElement& positive = mp ? c_plus : c_minus;
  Word w = must_retrieve(ga, a, trace, positive);
  if (g.is_identity()) return Word{};
  FreeProductAlphabet fp = FreeProductAlphabet::split_first_generator(ga);
  auto [i, include_b] = syllable_target(fp, g.word());
  return prefix_for_element(fp, w, i, include_b);
}

}  // namespace

const char* to_string(ConeViolation v) {
  switch (v) {
    case ConeViolation::None: return "None";
    case ConeViolation::IdentityInCone: return "IdentityInCone";
    case ConeViolation::DisjointnessFail: return "DisjointnessFail";
    case ConeViolation::TotalityFail: return "TotalityFail";
    case ConeViolation::SemigroupFail: return "SemigroupFail";
  }
  return "unknown";
}

void write_verdict(std::ostream& out, const GroupAlphabet& ga, const ConeVerdict& verdict) {
  if (verdict.status == ConeStatus::IsCone) {
    out << "verdict: IsCone\n";
    return;
  }
  out << "verdict: NotCone\n";
  out << "violation: " << to_string(verdict.violation) << '\n';
  for (const Word& w : verdict.witnesses) {
    out << "witness: " << format_word(ga.full(), w) << '\n';
  }
}

bool verify_verdict(const GroupAlphabet& ga, const Automaton& a, const ConeVerdict& verdict) {
  if (verdict.status == ConeStatus::IsCone) return true;
  switch (verdict.violation) {
    case ConeViolation::IdentityInCone: {
      if (verdict.witnesses.size() != 1) return false;
      const Word& w = verdict.witnesses[0];
      return accepts(a, w) && free_reduce_word(ga, w).empty();
    }
    case ConeViolation::DisjointnessFail: {
      if (verdict.witnesses.size() != 2) return false;
      const Word& w1 = verdict.witnesses[0];
      const Word& w2 = verdict.witnesses[1];
      Word r1 = free_reduce_word(ga, w1);
      Word r2 = free_reduce_word(ga, w2);
      return accepts(a, w1) && accepts(a, w2) && !r1.empty() &&
             r1 == word_inverse(ga, r2);
    }
    case ConeViolation::TotalityFail: {
      if (verdict.witnesses.size() != 1) return false;
      const Word& gw = verdict.witnesses[0];
      if (gw.empty()) return false;
      if (free_reduce_word(ga, gw) != gw) return false;
      ReducedLang p = benois_reduce(ga, a);
      GroupElement g = GroupElement::from_reduced(ga, gw);
      return !element_in(p, g) && !element_in(p, elem_inverse(ga, g));
    }
    case ConeViolation::SemigroupFail: {
      if (verdict.witnesses.size() != 2) return false;
      const Word& w1 = verdict.witnesses[0];
      const Word& w2 = verdict.witnesses[1];
      if (!accepts(a, w1) || !accepts(a, w2)) return false;
      Word prod = w1;
      prod.insert(prod.end(), w2.begin(), w2.end());
      ReducedLang p = benois_reduce(ga, a);
      return !element_in(p, GroupElement::reduce(ga, prod));
    }
    case ConeViolation::None: return false;
  }
  return false;
}

ConeVerdict check_cone_axioms(const GroupAlphabet& ga, const Automaton& a) {
  if (!(a.alphabet() == ga.full())) {
    throw std::invalid_argument("automaton alphabet does not match the group alphabet");
  }
  SaturationTrace trace = benois_saturate(ga, a);
  ReducedLang p = reduced_of(ga, trace);

  if (accepts(p.automaton(), Word{})) {
    return ConeVerdict::violated(ConeViolation::IdentityInCone,
                                 {must_retrieve(ga, a, trace, GroupElement{})});
  }

  ReducedLang p_inv = rs_inverse(p);
  ReducedLang both = rs_intersect(p, p_inv);
  if (auto el = shortest_word(both.automaton())) {
    GroupElement g = GroupElement::from_reduced(ga, *el);
    return ConeVerdict::violated(ConeViolation::DisjointnessFail,
                                 {must_retrieve(ga, a, trace, g),
                                  must_retrieve(ga, a, trace, elem_inverse(ga, g))});
  }

  ReducedLang covered = rs_union(
      rs_union(p, p_inv), ReducedLang::certify(ga, Automaton::epsilon_only(ga.full())));
  ReducedLang missing = rs_complement(covered);
  if (auto el = shortest_word(missing.automaton())) {
    return ConeVerdict::violated(ConeViolation::TotalityFail, {*el});
  }

  Automaton two = concat(a, a);
  SaturationTrace trace2 = benois_saturate(ga, two);
  ReducedLang products = reduced_of(ga, trace2);
  ReducedLang escaped = rs_intersect(products, rs_complement(p));
  if (auto el = shortest_word(escaped.automaton())) {
    auto rw = find_word_reducing_to(ga, two, trace2, GroupElement::from_reduced(ga, *el));
    if (!rw) throw std::logic_error("product member lost during retrieval");
    // Split the retrieved path at the unique eps move bridging the two
    // copies of a inside concat(a, a).
    State n = a.state_count();
    Word w1, w2;
    bool crossed = false;
    for (const auto& step : rw->path) {
      if (!crossed && !step.is_letter && step.from < n && step.to >= n) {
        crossed = true;
        continue;
      }
      if (step.is_letter) (crossed ? w2 : w1).push_back(step.symbol);
    }
    if (!crossed) throw std::logic_error("concatenation path never crossed the copy boundary");
    return ConeVerdict::violated(ConeViolation::SemigroupFail, {w1, w2});
  }

  return ConeVerdict::cone();
}

FreeProductAlphabet::FreeProductAlphabet(GroupAlphabet ga, std::vector<int> parts)
    : ga_(std::move(ga)), parts_(std::move(parts)) {
  if (parts_.size() != ga_.rank()) {
    throw std::invalid_argument("need one factor assignment per generator");
  }
  bool seen[2] = {false, false};
  for (int p : parts_) {
    if (p != 0 && p != 1) throw std::invalid_argument("factor must be 0 or 1");
    seen[p] = true;
  }
  if (!seen[0] || !seen[1]) throw std::invalid_argument("both factors must be non-empty");
}

FreeProductAlphabet FreeProductAlphabet::split_first_generator(const GroupAlphabet& ga) {
  if (ga.rank() < 2) throw std::invalid_argument("free product split needs rank >= 2");
  std::vector<int> parts(ga.rank(), 1);
  parts[0] = 0;
  return FreeProductAlphabet(ga, std::move(parts));
}

SyllableSplit syllables_of(const FreeProductAlphabet& fp, const Word& reduced) {
  SyllableSplit split;
  std::size_t pos = 0;
  while (pos < reduced.size()) {
    int part = fp.part_of(reduced[pos]);
    std::size_t start = pos;
    while (pos < reduced.size() && fp.part_of(reduced[pos]) == part) ++pos;
    split.syllables.emplace_back(reduced.begin() + start, reduced.begin() + pos);
    split.parts.push_back(part);
  }
  return split;
}

std::pair<std::size_t, bool> syllable_target(const FreeProductAlphabet& fp, const Word& reduced) {
  if (reduced.empty()) throw std::invalid_argument("the identity has no syllable target");
  SyllableSplit split = syllables_of(fp, reduced);
  // Position within the padded alternating sequence a_1 b_1 a_2 b_2 ...
  std::size_t padded_pos = split.parts.size() - 1 + (split.parts.front() == 1 ? 1 : 0);
  if (split.parts.back() == 0) {
    return {padded_pos / 2 + 1, false};
  }
  return {(padded_pos - 1) / 2 + 1, true};
}

Word prefix_for_element(const FreeProductAlphabet& fp, const Word& w, std::size_t i,
                        bool include_b) {
  const GroupAlphabet& ga = fp.group_alphabet();
  for (SymbolId s : w) {
    if (s >= ga.full().size()) throw std::invalid_argument("letter outside the group alphabet");
  }

  // Maximal single-factor blocks of w, each evaluated in its factor.
  struct Item {
    Word value;
    int part;
    std::size_t end_offset;
  };
  std::vector<Item> items;
  std::size_t pos = 0;
  while (pos < w.size()) {
    int part = fp.part_of(w[pos]);
    std::size_t start = pos;
    while (pos < w.size() && fp.part_of(w[pos]) == part) ++pos;
    Word block(w.begin() + start, w.begin() + pos);
    items.push_back({free_reduce_word(ga, block), part, pos});
  }

  // Drop trivial factors and fuse neighbours from the same factor until the
  // sequence is the reduced factorization. Each fused item remembers the end
  // offset of its last contributing block, which is where w gets cut.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Item> kept;
    for (Item& item : items) {
      if (item.value.empty()) {
        changed = true;
      } else {
        kept.push_back(std::move(item));
      }
    }
    items.clear();
    for (Item& item : kept) {
      if (!items.empty() && items.back().part == item.part) {
        Word fused = items.back().value;
        fused.insert(fused.end(), item.value.begin(), item.value.end());
        items.back().value = free_reduce_word(ga, fused);
        items.back().end_offset = item.end_offset;
        changed = true;
      } else {
        items.push_back(std::move(item));
      }
    }
  }

  std::vector<Item> padded;
  if (!items.empty() && items.front().part == 1) padded.push_back({Word{}, 0, 0});
  for (Item& item : items) padded.push_back(std::move(item));
  if (!padded.empty() && padded.back().part == 0) {
    padded.push_back({Word{}, 1, padded.back().end_offset});
  }

  std::size_t pair_count = padded.size() / 2;
  if (i < 1 || i > pair_count) {
    throw std::invalid_argument("syllable index out of range");
  }
  std::size_t idx = 2 * (i - 1) + (include_b ? 1 : 0);
  std::size_t offset = padded[idx].end_offset;
  return Word(w.begin(), w.begin() + offset);
}

std::variant<Word, ConeVerdict> cover_by_prefixes(const GroupAlphabet& ga, const Automaton& a,
                                                  const GroupElement& g) {
  if (!(a.alphabet() == ga.full())) {
    throw std::invalid_argument("automaton alphabet does not match the group alphabet");
  }
  SaturationTrace trace = benois_saturate(ga, a);
  ReducedLang p = reduced_of(ga, trace);
  return cover_impl(ga, a, trace, p, g);
}

std::optional<ConeVerdict> pumping_witness(const GroupAlphabet& ga, const Automaton& a,
                                           const RefuteConfig& cfg) {
  if (cfg.max_ball_radius < 1 || cfg.max_t_search_length < 1) {
    throw std::invalid_argument("search bounds must be at least 1");
  }
  if (!(a.alphabet() == ga.full())) {
    throw std::invalid_argument("automaton alphabet does not match the group alphabet");
  }
  SaturationTrace trace = benois_saturate(ga, a);
  ReducedLang p = reduced_of(ga, trace);

  if (accepts(p.automaton(), Word{})) {
    return ConeVerdict::violated(ConeViolation::IdentityInCone,
                                 {must_retrieve(ga, a, trace, GroupElement{})});
  }

  std::size_t radius =
      std::min<std::size_t>(a.state_count() > 0 ? a.state_count() - 1 : 0, cfg.max_ball_radius);
  std::vector<Word> ball = enumerate_words(reduced_universe(ga), radius);

  for (const Word& conj_word : enumerate_words(reduced_universe(ga), cfg.max_t_search_length)) {
    GroupElement g = GroupElement::from_reduced(ga, conj_word);
    SymbolId x = extending_letter(ga, g);
    GroupElement c_plus = conjugate_by(ga, g, x);
    GroupElement c_minus = conjugate_by(ga, g, ga.inverse(x));
    bool mp = element_in(p, c_plus);
    bool mm = element_in(p, c_minus);
    if (mp && mm) {
      return ConeVerdict::violated(
          ConeViolation::DisjointnessFail,
          {must_retrieve(ga, a, trace, c_plus), must_retrieve(ga, a, trace, c_minus)});
    }
    if (!mp && !mm) {
      return ConeVerdict::violated(ConeViolation::TotalityFail, {c_plus.word()});
    }
    GroupElement t = mp ? c_plus : c_minus;

    // t must exceed every ball element in the order induced by p. Holes and
    // two-sided memberships found here are violations in their own right.
    bool dominant = true;
    std::optional<ConeVerdict> tripped;
    for (const Word& bw : ball) {
      GroupElement b = GroupElement::from_reduced(ga, bw);
      GroupElement d = elem_mul(ga, elem_inverse(ga, b), t);
      if (d.is_identity()) {
        dominant = false;
        break;
      }
      bool fwd = element_in(p, d);
      bool bwd = element_in(p, elem_inverse(ga, d));
      if (fwd && bwd) {
        tripped = ConeVerdict::violated(ConeViolation::DisjointnessFail,
                                        {must_retrieve(ga, a, trace, d),
                                         must_retrieve(ga, a, trace, elem_inverse(ga, d))});
        break;
      }
      if (!fwd && !bwd) {
        tripped = ConeVerdict::violated(ConeViolation::TotalityFail, {d.word()});
        break;
      }
      if (!fwd) {
        dominant = false;
        break;
      }
    }
    if (tripped) return tripped;
    if (!dominant) continue;

    auto covered = cover_impl(ga, a, trace, p, elem_inverse(ga, t));
    if (std::holds_alternative<ConeVerdict>(covered)) return std::get<ConeVerdict>(covered);
    Word w = std::get<Word>(covered);

    // Pump: wv is accepted for some completion shorter than the state count,
    // and then t^-1 v and its inverse are both represented.
    std::size_t comp_len = a.state_count() > 0 ? a.state_count() - 1 : 0;
    Automaton completions(a.alphabet(), a.state_count(), states_after(a, w), a.accepts(),
                          a.transitions(), a.epsilons());
    for (const Word& v : enumerate_words(completions, comp_len)) {
      GroupElement val = elem_mul(ga, elem_inverse(ga, t), GroupElement::reduce(ga, v));
      if (val.is_identity()) {
        throw std::logic_error("accepted word reduced to the identity after the identity check");
      }
      if (element_in(p, elem_inverse(ga, val))) {
        Word w1 = w;
        w1.insert(w1.end(), v.begin(), v.end());
        return ConeVerdict::violated(
            ConeViolation::DisjointnessFail,
            {w1, must_retrieve(ga, a, trace, elem_inverse(ga, val))});
      }
    }
  }
  return std::nullopt;
}

Automaton cone_to_full_language(const GroupAlphabet& ga, const Automaton& a) {
  if (!(a.alphabet() == ga.full())) {
    throw std::invalid_argument("automaton alphabet does not match the group alphabet");
  }
  Automaton inverses = hom_image(reverse(a), ga.full(), involution_map(ga));
  return union_langs(union_langs(a, Automaton::epsilon_only(ga.full())), inverses);
}

}  // namespace regcone
