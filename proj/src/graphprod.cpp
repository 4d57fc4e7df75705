#include "regcone/graphprod.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

#include "regcone/automaton_io.hpp"

namespace regcone {

namespace {

std::vector<std::string> generator_names(const GroupAlphabet& ga) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ga.rank(); ++i) names.push_back(ga.full().name(ga.generator(i)));
  return names;
}

}  // namespace

GraphPresentation::GraphPresentation(std::vector<std::string> vertices,
                                     std::vector<std::pair<std::string, std::string>> edges,
                                     std::vector<GroupAlphabet> vertex_alphabets,
                                     std::vector<Automaton> vertex_geodesics)
    : vertices_(std::move(vertices)),
      vertex_alphabets_(std::move(vertex_alphabets)),
      vertex_geodesics_(std::move(vertex_geodesics)),
      combined_(std::vector<std::string>{}) {
  if (vertices_.empty()) throw std::invalid_argument("graph needs at least one vertex");
  std::map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (!index.emplace(vertices_[v], v).second) {
      throw std::invalid_argument("duplicate vertex: " + vertices_[v]);
    }
  }
  if (vertex_alphabets_.size() != vertices_.size() ||
      vertex_geodesics_.size() != vertices_.size()) {
    throw std::invalid_argument("need one alphabet and one geodesic automaton per vertex");
  }

  adjacency_.assign(vertices_.size(), std::vector<char>(vertices_.size(), 0));
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw std::invalid_argument("edge mentions unknown vertex: " + a + " " + b);
    }
    if (ia->second == ib->second) throw std::invalid_argument("loop edge at " + a);
    if (adjacency_[ia->second][ib->second]) {
      throw std::invalid_argument("duplicate edge: " + a + " " + b);
    }
    adjacency_[ia->second][ib->second] = adjacency_[ib->second][ia->second] = 1;
  }

  // The combined alphabet lists each vertex's generators in vertex order, so
  // a vertex's symbols form a contiguous block matching its own layout.
  std::vector<std::string> all_gens;
  std::vector<std::size_t> offsets;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const GroupAlphabet& ga = vertex_alphabets_[v];
    if (ga.rank() == 0) {
      throw std::invalid_argument("vertex " + vertices_[v] + " has no generators");
    }
    if (ga.full().find("$")) {
      throw std::invalid_argument("'$' is reserved for projections");
    }
    std::vector<std::string> names = generator_names(ga);
    if (!(GroupAlphabet(names).full() == ga.full())) {
      throw std::invalid_argument("vertex alphabet must interleave generators with inverses");
    }
    offsets.push_back(2 * all_gens.size());
    all_gens.insert(all_gens.end(), names.begin(), names.end());
  }
  try {
    combined_ = GroupAlphabet(all_gens);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("vertex alphabets collide: ") + e.what());
  }
  symbol_vertex_.assign(combined_.full().size(), 0);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    for (std::size_t j = 0; j < vertex_alphabets_[v].full().size(); ++j) {
      symbol_vertex_[offsets[v] + j] = v;
    }
  }

  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const GroupAlphabet& ga = vertex_alphabets_[v];
    const Automaton& geo = vertex_geodesics_[v];
    if (!(geo.alphabet() == ga.full())) {
      throw std::invalid_argument("geodesic automaton alphabet mismatch at " + vertices_[v]);
    }
    if (!accepts(geo, Word{})) {
      throw std::invalid_argument("geodesic language at " + vertices_[v] +
                                  " must contain the empty word");
    }
    if (!equivalent(prefix_closure(geo), geo)) {
      throw std::invalid_argument("geodesic language at " + vertices_[v] +
                                  " must be prefix-closed");
    }

    std::vector<std::string> proj_names = ga.full().symbols();
    proj_names.push_back("$");
    Alphabet proj(proj_names);
    // Same symbol ids, wider alphabet.
    Automaton lifted(proj, geo.state_count(), geo.starts(), geo.accepts(), geo.transitions(),
                     geo.epsilons());
    SymbolId dollar_id = static_cast<SymbolId>(proj.size() - 1);
    Automaton dollar = Automaton::single_word(proj, {dollar_id});
    Automaton blocks = trim(concat(lifted, star(concat(dollar, lifted))));
    projection_alphabets_.push_back(std::move(proj));
    geodesic_blocks_.push_back(std::move(blocks));
  }
}

std::size_t GraphPresentation::vertex_index(const std::string& name) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v] == name) return v;
  }
  throw std::invalid_argument("unknown vertex: " + name);
}

bool GraphPresentation::adjacent(std::size_t u, std::size_t v) const {
  return adjacency_.at(u).at(v);
}

GraphPresentation GraphPresentation::parse(std::istream& in,
                                           const std::filesystem::path& base_dir) {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, std::vector<std::string>> gens;
  std::map<std::string, std::pair<std::string, std::string>> geo;  // vertex -> (kind, path)

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ls(body);
    std::string key;
    if (!(ls >> key)) continue;

    auto err = [&](const std::string& msg) {
      return ParseError("line " + std::to_string(line_no) + ": " + msg);
    };

    if (key == "vertices:") {
      if (!vertices.empty()) throw err("duplicate vertices line");
      std::string v;
      while (ls >> v) vertices.push_back(v);
      if (vertices.empty()) throw err("vertices: needs at least one name");
    } else if (key == "edges:") {
      std::string rest;
      std::getline(ls, rest);
      std::istringstream parts(rest);
      std::string pair_text;
      while (std::getline(parts, pair_text, ';')) {
        std::istringstream ps(pair_text);
        std::string a, b, extra;
        if (!(ps >> a)) continue;  // allow a trailing ';'
        if (!(ps >> b) || (ps >> extra)) throw err("edge must name exactly two vertices");
        edges.emplace_back(a, b);
      }
    } else if (key == "gens" || key == "geo") {
      std::string tagged;
      if (!(ls >> tagged) || tagged.empty() || tagged.back() != ':') {
        throw err(key + " needs a 'vertex:' field");
      }
      std::string vertex = tagged.substr(0, tagged.size() - 1);
      if (key == "gens") {
        std::vector<std::string> names;
        std::string g;
        while (ls >> g) names.push_back(g);
        if (names.empty()) throw err("gens needs at least one generator");
        if (!gens.emplace(vertex, std::move(names)).second) {
          throw err("duplicate gens for " + vertex);
        }
      } else {
        std::string kind;
        if (!(ls >> kind)) throw err("geo needs 'raag' or 'file PATH'");
        std::string path;
        if (kind == "raag") {
          std::string extra;
          if (ls >> extra) throw err("unexpected token after raag");
        } else if (kind == "file") {
          if (!(ls >> path)) throw err("geo file needs a path");
        } else {
          throw err("unknown geodesic kind '" + kind + "'");
        }
        if (!geo.emplace(vertex, std::make_pair(kind, path)).second) {
          throw err("duplicate geo for " + vertex);
        }
      }
    } else {
      throw err("unknown key '" + key + "'");
    }
  }

  if (vertices.empty()) throw ParseError("missing vertices: line");
  std::vector<GroupAlphabet> alphabets;
  std::vector<Automaton> geodesics;
  for (const std::string& v : vertices) {
    auto git = gens.find(v);
    if (git == gens.end()) throw ParseError("missing gens for vertex " + v);
    GroupAlphabet ga(git->second);
    auto ait = geo.find(v);
    if (ait == geo.end()) throw ParseError("missing geo for vertex " + v);
    if (ait->second.first == "raag") {
      if (ga.rank() != 1) {
        throw ParseError("geo raag needs exactly one generator at vertex " + v);
      }
      geodesics.push_back(raag_vertex_geodesics(git->second[0]));
    } else {
      Automaton aut = parse_automaton_file(base_dir / ait->second.second);
      if (!(aut.alphabet() == ga.full())) {
        throw ParseError("geodesic automaton alphabet mismatch at vertex " + v);
      }
      geodesics.push_back(std::move(aut));
    }
    alphabets.push_back(std::move(ga));
  }
  for (const auto& [v, unused] : gens) {
    (void)unused;
    if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) {
      throw ParseError("gens for unknown vertex " + v);
    }
  }
  for (const auto& [v, unused] : geo) {
    (void)unused;
    if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) {
      throw ParseError("geo for unknown vertex " + v);
    }
  }

  try {
    return GraphPresentation(std::move(vertices), std::move(edges), std::move(alphabets),
                             std::move(geodesics));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

GraphPresentation GraphPresentation::parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path.string());
  return parse(in, path.parent_path());
}

std::optional<std::size_t> graph_distance(const GraphPresentation& gp, std::size_t s,
                                          std::size_t t) {
  if (s >= gp.vertex_count() || t >= gp.vertex_count()) {
    throw std::invalid_argument("vertex index out of range");
  }
  std::vector<std::size_t> dist(gp.vertex_count(), SIZE_MAX);
  std::queue<std::size_t> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    if (v == t) return dist[v];
    for (std::size_t w = 0; w < gp.vertex_count(); ++w) {
      if (gp.adjacent(v, w) && dist[w] == SIZE_MAX) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> graph_diameter(const GraphPresentation& gp) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < gp.vertex_count(); ++s) {
    for (std::size_t t = s + 1; t < gp.vertex_count(); ++t) {
      auto d = graph_distance(gp, s, t);
      if (!d) return std::nullopt;
      best = std::max(best, *d);
    }
  }
  return best;
}

bool diameter_at_least(const GraphPresentation& gp, std::size_t d) {
  auto diam = graph_diameter(gp);
  return !diam || *diam >= d;
}

Word pi_projection(const GraphPresentation& gp, std::size_t v, const Word& w) {
  if (v >= gp.vertex_count()) throw std::invalid_argument("vertex index out of range");
  const Alphabet& combined = gp.combined_alphabet();
  std::size_t offset = 0;
  for (std::size_t u = 0; u < v; ++u) offset += gp.vertex_alphabet(u).full().size();
  Word out;
  for (SymbolId s : w) {
    if (s >= combined.size()) throw std::invalid_argument("letter outside the combined alphabet");
    std::size_t owner = gp.vertex_of_symbol(s);
    if (owner == v) {
      out.push_back(static_cast<SymbolId>(s - offset));
    } else if (!gp.adjacent(owner, v)) {
      out.push_back(gp.dollar(v));
    }
  }
  return out;
}

bool is_geodesic(const GraphPresentation& gp, const Word& w) {
  for (std::size_t v = 0; v < gp.vertex_count(); ++v) {
    if (!accepts(gp.geodesic_blocks(v), pi_projection(gp, v, w))) return false;
  }
  return true;
}

Automaton geo_automaton(const GraphPresentation& gp) {
  std::optional<Automaton> result;
  for (std::size_t v = 0; v < gp.vertex_count(); ++v) {
    std::size_t offset = 0;
    for (std::size_t u = 0; u < v; ++u) offset += gp.vertex_alphabet(u).full().size();
    std::vector<Word> map(gp.combined_alphabet().size());
    for (SymbolId s = 0; s < gp.combined_alphabet().size(); ++s) {
      std::size_t owner = gp.vertex_of_symbol(s);
      if (owner == v) {
        map[s] = {static_cast<SymbolId>(s - offset)};
      } else if (gp.adjacent(owner, v)) {
        map[s] = {};
      } else {
        map[s] = {gp.dollar(v)};
      }
    }
    Automaton pre = hom_preimage(gp.geodesic_blocks(v), gp.combined_alphabet(), map);
    result = result ? trim(intersect(*result, pre)) : std::move(pre);
  }
  return std::move(*result);
}

std::pair<Word, Word> conjugate_witness_pair(const GraphPresentation& gp, const Word& w, std::size_t t,
                                       std::size_t u, SymbolId x, SymbolId y) {
  if (t >= gp.vertex_count() || u >= gp.vertex_count() || t == u) {
    throw std::invalid_argument("need two distinct vertices");
  }
  auto dist = graph_distance(gp, t, u);
  if (dist && *dist < 3) {
    throw std::invalid_argument("vertices must be at distance at least 3");
  }
  if (x >= gp.combined_alphabet().size() || gp.vertex_of_symbol(x) != t) {
    throw std::invalid_argument("x must be a letter of the first vertex");
  }
  if (y >= gp.combined_alphabet().size() || gp.vertex_of_symbol(y) != u) {
    throw std::invalid_argument("y must be a letter of the second vertex");
  }
  // Nontrivial single letters are exactly the geodesic ones.
  if (!accepts(gp.geodesic_blocks(t), pi_projection(gp, t, {x})) ||
      !accepts(gp.geodesic_blocks(u), pi_projection(gp, u, {y}))) {
    throw std::invalid_argument("x and y must be geodesic letters");
  }
  if (!is_geodesic(gp, w)) throw std::invalid_argument("w must be geodesic");

  Word pt = pi_projection(gp, t, w);
  if (!pt.empty() && pt.back() != gp.dollar(t)) {
    std::swap(t, u);
    std::swap(x, y);
  }

  const GroupAlphabet& ga = gp.combined_group_alphabet();
  Word w_inv = word_inverse(ga, w);
  auto build = [&](SymbolId middle) {
    Word out = w;
    out.push_back(x);
    out.push_back(middle);
    out.push_back(ga.inverse(x));
    out.insert(out.end(), w_inv.begin(), w_inv.end());
    return out;
  };
  Word plus = build(y);
  Word minus = build(ga.inverse(y));
  if (!is_geodesic(gp, plus) || !is_geodesic(gp, minus)) {
    throw std::logic_error("conjugate witnesses failed the geodesic criterion");
  }
  return {plus, minus};
}

Automaton raag_vertex_geodesics(const std::string& generator) {
  GroupAlphabet ga({generator});
  SymbolId a = ga.generator(0);
  SymbolId ainv = ga.inverse(a);
  std::vector<Transition> trans = {{0, a, 1}, {1, a, 1}, {0, ainv, 2}, {2, ainv, 2}};
  return Automaton(ga.full(), 3, {0}, {0, 1, 2}, std::move(trans));
}

}  // namespace regcone
