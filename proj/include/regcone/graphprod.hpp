#ifndef REGCONE_GRAPHPROD_HPP
#define REGCONE_GRAPHPROD_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regcone/freegroup.hpp"

namespace regcone {

// A graph product: a finite simple graph with one generating alphabet and
// one geodesic automaton per vertex. Adjacent vertex groups commute.
//
// Validated on construction: the graph is simple, vertex alphabets are
// pairwise disjoint and free of the reserved marker '$', and every geodesic
// automaton contains the empty word and is prefix-closed.
class GraphPresentation {
 public:
  GraphPresentation(std::vector<std::string> vertices,
                    std::vector<std::pair<std::string, std::string>> edges,
                    std::vector<GroupAlphabet> vertex_alphabets,
                    std::vector<Automaton> vertex_geodesics);

  // Text format:
  //
  //   vertices: v1 v2 v3 v4
  //   edges: v1 v2; v2 v3; v3 v4
  //   gens v1: a1
  //   geo v1: raag            # or: geo v1: file path/to/geo.aut
  //
  // `raag` builds the infinite-cyclic geodesics for a single generator;
  // `file` paths are resolved against base_dir.
  static GraphPresentation parse(std::istream& in, const std::filesystem::path& base_dir);
  static GraphPresentation parse_file(const std::filesystem::path& path);

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
  std::size_t vertex_index(const std::string& name) const;
  bool adjacent(std::size_t u, std::size_t v) const;

  const GroupAlphabet& combined_group_alphabet() const { return combined_; }
  const Alphabet& combined_alphabet() const { return combined_.full(); }
  std::size_t vertex_of_symbol(SymbolId s) const { return symbol_vertex_.at(s); }

  const GroupAlphabet& vertex_alphabet(std::size_t v) const { return vertex_alphabets_.at(v); }
  const Automaton& vertex_geodesics(std::size_t v) const { return vertex_geodesics_.at(v); }

  // Y_v^{+-} followed by the marker '$'.
  const Alphabet& projection_alphabet(std::size_t v) const { return projection_alphabets_.at(v); }
  SymbolId dollar(std::size_t v) const {
    return static_cast<SymbolId>(projection_alphabets_.at(v).size() - 1);
  }
  // Geo_v ($ Geo_v)* over the projection alphabet.
  const Automaton& geodesic_blocks(std::size_t v) const { return geodesic_blocks_.at(v); }

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<char>> adjacency_;
  std::vector<GroupAlphabet> vertex_alphabets_;
  std::vector<Automaton> vertex_geodesics_;
  GroupAlphabet combined_;
  std::vector<std::size_t> symbol_vertex_;
  std::vector<Alphabet> projection_alphabets_;
  std::vector<Automaton> geodesic_blocks_;
};

// Shortest-path metric; nullopt is infinity (disconnected).
std::optional<std::size_t> graph_distance(const GraphPresentation& gp, std::size_t s,
                                          std::size_t t);
std::optional<std::size_t> graph_diameter(const GraphPresentation& gp);
// A disconnected graph counts as having diameter at least d for every d.
bool diameter_at_least(const GraphPresentation& gp, std::size_t d);

// Letterwise projection onto vertex v: keeps the letters of v, erases the
// letters of neighbours, and replaces everything else by '$'.
Word pi_projection(const GraphPresentation& gp, std::size_t v, const Word& w);

// Geodesic criterion: w is geodesic iff every projection splits into
// geodesic blocks of the vertex group separated by single '$' markers.
bool is_geodesic(const GraphPresentation& gp, const Word& w);

// The regular language of all geodesics, as the intersection of the
// projection preimages of the per-vertex block languages.
Automaton geo_automaton(const GraphPresentation& gp);

// The conjugate pair w x y x^-1 w^-1 and w x y^-1 x^-1 w^-1 built from a
// geodesic w and letters x, y of two vertices at distance >= 3; both words
// are geodesic and they represent mutually inverse nontrivial elements.
// Swaps the roles of the two vertices when the projection onto t ends with
// one of its own letters.
std::pair<Word, Word> conjugate_witness_pair(const GraphPresentation& gp, const Word& w, std::size_t t,
                                       std::size_t u, SymbolId x, SymbolId y);

// Geodesics of the infinite cyclic group on one generator: a^n and (a^)^n.
Automaton raag_vertex_geodesics(const std::string& generator);

}  // namespace regcone

#endif
