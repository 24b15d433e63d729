#ifndef HAMGRAPH_GRAPH_HPP
#define HAMGRAPH_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hamgraph {

struct Violation {
  std::string code;
  std::string message;
};

struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg) : std::runtime_error(msg), code(std::move(c)) {}
};

struct Edge {
  long long label = 1;  // m >= 1
  Rat length;           // > 0, difference of endpoint moment values
};

struct Chain {
  std::vector<Edge> edges;  // bottom (min side) to top (max side)
  size_t size() const { return edges.size(); }
  Rat sum_lengths() const;
  std::vector<long long> labels() const;
};

struct ExtremalComponent {
  bool fat = false;
  Rat height;
  Rat area;  // meaningful iff fat, must be > 0
};

struct ExtendedGraph {
  long long genus = 0;
  ExtremalComponent min, max;
  std::vector<Chain> chains;

  size_t k() const { return chains.size(); }
  size_t total_edges() const;
  long long label(size_t i, size_t j) const { return chains[i - 1].edges[j - 1].label; }
  const Rat& length(size_t i, size_t j) const { return chains[i - 1].edges[j - 1].length; }
  size_t chain_len(size_t i) const { return chains[i - 1].size(); }
  // height of interior vertex v_{i,j} (1-based, 1 <= j <= l_i - 1)
  Rat vertex_height(size_t i, size_t j) const;
  Rat total_height() const { return max.height - min.height; }

  int fat_count() const { return (min.fat ? 1 : 0) + (max.fat ? 1 : 0); }
  long long iso_count() const;  // isolated fixed points (interior + isolated extremes)
  long long euler() const;      // iso + sum over fat of (2 - 2g)
};

// Fixed components of the graph, Min / Max / Interior(i, j).
struct FixedComponent {
  enum Kind { Min = 0, Max = 1, Interior = 2 };
  Kind kind = Min;
  size_t i = 0, j = 0;  // 1-based, Interior only

  friend bool operator==(const FixedComponent& a, const FixedComponent& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j;
  }
  friend bool operator<(const FixedComponent& a, const FixedComponent& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
  std::string name() const;  // "min", "max", "v(i,j)"
};

std::vector<FixedComponent> fixed_components(const ExtendedGraph& g);
bool is_isolated(const ExtendedGraph& g, const FixedComponent& f);

// Unordered weight pair at an isolated fixed point.
struct WeightPair {
  long long a = 0, b = 0;  // stored sorted a <= b
  WeightPair() = default;
  WeightPair(long long x, long long y) : a(std::min(x, y)), b(std::max(x, y)) {}
  friend bool operator==(const WeightPair& p, const WeightPair& q) { return p.a == q.a && p.b == q.b; }
  friend bool operator<(const WeightPair& p, const WeightPair& q) {
    return p.a != q.a ? p.a < q.a : p.b < q.b;
  }
};
using WeightMultiset = std::vector<WeightPair>;  // kept sorted

// chain ordering convention; sorts in place
void canonicalize(ExtendedGraph& g);
bool canonical_equal(const ExtendedGraph& a, const ExtendedGraph& b);
std::string canonical_key(const ExtendedGraph& g);

std::vector<Violation> validate(const ExtendedGraph& g);
bool is_valid(const ExtendedGraph& g);

// (e_min, e_max) per the moment-data formulae; requires a structurally
// sound graph but not full validity.
std::pair<Rat, Rat> extremal_self_intersections(const ExtendedGraph& g);

// interior isolated points p as (height, 1/(m_p n_p)) pairs
std::vector<std::pair<Rat, Rat>> interior_point_data(const ExtendedGraph& g);

long long poincare_rank(const ExtendedGraph& g, long long q);

WeightMultiset isotropy_weights(const ExtendedGraph& g);
WeightPair weights_at(const ExtendedGraph& g, const FixedComponent& f);

// {(i,1) : i >= 3} iff exactly one fat extreme and m_{2,1} >= 2
std::set<std::pair<size_t, size_t>> ephemeral_edges(const ExtendedGraph& g);
bool is_ephemeral(const ExtendedGraph& g, size_t i, size_t j);

// a chain is trivial if it is a single label-1 edge spanning min to max
bool is_trivial_chain(const Chain& c);

// --- decorated input ------------------------------------------------------

struct DecoratedVertex {
  std::string id;
  Rat height;
};

struct DecoratedEdge {
  long long label = 2;
  std::string from, to;  // vertex id, or "min" / "max"
};

struct DecoratedInput {
  long long genus = 0;
  ExtremalComponent min, max;
  std::vector<DecoratedVertex> vertices;  // interior isolated vertices
  std::vector<DecoratedEdge> edges;       // label >= 2
};

ExtendedGraph build_extended(const DecoratedInput& in, std::vector<std::string>* warnings = nullptr);

// forgetful view: drop label-1 edges, keep interior vertices and >1 edges
DecoratedInput decorated_view(const ExtendedGraph& g);

// --- io --------------------------------------------------------------------

// Parses the JSON graph file format (chains variant or decorated
// vertices/edges variant). Applies the storage conventions: min height
// translated to 0 and a single fat minimum flipped to the top, each with a
// warning. Output is canonically sorted but not validated.
ExtendedGraph parse_graph(const std::string& text, std::vector<std::string>* warnings = nullptr);

std::string graph_to_json(const ExtendedGraph& g);

// upside-down copy (moment map negated and renormalized), canonicalized
ExtendedGraph reversed(const ExtendedGraph& g);

// normalize min height to 0 (translation)
void normalize_heights(ExtendedGraph& g);

}  // namespace hamgraph

#endif
