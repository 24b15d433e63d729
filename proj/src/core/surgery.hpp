#ifndef HAMGRAPH_SURGERY_HPP
#define HAMGRAPH_SURGERY_HPP

#include <map>
#include <string>
#include <vector>

#include "graph.hpp"
#include "localization.hpp"

namespace hamgraph {

ExtendedGraph minimal_cp2(long long m, long long n, const Rat& lambda);
ExtendedGraph minimal_hirzebruch(long long N, long long m, long long n, const Rat& beta, const Rat& f);
ExtendedGraph minimal_ruled(long long genus, const Rat& fiber, const Rat& base, long long e_min);

struct MinimalModelId {
  enum Kind { CP2, Hirzebruch, Ruled } kind = CP2;
  long long m = 0, n = 0, N = 0, genus = 0;
  Rat lambda;     // CP2
  Rat beta, f;    // Hirzebruch
  Rat fiber, base;  // Ruled
  int parity = 0;   // Ruled: self-intersection parity of a section
  std::string str() const;
};

struct BlowupSite {
  enum Kind {
    Interior,         // at interior vertex v_{i,j}
    IsolatedExtreme,  // at an isolated extreme; weights decide the move
    FatSurface        // at a point of a fat extreme surface
  } kind = Interior;
  bool at_max = true;  // extreme/fat kinds
  size_t i = 0, j = 0;  // Interior only
  std::string str() const;
};

struct BlowupRecord {
  BlowupSite site;  // in the pre-graph's canonical frame
  Rat lambda;
  int paper_type = 0;  // 1..4 transport row
  bool at_max = true;
  bool flip_after = false;     // reverse the replayed result
  bool internal_flip = false;  // the stored post is the reverse of the raw move
  size_t pre_chain = 0;     // chain receiving an inserted edge (types 1, 3)
  size_t pos = 0;           // 1-based index of the inserted edge after the move
  std::vector<size_t> chain_map;  // pre chain -> post chain (1-based); 0 = dropped padding
  size_t new_chain = 0;           // post index of an added chain (type 2)
  size_t dropped_pad = 0;         // pre index of a dropped padding chain
  size_t added_pad = 0;           // post index of a padding chain added on blowdown
  ExtendedGraph pre, post;
};

// Equivariant blowup of size lambda at the given site.  The result is
// stored in the canonical orientation (a single fat vertex at the top).
std::pair<ExtendedGraph, BlowupRecord> blowup(const ExtendedGraph& g, const BlowupSite& site,
                                              const Rat& lambda);

struct BlowdownTarget {
  bool fat = false;     // contract a fat extreme with self-intersection -1
  bool at_max = true;   // for fat targets
  size_t i = 0, j = 0;  // edge target otherwise
  std::string str() const;
};

// Castelnuovo move: contract a -1 feature.  The returned record replays:
// applying the recorded blowup to the result reproduces g.
std::pair<ExtendedGraph, BlowupRecord> blowdown(const ExtendedGraph& g, const BlowdownTarget& t);

// all currently blowdownable features, in the deterministic priority order
std::vector<BlowdownTarget> blowdown_candidates(const ExtendedGraph& g);

struct Reduction {
  MinimalModelId model;
  ExtendedGraph terminal;
  std::vector<BlowupRecord> records;  // in blowdown order
};

Reduction reduce_to_minimal(const ExtendedGraph& g);
// fold the recorded blowups back onto the terminal graph
ExtendedGraph replay(const Reduction& red);
ExtendedGraph replay_one(const ExtendedGraph& g, const BlowupRecord& rec);

struct GeneratorTransport {
  std::map<Gen, CohClass2> map;  // pre generators -> post classes
  CohClass2 exceptional;         // the exceptional class in the post graph
};

// symbol transport along one record (in the blowup direction pre -> post)
GeneratorTransport transport_generators(const BlowupRecord& rec);

// chain correspondence of reversed(): pre chain index -> chain index in reversed(g)
std::vector<size_t> reversal_chain_map(const ExtendedGraph& g);

}  // namespace hamgraph

#endif
