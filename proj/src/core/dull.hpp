#ifndef HAMGRAPH_DULL_HPP
#define HAMGRAPH_DULL_HPP

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace hamgraph {

// Maximal label>1 block of one chain, with its attachment data.
struct DullBlock {
  std::vector<long long> labels;  // canonical: free blocks stored as min(seq, reversed)
  bool attached_min = false;      // block starts at the first edge of its chain
  bool attached_max = false;      // block ends at the last edge
  bool free_interior() const { return !attached_min && !attached_max; }
  std::string str() const;
  friend bool operator==(const DullBlock& a, const DullBlock& b) {
    return a.labels == b.labels && a.attached_min == b.attached_min && a.attached_max == b.attached_max;
  }
  friend bool operator<(const DullBlock& a, const DullBlock& b);
};

struct DullExtreme {
  bool fat = false;
  long long self_int = 0;  // fat only
  friend bool operator==(const DullExtreme& a, const DullExtreme& b) {
    return a.fat == b.fat && (!a.fat || a.self_int == b.self_int);
  }
};

struct DullGraph {
  long long genus = 0;
  DullExtreme min, max;
  std::vector<DullBlock> blocks;  // sorted
  long long free_vertices = 0;    // interior vertices with a label-1 edge on both sides

  std::string key() const;
  friend bool operator==(const DullGraph& a, const DullGraph& b) { return a.key() == b.key(); }
};

DullGraph dull(const ExtendedGraph& g);
DullGraph dull_flip(const DullGraph& d);
// re-canonicalization (sorting, free-block orientation)
DullGraph canonical_dull(DullGraph d);

struct DullIso {
  bool flipped = false;  // global flip applied to the second graph
  // canonical-position pairing of the block multisets after the flip choice
  std::vector<std::pair<size_t, size_t>> block_pairs;
};

std::optional<DullIso> dull_isomorphic(const DullGraph& a, const DullGraph& b);

// first invariant separating the two dull graphs, for verdict reports
std::string dull_mismatch_witness(const DullGraph& a, const DullGraph& b);

}  // namespace hamgraph

#endif
