#ifndef HAMGRAPH_RECONSTRUCT_HPP
#define HAMGRAPH_RECONSTRUCT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dull.hpp"
#include "graph.hpp"

namespace hamgraph {

// Abstract algebraic data of an action: opaque degree-2 generator ids with
// their intersection pairing, markers for the extremal classes, and
// optionally the symplectic pairings.
struct AlgebraicInput {
  std::vector<std::string> ids;  // the generator set S (opaque)
  bool fat_min = false, fat_max = false;
  long long genus = 0;
  // pairing uses ids plus the reserved names "tau_min" / "tau_max"
  std::map<std::pair<std::string, std::string>, BigInt> pairing;
  bool has_omega = false;
  std::map<std::string, Rat> omega;   // per generator id
  Rat omega_tau_min, omega_tau_max;   // areas, meaningful when fat

  BigInt pair(const std::string& a, const std::string& b) const;
};

// the xi data of a graph; ids are opaque ("e1", "e2", ... optionally shuffled)
AlgebraicInput algebraic_input(const ExtendedGraph& g, bool with_omega, unsigned shuffle_seed = 0);

DullGraph recover_dull(const AlgebraicInput& in);
ExtendedGraph recover_decorated(const AlgebraicInput& in);

AlgebraicInput parse_algebraic_input(const std::string& json_text);
std::string algebraic_input_to_json(const AlgebraicInput& in);

}  // namespace hamgraph

#endif
