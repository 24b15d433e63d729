#ifndef HAMGRAPH_MORPHISMS_HPP
#define HAMGRAPH_MORPHISMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cohomology.hpp"
#include "dull.hpp"

namespace hamgraph {

// degree-2 generator-level map between two graphs' cohomologies
struct GeneratorMap {
  ExtendedGraph source, target;
  std::map<Gen, CohClass2> map;  // target classes
  int epsilon = +1;              // circle automorphism sign
  std::string name;
  bool rescaled = false;  // a partial flip rebalanced lengths

  CohClass2 apply(const CohClass2& c) const;
};

// throws if the map fails to send relations to relations, pi* to
// epsilon * pi*, or to preserve the intersection form
void verify_generator_map(const GeneratorMap& f);

GeneratorMap identity_map(const ExtendedGraph& g);
GeneratorMap compose(const GeneratorMap& second, const GeneratorMap& first);

std::pair<ExtendedGraph, GeneratorMap> full_flip(const ExtendedGraph& g);
std::pair<ExtendedGraph, GeneratorMap> symplectic_flip(const ExtendedGraph& g);
std::pair<ExtendedGraph, GeneratorMap> partial_flip(const ExtendedGraph& g, size_t chain);

struct WeakIsoVerdict {
  bool isomorphic = false;
  std::string witness;               // invariant separating the dull graphs
  std::vector<std::string> factors;  // move names in application order
  std::optional<GeneratorMap> map;   // the verified composite
};

WeakIsoVerdict weak_isomorphisms(const ExtendedGraph& g1, const ExtendedGraph& g2);

struct ObstructionVerdict {
  bool obstructed = false;
  std::string code;    // "census" or "weights"
  std::string reason;  // human-readable detail
};

ObstructionVerdict diffeo_obstruction(const ExtendedGraph& g1, const ExtendedGraph& g2);

// Bounded backtracking search for a module isomorphism over restriction
// images: a desk-scale oracle, not a decision procedure.
struct BruteSearch {
  enum Status { Found, NotFound, Inconclusive } status = NotFound;
  int epsilon = +1;
  long long nodes = 0;
};

BruteSearch brute_module_iso(const ExtendedGraph& g1, const ExtendedGraph& g2,
                             long long coeff_bound, long long node_cap);

}  // namespace hamgraph

#endif
