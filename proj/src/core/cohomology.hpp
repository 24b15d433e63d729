#ifndef HAMGRAPH_COHOMOLOGY_HPP
#define HAMGRAPH_COHOMOLOGY_HPP

#include <map>
#include <vector>

#include "localization.hpp"

namespace hamgraph {

// Generators-and-relations presentation of the even equivariant cohomology.
struct Presentation {
  GenTable table;
  std::vector<CohClass2> linear_relations;            // tau_h - sum_j m_{i,j} sigma_{i,j}
  std::vector<std::vector<Gen>> product_relations;    // monomials that vanish
  bool cp2_triple = false;                            // the extra length-3 relation
  CohClass2 pi_t;                                     // canonical representative of pi*(t)

  // normal-form machinery
  std::vector<size_t> hnf_col_order;  // permutation of table indices used for pivoting
  IntMat relation_hnf;                // HNF over permuted coordinates
  std::vector<size_t> basis;          // table indices of the non-pivot generators

  explicit Presentation(const ExtendedGraph& g);
};

Presentation presentation(const ExtendedGraph& g);

// process-wide cache keyed by canonical form; presentations are immutable
const Presentation& presentation_cached(const ExtendedGraph& g);

// canonical representative of c modulo the linear-relation lattice,
// as a dense vector over pres.table.gens
IntVec normal_form(const Presentation& pres, const CohClass2& c);
bool classes_equal(const Presentation& pres, const CohClass2& a, const CohClass2& b);

// the unique degree-2 class restricting to t / 1(x)t everywhere
CohClass2 pi_star_t(const ExtendedGraph& g);

struct BCoefficients {
  std::map<std::pair<size_t, size_t>, BigInt> b;  // (i,j) -> b_{i,j}
  Rat tauh_gauge;                                 // coefficient used on tau_h
  std::vector<size_t> sign_corrected_chains;      // chains whose recursion runs at -1
  CohClass2 pi_t;
};

BCoefficients b_coefficients(const ExtendedGraph& g);

struct ChernData {
  CohClass2 c1;                // equivariant lift
  BigInt c1sq_minus_2c2;       // the characteristic number
  long long euler = 0;
  BigInt tail_squares_lhs, tail_squares_rhs;   // (k-2) tau_h^2 vs the squares of the third-chain bottom classes
  bool tail_squares_match = false;
};

ChernData chern_classes(const ExtendedGraph& g);

// rank of the ordinary degree-2 cohomology: iso + 2 fat - 2
long long b2_rank(const ExtendedGraph& g);

// linear relation of chain i as a class
CohClass2 chain_relation(const ExtendedGraph& g, size_t i);

}  // namespace hamgraph

#endif
