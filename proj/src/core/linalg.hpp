#ifndef HAMGRAPH_LINALG_HPP
#define HAMGRAPH_LINALG_HPP

#include <optional>
#include <vector>

#include "bigint.hpp"
#include "rational.hpp"

namespace hamgraph {

using IntVec = std::vector<BigInt>;
using IntMat = std::vector<IntVec>;  // row major
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// floor(a/b) for b > 0
BigInt floor_div(const BigInt& a, const BigInt& b);

// Hermite normal form of the lattice spanned by the given rows.
// Result rows are in echelon form: pivots positive, entries above each
// pivot reduced into [0, pivot). Zero rows are dropped.
IntMat hnf_rows(IntMat rows);

// Canonical representative of v modulo the lattice spanned by hnf rows
// (which must be the output of hnf_rows).
IntVec reduce_mod_lattice(IntVec v, const IntMat& hnf);

// Pivot column of each hnf row.
std::vector<size_t> hnf_pivots(const IntMat& hnf);

struct IntSolve {
  bool ok = false;
  IntVec x;        // one integer solution of A x = b
  IntMat kernel;   // basis of the integer kernel of A
};

// Solve A x = b over the integers. A is m x n (m equations).
IntSolve solve_integer(const IntMat& A, const IntVec& b);

struct RatSolve {
  bool ok = false;
  RatVec x;        // particular solution
  RatMat kernel;   // basis of the rational nullspace
};

// Solve A x = b over the rationals.
RatSolve solve_rational(RatMat A, RatVec b);

// Integer coordinates on the quotient Z^n / L, where L is spanned by the
// given rows.  When the quotient is free, coords() is a surjection with
// kernel exactly L and section() is a right inverse.
struct QuotientBasis {
  bool free = false;    // quotient has no torsion
  size_t rank = 0;      // rank of L
  size_t dim = 0;       // n - rank
  IntMat coord_rows;    // dim x n
  IntMat section_rows;  // dim x n

  IntVec coords(const IntVec& x) const;
  IntVec section(const IntVec& z) const;
};

QuotientBasis quotient_basis(const IntMat& relations, size_t n);

}  // namespace hamgraph

#endif
