#ifndef HAMGRAPH_FINITENESS_HPP
#define HAMGRAPH_FINITENESS_HPP

#include <string>
#include <vector>

#include "graph.hpp"
#include "surgery.hpp"

namespace hamgraph {

struct BoundReport {
  long long N = 0;        // cap on edges + surfaces over all actions on (M, omega)
  long long b2 = 0;       // rank of the ordinary degree-2 cohomology
  Rat C_h;                // fiber-sum bound
  Rat c1_omega;           // int c1 . omega
  Rat C;                  // c1_omega + C_h
  BigInt A;               // int (c1^2 - 2 c2)
  Rat omega_omega;        // <omega, omega>
  MinimalModelId model;
  std::string box() const;  // human-readable box description
};

BoundReport bound_constants(const ExtendedGraph& g);

// Verifies that every generator class of g sits inside the report's box:
// 0 <= <x_n, omega> <= C, the corrected square sum equals A, the Hodge
// parts satisfy <y_n, y_n> <= 0 and 0 <= -sum <y_n,y_n> <= N C^2 - A.
// Returns human-readable violations (empty when the box holds).
std::vector<std::string> box_check(const ExtendedGraph& g, const BoundReport& r);

// the weighted fiber-sum inequality int((2g+k-2) x_h - sum z_i) omega <= C_h
bool xh_bound_holds(const ExtendedGraph& g, const BoundReport& r, Rat* lhs = nullptr);

enum class FiberVerdict { Fiber, Base, Neither };

struct FiberResult {
  FiberVerdict verdict = FiberVerdict::Neither;
  std::string violated;  // constraint name when Neither
};

// case analysis for A = p Bhat + q F in the minimal ruled model
FiberResult recognize_fiber_class(long long p, long long q, long long genus, bool trivial_bundle);

}  // namespace hamgraph

#endif
