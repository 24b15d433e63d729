#ifndef HAMGRAPH_LOCALIZATION_HPP
#define HAMGRAPH_LOCALIZATION_HPP

#include <map>
#include <string>
#include <vector>

#include "graph.hpp"
#include "laurent.hpp"
#include "linalg.hpp"

namespace hamgraph {

// Degree-2 generator symbols tau_0, tau_inf, tau_h, sigma_{i,j}.
struct Gen {
  enum Kind { Tau0 = 0, TauInf = 1, TauH = 2, Sigma = 3 };
  Kind kind = TauH;
  size_t i = 0, j = 0;  // Sigma only, 1-based

  static Gen tau0() { return {Tau0, 0, 0}; }
  static Gen tauinf() { return {TauInf, 0, 0}; }
  static Gen tauh() { return {TauH, 0, 0}; }
  static Gen sigma(size_t i, size_t j) { return {Sigma, i, j}; }

  friend bool operator==(const Gen& a, const Gen& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j;
  }
  friend bool operator<(const Gen& a, const Gen& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
  std::string name() const;  // "tau0", "tauinf", "tauh", "s(i,j)"
};

// Integer combination of generator symbols (degree-2 class).
struct CohClass2 {
  std::map<Gen, BigInt> coef;

  static CohClass2 unit(const Gen& g, BigInt c = BigInt(1));
  bool is_zero() const;
  CohClass2& add(const Gen& g, const BigInt& c);
  CohClass2& operator+=(const CohClass2& o);
  CohClass2& operator-=(const CohClass2& o);
  CohClass2 operator-() const;
  friend CohClass2 operator+(CohClass2 a, const CohClass2& b) { return a += b; }
  friend CohClass2 operator-(CohClass2 a, const CohClass2& b) { return a -= b; }
  CohClass2& operator*=(const BigInt& c);
  friend bool operator==(const CohClass2& a, const CohClass2& b);
  std::string str() const;
};

// Deterministic generator ordering for a graph:
// tau_h, sigma(1,1)..sigma(1,l1), ..., sigma(k,*), then tau0 (iff fat min),
// tau_inf (iff fat max).
struct GenTable {
  explicit GenTable(const ExtendedGraph& g);
  std::vector<Gen> gens;
  size_t index(const Gen& g) const;  // throws if absent
  bool contains(const Gen& g) const;
  IntVec dense(const CohClass2& c) const;
  CohClass2 sparse(const IntVec& v) const;
};

// value at every fixed component, zero entries kept implicit
struct RestrictionTuple {
  std::map<FixedComponent, ComponentValue> values;
  const ComponentValue& at(const FixedComponent& f) const;
  RestrictionTuple& operator+=(const RestrictionTuple& o);
  RestrictionTuple& operator*=(const Rat& c);
  // pointwise product over the common component set
  friend RestrictionTuple operator*(const RestrictionTuple& a, const RestrictionTuple& b);
  bool is_zero() const;
  std::string str() const;
};

// single generator, exactly per the fixed-point tables
RestrictionTuple restrict_generator(const ExtendedGraph& g, const Gen& gen);
RestrictionTuple restrict_class(const ExtendedGraph& g, const CohClass2& c);
// product of degree-2 classes, restricted pointwise
RestrictionTuple restrict_product(const ExtendedGraph& g, const std::vector<CohClass2>& factors);

ComponentValue euler_inverse(const ExtendedGraph& g, const FixedComponent& f);

// ABBV fixed-point sum; throws "localization-residue" if the t-degrees
// below -1 fail to cancel.
Laurent integrate(const ExtendedGraph& g, const RestrictionTuple& r);

// intersection number of generator symbols via the signed-boundary tables
Rat intersect_generators(const ExtendedGraph& g, const Gen& a, const Gen& b);
// bilinear extension; asserts integrality
BigInt intersect(const ExtendedGraph& g, const CohClass2& a, const CohClass2& b);
// the oracle of record
Rat intersect_abbv(const ExtendedGraph& g, const CohClass2& a, const CohClass2& b);

long long zero_length(const ExtendedGraph& g, const CohClass2& c);

struct ClassLabel {
  bool defined = false;
  Rat value;
};
ClassLabel class_label(const ExtendedGraph& g, const CohClass2& c);

// signed boundary labels m_{i,0} and m_{i,l_i+1}
BigInt boundary_label_below(const ExtendedGraph& g, size_t i);
BigInt boundary_label_above(const ExtendedGraph& g, size_t i);

}  // namespace hamgraph

#endif
