#include "finiteness.hpp"

#include <sstream>

#include "cohomology.hpp"

namespace hamgraph {

namespace {

// symplectic size of a generator class
Rat omega_size(const ExtendedGraph& g, const Gen& gen) {
  auto [emin, emax] = extremal_self_intersections(g);
  (void)emin;
  (void)emax;
  switch (gen.kind) {
    case Gen::Tau0: return g.min.area;
    case Gen::TauInf: return g.max.area;
    case Gen::TauH: return g.total_height();
    default: return g.length(gen.i, gen.j) / Rat(g.label(gen.i, gen.j));
  }
}

}  // namespace

std::string BoundReport::box() const {
  std::ostringstream os;
  os << "0 <= <x,omega> <= " << C.str() << ";  0 <= -<y,y> <= "
     << (Rat(BigInt(N)) * C * C - Rat(A)).str();
  return os.str();
}

BoundReport bound_constants(const ExtendedGraph& g) {
  BoundReport r;
  Reduction red = reduce_to_minimal(g);
  r.model = red.model;
  r.b2 = b2_rank(g);
  r.N = std::max(r.b2 + 2, 2 * r.b2 - 2);

  Rat wF = red.model.fiber, wB = red.model.base;
  if (g.genus > 0)
    r.C_h = Rat(BigInt(2 * g.genus + r.N)) * wF;
  else
    r.C_h = Rat(BigInt(r.N)) * std::max(wF, wB);

  // int c1 . omega over the generator expression of c1
  ChernData ch = chern_classes(g);
  for (const auto& [gen, c] : ch.c1.coef) r.c1_omega += Rat(c) * omega_size(g, gen);
  r.C = r.c1_omega + r.C_h;
  r.A = ch.c1sq_minus_2c2;

  // <omega,omega>: solve <omega, b> = size(b) over the degree-2 basis
  Presentation pres(g);
  std::vector<Gen> basis;
  for (size_t idx : pres.basis) basis.push_back(pres.table.gens[idx]);
  const size_t n = basis.size();
  RatMat A_mat(n, RatVec(n));
  RatVec rhs(n);
  for (size_t a = 0; a < n; ++a) {
    rhs[a] = omega_size(g, basis[a]);
    for (size_t b = 0; b < n; ++b)
      A_mat[a][b] = Rat(
          intersect(g, CohClass2::unit(basis[a]), CohClass2::unit(basis[b])));
  }
  RatSolve sol = solve_rational(A_mat, rhs);
  if (!sol.ok) throw Error("internal", "symplectic class equations are inconsistent");
  for (size_t b = 0; b < n; ++b) r.omega_omega += sol.x[b] * rhs[b];
  if (!r.omega_omega.is_positive()) throw Error("internal", "non-positive symplectic square");
  return r;
}

bool xh_bound_holds(const ExtendedGraph& g, const BoundReport& r, Rat* lhs_out) {
  long long k = static_cast<long long>(g.k());
  Rat lhs = Rat(BigInt(2 * g.genus + k - 2)) * g.total_height();
  if (g.fat_count() == 1)
    for (size_t i = 3; i <= g.k(); ++i)
      lhs -= omega_size(g, Gen::sigma(i, 1));
  if (lhs_out) *lhs_out = lhs;
  return lhs <= r.C_h;
}

std::vector<std::string> box_check(const ExtendedGraph& g, const BoundReport& r) {
  std::vector<std::string> bad;
  std::vector<Gen> xs;
  if (g.min.fat) xs.push_back(Gen::tau0());
  if (g.max.fat) xs.push_back(Gen::tauinf());
  for (size_t i = 1; i <= g.k(); ++i)
    for (size_t j = 1; j <= g.chain_len(i); ++j) xs.push_back(Gen::sigma(i, j));

  Rat sum_sq, neg_ysum;
  for (const auto& x : xs) {
    Rat w = omega_size(g, x);
    if (w.is_negative() || w > r.C)
      bad.push_back("<" + x.name() + ",omega> = " + w.str() + " outside [0, " + r.C.str() + "]");
    Rat self = Rat(intersect(g, CohClass2::unit(x), CohClass2::unit(x)));
    sum_sq += self;
    Rat yy = self - w * w / r.omega_omega;
    if (yy.is_positive()) bad.push_back("<y,y> > 0 for " + x.name());
    neg_ysum -= yy;
  }
  // corrected square sum: the tau_h^2 term restores the characteristic number
  long long k = static_cast<long long>(g.k());
  Rat tauh2 = Rat(intersect(g, CohClass2::unit(Gen::tauh()), CohClass2::unit(Gen::tauh())));
  sum_sq -= Rat(BigInt(k - 2)) * tauh2;
  if (sum_sq != Rat(r.A))
    bad.push_back("corrected sum of squares " + sum_sq.str() + " differs from A = " + r.A.to_string());
  Rat cap = Rat(BigInt(r.N)) * r.C * r.C - Rat(r.A);
  if (neg_ysum.is_negative() || neg_ysum > cap)
    bad.push_back("-sum <y,y> = " + neg_ysum.str() + " outside [0, " + cap.str() + "]");
  return bad;
}

FiberResult recognize_fiber_class(long long p, long long q, long long genus, bool trivial_bundle) {
  long long bhat_sq = trivial_bundle ? 0 : 1;
  long long c1_bhat = 2 - 2 * genus + (trivial_bundle ? 0 : 1);
  long long a_sq = p * p * bhat_sq + 2 * p * q;
  long long c1_a = p * c1_bhat + 2 * q;
  if (a_sq != 0) return {FiberVerdict::Neither, "self-intersection"};
  if (c1_a != 2) return {FiberVerdict::Neither, "chern-pairing"};
  if (p == 0 && q == 1) return {FiberVerdict::Fiber, ""};
  if (trivial_bundle && genus == 0 && p == 1 && q == 0) return {FiberVerdict::Base, ""};
  return {FiberVerdict::Neither, "omega-positivity"};
}

}  // namespace hamgraph
