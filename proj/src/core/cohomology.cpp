#include "cohomology.hpp"

#include <algorithm>

#include <memory>
#include <mutex>

#include "surgery.hpp"

namespace hamgraph {

long long b2_rank(const ExtendedGraph& g) { return g.iso_count() + 2 * g.fat_count() - 2; }

CohClass2 chain_relation(const ExtendedGraph& g, size_t i) {
  CohClass2 r = CohClass2::unit(Gen::tauh());
  for (size_t j = 1; j <= g.chain_len(i); ++j) r.add(Gen::sigma(i, j), BigInt(-g.label(i, j)));
  return r;
}

namespace {

bool spheres_meet(const ExtendedGraph& g, const Gen& a, const Gen& b) {
  // a, b are sigma generators on distinct chains
  if (a.j == 1 && b.j == 1 && !g.min.fat) return true;
  if (a.j == g.chain_len(a.i) && b.j == g.chain_len(b.i) && !g.max.fat) return true;
  return false;
}

}  // namespace

Presentation::Presentation(const ExtendedGraph& g) : table(g) {
  for (size_t i = 1; i <= g.k(); ++i) linear_relations.push_back(chain_relation(g, i));

  if (g.min.fat && g.max.fat) {
    product_relations.push_back({Gen::tau0(), Gen::tauinf()});
    product_relations.push_back({Gen::tauh(), Gen::tauh()});
  }
  if (g.min.fat)
    for (size_t i = 1; i <= g.k(); ++i)
      for (size_t j = 2; j <= g.chain_len(i); ++j)
        product_relations.push_back({Gen::tau0(), Gen::sigma(i, j)});
  if (g.max.fat)
    for (size_t i = 1; i <= g.k(); ++i)
      for (size_t j = 1; j + 1 <= g.chain_len(i); ++j)
        product_relations.push_back({Gen::tauinf(), Gen::sigma(i, j)});
  for (size_t i = 1; i <= g.k(); ++i)
    for (size_t j = 1; j <= g.chain_len(i); ++j)
      for (size_t n = j + 2; n <= g.chain_len(i); ++n)
        product_relations.push_back({Gen::sigma(i, j), Gen::sigma(i, n)});
  for (size_t i = 1; i <= g.k(); ++i)
    for (size_t m = i + 1; m <= g.k(); ++m)
      for (size_t j = 1; j <= g.chain_len(i); ++j)
        for (size_t n = 1; n <= g.chain_len(m); ++n) {
          Gen a = Gen::sigma(i, j), b = Gen::sigma(m, n);
          if (!spheres_meet(g, a, b)) product_relations.push_back({a, b});
        }
  // the projective-plane triple
  Reduction red = reduce_to_minimal(g);
  if (red.model.kind == MinimalModelId::CP2 && red.records.empty()) {
    cp2_triple = true;
    if (g.max.fat)
      product_relations.push_back({Gen::tauinf(), Gen::sigma(1, 1), Gen::sigma(2, 1)});
    else
      product_relations.push_back({Gen::sigma(1, 1), Gen::sigma(2, 1), Gen::sigma(2, 2)});
  }

  // normal-form pivot order: tau_h, then sigma_{i,1} for i >= 3, then the
  // remaining sigmas chain by chain, with tau_0 / tau_inf last (never pivots)
  std::vector<Gen> order;
  order.push_back(Gen::tauh());
  for (size_t i = 3; i <= g.k(); ++i) order.push_back(Gen::sigma(i, 1));
  for (size_t i = 1; i <= g.k(); ++i)
    for (size_t j = 1; j <= g.chain_len(i); ++j) {
      if (i >= 3 && j == 1) continue;
      order.push_back(Gen::sigma(i, j));
    }
  if (g.min.fat) order.push_back(Gen::tau0());
  if (g.max.fat) order.push_back(Gen::tauinf());
  for (const auto& gen : order) hnf_col_order.push_back(table.index(gen));

  IntMat rows;
  for (const auto& rel : linear_relations) {
    IntVec dense = table.dense(rel);
    IntVec permuted(dense.size());
    for (size_t c = 0; c < dense.size(); ++c) permuted[c] = dense[hnf_col_order[c]];
    rows.push_back(std::move(permuted));
  }
  relation_hnf = hnf_rows(std::move(rows));
  std::vector<bool> pivot(table.gens.size(), false);
  for (size_t p : hnf_pivots(relation_hnf)) pivot[p] = true;
  for (size_t c = 0; c < table.gens.size(); ++c)
    if (!pivot[c]) basis.push_back(hnf_col_order[c]);
  std::sort(basis.begin(), basis.end());

  pi_t = pi_star_t(g);
}

Presentation presentation(const ExtendedGraph& g) { return Presentation(g); }

const Presentation& presentation_cached(const ExtendedGraph& g) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Presentation>> cache;
  std::string key = canonical_key(g);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto fresh = std::make_unique<Presentation>(g);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(fresh));
  return *it->second;
}

IntVec normal_form(const Presentation& pres, const CohClass2& c) {
  IntVec dense = pres.table.dense(c);
  IntVec permuted(dense.size());
  for (size_t i = 0; i < dense.size(); ++i) permuted[i] = dense[pres.hnf_col_order[i]];
  permuted = reduce_mod_lattice(std::move(permuted), pres.relation_hnf);
  IntVec out(dense.size());
  for (size_t i = 0; i < dense.size(); ++i) out[pres.hnf_col_order[i]] = permuted[i];
  return out;
}

bool classes_equal(const Presentation& pres, const CohClass2& a, const CohClass2& b) {
  return normal_form(pres, a) == normal_form(pres, b);
}

CohClass2 pi_star_t(const ExtendedGraph& g) {
  GenTable table(g);
  const size_t n = table.gens.size();
  IntMat A;
  IntVec rhs;
  std::vector<RestrictionTuple> restrictions;
  restrictions.reserve(n);
  for (const auto& gen : table.gens) restrictions.push_back(restrict_generator(g, gen));

  auto as_int = [](const Rat& r) {
    if (!r.is_integer()) throw Error("internal", "expected an integer restriction coefficient");
    return r.num();
  };
  for (const auto& f : fixed_components(g)) {
    if (is_isolated(g, f)) {
      IntVec row(n, BigInt(0));
      for (size_t c = 0; c < n; ++c) row[c] = as_int(restrictions[c].at(f).plain.coeff(1));
      A.push_back(std::move(row));
      rhs.push_back(BigInt(1));
    } else {
      IntVec row_t(n, BigInt(0)), row_s(n, BigInt(0));
      for (size_t c = 0; c < n; ++c) {
        row_t[c] = as_int(restrictions[c].at(f).plain.coeff(1));
        row_s[c] = as_int(restrictions[c].at(f).sigma.coeff(0));
      }
      A.push_back(std::move(row_t));
      rhs.push_back(BigInt(1));
      A.push_back(std::move(row_s));
      rhs.push_back(BigInt(0));
    }
  }
  IntSolve sol = solve_integer(A, rhs);
  if (!sol.ok)
    throw Error("no-sign-assignment",
                "no integral class restricts to t on every fixed component");
  // canonical representative modulo the linear-relation lattice
  IntMat rel;
  for (size_t i = 1; i <= g.k(); ++i) rel.push_back(table.dense(chain_relation(g, i)));
  IntMat H = hnf_rows(std::move(rel));
  IntVec x = reduce_mod_lattice(std::move(sol.x), H);
  return table.sparse(x);
}

BCoefficients b_coefficients(const ExtendedGraph& g) {
  BCoefficients out;
  out.pi_t = pi_star_t(g);
  GenTable table(g);
  auto [emin, emax] = extremal_self_intersections(g);
  Rat gauge = g.min.fat ? emin : Rat(0);
  out.tauh_gauge = gauge;
  if (!gauge.is_integer()) throw Error("internal", "fat-minimum self-intersection must be integral");

  // target: d = tauinf - tau0 + gauge*tauh, solve d - sum b sigma == pi (mod relations)
  CohClass2 d;
  if (g.max.fat) d.add(Gen::tauinf(), BigInt(1));
  if (g.min.fat) d.add(Gen::tau0(), BigInt(-1));
  d.add(Gen::tauh(), gauge.num());
  CohClass2 target = d - out.pi_t;

  std::vector<std::pair<size_t, size_t>> sigma_slots;
  for (size_t i = 1; i <= g.k(); ++i)
    for (size_t j = 1; j <= g.chain_len(i); ++j) sigma_slots.emplace_back(i, j);
  const size_t ns = sigma_slots.size();
  const size_t nr = g.k();
  const size_t n = table.gens.size();
  // columns: b_{i,j} then relation multipliers
  IntMat A(n, IntVec(ns + nr, BigInt(0)));
  for (size_t s = 0; s < ns; ++s)
    A[table.index(Gen::sigma(sigma_slots[s].first, sigma_slots[s].second))][s] = BigInt(1);
  for (size_t r = 0; r < nr; ++r) {
    IntVec rel = table.dense(chain_relation(g, r + 1));
    for (size_t row = 0; row < n; ++row) A[row][ns + r] = rel[row];
  }
  IntSolve sol = solve_integer(A, table.dense(target));
  if (!sol.ok)
    throw Error("no-sign-assignment", "no integer b-coefficients assemble pi*(t)");
  // canonicalize the b-part modulo the kernel's b-projections
  IntMat kb;
  for (const auto& kv : sol.kernel) {
    IntVec row(kv.begin(), kv.begin() + ns);
    bool zero = true;
    for (const auto& v : row) zero = zero && v.is_zero();
    if (!zero) kb.push_back(std::move(row));
  }
  IntMat H = hnf_rows(std::move(kb));
  IntVec b = reduce_mod_lattice(IntVec(sol.x.begin(), sol.x.begin() + ns), H);
  for (size_t s = 0; s < ns; ++s) out.b[sigma_slots[s]] = b[s];

  for (size_t i = 1; i <= g.k(); ++i) {
    bool flipped = false;
    for (size_t j = 2; j <= g.chain_len(i); ++j) {
      BigInt D = out.b[{i, j}] * BigInt(g.label(i, j - 1)) - out.b[{i, j - 1}] * BigInt(g.label(i, j));
      if (!D.abs().is_one())
        throw Error("no-sign-assignment", "b-recursion defect " + D.to_string() + " on chain " +
                                              std::to_string(i));
      if (D.is_negative()) flipped = true;
    }
    if (flipped) out.sign_corrected_chains.push_back(i);
  }
  return out;
}

ChernData chern_classes(const ExtendedGraph& g) {
  ChernData out;
  long long k = static_cast<long long>(g.k());
  if (g.min.fat) out.c1.add(Gen::tau0(), BigInt(1));
  if (g.max.fat) out.c1.add(Gen::tauinf(), BigInt(1));
  for (size_t i = 1; i <= g.k(); ++i)
    for (size_t j = 1; j <= g.chain_len(i); ++j) out.c1.add(Gen::sigma(i, j), BigInt(1));
  out.c1.add(Gen::tauh(), BigInt(-(2 * g.genus + k - 2)));

  BigInt A;
  if (g.min.fat) A += intersect(g, CohClass2::unit(Gen::tau0()), CohClass2::unit(Gen::tau0()));
  if (g.max.fat) A += intersect(g, CohClass2::unit(Gen::tauinf()), CohClass2::unit(Gen::tauinf()));
  for (size_t i = 1; i <= g.k(); ++i)
    for (size_t j = 1; j <= g.chain_len(i); ++j) {
      CohClass2 s = CohClass2::unit(Gen::sigma(i, j));
      A += intersect(g, s, s);
    }
  BigInt tauh2 = intersect(g, CohClass2::unit(Gen::tauh()), CohClass2::unit(Gen::tauh()));
  A -= BigInt(k - 2) * tauh2;
  out.c1sq_minus_2c2 = A;
  out.euler = g.euler();

  out.tail_squares_lhs = BigInt(k - 2) * tauh2;
  out.tail_squares_rhs = BigInt(0);
  if (g.fat_count() == 1)
    for (size_t i = 3; i <= g.k(); ++i) {
      CohClass2 s = CohClass2::unit(Gen::sigma(i, 1));
      out.tail_squares_rhs += intersect(g, s, s);
    }
  out.tail_squares_match = out.tail_squares_lhs == out.tail_squares_rhs;
  return out;
}

}  // namespace hamgraph
