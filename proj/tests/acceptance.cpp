// Acceptance suite: reproduces the worked examples and runs the exact
// property sweeps, one numbered criterion per block.  Prints one PASS/FAIL
// line per criterion and exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "core/cohomology.hpp"
#include "core/dull.hpp"
#include "core/enumerate.hpp"
#include "core/expr.hpp"
#include "core/finiteness.hpp"
#include "core/morphisms.hpp"
#include "core/reconstruct.hpp"
#include "core/surgery.hpp"

using namespace hamgraph;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail,
            double seconds) {
  std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              seconds, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void run(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  report(number, name, ok, detail, std::chrono::duration<double>(t1 - t0).count());
}

ExtendedGraph counterexample(bool flipped_chain) {
  ExtendedGraph g = minimal_ruled(0, Rat(4), Rat(8), -1);
  auto grow = [&](bool flip_order) {
    auto [h1, r1] = blowup(g, BlowupSite{BlowupSite::FatSurface, true, 0, 0}, Rat(1));
    g = h1;
    auto find_chain = [&](const std::vector<long long>& labels) {
      for (size_t i = 1; i <= g.k(); ++i)
        if (g.chains[i - 1].labels() == labels) return i;
      throw Error("internal", "chain not found while building the counterexample");
    };
    size_t c = find_chain({1, 1});
    auto [h2, r2] = blowup(g, BlowupSite{BlowupSite::Interior, true, c, 1}, Rat(1, 4));
    g = h2;
    c = find_chain({1, 2, 1});
    auto [h3, r3] =
        blowup(g, BlowupSite{BlowupSite::Interior, true, c, flip_order ? size_t(2) : size_t(1)},
               Rat(1, 16));
    g = h3;
  };
  grow(false);
  grow(flipped_chain);
  return g;
}

bool pi_restricts_to_t(const ExtendedGraph& g) {
  RestrictionTuple rt = restrict_class(g, presentation_cached(g).pi_t);
  for (const auto& f : fixed_components(g)) {
    ComponentValue want = is_isolated(g, f)
                              ? ComponentValue::point(Laurent::term(Rat(1), 1))
                              : ComponentValue::at_surface(Laurent::term(Rat(1), 1), {});
    if (!(rt.at(f) == want)) return false;
  }
  return true;
}

std::vector<ExtendedGraph> corpus6, corpus5;

// labels-and-markers key: everything the cohomology sees
std::string combinatorial_key(const ExtendedGraph& g) {
  std::ostringstream os;
  auto [emin, emax] = extremal_self_intersections(g);
  os << "g" << g.genus << (g.min.fat ? "F" + emin.str() : "I") << (g.max.fat ? "F" + emax.str() : "I");
  for (const auto& c : g.chains) {
    os << ";";
    for (long long m : c.labels()) os << m << ",";
  }
  return os.str();
}

}  // namespace

int main() {
  {
    EnumerateBounds b;
    b.max_edges = 6;
    b.max_label = 4;
    b.max_denominator = 2;
    corpus6 = enumerate_graphs(b);
    b.max_edges = 5;
    corpus5 = enumerate_graphs(b);
    std::printf("corpus: %zu graphs (<= 6 edges), %zu graphs (<= 5 edges)\n", corpus6.size(),
                corpus5.size());
  }

  run(1, "counterexample pair: weak isomorphism and weight obstruction", [&](std::string& detail) {
    ExtendedGraph M = counterexample(false);
    ExtendedGraph N = counterexample(true);
    bool shapes = M.chains[0].labels() == std::vector<long long>{1, 3, 2, 1} &&
                  M.chains[1].labels() == std::vector<long long>{1, 3, 2, 1};
    bool flipped = false;
    for (size_t i = 1; i <= N.k(); ++i)
      flipped = flipped || N.chains[i - 1].labels() == std::vector<long long>{1, 2, 3, 1};
    WeakIsoVerdict v = weak_isomorphisms(M, N);  // verifies the map on construction
    size_t partials = 0;
    bool only_partial = true;
    for (const auto& f : v.factors) {
      if (f.rfind("partial_flip", 0) == 0)
        ++partials;
      else
        only_partial = false;
    }
    WeightMultiset wm = isotropy_weights(M), wn = isotropy_weights(N);
    WeightMultiset want_m = {{-1, 3}, {-3, 2}, {-2, 1}, {-1, 3}, {-3, 2}, {-2, 1}};
    WeightMultiset want_n = {{-1, 2}, {-2, 3}, {-3, 1}, {-1, 3}, {-3, 2}, {-2, 1}};
    std::sort(want_m.begin(), want_m.end());
    std::sort(want_n.begin(), want_n.end());
    ObstructionVerdict o = diffeo_obstruction(M, N);
    std::ostringstream d;
    d << "factors=" << partials << " partial flip(s); weights "
      << (wm == want_m && wn == want_n ? "exact" : "WRONG");
    detail = d.str();
    return shapes && flipped && v.isomorphic && v.map.has_value() && v.map->epsilon == 1 &&
           partials == 1 && only_partial && wm == want_m && wn == want_n && o.obstructed;
  });

  run(2, "golden minimal-model presentations", [&](std::string& detail) {
    bool ok = true;
    auto eq = [&](const ExtendedGraph& g, const CohClass2& a, const CohClass2& b) {
      return classes_equal(presentation_cached(g), a, b);
    };
    {  // plane, one surface
      ExtendedGraph g = minimal_cp2(1, 1, Rat(1));
      const Presentation& p = presentation_cached(g);
      ok = ok && p.cp2_triple && eq(g, parse_class("s(1,1)"), parse_class("s(2,1)")) &&
           eq(g, p.pi_t, parse_class("tauinf - s(1,1)")) && pi_restricts_to_t(g);
    }
    {  // plane, isolated fixed points
      ExtendedGraph g = minimal_cp2(2, 1, Rat(1));
      const Presentation& p = presentation_cached(g);
      ok = ok && p.cp2_triple && eq(g, parse_class("tauh"), parse_class("2*s(1,1)")) &&
           eq(g, parse_class("2*s(1,1)"), parse_class("s(2,1)+s(2,2)")) &&
           eq(g, p.pi_t, parse_class("s(1,1) - s(2,1)")) && pi_restricts_to_t(g);
    }
    {  // trapezoid cases
      ExtendedGraph a = minimal_hirzebruch(1, 0, 1, Rat(2), Rat(1));
      ok = ok && eq(a, presentation_cached(a).pi_t, parse_class("tauinf - tau0 + tauh")) &&
           pi_restricts_to_t(a);
      ExtendedGraph b = minimal_hirzebruch(2, 1, 2, Rat(3), Rat(1));
      ok = ok && eq(b, presentation_cached(b).pi_t, parse_class("tauinf - s(1,1)")) &&
           eq(b, parse_class("s(2,1)"), parse_class("s(1,2)+2*s(1,1)")) && pi_restricts_to_t(b);
      ExtendedGraph c = minimal_hirzebruch(1, 1, 2, Rat(3), Rat(1));
      ok = ok && eq(c, presentation_cached(c).pi_t, parse_class("s(2,2) - s(1,1)")) &&
           pi_restricts_to_t(c);
      ExtendedGraph d = minimal_hirzebruch(2, 2, 3, Rat(3), Rat(1));
      ok = ok && eq(d, presentation_cached(d).pi_t, parse_class("s(2,1) - 2*s(1,1) - s(1,2)")) &&
           pi_restricts_to_t(d);
    }
    for (long long genus : {0, 1, 2}) {  // ruled models
      ExtendedGraph g = minimal_ruled(genus, Rat(1), Rat(2), 1);
      const Presentation& p = presentation_cached(g);
      bool rel = false, tau2 = false;
      for (const auto& mono : p.product_relations) {
        if (mono.size() == 2 && mono[0] == Gen::tau0() && mono[1] == Gen::tauinf()) rel = true;
        if (mono.size() == 2 && mono[0] == Gen::tauh() && mono[1] == Gen::tauh()) tau2 = true;
      }
      ok = ok && rel && tau2 && eq(g, p.pi_t, parse_class("tauinf - tau0 + tauh")) &&
           pi_restricts_to_t(g);
      BCoefficients bc = b_coefficients(g);
      for (const auto& [ij, v] : bc.b) ok = ok && v.is_zero();
    }
    detail = "plane / trapezoid (a)-(d) / ruled g=0,1,2";
    return ok;
  });

  run(3, "localization oracle sweep over the <=6-edge corpus", [&](std::string& detail) {
    size_t pair_checks = 0, bad = 0, pi_bad = 0;
    for (const auto& g : corpus6) {
      GenTable table(g);
      for (size_t x = 0; x < table.gens.size(); ++x)
        for (size_t y = x; y < table.gens.size(); ++y) {
          CohClass2 cx = CohClass2::unit(table.gens[x]);
          CohClass2 cy = CohClass2::unit(table.gens[y]);
          ++pair_checks;
          if (Rat(intersect(g, cx, cy)) != intersect_abbv(g, cx, cy)) ++bad;
        }
      if (!pi_restricts_to_t(g)) ++pi_bad;
    }
    std::ostringstream d;
    d << corpus6.size() << " graphs, " << pair_checks << " generator pairs, " << bad
      << " intersection mismatches, " << pi_bad << " pi*(t) mismatches";
    detail = d.str();
    return bad == 0 && pi_bad == 0;
  });

  run(4, "weak-isomorphism round trip over the <=5-edge corpus", [&](std::string& detail) {
    // dull keys for the cheap pair sweep
    std::vector<std::string> keys, fkeys;
    keys.reserve(corpus5.size());
    for (const auto& g : corpus5) {
      DullGraph d = dull(g);
      keys.push_back(d.key());
      fkeys.push_back(dull_flip(d).key());
    }
    size_t pairs = 0, iso_pairs = 0, disagreements = 0;
    std::map<std::pair<std::string, std::string>, bool> verified;  // per combinatorial class
    size_t verified_runs = 0, verify_failures = 0;
    for (size_t a = 0; a < corpus5.size(); ++a) {
      for (size_t b = a; b < corpus5.size(); ++b) {
        ++pairs;
        bool dull_iso = keys[a] == keys[b] || keys[a] == fkeys[b];
        if (!dull_iso) continue;  // weak_isomorphisms matches by construction
        ++iso_pairs;
        auto ck = std::make_pair(combinatorial_key(corpus5[a]), combinatorial_key(corpus5[b]));
        auto it = verified.find(ck);
        if (it == verified.end()) {
          ++verified_runs;
          bool good = false;
          try {
            WeakIsoVerdict v = weak_isomorphisms(corpus5[a], corpus5[b]);
            good = v.isomorphic;  // map verification happens inside
          } catch (const Error&) {
            good = false;
          }
          it = verified.emplace(ck, good).first;
        }
        if (!it->second) ++disagreements;
      }
    }
    // independent bounded search on the small-rank instances, one
    // representative pair per combinatorial class pair
    size_t brute_runs = 0, brute_disagreements = 0, brute_inconclusive = 0;
    std::map<std::pair<std::string, std::string>, int> brute_seen;
    for (size_t a = 0; a < corpus5.size(); ++a) {
      if (poincare_rank(corpus5[a], 2) > 4) continue;
      for (size_t b = a; b < corpus5.size(); ++b) {
        if (poincare_rank(corpus5[b], 2) > 4) continue;
        auto ck = std::make_pair(combinatorial_key(corpus5[a]), combinatorial_key(corpus5[b]));
        if (brute_seen.count(ck)) continue;
        brute_seen[ck] = 1;
        ++brute_runs;
        long long bound = 2;
        for (size_t i = 1; i <= corpus5[a].k(); ++i)
          for (size_t j = 1; j <= corpus5[a].chain_len(i); ++j)
            bound = std::max(bound, corpus5[a].label(i, j));
        BruteSearch s = brute_module_iso(corpus5[a], corpus5[b], bound, 40000000);
        bool dull_iso = keys[a] == keys[b] || keys[a] == fkeys[b];
        // the even-degree module cannot see the genus; the theorem pairs it
        // with the odd-rank condition
        bool odd_match = poincare_rank(corpus5[a], 1) == poincare_rank(corpus5[b], 1) &&
                         corpus5[a].genus == corpus5[b].genus;
        if (s.status == BruteSearch::Inconclusive) {
          ++brute_inconclusive;
        } else if (((s.status == BruteSearch::Found) && odd_match) != dull_iso) {
          ++brute_disagreements;
        }
      }
    }
    std::ostringstream d;
    d << pairs << " pairs, " << iso_pairs << " isomorphic, " << verified_runs
      << " verified maps, " << verify_failures << " failures; brute: " << brute_runs << " runs, "
      << brute_disagreements << " disagreements, " << brute_inconclusive << " inconclusive";
    detail = d.str();
    return disagreements == 0 && brute_disagreements == 0;
  });

  run(5, "surgery round trips and the seven-fold reduction", [&](std::string& detail) {
    size_t blowups = 0, bad_round = 0, bad_replay = 0;
    for (const auto& g : corpus6) {
      Reduction red = reduce_to_minimal(g);
      if (!canonical_equal(replay(red), g)) ++bad_replay;
    }
    // sampled blowups on the smaller corpus: every admissible site
    for (const auto& g : corpus5) {
      std::vector<BlowupSite> sites;
      for (size_t i = 1; i <= g.k(); ++i)
        for (size_t j = 1; j + 1 <= g.chain_len(i); ++j)
          sites.push_back({BlowupSite::Interior, true, i, j});
      for (bool at_max : {false, true}) {
        sites.push_back({BlowupSite::IsolatedExtreme, at_max, 0, 0});
        sites.push_back({BlowupSite::FatSurface, at_max, 0, 0});
      }
      for (const auto& site : sites) {
        ExtendedGraph h;
        BlowupRecord rec;
        try {
          std::tie(h, rec) = blowup(g, site, Rat(1, 8));
        } catch (const Error&) {
          continue;
        }
        ++blowups;
        GeneratorTransport tr = transport_generators(rec);
        Gen exc = tr.exceptional.coef.begin()->first;
        BlowdownTarget t;
        if (exc.kind == Gen::Sigma)
          t = BlowdownTarget{false, false, exc.i, exc.j};
        else
          t = BlowdownTarget{true, exc.kind == Gen::TauInf, 0, 0};
        try {
          auto [back, rec2] = blowdown(h, t);
          // a move that crossed the orientation convention round-trips to
          // the reversed graph, which the convention identifies with g
          bool same = canonical_equal(back, g) ||
                      (rec.internal_flip && canonical_equal(back, reversed(g)));
          if (!same) ++bad_round;
        } catch (const Error&) {
          ++bad_round;
        }
      }
    }
    ExtendedGraph M = counterexample(false), N = counterexample(true);
    Reduction rm = reduce_to_minimal(M), rn = reduce_to_minimal(N);
    bool seven = rm.records.size() == 7 && rn.records.size() == 7 &&
                 rm.model.kind == MinimalModelId::CP2 && rn.model.kind == MinimalModelId::CP2 &&
                 canonical_equal(replay(rm), M) && canonical_equal(replay(rn), N);
    std::ostringstream d;
    d << blowups << " blowups round-tripped (" << bad_round << " bad), " << bad_replay
      << " replay failures, counterexamples reduce in " << rm.records.size() << " and "
      << rn.records.size() << " steps";
    detail = d.str();
    return bad_round == 0 && bad_replay == 0 && seven;
  });

  run(6, "chern and euler identities over the corpus", [&](std::string& detail) {
    size_t c1_bad = 0, tail_sq_bad = 0, cp2_checked = 0;
    bool cp2_ok = true;
    std::string first_tail_sq;
    for (const auto& g : corpus6) {
      ChernData c = chern_classes(g);
      // fixed-point formulas for the restriction of c1
      RestrictionTuple rt = restrict_class(g, c.c1);
      auto [emin, emax] = extremal_self_intersections(g);
      for (const auto& f : fixed_components(g)) {
        if (is_isolated(g, f)) {
          WeightPair w = weights_at(g, f);
          if (!(rt.at(f) == ComponentValue::point(Laurent::term(Rat(-w.a - w.b), 1)))) ++c1_bad;
        } else {
          bool at_min = f.kind == FixedComponent::Min;
          Rat e = at_min ? emin : emax;
          ComponentValue want = ComponentValue::at_surface(
              Laurent::term(Rat(at_min ? -1 : 1), 1), Laurent::constant(Rat(2 - 2 * g.genus) + e));
          if (!(rt.at(f) == want)) ++c1_bad;
        }
      }
      if (!c.tail_squares_match) {
        ++tail_sq_bad;
        if (first_tail_sq.empty()) first_tail_sq = canonical_key(g);
      }
      Reduction red = reduce_to_minimal(g);
      if (red.model.kind == MinimalModelId::CP2 && red.records.empty()) {
        ++cp2_checked;
        cp2_ok = cp2_ok && c.c1sq_minus_2c2 == BigInt(3) && c.euler == 3;
      }
    }
    std::ostringstream d;
    d << c1_bad << " c1-restriction mismatches; " << cp2_checked << " plane graphs checked; "
      << tail_sq_bad << " tail-square identity violations";
    if (tail_sq_bad) d << " (first: " << first_tail_sq << ")";
    detail = d.str();
    return c1_bad == 0 && cp2_ok && tail_sq_bad == 0;
  });

  run(7, "flip maps preserve zero-lengths, labels, and the tau classes", [&](std::string& detail) {
    size_t maps = 0, bad = 0;
    for (const auto& g : corpus5) {
      std::vector<std::pair<ExtendedGraph, GeneratorMap>> flips;
      flips.push_back(full_flip(g));
      flips.push_back(symplectic_flip(g));
      for (size_t i = 1; i <= g.k(); ++i) {
        const auto labels = g.chains[i - 1].labels();
        if (labels.front() == 1 && labels.back() == 1) flips.push_back(partial_flip(g, i));
      }
      for (const auto& [h, f] : flips) {
        ++maps;
        GenTable t(g);
        for (const auto& gen : t.gens) {
          CohClass2 c = CohClass2::unit(gen);
          CohClass2 img = f.map.at(gen);
          if (zero_length(g, c) != zero_length(h, img)) ++bad;
          ClassLabel l = class_label(g, c), lf = class_label(h, img);
          if (l.defined != lf.defined || (l.defined && l.value != lf.value)) ++bad;
        }
        if (f.epsilon == 1) {
          // an isomorphism fixes (tau0, tauinf, tauh) or negates and swaps them
          const Presentation& pt = presentation_cached(h);
          CohClass2 th = f.map.at(Gen::tauh());
          bool keep = classes_equal(pt, th, CohClass2::unit(Gen::tauh()));
          bool swap = classes_equal(pt, th, CohClass2::unit(Gen::tauh(), BigInt(-1)));
          if (!(keep || swap)) ++bad;
          if (g.min.fat) {
            CohClass2 t0 = f.map.at(Gen::tau0());
            bool ok0 = (keep && classes_equal(pt, t0, CohClass2::unit(Gen::tau0()))) ||
                       (swap && classes_equal(pt, t0, CohClass2::unit(Gen::tauinf(), BigInt(-1))));
            if (!ok0) ++bad;
          }
        }
      }
    }
    std::ostringstream d;
    d << maps << " flip maps over " << corpus5.size() << " graphs, " << bad << " violations";
    detail = d.str();
    return bad == 0;
  });

  run(8, "reconstruction round trips and xi injectivity on the pair", [&](std::string& detail) {
    size_t dull_bad = 0, dec_bad = 0, in_scope = 0;
    unsigned seed = 1;
    for (const auto& g : corpus6) {
      AlgebraicInput in = algebraic_input(g, true, seed++);
      try {
        if (!(recover_dull(in) == dull(g))) ++dull_bad;
      } catch (const Error&) {
        ++dull_bad;
      }
      if (g.fat_count() >= 1) {
        ++in_scope;
        try {
          if (!canonical_equal(recover_decorated(in), g)) ++dec_bad;
        } catch (const Error&) {
          ++dec_bad;
        }
      }
    }
    // the xi data of the counterexample pair differ: recovery separates them
    ExtendedGraph M = counterexample(false), N = counterexample(true);
    ExtendedGraph rm = recover_decorated(algebraic_input(M, true, 99));
    ExtendedGraph rn = recover_decorated(algebraic_input(N, true, 99));
    bool xi_differ = !canonical_equal(rm, rn) && canonical_equal(rm, M) && canonical_equal(rn, N);
    std::ostringstream d;
    d << corpus6.size() << " dull recoveries (" << dull_bad << " bad), " << in_scope
      << " decorated recoveries (" << dec_bad << " bad), xi images "
      << (xi_differ ? "differ" : "COINCIDE");
    detail = d.str();
    return dull_bad == 0 && dec_bad == 0 && xi_differ;
  });

  run(9, "finiteness boxes over the corpus", [&](std::string& detail) {
    size_t box_bad = 0, xh_bad = 0;
    for (const auto& g : corpus6) {
      BoundReport r = bound_constants(g);
      if (!box_check(g, r).empty()) ++box_bad;
      if (!xh_bound_holds(g, r)) ++xh_bad;
    }
    std::ostringstream d;
    d << corpus6.size() << " graphs, " << box_bad << " box violations, " << xh_bad
      << " fiber-sum bound violations";
    detail = d.str();
    return box_bad == 0 && xh_bad == 0;
  });

  std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed"
                                    : "acceptance: FAILURES present");
  return failures == 0 ? 0 : 1;
}
