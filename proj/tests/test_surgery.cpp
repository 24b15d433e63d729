#include <doctest.h>

#include "core/cohomology.hpp"
#include "core/enumerate.hpp"
#include "core/dull.hpp"
#include "core/morphisms.hpp"
#include "core/surgery.hpp"

using namespace hamgraph;

namespace {

// the two graphs of the counterexample pair: two fat vertices, chains
// [1,3,2,1],[1,3,2,1] and [1,2,3,1],[1,3,2,1], built by blowing up a ruled
// surface so the heights and areas come out valid by construction
ExtendedGraph counterexample(bool flipped_chain) {
  // ruled base with e_min = -1 so the final reduction ends at the plane
  ExtendedGraph g = minimal_ruled(0, Rat(4), Rat(8), -1);
  auto grow = [&](bool flip_order) {
    // [1] -> [1,1] -> [1,2,1] -> [1,3,2,1] (or [1,2,3,1])
    auto [h1, r1] = blowup(g, BlowupSite{BlowupSite::FatSurface, true, 0, 0}, Rat(1));
    g = h1;
    auto find_chain = [&](const std::vector<long long>& labels) {
      for (size_t i = 1; i <= g.k(); ++i)
        if (g.chains[i - 1].labels() == labels) return i;
      REQUIRE(false);
      return size_t(0);
    };
    size_t c = find_chain({1, 1});
    auto [h2, r2] = blowup(g, BlowupSite{BlowupSite::Interior, true, c, 1}, Rat(1, 4));
    g = h2;
    c = find_chain({1, 2, 1});
    // insert 3 between (1,2) or between (2,1)
    size_t pos = flip_order ? 2 : 1;
    auto [h3, r3] = blowup(g, BlowupSite{BlowupSite::Interior, true, c, pos}, Rat(1, 16));
    g = h3;
  };
  grow(false);           // first chain [1,3,2,1]
  grow(flipped_chain);   // second chain [1,3,2,1] or [1,2,3,1]
  return g;
}

}  // namespace

TEST_CASE("minimal model constructors") {
  ExtendedGraph cp2 = minimal_cp2(3, 2, Rat(1));
  CHECK(cp2.chains[0].labels() == std::vector<long long>{3});
  CHECK(cp2.chains[1].labels() == std::vector<long long>{2, 1});
  CHECK(cp2.length(1, 1) == Rat(3));
  CHECK(cp2.length(2, 1) == Rat(2));
  CHECK(cp2.length(2, 2) == Rat(1));
  CHECK(is_valid(cp2));

  CHECK_THROWS_AS(minimal_cp2(2, 4, Rat(1)), Error);
  CHECK_THROWS_AS(minimal_ruled(1, Rat(1), Rat(1), 2), Error);  // area would vanish

  // ruled g=0 with e_min = 1 coincides with the trapezoid model
  CHECK(canonical_equal(minimal_ruled(0, Rat(1), Rat(2), 1),
                        minimal_hirzebruch(1, 0, 1, Rat(2), Rat(1))));

  ExtendedGraph r = minimal_ruled(2, Rat(1), Rat(3), 1);
  CHECK(r.min.area == Rat(7, 2));
  CHECK(r.max.area == Rat(5, 2));
}

TEST_CASE("interior blowup and blowdown round trip") {
  ExtendedGraph g = minimal_cp2(2, 1, Rat(1));  // chains [2],[1,1]
  auto [h, rec] = blowup(g, BlowupSite{BlowupSite::Interior, true, 2, 1}, Rat(1, 4));
  CHECK(is_valid(h));
  CHECK(h.chains[1].labels() == std::vector<long long>{1, 2, 1});
  CHECK(h.euler() == g.euler() + 1);
  auto [back, rec2] = blowdown(h, BlowdownTarget{false, false, 2, 2});
  CHECK(canonical_equal(back, g));
  CHECK(canonical_equal(replay_one(back, rec2), h));
  CHECK(canonical_equal(replay_one(g, rec), h));

  CHECK_THROWS_AS(blowup(g, BlowupSite{BlowupSite::Interior, true, 2, 1}, Rat(2)), Error);
}

TEST_CASE("isolated extreme blowup matches the one-point blowup of the plane") {
  ExtendedGraph cp2 = minimal_cp2(1, 1, Rat(1));
  auto [h, rec] = blowup(cp2, BlowupSite{BlowupSite::IsolatedExtreme, false, 0, 0}, Rat(1, 2));
  CHECK(is_valid(h));
  CHECK(h.fat_count() == 2);
  auto [emin, emax] = extremal_self_intersections(h);
  CHECK(((emin == Rat(-1)) || (emax == Rat(-1))));
  ExtendedGraph f1 = minimal_hirzebruch(1, 0, 1, Rat(3, 4), Rat(1, 2));
  CHECK(dull_isomorphic(dull(h), dull(f1)).has_value());
  bool at_max = emax == Rat(-1);
  auto [back, rec2] = blowdown(h, BlowdownTarget{true, at_max, 0, 0});
  CHECK(canonical_equal(back, cp2));
  CHECK(canonical_equal(replay_one(back, rec2), h));
}

TEST_CASE("distinct-weight extreme blowup prepends to the heavy chain") {
  ExtendedGraph g = minimal_cp2(2, 1, Rat(1));  // min weights (2,1)
  auto [h, rec] = blowup(g, BlowupSite{BlowupSite::IsolatedExtreme, false, 0, 0}, Rat(1, 4));
  CHECK(is_valid(h));
  bool seen = false;
  for (size_t i = 1; i <= h.k(); ++i)
    seen = seen || h.chains[i - 1].labels() == std::vector<long long>{1, 2};
  CHECK(seen);
  CHECK(h.euler() == g.euler() + 1);
  size_t ci = 0;
  for (size_t i = 1; i <= h.k(); ++i)
    if (h.chains[i - 1].labels() == std::vector<long long>{1, 2}) ci = i;
  auto [back, rec2] = blowdown(h, BlowdownTarget{false, false, ci, 1});
  CHECK(canonical_equal(back, g));
}

TEST_CASE("surface blowup adds a chain and consumes padding") {
  ExtendedGraph r = minimal_ruled(0, Rat(2), Rat(4), 0);  // chains [1],[1]
  auto [h, rec] = blowup(r, BlowupSite{BlowupSite::FatSurface, true, 0, 0}, Rat(1, 2));
  CHECK(is_valid(h));
  CHECK(h.k() == 2);  // one padding sphere dropped
  CHECK(rec.dropped_pad != 0);
  auto [emin, emax] = extremal_self_intersections(h);
  CHECK(emax == Rat(-1));
  CHECK(h.max.area == Rat(7, 2));
  auto [h2, rec2] = blowup(h, BlowupSite{BlowupSite::FatSurface, true, 0, 0}, Rat(1, 4));
  CHECK(h2.k() == 2);
  auto [h3, rec3] = blowup(h2, BlowupSite{BlowupSite::FatSurface, true, 0, 0}, Rat(1, 8));
  CHECK(h3.k() == 3);
  CHECK(is_valid(h3));
  auto [e3min, e3max] = extremal_self_intersections(h3);
  CHECK(e3max == Rat(-3));
  CHECK(h3.max.area == Rat(4) - Rat(1, 2) - Rat(1, 4) - Rat(1, 8));

  REQUIRE(rec3.new_chain != 0);
  auto [back, recb] = blowdown(h3, BlowdownTarget{false, false, rec3.new_chain, 2});
  CHECK(canonical_equal(back, h2));
}

TEST_CASE("reduce to minimal models") {
  Reduction r1 = reduce_to_minimal(minimal_cp2(3, 2, Rat(1)));
  CHECK(r1.model.kind == MinimalModelId::CP2);
  CHECK(r1.model.m == 3);
  CHECK(r1.model.n == 2);
  CHECK(r1.records.empty());

  Reduction r2 = reduce_to_minimal(minimal_ruled(1, Rat(1), Rat(2), 0));
  CHECK(r2.model.kind == MinimalModelId::Ruled);
  CHECK(r2.records.empty());

  Reduction r3 = reduce_to_minimal(minimal_hirzebruch(2, 1, 2, Rat(3), Rat(1)));
  CHECK(r3.model.kind == MinimalModelId::Hirzebruch);
  CHECK(r3.model.N == 2);
  CHECK(r3.records.empty());

  ExtendedGraph cp2 = minimal_cp2(1, 1, Rat(1));
  auto [h, rec] = blowup(cp2, BlowupSite{BlowupSite::FatSurface, true, 0, 0}, Rat(1, 2));
  Reduction r4 = reduce_to_minimal(h);
  CHECK(r4.model.kind == MinimalModelId::CP2);
  CHECK(r4.records.size() == 1);
  CHECK(canonical_equal(replay(r4), h));
}

TEST_CASE("counterexample graphs reduce in exactly seven blowdowns") {
  ExtendedGraph M = counterexample(false);
  ExtendedGraph N = counterexample(true);
  REQUIRE(is_valid(M));
  REQUIRE(is_valid(N));
  CHECK(M.chains[0].labels() == std::vector<long long>{1, 3, 2, 1});
  CHECK(M.chains[1].labels() == std::vector<long long>{1, 3, 2, 1});
  bool n_has_flip = false;
  for (size_t i = 1; i <= N.k(); ++i)
    n_has_flip = n_has_flip || N.chains[i - 1].labels() == std::vector<long long>{1, 2, 3, 1};
  CHECK(n_has_flip);

  for (const ExtendedGraph* g : {&M, &N}) {
    Reduction red = reduce_to_minimal(*g);
    CHECK(red.model.kind == MinimalModelId::CP2);
    CHECK(red.records.size() == 7);
    CHECK(canonical_equal(replay(red), *g));
  }
}

TEST_CASE("reduction replay over a corpus") {
  EnumerateBounds b;
  b.max_edges = 4;
  b.max_label = 3;
  b.max_denominator = 2;
  auto graphs = enumerate_graphs(b);
  REQUIRE(!graphs.empty());
  for (const auto& g : graphs) {
    Reduction red = reduce_to_minimal(g);
    CHECK(canonical_equal(replay(red), g));
  }
}

TEST_CASE("blowup round trips with euler bookkeeping over a corpus") {
  EnumerateBounds b;
  b.max_edges = 3;
  b.max_label = 2;
  b.max_denominator = 1;
  auto graphs = enumerate_graphs(b);
  for (const auto& g : graphs) {
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
      CHECK(is_valid(h));
      CHECK(h.euler() == g.euler() + 1);
      CHECK(canonical_equal(replay_one(g, rec), h));
      GeneratorTransport tr = transport_generators(rec);
      REQUIRE(tr.exceptional.coef.size() == 1);
      Gen exc = tr.exceptional.coef.begin()->first;
      BlowdownTarget t;
      if (exc.kind == Gen::Sigma) {
        t = BlowdownTarget{false, false, exc.i, exc.j};
      } else {
        t = BlowdownTarget{true, exc.kind == Gen::TauInf, 0, 0};
      }
      auto [back, rec2] = blowdown(h, t);
      bool same = canonical_equal(back, g) ||
                  (rec.internal_flip && canonical_equal(back, reversed(g)));
      CHECK(same);
    }
  }
}

TEST_CASE("transport rows") {
  // Type I: generators above the insertion shift by one
  ExtendedGraph g = minimal_cp2(2, 1, Rat(1));
  auto [h, rec] = blowup(g, BlowupSite{BlowupSite::Interior, true, 2, 1}, Rat(1, 4));
  GeneratorTransport tr = transport_generators(rec);
  size_t pc = rec.chain_map[2];
  CHECK(tr.map.at(Gen::sigma(2, 1)) == CohClass2::unit(Gen::sigma(pc, 1)));
  CHECK(tr.map.at(Gen::sigma(2, 2)) == CohClass2::unit(Gen::sigma(pc, 3)));
  CHECK(tr.exceptional == CohClass2::unit(Gen::sigma(pc, 2)));

  // Type II at the maximum: exceptional is the top edge of the new chain
  ExtendedGraph r = minimal_ruled(0, Rat(2), Rat(4), 0);
  auto [h2, rec2] = blowup(r, BlowupSite{BlowupSite::FatSurface, true, 0, 0}, Rat(1, 2));
  GeneratorTransport tr2 = transport_generators(rec2);
  CHECK(tr2.map.at(Gen::tau0()) == CohClass2::unit(Gen::tau0()));
  CHECK(tr2.map.at(Gen::tauinf()) == CohClass2::unit(Gen::tauinf()));
  CHECK(tr2.map.at(Gen::sigma(rec2.dropped_pad, 1)) == CohClass2::unit(Gen::tauh()));
  CHECK(tr2.exceptional == CohClass2::unit(Gen::sigma(rec2.new_chain, 2)));

  // Type IV at the minimum: exceptional is the new bottom surface class
  ExtendedGraph cp2 = minimal_cp2(1, 1, Rat(1));
  auto [h3, rec3] = blowup(cp2, BlowupSite{BlowupSite::IsolatedExtreme, false, 0, 0}, Rat(1, 2));
  GeneratorTransport tr3 = transport_generators(rec3);
  CHECK(tr3.exceptional == CohClass2::unit(Gen::tau0()));

  // transported relations keep vanishing in the target
  Presentation ps(g);
  for (const auto& mono : ps.product_relations) {
    std::vector<CohClass2> imgs;
    for (const auto& gen : mono) imgs.push_back(tr.map.at(gen));
    CHECK(restrict_product(h, imgs).is_zero());
  }
}

TEST_CASE("transport across a flipped record") {
  ExtendedGraph r = minimal_ruled(0, Rat(1), Rat(2), 1);  // e_max = -1
  auto [small, rec] = blowdown(r, BlowdownTarget{true, true, 0, 0});
  CHECK(small.fat_count() == 1);
  CHECK(small.max.fat);
  CHECK(rec.flip_after);
  CHECK(canonical_equal(replay_one(small, rec), r));
  GeneratorTransport tr = transport_generators(rec);
  // the exceptional divisor is the -1 surface, i.e. the top of the big graph;
  // the surviving surface of the small graph lands at the bottom
  CHECK(tr.exceptional == CohClass2::unit(Gen::tauinf()));
  CHECK(tr.map.at(Gen::tauinf()) == CohClass2::unit(Gen::tau0()));
}

TEST_CASE("projections with negative and mixed circle parameters") {
  // each of these must build a valid graph; single surfaces land on top
  for (auto [m, n] : std::vector<std::pair<long long, long long>>{
           {-1, 0}, {0, -1}, {-1, -1}, {1, -1}, {-2, 1}, {2, -1}, {-3, 2}}) {
    ExtendedGraph g = minimal_cp2(m, n, Rat(1));
    CHECK(is_valid(g));
    if (g.fat_count() == 1) CHECK(g.max.fat);
  }
  CHECK(canonical_equal(minimal_cp2(1, -1, Rat(1)), minimal_cp2(-1, 1, Rat(1))));
  for (auto [m, n] : std::vector<std::pair<long long, long long>>{
           {0, -1}, {-1, 0}, {-1, 2}, {2, -1}, {-2, -3}}) {
    ExtendedGraph g = minimal_hirzebruch(2, m, n, Rat(3), Rat(1));
    CHECK(is_valid(g));
    if (g.fat_count() == 1) CHECK(g.max.fat);
  }
}

TEST_CASE("random blowup sequences stay valid, reduce, and replay") {
  unsigned state = 2024;
  auto rnd = [&](unsigned mod) {
    state = state * 1664525u + 1013904223u;
    return state % mod;
  };
  std::vector<ExtendedGraph> seeds = {
      minimal_cp2(1, 1, Rat(1)),      minimal_cp2(2, 1, Rat(1)),
      minimal_cp2(3, 2, Rat(2)),      minimal_ruled(0, Rat(2), Rat(4), 0),
      minimal_ruled(1, Rat(1), Rat(3), 1), minimal_hirzebruch(2, 1, 2, Rat(3), Rat(1))};
  for (int trial = 0; trial < 24; ++trial) {
    ExtendedGraph g = seeds[trial % seeds.size()];
    for (int depth = 0; depth < 6; ++depth) {
      // collect every admissible site, pick one pseudo-randomly
      std::vector<BlowupSite> sites;
      for (size_t i = 1; i <= g.k(); ++i)
        for (size_t j = 1; j + 1 <= g.chain_len(i); ++j)
          sites.push_back({BlowupSite::Interior, true, i, j});
      for (bool at_max : {false, true}) {
        sites.push_back({BlowupSite::IsolatedExtreme, at_max, 0, 0});
        sites.push_back({BlowupSite::FatSurface, at_max, 0, 0});
      }
      bool advanced = false;
      for (size_t attempt = 0; attempt < sites.size() && !advanced; ++attempt) {
        const BlowupSite& site = sites[rnd(static_cast<unsigned>(sites.size()))];
        Rat lambda(1, 4 << rnd(4));
        try {
          auto [h, rec] = blowup(g, site, lambda);
          g = h;
          advanced = true;
        } catch (const Error&) {
        }
      }
      if (!advanced) break;
      REQUIRE(is_valid(g));
    }
    Reduction red = reduce_to_minimal(g);
    CHECK(canonical_equal(replay(red), g));
  }
}
