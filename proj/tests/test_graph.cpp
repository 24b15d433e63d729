#include <doctest.h>

#include "core/dull.hpp"
#include "core/enumerate.hpp"
#include "core/graph.hpp"
#include "core/surgery.hpp"

using namespace hamgraph;

namespace {

const char* kCp2_111 = R"({
  "genus": 0,
  "min": {"fat": false, "height": "0"},
  "max": {"fat": true, "height": "1", "area": "1"},
  "chains": [
    {"edges": [{"m": 1, "len": "1"}]},
    {"edges": [{"m": 1, "len": "1"}]}
  ]
})";

const char* kCp2_211 = R"({
  "genus": 0,
  "min": {"fat": false, "height": "0"},
  "max": {"fat": false, "height": "2"},
  "chains": [
    {"edges": [{"m": 2, "len": "2"}]},
    {"edges": [{"m": 1, "len": "1"}, {"m": 1, "len": "1"}]}
  ]
})";

}  // namespace

TEST_CASE("parse round trip and normalization") {
  ExtendedGraph g = parse_graph(kCp2_111);
  CHECK(g.k() == 2);
  CHECK(g.max.fat);
  CHECK(g.max.area == Rat(1));
  CHECK(is_valid(g));
  ExtendedGraph g2 = parse_graph(graph_to_json(g));
  CHECK(canonical_equal(g, g2));

  // rationals parse reduced
  ExtendedGraph h = parse_graph(R"({"genus":0,
    "min":{"fat":false,"height":"0"},"max":{"fat":true,"height":"3/6","area":"2/4"},
    "chains":[{"edges":[{"m":1,"len":"1/2"}]},{"edges":[{"m":1,"len":"1/2"}]}]})");
  CHECK(h.max.height == Rat(1, 2));
  CHECK(h.max.area == Rat(1, 2));

  // zero area rejected
  CHECK_THROWS_AS(parse_graph(R"({"genus":0,
    "min":{"fat":false,"height":"0"},"max":{"fat":true,"height":"1","area":"0"},
    "chains":[{"edges":[{"m":1,"len":"1"}]},{"edges":[{"m":1,"len":"1"}]}]})"),
                  Error);

  // heights translate with a warning
  std::vector<std::string> warnings;
  ExtendedGraph t = parse_graph(R"({"genus":0,
    "min":{"fat":false,"height":"1"},"max":{"fat":true,"height":"2","area":"1"},
    "chains":[{"edges":[{"m":1,"len":"1"}]},{"edges":[{"m":1,"len":"1"}]}]})",
                                &warnings);
  CHECK(t.min.height.is_zero());
  CHECK(warnings.size() == 1);

  // a single fat minimum is stored flipped
  warnings.clear();
  ExtendedGraph f = parse_graph(R"({"genus":0,
    "min":{"fat":true,"height":"0","area":"1"},"max":{"fat":false,"height":"1"},
    "chains":[{"edges":[{"m":1,"len":"1"}]},{"edges":[{"m":1,"len":"1"}]}]})",
                                &warnings);
  CHECK(f.max.fat);
  CHECK(!f.min.fat);
  CHECK(warnings.size() == 1);
}

TEST_CASE("validate catches the named violations") {
  ExtendedGraph g = parse_graph(kCp2_211);
  CHECK(validate(g).empty());

  ExtendedGraph bad = g;
  bad.chains[1].edges[0].label = 2;
  bad.chains[1].edges[1].label = 4;
  auto v = validate(bad);
  bool found = false;
  for (const auto& x : v) found = found || x.code == "adjacent-coprime";
  CHECK(found);

  // chain sums must agree
  ExtendedGraph bad2 = g;
  bad2.chains[1].edges[0].length = Rat(1, 2);
  v = validate(bad2);
  found = false;
  for (const auto& x : v) found = found || x.code == "chain-sum";
  CHECK(found);

  // e_min consistency: move the interior vertex
  ExtendedGraph bad3 = g;
  bad3.chains[1].edges[0].length = Rat(1, 2);
  bad3.chains[1].edges[1].length = Rat(3, 2);
  v = validate(bad3);
  found = false;
  for (const auto& x : v) found = found || x.code == "e-min" || x.code == "e-max";
  CHECK(found);
}

TEST_CASE("extremal self-intersections match the worked values") {
  auto [e1min, e1max] = extremal_self_intersections(parse_graph(kCp2_111));
  CHECK(e1min == Rat(-1));
  CHECK(e1max == Rat(1));

  auto [e2min, e2max] = extremal_self_intersections(parse_graph(kCp2_211));
  CHECK(e2min == Rat(-1, 2));
  CHECK(e2max == Rat(-1, 2));

  // two fat vertices, equal areas: both self-intersections vanish
  ExtendedGraph r = minimal_ruled(0, Rat(1), Rat(2), 0);
  auto [e3min, e3max] = extremal_self_intersections(r);
  CHECK(e3min == Rat(0));
  CHECK(e3max == Rat(0));

  // trapezoid with areas 5/2 and 3/2
  ExtendedGraph hz = minimal_hirzebruch(1, 0, 1, Rat(2), Rat(1));
  auto [e4min, e4max] = extremal_self_intersections(hz);
  CHECK(e4min == Rat(1));
  CHECK(e4max == Rat(-1));
  CHECK(hz.min.area == Rat(5, 2));
  CHECK(hz.max.area == Rat(3, 2));
}

TEST_CASE("poincare ranks") {
  ExtendedGraph g = parse_graph(kCp2_211);
  long long want[] = {1, 0, 2, 0, 3, 0, 3};
  for (long long q = 0; q <= 6; ++q) CHECK(poincare_rank(g, q) == want[q]);

  ExtendedGraph r = minimal_ruled(1, Rat(1), Rat(2), 0);
  long long want2[] = {1, 2, 3, 4, 4, 4};
  for (long long q = 0; q <= 5; ++q) CHECK(poincare_rank(r, q) == want2[q]);

  // stabilization
  for (long long q = 5; q <= 12; ++q) CHECK(poincare_rank(r, q) == poincare_rank(r, q - 2));
}

TEST_CASE("isotropy weights") {
  ExtendedGraph g = parse_graph(kCp2_211);
  WeightMultiset w = isotropy_weights(g);
  WeightMultiset want = {{2, 1}, {-1, 1}, {-2, -1}};
  std::sort(want.begin(), want.end());
  CHECK(w == want);
}

TEST_CASE("ephemeral edges") {
  // one fat vertex with m_{2,1} >= 2: chains [3], [2], [1,1]; the rule is
  // purely combinatorial
  ExtendedGraph g;
  g.genus = 0;
  g.min = {false, Rat(0), Rat()};
  g.max = {true, Rat(6), Rat(1)};
  {
    Chain c1, c2, c3;
    c1.edges.push_back({3, Rat(6)});
    c2.edges.push_back({2, Rat(6)});
    c3.edges.push_back({1, Rat(2)});
    c3.edges.push_back({1, Rat(4)});
    g.chains = {c1, c2, c3};
  }
  canonicalize(g);
  auto eph = ephemeral_edges(g);
  CHECK(eph == std::set<std::pair<size_t, size_t>>{{3, 1}});

  CHECK(ephemeral_edges(parse_graph(kCp2_111)).empty());
  CHECK(ephemeral_edges(minimal_ruled(0, Rat(1), Rat(2), 0)).empty());
}

TEST_CASE("build_extended from decorated data") {
  const char* decorated = R"({
    "genus": 0,
    "min": {"fat": false, "height": "0"},
    "max": {"fat": false, "height": "2"},
    "vertices": [{"id": "p", "height": "1"}],
    "edges": [{"m": 2, "from": "min", "to": "max"}]
  })";
  ExtendedGraph g = parse_graph(decorated);
  CHECK(canonical_equal(g, parse_graph(kCp2_211)));

  // forgetting label-1 edges and rebuilding is the identity
  ExtendedGraph h = minimal_cp2(3, 2, Rat(1));
  ExtendedGraph back = build_extended(decorated_view(h));
  CHECK(canonical_equal(h, back));

  // a lone interior vertex with no fat vertex cannot pad to two chains
  const char* lonely = R"({
    "genus": 0,
    "min": {"fat": false, "height": "0"},
    "max": {"fat": false, "height": "2"},
    "vertices": [{"id": "p", "height": "1"}],
    "edges": []
  })";
  CHECK_THROWS_AS(parse_graph(lonely), Error);
}

TEST_CASE("enumerate small corpora") {
  EnumerateBounds b;
  b.max_edges = 2;
  b.max_label = 1;
  b.max_denominator = 1;
  auto graphs = enumerate_graphs(b);
  bool ruled_like = false, cp2_like = false;
  for (const auto& g : graphs) {
    if (g.fat_count() == 2 && g.total_edges() == 2) ruled_like = true;
    if (g.fat_count() == 1 && g.total_edges() == 2) cp2_like = true;
    CHECK(is_valid(g));
  }
  CHECK(ruled_like);
  CHECK(cp2_like);

  EnumerateBounds b2;
  b2.max_edges = 3;
  b2.max_label = 2;
  b2.max_denominator = 2;
  auto graphs2 = enumerate_graphs(b2);
  ExtendedGraph cp2 = minimal_cp2(2, 1, Rat(1));
  bool found = false;
  for (const auto& g : graphs2) found = found || canonical_equal(g, cp2);
  CHECK(found);
  for (const auto& g : graphs2) CHECK(is_valid(g));
}

TEST_CASE("two fat vertices with no decorated data pad to two trivial spheres") {
  const char* bare = R"({
    "genus": 0,
    "min": {"fat": true, "height": "0", "area": "2"},
    "max": {"fat": true, "height": "1", "area": "2"},
    "vertices": [],
    "edges": []
  })";
  ExtendedGraph g = parse_graph(bare);
  CHECK(canonical_equal(g, minimal_ruled(0, Rat(1), Rat(2), 0)));
}

TEST_CASE("the minimal plane has nothing to blow down") {
  ExtendedGraph g = minimal_cp2(2, 1, Rat(1));
  CHECK(blowdown_candidates(g).empty());
  CHECK_THROWS_AS(blowdown(g, BlowdownTarget{false, false, 1, 1}), Error);
  // a single surviving surface with m_{2,1} = 1 has no ephemeral edges
  ExtendedGraph h = minimal_hirzebruch(2, 1, 2, Rat(3), Rat(1));
  CHECK(ephemeral_edges(h).empty());
}

TEST_CASE("dull graphs are idempotent under re-canonicalization") {
  EnumerateBounds b;
  b.max_edges = 4;
  b.max_label = 3;
  b.max_denominator = 1;
  for (const auto& g : enumerate_graphs(b)) {
    DullGraph d = dull(g);
    CHECK(canonical_dull(d) == d);
  }
}
