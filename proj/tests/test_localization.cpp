#include <doctest.h>

#include "core/cohomology.hpp"
#include "core/enumerate.hpp"
#include "core/expr.hpp"
#include "core/localization.hpp"
#include "core/surgery.hpp"

using namespace hamgraph;

namespace {

Laurent t_term(long long c) { return Laurent::term(Rat(c), 1); }

}  // namespace

TEST_CASE("restrictions of generators match the fixed-point tables") {
  ExtendedGraph g = minimal_cp2(2, 1, Rat(1));  // chains [2], [1,1]
  FixedComponent mn{FixedComponent::Min, 0, 0};
  FixedComponent mx{FixedComponent::Max, 0, 0};
  FixedComponent v21{FixedComponent::Interior, 2, 1};

  RestrictionTuple th = restrict_class(g, parse_class("tauh"));
  CHECK(th.at(mn) == ComponentValue::point(t_term(-2)));
  CHECK(th.at(v21).is_zero());
  CHECK(th.at(mx) == ComponentValue::point(t_term(2)));

  RestrictionTuple s11 = restrict_class(g, parse_class("s(1,1)"));
  CHECK(s11.at(mn) == ComponentValue::point(t_term(-1)));
  CHECK(s11.at(mx) == ComponentValue::point(t_term(1)));
  CHECK(s11.at(v21).is_zero());

  RestrictionTuple s21 = restrict_class(g, parse_class("s(2,1)"));
  CHECK(s21.at(mn) == ComponentValue::point(t_term(-2)));
  CHECK(s21.at(v21) == ComponentValue::point(t_term(-1)));
  CHECK(s21.at(mx).is_zero());

  RestrictionTuple s22 = restrict_class(g, parse_class("s(2,2)"));
  CHECK(s22.at(v21) == ComponentValue::point(t_term(1)));
  CHECK(s22.at(mx) == ComponentValue::point(t_term(2)));
  CHECK(s22.at(mn).is_zero());

  // two-surface case: tau_0 restriction carries e_min on the sigma part
  ExtendedGraph r = minimal_ruled(0, Rat(1), Rat(2), 1);  // e_min = 1
  RestrictionTuple t0 = restrict_class(r, parse_class("tau0"));
  CHECK(t0.at(mn) == ComponentValue::at_surface(Laurent::term(Rat(-1), 1), Laurent::constant(Rat(1))));
  CHECK(t0.at(mx).is_zero());

  // tau0 is rejected when there is no bottom surface
  CHECK_THROWS_AS(restrict_class(g, parse_class("tau0")), Error);
}

TEST_CASE("euler inverses") {
  ExtendedGraph g = minimal_cp2(2, 1, Rat(1));
  FixedComponent mn{FixedComponent::Min, 0, 0};
  FixedComponent v21{FixedComponent::Interior, 2, 1};
  CHECK(euler_inverse(g, mn) == ComponentValue::point(Laurent::term(Rat(1, 2), -2)));
  CHECK(euler_inverse(g, v21) == ComponentValue::point(Laurent::term(Rat(-1), -2)));

  ExtendedGraph r = minimal_ruled(0, Rat(1), Rat(2), 1);  // e_max = -1
  FixedComponent mx{FixedComponent::Max, 0, 0};
  CHECK(euler_inverse(r, mx) ==
        ComponentValue::at_surface(Laurent::term(Rat(1), -1), Laurent::term(Rat(1), -2)));
}

TEST_CASE("localization integrals") {
  ExtendedGraph g = minimal_cp2(2, 1, Rat(1));
  // integral of tauh^2 is 4
  Laurent v = integrate(g, restrict_product(g, parse_class_product("tauh*tauh")));
  CHECK(v.coeff(0) == Rat(4));
  // integral of 1 vanishes for degree reasons
  RestrictionTuple ones;
  for (const auto& f : fixed_components(g))
    ones.values[f] = is_isolated(g, f)
                         ? ComponentValue::point(Laurent::constant(Rat(1)))
                         : ComponentValue::at_surface(Laurent::constant(Rat(1)), Laurent());
  CHECK(integrate(g, ones).is_zero());

  ExtendedGraph r = minimal_ruled(0, Rat(1), Rat(2), 0);
  Laurent z = integrate(r, restrict_product(r, parse_class_product("tau0*tauinf")));
  CHECK(z.is_zero());
}

TEST_CASE("intersection numbers against the worked examples") {
  ExtendedGraph g = minimal_cp2(2, 1, Rat(1));
  CHECK(intersect(g, parse_class("s(2,1)"), parse_class("s(2,1)")) == BigInt(1));
  CHECK(intersect(g, parse_class("tauh"), parse_class("tauh")) == BigInt(4));
  CHECK(intersect(g, parse_class("s(1,1)"), parse_class("s(1,1)")) == BigInt(1));
  CHECK(intersect(g, parse_class("s(1,1)"), parse_class("s(2,1)")) == BigInt(1));
  CHECK(intersect(g, parse_class("s(2,1)"), parse_class("s(2,2)")) == BigInt(1));
  CHECK(intersect(g, parse_class("s(1,1)"), parse_class("s(2,2)")) == BigInt(1));

  ExtendedGraph r = minimal_ruled(0, Rat(1), Rat(2), 1);
  CHECK(intersect(r, parse_class("tau0"), parse_class("tauinf")) == BigInt(0));
  CHECK(intersect(r, parse_class("tau0"), parse_class("tau0")) == BigInt(1));
  CHECK(intersect(r, parse_class("tauinf"), parse_class("tauinf")) == BigInt(-1));
  CHECK(intersect(r, parse_class("tau0"), parse_class("tauh")) == BigInt(1));
  CHECK(intersect(r, parse_class("tauh"), parse_class("tauh")) == BigInt(0));
}

TEST_CASE("table pairings equal the localization oracle on a small corpus") {
  EnumerateBounds b;
  b.max_edges = 4;
  b.max_label = 3;
  b.max_denominator = 1;
  auto graphs = enumerate_graphs(b);
  REQUIRE(graphs.size() > 0);
  for (const auto& g : graphs) {
    GenTable table(g);
    for (size_t x = 0; x < table.gens.size(); ++x)
      for (size_t y = x; y < table.gens.size(); ++y) {
        CohClass2 cx = CohClass2::unit(table.gens[x]);
        CohClass2 cy = CohClass2::unit(table.gens[y]);
        CHECK(Rat(intersect(g, cx, cy)) == intersect_abbv(g, cx, cy));
      }
  }
}

TEST_CASE("zero lengths") {
  ExtendedGraph g = minimal_cp2(2, 1, Rat(1));
  CHECK(zero_length(g, parse_class("tauh")) == 1);
  CHECK(zero_length(g, CohClass2()) == 3);

  ExtendedGraph r = minimal_ruled(0, Rat(1), Rat(2), 1);
  CHECK(zero_length(r, parse_class("tau0")) == 1);  // iso + 1 with iso = 0
}

TEST_CASE("class labels") {
  ExtendedGraph g = minimal_cp2(2, 1, Rat(1));
  auto l = class_label(g, parse_class("s(2,2)"));
  REQUIRE(l.defined);
  CHECK(l.value == Rat(1));
  // the label of every generator is its edge label
  for (size_t i = 1; i <= g.k(); ++i)
    for (size_t j = 1; j <= g.chain_len(i); ++j) {
      auto li = class_label(g, CohClass2::unit(Gen::sigma(i, j)));
      REQUIRE(li.defined);
      CHECK(li.value == Rat(g.label(i, j)));
      auto lneg = class_label(g, CohClass2::unit(Gen::sigma(i, j), BigInt(-1)));
      REQUIRE(lneg.defined);
      CHECK(lneg.value == li.value);
    }
  ExtendedGraph r = minimal_ruled(0, Rat(1), Rat(2), 1);
  auto l0 = class_label(r, parse_class("tau0"));
  REQUIRE(l0.defined);
  CHECK(l0.value == Rat(0));
}

TEST_CASE("expression parser") {
  CohClass2 c = parse_class("2*s(1,1) - s(2,1) + tauh");
  CHECK(c.coef.at(Gen::sigma(1, 1)) == BigInt(2));
  CHECK(c.coef.at(Gen::sigma(2, 1)) == BigInt(-1));
  CHECK(c.coef.at(Gen::tauh()) == BigInt(1));
  auto prod = parse_class_product("(s(1,1)+s(2,1))*tauh*s(2,2)");
  CHECK(prod.size() == 3);
  CHECK_THROWS_AS(parse_class("s(1,1) +"), Error);
  CHECK_THROWS_AS(parse_class("5"), Error);
}

TEST_CASE("chain-sum classes: zero lengths, pairings, labels") {
  // classes gamma * sum_{j=alpha..beta} m_{i,j} sigma_{i,j} with alpha < beta
  EnumerateBounds b;
  b.max_edges = 4;
  b.max_label = 3;
  b.max_denominator = 1;
  for (const auto& g : enumerate_graphs(b)) {
    long long base = g.iso_count() + g.fat_count() - 2;
    for (size_t i = 1; i <= g.k(); ++i) {
      size_t l = g.chain_len(i);
      for (size_t alpha = 1; alpha < l; ++alpha)
        for (size_t beta = alpha + 1; beta <= l; ++beta)
          for (long long gamma : {1, -1, 2}) {
            CohClass2 c;
            for (size_t j = alpha; j <= beta; ++j)
              c.add(Gen::sigma(i, j), BigInt(gamma * g.label(i, j)));
            CHECK(zero_length(g, c) == base);
            // self-intersection from the signed boundary labels
            BigInt below = alpha >= 2 ? BigInt(g.label(i, alpha - 1)) : boundary_label_below(g, i);
            BigInt above = beta + 1 <= l ? BigInt(g.label(i, beta + 1)) : boundary_label_above(g, i);
            BigInt want = BigInt(-gamma * gamma) *
                          (BigInt(g.label(i, beta)) * above + BigInt(g.label(i, alpha)) * below);
            CHECK(intersect(g, c, c) == want);
            if (g.min.fat) {
              BigInt t0 = intersect(g, c, CohClass2::unit(Gen::tau0()));
              CHECK(t0 == (alpha == 1 ? BigInt(gamma) : BigInt(0)));
            }
            if (g.max.fat) {
              BigInt ti = intersect(g, c, CohClass2::unit(Gen::tauinf()));
              CHECK(ti == (beta == l ? BigInt(gamma) : BigInt(0)));
            }
            ClassLabel lab = class_label(g, c);
            if (!want.is_zero()) {
              REQUIRE(lab.defined);
              CHECK(lab.value == Rat(BigInt(1), BigInt(std::llabs(gamma))));
            }
          }
    }
  }
}

TEST_CASE("unit pairings of chain sums occur only in the listed shapes") {
  EnumerateBounds b;
  b.max_edges = 4;
  b.max_label = 3;
  b.max_denominator = 1;
  for (const auto& g : enumerate_graphs(b)) {
    for (size_t i = 1; i <= g.k(); ++i) {
      size_t l = g.chain_len(i);
      for (size_t alpha = 1; alpha < l; ++alpha)
        for (size_t beta = alpha + 1; beta <= l; ++beta) {
          CohClass2 eta;
          for (size_t j = alpha; j <= beta; ++j) eta.add(Gen::sigma(i, j), BigInt(g.label(i, j)));
          for (size_t ip = 1; ip <= g.k(); ++ip)
            for (size_t j = 2; j + 1 <= g.chain_len(ip); ++j)
              for (long long gamma : {1, -1, 2, -2}) {
                // sigma interior: restriction vanishes at both extremes
                CohClass2 s = CohClass2::unit(Gen::sigma(ip, j), BigInt(gamma));
                if (intersect(g, eta, s) != BigInt(1)) continue;
                bool listed = ip == i && gamma == -1 &&
                              ((j == alpha && alpha == 2 && g.label(i, 1) == 1) ||
                               (j == beta && beta + 1 == l && g.label(i, l) == 1));
                CHECK(listed);
              }
        }
    }
  }
}

TEST_CASE("zero restriction tuple means zero normal form") {
  EnumerateBounds b;
  b.max_edges = 4;
  b.max_label = 2;
  b.max_denominator = 1;
  unsigned state = 123;
  for (const auto& g : enumerate_graphs(b)) {
    GenTable t(g);
    const Presentation& p = presentation_cached(g);
    for (int trial = 0; trial < 20; ++trial) {
      CohClass2 c;
      for (const auto& gen : t.gens) {
        state = state * 1664525u + 1013904223u;
        long long coef = static_cast<long long>(state % 5) - 2;
        c.add(gen, BigInt(coef));
      }
      bool zero_rest = restrict_class(g, c).is_zero();
      IntVec nf = normal_form(p, c);
      bool zero_nf = true;
      for (const auto& v : nf) zero_nf = zero_nf && v.is_zero();
      CHECK(zero_rest == zero_nf);
    }
  }
}
