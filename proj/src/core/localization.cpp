#include "localization.hpp"

#include <algorithm>
#include <sstream>

namespace hamgraph {

std::string Gen::name() const {
  switch (kind) {
    case Tau0: return "tau0";
    case TauInf: return "tauinf";
    case TauH: return "tauh";
    default: {
      std::ostringstream os;
      os << "s(" << i << "," << j << ")";
      return os.str();
    }
  }
}

CohClass2 CohClass2::unit(const Gen& g, BigInt c) {
  CohClass2 r;
  if (!c.is_zero()) r.coef[g] = std::move(c);
  return r;
}

bool CohClass2::is_zero() const { return coef.empty(); }

CohClass2& CohClass2::add(const Gen& g, const BigInt& c) {
  if (c.is_zero()) return *this;
  auto it = coef.find(g);
  if (it == coef.end()) {
    coef[g] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) coef.erase(it);
  }
  return *this;
}

CohClass2& CohClass2::operator+=(const CohClass2& o) {
  for (const auto& [g, c] : o.coef) add(g, c);
  return *this;
}

CohClass2& CohClass2::operator-=(const CohClass2& o) {
  for (const auto& [g, c] : o.coef) add(g, -c);
  return *this;
}

CohClass2 CohClass2::operator-() const {
  CohClass2 r;
  for (const auto& [g, c] : coef) r.coef[g] = -c;
  return r;
}

CohClass2& CohClass2::operator*=(const BigInt& c) {
  if (c.is_zero()) {
    coef.clear();
    return *this;
  }
  for (auto& [g, v] : coef) v *= c;
  return *this;
}

bool operator==(const CohClass2& a, const CohClass2& b) { return a.coef == b.coef; }

std::string CohClass2::str() const {
  if (coef.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : coef) {
    BigInt a = c.abs();
    if (first) {
      if (c.is_negative()) os << "-";
      first = false;
    } else {
      os << (c.is_negative() ? " - " : " + ");
    }
    if (!a.is_one()) os << a.to_string() << "*";
    os << g.name();
  }
  return os.str();
}

GenTable::GenTable(const ExtendedGraph& g) {
  gens.push_back(Gen::tauh());
  for (size_t i = 1; i <= g.k(); ++i)
    for (size_t j = 1; j <= g.chain_len(i); ++j) gens.push_back(Gen::sigma(i, j));
  if (g.min.fat) gens.push_back(Gen::tau0());
  if (g.max.fat) gens.push_back(Gen::tauinf());
}

size_t GenTable::index(const Gen& g) const {
  for (size_t n = 0; n < gens.size(); ++n)
    if (gens[n] == g) return n;
  throw Error("unknown-generator", "generator " + g.name() + " is not present in this graph");
}

bool GenTable::contains(const Gen& g) const {
  for (const auto& x : gens)
    if (x == g) return true;
  return false;
}

IntVec GenTable::dense(const CohClass2& c) const {
  IntVec v(gens.size(), BigInt(0));
  for (const auto& [g, a] : c.coef) v[index(g)] = a;
  return v;
}

CohClass2 GenTable::sparse(const IntVec& v) const {
  CohClass2 c;
  for (size_t n = 0; n < gens.size(); ++n) c.add(gens[n], v[n]);
  return c;
}

const ComponentValue& RestrictionTuple::at(const FixedComponent& f) const {
  static const ComponentValue zero;
  auto it = values.find(f);
  return it == values.end() ? zero : it->second;
}

RestrictionTuple& RestrictionTuple::operator+=(const RestrictionTuple& o) {
  for (const auto& [f, v] : o.values) {
    auto it = values.find(f);
    if (it == values.end())
      values[f] = v;
    else
      it->second += v;
  }
  return *this;
}

RestrictionTuple& RestrictionTuple::operator*=(const Rat& c) {
  for (auto& [f, v] : values) v *= c;
  return *this;
}

RestrictionTuple operator*(const RestrictionTuple& a, const RestrictionTuple& b) {
  RestrictionTuple r;
  for (const auto& [f, v] : a.values) {
    auto it = b.values.find(f);
    if (it != b.values.end()) r.values[f] = v * it->second;
  }
  return r;
}

bool RestrictionTuple::is_zero() const {
  for (const auto& [f, v] : values)
    if (!v.is_zero()) return false;
  return true;
}

std::string RestrictionTuple::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, v] : values) {
    if (v.is_zero()) continue;
    if (!first) os << "; ";
    first = false;
    os << f.name() << ": " << v.str();
  }
  if (first) os << "0";
  return os.str();
}

namespace {

Laurent tmono(long long c, int deg = 1) { return Laurent::term(Rat(c), deg); }

void put(RestrictionTuple& r, const FixedComponent& f, ComponentValue v) {
  auto it = r.values.find(f);
  if (it == r.values.end())
    r.values[f] = std::move(v);
  else
    it->second += v;
}

}  // namespace

RestrictionTuple restrict_generator(const ExtendedGraph& g, const Gen& gen) {
  RestrictionTuple r;
  const FixedComponent MIN{FixedComponent::Min, 0, 0};
  const FixedComponent MAX{FixedComponent::Max, 0, 0};
  auto [emin, emax] = extremal_self_intersections(g);

  switch (gen.kind) {
    case Gen::Tau0: {
      if (!g.min.fat) throw Error("unknown-generator", "tau0 requires a fat minimum");
      put(r, MIN, ComponentValue::at_surface(-tmono(1), Laurent::constant(emin)));
      return r;
    }
    case Gen::TauInf: {
      if (!g.max.fat) throw Error("unknown-generator", "tauinf requires a fat maximum");
      put(r, MAX, ComponentValue::at_surface(tmono(1), Laurent::constant(emax)));
      return r;
    }
    case Gen::TauH: {
      if (g.min.fat)
        put(r, MIN, ComponentValue::at_surface({}, Laurent::constant(Rat(1))));
      else
        put(r, MIN, ComponentValue::point(tmono(-g.label(1, 1) * g.label(2, 1))));
      if (g.max.fat)
        put(r, MAX, ComponentValue::at_surface({}, Laurent::constant(Rat(1))));
      else
        put(r, MAX, ComponentValue::point(tmono(g.label(1, g.chain_len(1)) * g.label(2, g.chain_len(2)))));
      return r;
    }
    case Gen::Sigma: {
      size_t i = gen.i, j = gen.j;
      if (i < 1 || i > g.k() || j < 1 || j > g.chain_len(i))
        throw Error("unknown-generator", gen.name() + " is not an edge of this graph");
      // bottom end
      if (j == 1) {
        if (g.min.fat) {
          put(r, MIN, ComponentValue::at_surface({}, Laurent::constant(Rat(1))));
        } else if (i >= 3) {
          put(r, MIN, ComponentValue::point(tmono(-g.label(1, 1) * g.label(2, 1))));
        } else {
          size_t other = i == 1 ? 2 : 1;
          put(r, MIN, ComponentValue::point(tmono(-g.label(other, 1))));
        }
      } else {
        put(r, {FixedComponent::Interior, i, j - 1}, ComponentValue::point(tmono(g.label(i, j - 1))));
      }
      // top end
      if (j == g.chain_len(i)) {
        if (g.max.fat) {
          put(r, MAX, ComponentValue::at_surface({}, Laurent::constant(Rat(1))));
        } else {
          size_t other = i == 1 ? 2 : 1;
          put(r, MAX, ComponentValue::point(tmono(g.label(other, g.chain_len(other)))));
        }
      } else {
        put(r, {FixedComponent::Interior, i, j}, ComponentValue::point(tmono(-g.label(i, j + 1))));
      }
      return r;
    }
  }
  return r;
}

RestrictionTuple restrict_class(const ExtendedGraph& g, const CohClass2& c) {
  RestrictionTuple r;
  for (const auto& [gen, a] : c.coef) {
    RestrictionTuple rg = restrict_generator(g, gen);
    rg *= Rat(a);
    r += rg;
  }
  return r;
}

RestrictionTuple restrict_product(const ExtendedGraph& g, const std::vector<CohClass2>& factors) {
  RestrictionTuple r;
  bool first = true;
  for (const auto& c : factors) {
    RestrictionTuple rc = restrict_class(g, c);
    if (first) {
      r = std::move(rc);
      first = false;
    } else {
      r = r * rc;
    }
  }
  return r;
}

ComponentValue euler_inverse(const ExtendedGraph& g, const FixedComponent& f) {
  auto [emin, emax] = extremal_self_intersections(g);
  switch (f.kind) {
    case FixedComponent::Min:
      if (g.min.fat)
        return ComponentValue::at_surface(Laurent::term(Rat(-1), -1), Laurent::term(-emin, -2));
      return ComponentValue::point(
          Laurent::term(Rat(BigInt(1), BigInt(g.label(1, 1)) * BigInt(g.label(2, 1))), -2));
    case FixedComponent::Max:
      if (g.max.fat)
        return ComponentValue::at_surface(Laurent::term(Rat(1), -1), Laurent::term(-emax, -2));
      return ComponentValue::point(Laurent::term(
          Rat(BigInt(1), BigInt(g.label(1, g.chain_len(1))) * BigInt(g.label(2, g.chain_len(2)))), -2));
    default:
      return ComponentValue::point(Laurent::term(
          Rat(BigInt(-1), BigInt(g.label(f.i, f.j)) * BigInt(g.label(f.i, f.j + 1))), -2));
  }
}

Laurent integrate(const ExtendedGraph& g, const RestrictionTuple& r) {
  Laurent total;
  for (const auto& f : fixed_components(g)) {
    const ComponentValue& v = r.at(f);
    if (v.is_zero()) continue;
    ComponentValue prod = v * euler_inverse(g, f);
    if (is_isolated(g, f)) {
      total += prod.plain;
    } else {
      total += prod.sigma;  // integration over the surface keeps the [S] part
    }
  }
  for (int d = Laurent::kMin; d < -1; ++d)
    if (!total.coeff(d).is_zero())
      throw Error("localization-residue",
                  "negative t-powers fail to cancel: " + total.str());
  return total;
}

BigInt boundary_label_below(const ExtendedGraph& g, size_t i) {
  int fat = g.fat_count();
  if (g.min.fat) return BigInt(0);
  if (fat == 0 || i <= 2) {
    size_t other = i == 1 ? 2 : 1;
    return BigInt(-g.label(other, 1));
  }
  return BigInt(-g.label(1, 1) * g.label(2, 1));
}

BigInt boundary_label_above(const ExtendedGraph& g, size_t i) {
  if (g.max.fat) return BigInt(0);
  size_t other = i == 1 ? 2 : 1;
  return BigInt(-g.label(other, g.chain_len(other)));
}

namespace {

// self-pairing of sigma_{i,j} with the signed boundary conventions
Rat sigma_self(const ExtendedGraph& g, size_t i, size_t j) {
  BigInt below = j >= 2 ? BigInt(g.label(i, j - 1)) : boundary_label_below(g, i);
  BigInt above = j + 1 <= g.chain_len(i) ? BigInt(g.label(i, j + 1)) : boundary_label_above(g, i);
  return -Rat(below + above) / Rat(g.label(i, j));
}

// cross-chain pairing of bottom edges at an isolated minimum
Rat bottom_cross(const ExtendedGraph& g, size_t i, size_t ii) {
  auto value = [&](size_t c) {
    return c >= 3 ? BigInt(g.label(1, 1) * g.label(2, 1)) : BigInt(g.label(c == 1 ? 2 : 1, 1));
  };
  return Rat(value(i) * value(ii)) / Rat(BigInt(g.label(1, 1)) * BigInt(g.label(2, 1)));
}

Rat sigma_pair(const ExtendedGraph& g, const Gen& a, const Gen& b) {
  if (a.i == b.i) {
    size_t lo = std::min(a.j, b.j), hi = std::max(a.j, b.j);
    if (lo == hi) return sigma_self(g, a.i, a.j);
    if (hi == lo + 1) return Rat(1);
    return Rat(0);
  }
  Rat out;
  if (!g.min.fat && a.j == 1 && b.j == 1) out += bottom_cross(g, a.i, b.i);
  if (!g.max.fat && a.j == g.chain_len(a.i) && b.j == g.chain_len(b.i)) out += Rat(1);
  return out;
}

}  // namespace

Rat intersect_generators(const ExtendedGraph& g, const Gen& a, const Gen& b) {
  auto expand = [&](const Gen& x) {
    CohClass2 c;
    if (x.kind == Gen::TauH) {
      for (size_t j = 1; j <= g.chain_len(1); ++j) c.add(Gen::sigma(1, j), BigInt(g.label(1, j)));
    } else {
      c.add(x, BigInt(1));
    }
    return c;
  };
  auto [emin, emax] = extremal_self_intersections(g);
  auto pair_basic = [&](const Gen& x, const Gen& y) -> Rat {
    // x, y are tau0 / tauinf / sigma
    if (x.kind == Gen::Tau0 || y.kind == Gen::Tau0) {
      const Gen& o = x.kind == Gen::Tau0 ? y : x;
      if (!g.min.fat) throw Error("unknown-generator", "tau0 requires a fat minimum");
      if (o.kind == Gen::Tau0) return emin;
      if (o.kind == Gen::TauInf) return Rat(0);
      return Rat(o.j == 1 ? 1 : 0);
    }
    if (x.kind == Gen::TauInf || y.kind == Gen::TauInf) {
      const Gen& o = x.kind == Gen::TauInf ? y : x;
      if (!g.max.fat) throw Error("unknown-generator", "tauinf requires a fat maximum");
      if (o.kind == Gen::TauInf) return emax;
      return Rat(o.j == g.chain_len(o.i) ? 1 : 0);
    }
    return sigma_pair(g, x, y);
  };
  CohClass2 ca = expand(a), cb = expand(b);
  Rat out;
  for (const auto& [x, cx] : ca.coef)
    for (const auto& [y, cy] : cb.coef) out += Rat(cx * cy) * pair_basic(x, y);
  return out;
}

BigInt intersect(const ExtendedGraph& g, const CohClass2& a, const CohClass2& b) {
  Rat out;
  for (const auto& [x, cx] : a.coef)
    for (const auto& [y, cy] : b.coef) out += Rat(cx * cy) * intersect_generators(g, x, y);
  if (!out.is_integer())
    throw Error("intersection-nonintegral",
                "intersection pairing " + out.str() + " is not an integer");
  return out.num();
}

Rat intersect_abbv(const ExtendedGraph& g, const CohClass2& a, const CohClass2& b) {
  Laurent v = integrate(g, restrict_product(g, {a, b}));
  // a genuine degree-4 pairing is the constant coefficient
  return v.coeff(0);
}

long long zero_length(const ExtendedGraph& g, const CohClass2& c) {
  RestrictionTuple r = restrict_class(g, c);
  long long n = 0;
  for (const auto& f : fixed_components(g))
    if (r.at(f).is_zero()) ++n;
  return n;
}

ClassLabel class_label(const ExtendedGraph& g, const CohClass2& c) {
  RestrictionTuple r = restrict_class(g, c);
  std::vector<FixedComponent> support;
  for (const auto& f : fixed_components(g))
    if (!r.at(f).is_zero()) support.push_back(f);
  // the defined special cases: classes supported only on one fat extreme
  if (support.size() == 1 && !is_isolated(g, support[0])) return {true, Rat(0)};
  if (support.size() != 2) return {false, Rat(0)};
  Rat self = Rat(intersect(g, c, c));
  if (self.is_zero()) return {false, Rat(0)};
  Rat acc;
  for (const auto& f : support) {
    Rat w;
    if (is_isolated(g, f)) {
      const Laurent& v = r.at(f).plain;
      w = v.coeff(1).abs();
    }
    bool extremal = f.kind != FixedComponent::Interior;
    acc += (extremal ? -w : w);
  }
  return {true, -acc / self};
}

}  // namespace hamgraph
