#include "surgery.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hamgraph {

std::string MinimalModelId::str() const {
  std::ostringstream os;
  switch (kind) {
    case CP2:
      os << "CP2(m=" << m << ",n=" << n << ",lambda=" << lambda.str() << ")";
      break;
    case Hirzebruch:
      os << "Hirzebruch(N=" << N << ",m=" << m << ",n=" << n << ",beta=" << beta.str()
         << ",f=" << f.str() << ")";
      break;
    case Ruled:
      os << "Ruled(g=" << genus << ",fiber=" << fiber.str() << ",base=" << base.str()
         << ",parity=" << parity << ")";
      break;
  }
  return os.str();
}

std::string BlowupSite::str() const {
  std::ostringstream os;
  switch (kind) {
    case Interior: os << "interior:i=" << i << ",j=" << j; break;
    case IsolatedExtreme: os << "extreme:" << (at_max ? "max" : "min"); break;
    case FatSurface: os << "fat:" << (at_max ? "max" : "min"); break;
  }
  return os.str();
}

std::string BlowdownTarget::str() const {
  std::ostringstream os;
  if (fat)
    os << "fat:" << (at_max ? "max" : "min");
  else
    os << "edge:i=" << i << ",j=" << j;
  return os.str();
}

// --- minimal models ---------------------------------------------------------

namespace {

struct Pt {
  Rat x, y;
};

// extended graph of the S^1-action s -> (s^m, s^n) on the toric surface with
// the given counterclockwise Delzant polygon
ExtendedGraph graph_from_polygon(const std::vector<Pt>& poly, long long m, long long n) {
  const size_t V = poly.size();
  struct EdgeInfo {
    size_t a, b;       // vertex indices
    long long stab;    // |m alpha + n beta|
    Rat affine_len;
  };
  std::vector<EdgeInfo> edges(V);
  for (size_t e = 0; e < V; ++e) {
    size_t a = e, b = (e + 1) % V;
    Rat dx = poly[b].x - poly[a].x, dy = poly[b].y - poly[a].y;
    // primitive integer direction (alpha, beta) with (dx,dy) = t (alpha,beta), t > 0
    BigInt alpha, beta;
    Rat t;
    if (dx.is_zero()) {
      alpha = BigInt(0);
      beta = BigInt(dy.is_negative() ? -1 : 1);
      t = dy.abs();
    } else if (dy.is_zero()) {
      alpha = BigInt(dx.is_negative() ? -1 : 1);
      beta = BigInt(0);
      t = dx.abs();
    } else {
      // dx/dy = p/q reduced
      Rat ratio = dx / dy;
      BigInt p = ratio.num(), q = ratio.den();
      if (dy.is_negative()) {
        p = -p;
        q = -q;
      }
      alpha = p;
      beta = q;
      t = dx / Rat(alpha);
    }
    Rat stab_r = Rat(BigInt(m)) * Rat(alpha) + Rat(BigInt(n)) * Rat(beta);
    if (!stab_r.is_integer()) throw Error("internal", "non-integral stabilizer");
    edges[e] = {a, b, 0, t};
    long long s = stab_r.num().fits_int64() ? std::llabs(stab_r.num().to_int64()) : -1;
    if (s < 0) throw Error("internal", "stabilizer overflow");
    edges[e].stab = s;
  }
  auto mu = [&](size_t v) { return Rat(BigInt(m)) * poly[v].x + Rat(BigInt(n)) * poly[v].y; };
  Rat mu_min = mu(0), mu_max = mu(0);
  for (size_t v = 1; v < V; ++v) {
    if (mu(v) < mu_min) mu_min = mu(v);
    if (mu(v) > mu_max) mu_max = mu(v);
  }

  DecoratedInput in;
  in.genus = 0;
  in.min.fat = false;
  in.min.height = mu_min;
  in.max.fat = false;
  in.max.height = mu_max;
  for (const auto& e : edges) {
    if (e.stab != 0) continue;
    Rat level = mu(e.a);
    if (level == mu_min) {
      if (in.min.fat) throw Error("internal", "two fat edges at the minimum");
      in.min.fat = true;
      in.min.area = e.affine_len;
    } else if (level == mu_max) {
      if (in.max.fat) throw Error("internal", "two fat edges at the maximum");
      in.max.fat = true;
      in.max.area = e.affine_len;
    } else {
      throw Error("ineffective", "the circle factor fixes a non-extremal divisor");
    }
  }
  std::vector<std::string> names(V);
  for (size_t v = 0; v < V; ++v) {
    Rat h = mu(v);
    bool on_fat = false;
    for (const auto& e : edges)
      if (e.stab == 0 && (e.a == v || e.b == v)) on_fat = true;
    if (on_fat) {
      names[v] = "";  // part of a fixed surface
    } else if (h == mu_min) {
      names[v] = "min";
    } else if (h == mu_max) {
      names[v] = "max";
    } else {
      names[v] = "p" + std::to_string(v);
      in.vertices.push_back({names[v], h});
    }
  }
  for (const auto& e : edges) {
    if (e.stab < 2) continue;
    if (names[e.a].empty() || names[e.b].empty())
      throw Error("internal", "a multiply covered sphere touches a fixed surface");
    in.edges.push_back({e.stab, names[e.a], names[e.b]});
  }
  ExtendedGraph g = build_extended(in);
  auto viols = validate(g);
  if (!viols.empty()) throw Error("internal", "projected graph invalid: " + viols[0].message);
  return g;
}

long long gcd_ll(long long a, long long b) { return std::gcd(std::llabs(a), std::llabs(b)); }

}  // namespace

ExtendedGraph minimal_cp2(long long m, long long n, const Rat& lambda) {
  if (!lambda.is_positive()) throw Error("bad-parameter", "lambda must be positive");
  if ((m == 0 && n == 0) || gcd_ll(m, n) != 1)
    throw Error("bad-parameter", "(m,n) must be coprime and non-zero");
  std::vector<Pt> tri = {{Rat(0), Rat(0)}, {lambda, Rat(0)}, {Rat(0), lambda}};
  return graph_from_polygon(tri, m, n);
}

ExtendedGraph minimal_hirzebruch(long long N, long long m, long long n, const Rat& beta,
                                 const Rat& f) {
  if (N < 0) throw Error("bad-parameter", "N must be non-negative");
  if ((m == 0 && n == 0) || gcd_ll(m, n) != 1)
    throw Error("bad-parameter", "(m,n) must be coprime and non-zero");
  if (!f.is_positive() || beta < f) throw Error("bad-parameter", "requires beta >= f > 0");
  Rat half_nf = Rat(BigInt(N)) * f / Rat(2);
  if (!(beta - half_nf).is_positive()) throw Error("bad-parameter", "requires beta - N f/2 > 0");
  std::vector<Pt> trap = {{Rat(0), Rat(0)},
                          {beta + half_nf, Rat(0)},
                          {beta - half_nf, f},
                          {Rat(0), f}};
  return graph_from_polygon(trap, m, n);
}

ExtendedGraph minimal_ruled(long long genus, const Rat& fiber, const Rat& base, long long e_min) {
  if (genus < 0) throw Error("bad-parameter", "genus must be non-negative");
  if (!fiber.is_positive() || !base.is_positive())
    throw Error("bad-parameter", "fiber and base sizes must be positive");
  Rat half = Rat(BigInt(e_min)) * fiber / Rat(2);
  Rat a_min = base + half, a_max = base - half;
  if (!a_min.is_positive() || !a_max.is_positive())
    throw Error("bad-parameter", "derived area is not positive");
  ExtendedGraph g;
  g.genus = genus;
  g.min = {true, Rat(0), a_min};
  g.max = {true, fiber, a_max};
  Chain c;
  c.edges.push_back({1, fiber});
  g.chains.push_back(c);
  g.chains.push_back(c);
  canonicalize(g);
  return g;
}

// --- blowup ------------------------------------------------------------------

namespace {

struct TaggedChains {
  std::vector<Chain> chains;
  std::vector<size_t> tags;  // pre index (1-based), 0 for new
};

// canonical sort carrying tags; returns (sorted graph chains, chain_map, new index)
void sort_tagged(ExtendedGraph& g, TaggedChains& tc, std::vector<size_t>& chain_map,
                 size_t pre_k, size_t& new_index) {
  std::vector<size_t> order(tc.chains.size());
  std::iota(order.begin(), order.end(), 0);
  auto key_before = [&](size_t a, size_t b) {
    const Chain& ca = tc.chains[a];
    const Chain& cb = tc.chains[b];
    const size_t nn = std::min(ca.size(), cb.size());
    for (size_t s = 0; s < nn; ++s)
      if (ca.edges[s].label != cb.edges[s].label) return ca.edges[s].label > cb.edges[s].label;
    if (ca.size() != cb.size()) return ca.size() > cb.size();
    for (size_t s = 0; s < nn; ++s) {
      int c = ca.edges[s].length.compare(cb.edges[s].length);
      if (c != 0) return c > 0;
    }
    return a < b;  // stable
  };
  std::stable_sort(order.begin(), order.end(), key_before);
  g.chains.clear();
  chain_map.assign(pre_k + 1, 0);
  new_index = 0;
  for (size_t pos = 0; pos < order.size(); ++pos) {
    g.chains.push_back(tc.chains[order[pos]]);
    size_t tag = tc.tags[order[pos]];
    if (tag == 0)
      new_index = pos + 1;
    else
      chain_map[tag] = pos + 1;
  }
}

size_t count_nontrivial(const std::vector<Chain>& chains) {
  size_t n = 0;
  for (const auto& c : chains)
    if (!is_trivial_chain(c)) ++n;
  return n;
}

}  // namespace

std::vector<size_t> reversal_chain_map(const ExtendedGraph& g) {
  ExtendedGraph r = reversed(g);
  std::vector<size_t> map(g.k() + 1, 0);
  std::vector<bool> used(r.k() + 1, false);
  for (size_t i = 1; i <= g.k(); ++i) {
    Chain want = g.chains[i - 1];
    std::reverse(want.edges.begin(), want.edges.end());
    for (size_t p = 1; p <= r.k(); ++p) {
      if (used[p]) continue;
      const Chain& c = r.chains[p - 1];
      if (c.size() != want.size()) continue;
      bool same = true;
      for (size_t s = 0; same && s < c.size(); ++s)
        same = c.edges[s].label == want.edges[s].label && c.edges[s].length == want.edges[s].length;
      if (same) {
        map[i] = p;
        used[p] = true;
        break;
      }
    }
    if (map[i] == 0) throw Error("internal", "reversal chain matching failed");
  }
  return map;
}

std::pair<ExtendedGraph, BlowupRecord> blowup(const ExtendedGraph& g, const BlowupSite& site,
                                              const Rat& lambda) {
  if (!lambda.is_positive()) throw Error("invalid-lambda", "lambda must be positive");
  BlowupRecord rec;
  rec.site = site;
  rec.lambda = lambda;
  rec.pre = g;
  rec.at_max = site.at_max;

  ExtendedGraph out;
  out.genus = g.genus;
  out.min = g.min;
  out.max = g.max;
  TaggedChains tc;
  tc.chains = g.chains;
  tc.tags.resize(g.k());
  std::iota(tc.tags.begin(), tc.tags.end(), 1);

  const Rat span = g.total_height();
  auto shrink = [&](Chain& c, bool at_max_end, const Rat& amount) {
    Edge& e = at_max_end ? c.edges.back() : c.edges.front();
    e.length -= amount;
    if (!e.length.is_positive())
      throw Error("invalid-lambda", "a created vertex surpasses a pre-existing one");
  };

  switch (site.kind) {
    case BlowupSite::Interior: {
      if (site.i < 1 || site.i > g.k() || site.j < 1 || site.j + 1 > g.chain_len(site.i))
        throw Error("site-mismatch", "no interior vertex " + site.str());
      Chain& c = tc.chains[site.i - 1];
      long long a = c.edges[site.j - 1].label, b = c.edges[site.j].label;
      Rat la = lambda * Rat(a), lb = lambda * Rat(b);
      if (c.edges[site.j - 1].length <= la || c.edges[site.j].length <= lb)
        throw Error("invalid-lambda", "a created vertex surpasses a pre-existing one");
      c.edges[site.j - 1].length -= la;
      c.edges[site.j].length -= lb;
      c.edges.insert(c.edges.begin() + site.j, Edge{a + b, lambda * Rat(a + b)});
      rec.paper_type = 1;
      rec.pre_chain = site.i;
      rec.pos = site.j + 1;
      break;
    }
    case BlowupSite::IsolatedExtreme: {
      bool at_max = site.at_max;
      if (at_max ? g.max.fat : g.min.fat)
        throw Error("site-mismatch", "that extreme is a fixed surface");
      auto end_label = [&](size_t i) {
        return at_max ? g.label(i, g.chain_len(i)) : g.label(i, 1);
      };
      long long M1 = std::max(end_label(1), end_label(2));
      long long M2 = std::min(end_label(1), end_label(2));
      if (M1 == 1 && M2 == 1) {
        // the exceptional sphere is fixed: a new fat extreme of size lambda
        for (auto& c : tc.chains) shrink(c, at_max, lambda);
        if (at_max) {
          out.max = {true, g.max.height - lambda, lambda};
        } else {
          out.min = {true, Rat(0), lambda};
          out.max.height -= lambda;
        }
        rec.paper_type = 4;
      } else {
        size_t big = 1;
        for (size_t i = 1; i <= g.k(); ++i)
          if (end_label(i) == M1) {
            big = i;
            break;
          }
        long long c = M1 - M2;
        for (size_t i = 1; i <= g.k(); ++i)
          shrink(tc.chains[i - 1], at_max, lambda * Rat(i == big ? M1 : M2));
        Chain& bc = tc.chains[big - 1];
        Edge exc{c, lambda * Rat(c)};
        if (at_max) {
          bc.edges.push_back(exc);
          rec.pos = bc.size();
        } else {
          bc.edges.insert(bc.edges.begin(), exc);
          rec.pos = 1;
        }
        out.max.height -= lambda * Rat(M2);
        rec.paper_type = 3;
        rec.pre_chain = big;
      }
      break;
    }
    case BlowupSite::FatSurface: {
      bool at_max = site.at_max;
      ExtremalComponent& side = at_max ? out.max : out.min;
      if (!(at_max ? g.max.fat : g.min.fat))
        throw Error("site-mismatch", "that extreme is not a fixed surface");
      if (lambda >= span) throw Error("invalid-lambda", "the new vertex surpasses the other extreme");
      side.area -= lambda;
      if (!side.area.is_positive())
        throw Error("invalid-lambda", "the blown-up surface loses all its area");
      Chain nc;
      if (at_max) {
        nc.edges.push_back({1, span - lambda});
        nc.edges.push_back({1, lambda});
      } else {
        nc.edges.push_back({1, lambda});
        nc.edges.push_back({1, span - lambda});
      }
      tc.chains.push_back(nc);
      tc.tags.push_back(0);
      rec.paper_type = 2;
      // drop a now-redundant trivial sphere
      size_t nontrivial = count_nontrivial(tc.chains);
      size_t trivial = tc.chains.size() - nontrivial;
      size_t want = nontrivial >= 2 ? 0 : 2 - nontrivial;
      if (trivial > want) {
        for (size_t i = tc.chains.size(); i-- > 0;) {
          if (is_trivial_chain(tc.chains[i])) {
            rec.dropped_pad = tc.tags[i];
            tc.chains.erase(tc.chains.begin() + i);
            tc.tags.erase(tc.tags.begin() + i);
            break;
          }
        }
      }
      break;
    }
  }

  normalize_heights(out);
  size_t new_index = 0;
  sort_tagged(out, tc, rec.chain_map, g.k(), new_index);
  rec.new_chain = new_index;
  // orientation convention: a single fat vertex sits at the top; the record
  // keeps its bookkeeping in the raw frame
  if ((out.min.fat ? 1 : 0) + (out.max.fat ? 1 : 0) == 1 && out.min.fat) {
    rec.internal_flip = true;
    out = reversed(out);
  }
  rec.post = out;
  {
    auto v = validate(out);
    if (!v.empty())
      throw Error("invalid-lambda", "blowup produced an invalid graph: " + v[0].message);
  }
  return {out, rec};
}

// --- blowdown ----------------------------------------------------------------

namespace {

Rat edge_self_intersection(const ExtendedGraph& g, size_t i, size_t j) {
  BigInt below = j >= 2 ? BigInt(g.label(i, j - 1)) : boundary_label_below(g, i);
  BigInt above = j + 1 <= g.chain_len(i) ? BigInt(g.label(i, j + 1)) : boundary_label_above(g, i);
  return -Rat(below + above) / Rat(g.label(i, j));
}

}  // namespace

std::vector<BlowdownTarget> blowdown_candidates(const ExtendedGraph& g) {
  struct Scored {
    Rat height;
    int kind;  // 0 edge, 1 fat
    size_t i, j;
    bool at_max;
  };
  std::vector<Scored> found;
  for (size_t i = 1; i <= g.k(); ++i) {
    for (size_t j = 1; j <= g.chain_len(i); ++j) {
      if (is_ephemeral(g, i, j)) continue;
      if (edge_self_intersection(g, i, j) != Rat(-1)) continue;
      bool ok = false;
      size_t l = g.chain_len(i);
      if (j >= 2 && j + 1 <= l)
        ok = true;  // interior contraction
      else if (j == 1 && !g.min.fat && l >= 2)
        ok = true;
      else if (j == l && !g.max.fat && l >= 2)
        ok = true;
      else if (j == l && g.max.fat && l == 2 && g.label(i, 1) == 1)
        ok = true;  // whole [1,1] chain from a surface blowup
      else if (j == 1 && g.min.fat && l == 2 && g.label(i, 2) == 1)
        ok = true;
      if (!ok) continue;
      Rat top = j == l ? g.max.height : g.vertex_height(i, j);
      found.push_back({top, 0, i, j, false});
    }
  }
  auto [emin, emax] = extremal_self_intersections(g);
  if (g.min.fat && g.genus == 0 && emin == Rat(-1)) found.push_back({Rat(0), 1, 0, 0, false});
  if (g.max.fat && g.genus == 0 && emax == Rat(-1)) found.push_back({g.max.height, 1, 0, 0, true});
  std::stable_sort(found.begin(), found.end(), [](const Scored& a, const Scored& b) {
    int c = a.height.compare(b.height);
    if (c != 0) return c > 0;
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::vector<BlowdownTarget> out;
  for (const auto& s : found) {
    BlowdownTarget t;
    t.fat = s.kind == 1;
    t.at_max = s.at_max;
    t.i = s.i;
    t.j = s.j;
    out.push_back(t);
  }
  return out;
}

std::pair<ExtendedGraph, BlowupRecord> blowdown(const ExtendedGraph& g, const BlowdownTarget& t) {
  ExtendedGraph h;  // honest blown-down graph
  h.genus = g.genus;
  h.min = g.min;
  h.max = g.max;
  std::vector<Chain> chains = g.chains;
  Rat lambda;
  BlowupSite site;
  size_t added_pad_hint = 0;
  size_t touched_chain = 0;  // pre-index of the chain hosting an interior site

  if (t.fat) {
    const ExtremalComponent& side = t.at_max ? g.max : g.min;
    if (!side.fat) throw Error("not-blowdownable", "that extreme is not a fixed surface");
    if (g.genus != 0) throw Error("not-blowdownable", "a positive-genus surface cannot blow down");
    auto [emin, emax] = extremal_self_intersections(g);
    Rat e = t.at_max ? emax : emin;
    if (e != Rat(-1))
      throw Error("not-blowdownable", "surface self-intersection is " + e.str() + ", not -1");
    lambda = side.area;
    for (auto& c : chains) {
      Edge& edge = t.at_max ? c.edges.back() : c.edges.front();
      edge.length += lambda;
    }
    if (t.at_max) {
      h.max = {false, g.max.height + lambda, Rat()};
    } else {
      h.min = {false, Rat(0), Rat()};
      h.max.height += lambda;
    }
    site.kind = BlowupSite::IsolatedExtreme;
    site.at_max = t.at_max;
  } else {
    size_t i = t.i, j = t.j;
    if (i < 1 || i > g.k() || j < 1 || j > g.chain_len(i))
      throw Error("not-blowdownable", "no edge " + t.str());
    if (is_ephemeral(g, i, j))
      throw Error("not-blowdownable", "edge " + t.str() + " is ephemeral");
    Rat s = edge_self_intersection(g, i, j);
    if (s != Rat(-1))
      throw Error("not-blowdownable", "combinatorial self-intersection is " + s.str() + ", not -1");
    size_t l = g.chain_len(i);
    Chain& c = chains[i - 1];
    if (j >= 2 && j + 1 <= l) {
      // undo an interior insertion
      lambda = c.edges[j - 1].length / Rat(c.edges[j - 1].label);
      c.edges[j - 2].length += lambda * Rat(c.edges[j - 2].label);
      c.edges[j].length += lambda * Rat(c.edges[j].label);
      c.edges.erase(c.edges.begin() + (j - 1));
      site.kind = BlowupSite::Interior;
      site.at_max = false;
      site.j = j - 1;
      touched_chain = i;
    } else if (j == 1 && !g.min.fat && l >= 2) {
      lambda = c.edges[0].length / Rat(c.edges[0].label);
      BigInt w = boundary_label_below(g, i).abs();
      c.edges[1].length += lambda * Rat(c.edges[1].label);
      c.edges.erase(c.edges.begin());
      for (size_t r = 1; r <= g.k(); ++r) {
        if (r == i) continue;
        chains[r - 1].edges.front().length += lambda * Rat(w);
      }
      h.max.height += lambda * Rat(w);
      site.kind = BlowupSite::IsolatedExtreme;
      site.at_max = false;
    } else if (j == l && !g.max.fat && l >= 2) {
      lambda = c.edges[l - 1].length / Rat(c.edges[l - 1].label);
      BigInt w = boundary_label_above(g, i).abs();
      c.edges[l - 2].length += lambda * Rat(c.edges[l - 2].label);
      c.edges.pop_back();
      for (size_t r = 1; r <= g.k(); ++r) {
        if (r == i) continue;
        chains[r - 1].edges.back().length += lambda * Rat(w);
      }
      h.max.height += lambda * Rat(w);
      site.kind = BlowupSite::IsolatedExtreme;
      site.at_max = true;
    } else if (((j == l && g.max.fat) || (j == 1 && g.min.fat)) && l == 2) {
      // remove the whole [1,1] chain created by a surface blowup
      bool at_max = j == l && g.max.fat;
      if (g.label(i, 1) != 1 || g.label(i, 2) != 1)
        throw Error("not-blowdownable", "only a [1,1] chain contracts onto a surface");
      lambda = c.edges[at_max ? 1 : 0].length;
      chains.erase(chains.begin() + (i - 1));
      if (at_max)
        h.max.area += lambda;
      else
        h.min.area += lambda;
      site.kind = BlowupSite::FatSurface;
      site.at_max = at_max;
      // restore the padding the extension conventions require
      size_t nontrivial = count_nontrivial(chains);
      size_t trivial = chains.size() - nontrivial;
      size_t want = nontrivial >= 2 ? 0 : 2 - nontrivial;
      if (trivial < want) {
        Chain pad;
        pad.edges.push_back({1, g.total_height()});
        chains.push_back(pad);
        added_pad_hint = 1;
      }
    } else {
      throw Error("not-blowdownable", "edge " + t.str() + " does not match a blowup pattern");
    }
  }
  h.chains = std::move(chains);
  normalize_heights(h);
  if ((h.min.fat ? 1 : 0) + (h.max.fat ? 1 : 0) == 1 && h.min.fat) {
    h = reversed(h);
    site.at_max = !site.at_max;
  } else if (touched_chain != 0) {
    // track the interior site's chain through the canonical re-sort
    TaggedChains tc;
    tc.chains = std::move(h.chains);
    tc.tags.resize(tc.chains.size());
    std::iota(tc.tags.begin(), tc.tags.end(), 1);
    std::vector<size_t> cmap;
    size_t unused = 0;
    sort_tagged(h, tc, cmap, tc.tags.size(), unused);
    site.i = cmap[touched_chain];
  } else {
    canonicalize(h);
  }
  {
    auto v = validate(h);
    if (!v.empty()) throw Error("not-blowdownable", "blowdown yields an invalid graph: " + v[0].message);
  }
  auto [back, rec] = blowup(h, site, lambda);
  if (canonical_equal(back, g)) {
    rec.flip_after = false;
  } else if (canonical_equal(reversed(back), g)) {
    rec.flip_after = true;
    rec.post = g;
  } else {
    throw Error("internal", "blowdown replay check failed");
  }
  rec.post = g;
  rec.added_pad = added_pad_hint;
  return {h, rec};
}

ExtendedGraph replay_one(const ExtendedGraph& g, const BlowupRecord& rec) {
  ExtendedGraph h = blowup(g, rec.site, rec.lambda).first;
  if (rec.flip_after) h = reversed(h);
  return h;
}

ExtendedGraph replay(const Reduction& red) {
  ExtendedGraph h = red.terminal;
  for (const auto& rec : red.records) h = replay_one(h, rec);
  return h;
}

namespace {

MinimalModelId match_minimal_model_oriented(const ExtendedGraph& g) {
  auto [emin, emax] = extremal_self_intersections(g);
  int fat = g.fat_count();
  auto labels = [&](size_t i) { return g.chains[i - 1].labels(); };
  const Rat h = g.total_height();

  if (fat == 2 && g.k() == 2 && labels(1) == std::vector<long long>{1} &&
      labels(2) == std::vector<long long>{1}) {
    MinimalModelId id;
    id.fiber = h;
    id.base = (g.min.area + g.max.area) / Rat(2);
    long long e = emin.num().to_int64();
    if (g.genus > 0) {
      id.kind = MinimalModelId::Ruled;
      id.genus = g.genus;
      id.parity = static_cast<int>(((e % 2) + 2) % 2);
    } else {
      id.kind = MinimalModelId::Hirzebruch;
      id.N = std::llabs(e);
      id.m = 0;
      id.n = e >= 0 ? 1 : -1;
      id.beta = id.base;
      id.f = h;
    }
    return id;
  }
  if (fat == 1) {
    if (g.k() == 2 && labels(1) == std::vector<long long>{1} &&
        labels(2) == std::vector<long long>{1}) {
      if (g.max.area != h)
        throw Error("irreducible", "terminal one-surface graph fails the projective-plane shape");
      MinimalModelId id;
      id.kind = MinimalModelId::CP2;
      id.m = 1;
      id.n = 1;
      id.lambda = h;
      id.fiber = id.base = h;
      return id;
    }
    if (g.k() == 2 && g.chain_len(1) == 2 && g.chain_len(2) == 1 && g.label(1, 2) == 1 &&
        g.label(2, 1) == 1 && g.label(1, 1) >= 2) {
      long long N = g.label(1, 1);
      Rat f = g.max.area;
      Rat half_nf = Rat(BigInt(N)) * f / Rat(2);
      Rat beta = g.length(1, 2) + half_nf;
      if (g.length(1, 1) == Rat(BigInt(N)) * f && g.length(2, 1) == beta + half_nf) {
        MinimalModelId id;
        id.kind = MinimalModelId::Hirzebruch;
        id.N = N;
        id.m = 1;
        id.n = N;
        id.beta = beta;
        id.f = f;
        id.fiber = f;
        id.base = beta;
        return id;
      }
    }
    throw Error("irreducible", "terminal one-surface graph is not a minimal model");
  }
  // no fixed surfaces: k == 2
  if (g.total_edges() == 3) {
    size_t single = g.chain_len(1) == 1 ? 1 : 2;
    size_t pair = 3 - single;
    if (g.chain_len(single) == 1 && g.chain_len(pair) == 2) {
      long long x = g.label(single, 1), y = g.label(pair, 1), z = g.label(pair, 2);
      if (x == y + z) {
        Rat lambda = h / Rat(x);
        if (g.length(single, 1) == lambda * Rat(x) && g.length(pair, 1) == lambda * Rat(y) &&
            g.length(pair, 2) == lambda * Rat(z)) {
          MinimalModelId id;
          id.kind = MinimalModelId::CP2;
          id.m = x;
          id.n = y;
          id.lambda = lambda;
          id.fiber = id.base = lambda;
          return id;
        }
      }
    }
    throw Error("irreducible", "terminal graph is not a minimal model");
  }
  if (g.total_edges() == 4) {
    // Hirzebruch patterns: [n,m],[m,n-mN] or [n,m,mN-n],[m]
    for (int ori = 0; ori < 2; ++ori) {
      size_t c1 = ori == 0 ? 1 : 2, c2 = 3 - c1;
      if (g.chain_len(c1) == 2 && g.chain_len(c2) == 2) {
        long long n = g.label(c1, 1), m = g.label(c1, 2);
        if (g.label(c2, 1) != m) continue;
        long long d = g.label(c2, 2);
        if ((n - d) % m != 0) continue;
        long long N = (n - d) / m;
        if (N < 0) continue;
        Rat f = g.length(c1, 1) / Rat(n);
        Rat half_nf = Rat(BigInt(N)) * f / Rat(2);
        Rat beta = g.length(c1, 2) / Rat(m) + half_nf;
        if (g.length(c2, 1) == Rat(m) * (beta + half_nf) && g.length(c2, 2) == Rat(d) * f) {
          MinimalModelId id;
          id.kind = MinimalModelId::Hirzebruch;
          id.N = N;
          id.m = m;
          id.n = n;
          id.beta = beta;
          id.f = f;
          id.fiber = f;
          id.base = beta;
          return id;
        }
      }
      if (g.chain_len(c1) == 3 && g.chain_len(c2) == 1) {
        long long n = g.label(c1, 1), m = g.label(c1, 2), top = g.label(c1, 3);
        if (g.label(c2, 1) != m) continue;
        if ((n + top) % m != 0) continue;
        long long N = (n + top) / m;
        Rat f = g.length(c1, 1) / Rat(n);
        Rat half_nf = Rat(BigInt(N)) * f / Rat(2);
        Rat beta = g.length(c1, 2) / Rat(m) + half_nf;
        if (g.length(c1, 3) == Rat(top) * f && g.length(c2, 1) == Rat(m) * (beta + half_nf)) {
          MinimalModelId id;
          id.kind = MinimalModelId::Hirzebruch;
          id.N = N;
          id.m = m;
          id.n = n;
          id.beta = beta;
          id.f = f;
          id.fiber = f;
          id.base = beta;
          return id;
        }
      }
    }
  }
  throw Error("irreducible", "terminal graph is not a minimal model");
}

// orientation-robust matching: a model presented upside down is the same
// space with the circle reversed
MinimalModelId match_minimal_model(const ExtendedGraph& g) {
  try {
    return match_minimal_model_oriented(g);
  } catch (const Error&) {
    MinimalModelId id = match_minimal_model_oriented(reversed(g));
    id.m = -id.m;
    id.n = -id.n;
    return id;
  }
}

struct SearchResult {
  bool ok = false;
  MinimalModelId model;
  ExtendedGraph terminal;
  std::vector<BlowupRecord> downs;  // blowdown order
};

// Depth-first search over blowdown choices.  Reductions reaching the
// projective plane are preferred (the deepest minimal model); within that,
// the height-priority candidate order decides.  Memoized on canonical keys.
SearchResult reduce_search(const ExtendedGraph& g, std::map<std::string, SearchResult>& memo) {
  std::string key = canonical_key(g);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  memo[key] = SearchResult{};  // cycle guard; blowdowns strictly shrink anyway

  SearchResult best;
  try {
    MinimalModelId id = match_minimal_model(g);
    best = {true, id, g, {}};
    if (id.kind == MinimalModelId::CP2) {
      memo[key] = best;
      return best;
    }
  } catch (const Error&) {
  }
  for (const auto& cand : blowdown_candidates(g)) {
    ExtendedGraph h;
    BlowupRecord rec;
    try {
      std::tie(h, rec) = blowdown(g, cand);
    } catch (const Error&) {
      continue;
    }
    SearchResult sub = reduce_search(h, memo);
    if (!sub.ok) continue;
    SearchResult cur{true, sub.model, sub.terminal, {}};
    cur.downs.push_back(rec);
    cur.downs.insert(cur.downs.end(), sub.downs.begin(), sub.downs.end());
    if (sub.model.kind == MinimalModelId::CP2) {
      memo[key] = cur;
      return cur;
    }
    if (!best.ok) best = std::move(cur);
  }
  memo[key] = best;
  return best;
}

}  // namespace

Reduction reduce_to_minimal(const ExtendedGraph& g0) {
  {
    auto v = validate(g0);
    if (!v.empty()) throw Error("invalid-graph", v[0].message);
  }
  std::map<std::string, SearchResult> memo;
  SearchResult res = reduce_search(g0, memo);
  if (!res.ok) throw Error("irreducible", "no blowdown sequence reaches a minimal model");
  Reduction red;
  red.model = res.model;
  red.terminal = res.terminal;
  red.records.assign(res.downs.rbegin(), res.downs.rend());
  return red;
}

GeneratorTransport transport_generators(const BlowupRecord& rec) {
  GeneratorTransport out;
  const ExtendedGraph& pre = rec.pre;
  const bool renamed = rec.flip_after || rec.internal_flip;
  // raw post frame: the graph the move produced before any stored flip
  ExtendedGraph raw = renamed ? reversed(rec.post) : rec.post;
  std::vector<size_t> flip_map;
  if (renamed) flip_map = reversal_chain_map(raw);

  auto rename = [&](Gen gen) -> Gen {
    if (!renamed) return gen;
    switch (gen.kind) {
      case Gen::Tau0: return Gen::tauinf();
      case Gen::TauInf: return Gen::tau0();
      case Gen::TauH: return Gen::tauh();
      default: {
        size_t len = raw.chain_len(gen.i);
        return Gen::sigma(flip_map[gen.i], len - gen.j + 1);
      }
    }
  };
  auto unit = [&](Gen gen) { return CohClass2::unit(rename(gen)); };

  if (pre.min.fat) out.map[Gen::tau0()] = unit(Gen::tau0());
  if (pre.max.fat) out.map[Gen::tauinf()] = unit(Gen::tauinf());
  out.map[Gen::tauh()] = unit(Gen::tauh());

  for (size_t r = 1; r <= pre.k(); ++r) {
    for (size_t j = 1; j <= pre.chain_len(r); ++j) {
      Gen src = Gen::sigma(r, j);
      if (rec.paper_type == 2 && r == rec.dropped_pad) {
        out.map[src] = unit(Gen::tauh());
        continue;
      }
      size_t pc = rec.chain_map[r];
      size_t pj = j;
      // the inserted edge sits at rec.pos; edges at or above it shift up
      if (rec.paper_type == 1 && r == rec.pre_chain && j >= rec.pos) pj = j + 1;
      if (rec.paper_type == 3 && r == rec.pre_chain && !rec.at_max) pj = j + 1;
      out.map[src] = unit(Gen::sigma(pc, pj));
    }
  }
  switch (rec.paper_type) {
    case 1:
      out.exceptional = unit(Gen::sigma(rec.chain_map[rec.pre_chain], rec.pos));
      break;
    case 2:
      out.exceptional = unit(Gen::sigma(rec.new_chain, rec.at_max ? 2 : 1));
      break;
    case 3: {
      size_t pc = rec.chain_map[rec.pre_chain];
      out.exceptional = unit(Gen::sigma(pc, rec.at_max ? raw.chain_len(pc) : 1));
      break;
    }
    case 4:
      out.exceptional = unit(rec.at_max ? Gen::tauinf() : Gen::tau0());
      break;
    default:
      throw Error("internal", "record carries no transport row");
  }
  return out;
}

}  // namespace hamgraph
