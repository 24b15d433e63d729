#include "graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hamgraph {

Rat Chain::sum_lengths() const {
  Rat s;
  for (const auto& e : edges) s += e.length;
  return s;
}

std::vector<long long> Chain::labels() const {
  std::vector<long long> v;
  v.reserve(edges.size());
  for (const auto& e : edges) v.push_back(e.label);
  return v;
}

size_t ExtendedGraph::total_edges() const {
  size_t n = 0;
  for (const auto& c : chains) n += c.size();
  return n;
}

Rat ExtendedGraph::vertex_height(size_t i, size_t j) const {
  Rat h = min.height;
  for (size_t s = 0; s < j; ++s) h += chains[i - 1].edges[s].length;
  return h;
}

long long ExtendedGraph::iso_count() const {
  long long n = 0;
  for (const auto& c : chains) n += static_cast<long long>(c.size()) - 1;
  n += min.fat ? 0 : 1;
  n += max.fat ? 0 : 1;
  return n;
}

long long ExtendedGraph::euler() const { return iso_count() + fat_count() * (2 - 2 * genus); }

std::string FixedComponent::name() const {
  switch (kind) {
    case Min: return "min";
    case Max: return "max";
    default: {
      std::ostringstream os;
      os << "v(" << i << "," << j << ")";
      return os.str();
    }
  }
}

std::vector<FixedComponent> fixed_components(const ExtendedGraph& g) {
  std::vector<FixedComponent> out;
  out.push_back({FixedComponent::Min, 0, 0});
  for (size_t i = 1; i <= g.k(); ++i)
    for (size_t j = 1; j + 1 <= g.chain_len(i); ++j) out.push_back({FixedComponent::Interior, i, j});
  out.push_back({FixedComponent::Max, 0, 0});
  return out;
}

bool is_isolated(const ExtendedGraph& g, const FixedComponent& f) {
  if (f.kind == FixedComponent::Min) return !g.min.fat;
  if (f.kind == FixedComponent::Max) return !g.max.fat;
  return true;
}

bool is_trivial_chain(const Chain& c) { return c.size() == 1 && c.edges[0].label == 1; }

namespace {

// descending by label sequence (lexicographic, shorter-prefix counts as
// smaller), ties by length sequence descending
bool chain_before(const Chain& a, const Chain& b) {
  const size_t n = std::min(a.size(), b.size());
  for (size_t s = 0; s < n; ++s) {
    if (a.edges[s].label != b.edges[s].label) return a.edges[s].label > b.edges[s].label;
  }
  if (a.size() != b.size()) return a.size() > b.size();
  for (size_t s = 0; s < n; ++s) {
    int c = a.edges[s].length.compare(b.edges[s].length);
    if (c != 0) return c > 0;
  }
  return false;
}

}  // namespace

void canonicalize(ExtendedGraph& g) {
  std::stable_sort(g.chains.begin(), g.chains.end(), chain_before);
}

bool canonical_equal(const ExtendedGraph& a, const ExtendedGraph& b) {
  return canonical_key(a) == canonical_key(b);
}

std::string canonical_key(const ExtendedGraph& g) {
  ExtendedGraph c = g;
  canonicalize(c);
  std::ostringstream os;
  os << "g=" << c.genus << ";min=" << (c.min.fat ? "F" : "I") << c.min.height.str();
  if (c.min.fat) os << "a" << c.min.area.str();
  os << ";max=" << (c.max.fat ? "F" : "I") << c.max.height.str();
  if (c.max.fat) os << "a" << c.max.area.str();
  for (const auto& ch : c.chains) {
    os << ";[";
    for (const auto& e : ch.edges) os << e.label << ":" << e.length.str() << ",";
    os << "]";
  }
  return os.str();
}

void normalize_heights(ExtendedGraph& g) {
  Rat shift = g.min.height;
  if (shift.is_zero()) return;
  g.min.height -= shift;
  g.max.height -= shift;
}

ExtendedGraph reversed(const ExtendedGraph& g) {
  ExtendedGraph r;
  r.genus = g.genus;
  r.min = g.max;
  r.max = g.min;
  Rat h = g.total_height();
  r.min.height = Rat(0);
  r.max.height = h;
  r.chains = g.chains;
  for (auto& c : r.chains) std::reverse(c.edges.begin(), c.edges.end());
  canonicalize(r);
  return r;
}

std::vector<std::pair<Rat, Rat>> interior_point_data(const ExtendedGraph& g) {
  std::vector<std::pair<Rat, Rat>> out;
  for (size_t i = 1; i <= g.k(); ++i) {
    for (size_t j = 1; j + 1 <= g.chain_len(i); ++j) {
      Rat ep = Rat(1) / Rat(BigInt(g.label(i, j)) * BigInt(g.label(i, j + 1)));
      out.emplace_back(g.vertex_height(i, j), ep);
    }
  }
  return out;
}

std::pair<Rat, Rat> extremal_self_intersections(const ExtendedGraph& g) {
  Rat ymin = g.min.height, ymax = g.max.height;
  Rat amin = g.min.fat ? g.min.area : Rat(0);
  Rat amax = g.max.fat ? g.max.area : Rat(0);
  Rat sum_ype, sum_e;
  for (const auto& [yp, ep] : interior_point_data(g)) {
    sum_ype += yp * ep;
    sum_e += ep;
  }
  Rat span = ymax - ymin;
  Rat emin = (sum_ype + amin - sum_e * ymax - amax) / span;
  Rat emax = (sum_e * ymin + amax - sum_ype - amin) / span;
  return {emin, emax};
}

long long poincare_rank(const ExtendedGraph& g, long long q) {
  if (q < 0) return 0;
  long long iso = g.iso_count();
  long long fat = g.fat_count();
  long long twog = 2 * g.genus;
  if (q == 0) return 1;
  if (q == 1) return g.min.fat && g.max.fat ? twog : 0;
  if (q == 2) return iso - 1 + 2 * fat;
  if (q % 2 == 1) return fat * twog;
  return iso + 2 * fat;
}

WeightPair weights_at(const ExtendedGraph& g, const FixedComponent& f) {
  if (f.kind == FixedComponent::Interior)
    return {-g.label(f.i, f.j), g.label(f.i, f.j + 1)};
  if (f.kind == FixedComponent::Min) return {g.label(1, 1), g.label(2, 1)};
  return {-static_cast<long long>(g.label(1, g.chain_len(1))),
          -static_cast<long long>(g.label(2, g.chain_len(2)))};
}

WeightMultiset isotropy_weights(const ExtendedGraph& g) {
  WeightMultiset w;
  for (const auto& f : fixed_components(g))
    if (is_isolated(g, f)) w.push_back(weights_at(g, f));
  std::sort(w.begin(), w.end());
  return w;
}

std::set<std::pair<size_t, size_t>> ephemeral_edges(const ExtendedGraph& g) {
  std::set<std::pair<size_t, size_t>> out;
  if (g.fat_count() != 1) return out;
  if (g.k() < 3 || g.label(2, 1) < 2) return out;
  for (size_t i = 3; i <= g.k(); ++i) out.insert({i, 1});
  return out;
}

bool is_ephemeral(const ExtendedGraph& g, size_t i, size_t j) {
  return j == 1 && i >= 3 && g.fat_count() == 1 && g.label(2, 1) >= 2;
}

std::vector<Violation> validate(const ExtendedGraph& g) {
  std::vector<Violation> out;
  auto bad = [&out](const std::string& code, const std::string& msg) {
    out.push_back({code, msg});
  };

  if (g.genus < 0) bad("genus-negative", "genus must be non-negative");
  if (g.k() < 2) bad("k-too-small", "k >= 2 required: at least two chains");
  if (!g.min.height.is_zero()) bad("min-height", "minimum height must be 0");
  if (g.max.height <= g.min.height) bad("height-order", "max height must exceed min height");
  if (g.min.fat && !g.min.area.is_positive()) bad("area-positive", "fat min area must be positive");
  if (g.max.fat && !g.max.area.is_positive()) bad("area-positive", "fat max area must be positive");

  for (size_t i = 1; i <= g.k(); ++i) {
    const Chain& c = g.chains[i - 1];
    if (c.size() == 0) {
      bad("empty-chain", "chain " + std::to_string(i) + " has no edges");
      continue;
    }
    for (size_t j = 1; j <= c.size(); ++j) {
      const Edge& e = c.edges[j - 1];
      std::string at = "edge (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (e.label < 1) bad("label-positive", at + ": label must be >= 1");
      if (!e.length.is_positive()) bad("length-positive", at + ": length must be positive");
      if (e.label == 1 && j != 1 && j != c.size())
        bad("label1-interior", at + ": label-1 edge must be first or last in its chain");
      if (j >= 2 && std::gcd(e.label, c.edges[j - 2].label) != 1)
        bad("adjacent-coprime", at + ": adjacent labels not coprime");
    }
    if (c.sum_lengths() != g.total_height())
      bad("chain-sum", "chain " + std::to_string(i) + " lengths do not sum to the moment span");
  }
  if (!out.empty()) return out;  // deeper checks need a sound structure

  {
    ExtendedGraph sorted = g;
    canonicalize(sorted);
    bool same = sorted.chains.size() == g.chains.size();
    for (size_t i = 0; same && i < g.chains.size(); ++i) {
      same = sorted.chains[i].labels() == g.chains[i].labels();
      if (same)
        for (size_t j = 0; same && j < g.chains[i].size(); ++j)
          same = sorted.chains[i].edges[j].length == g.chains[i].edges[j].length;
    }
    if (!same) bad("chain-order", "chains are not in canonical order");
  }

  int fat = g.fat_count();
  if (g.min.fat)
    for (size_t i = 1; i <= g.k(); ++i)
      if (g.label(i, 1) != 1) bad("fat-adjacency", "fat minimum requires label-1 first edges");
  if (g.max.fat)
    for (size_t i = 1; i <= g.k(); ++i)
      if (g.label(i, g.chain_len(i)) != 1) bad("fat-adjacency", "fat maximum requires label-1 last edges");
  if (fat == 1 && !g.max.fat) bad("fat-at-max", "a single fat vertex must be maximal");
  if (fat == 0 && g.k() != 2) bad("k-two-no-fat", "no fat vertices requires exactly two chains");
  if (g.genus > 0 && fat != 2) bad("genus-needs-fat", "positive genus requires two fat vertices");
  if (fat == 1 && g.genus != 0) bad("one-fat-genus", "one fat vertex requires genus 0");
  if (fat <= 1 && g.k() >= 3)
    for (size_t i = 3; i <= g.k(); ++i)
      if (g.label(i, 1) != 1) bad("extra-chain-label", "chains beyond the second must start with label 1");

  // coprime weights at isolated extremes
  if (!g.min.fat && g.k() >= 2 && std::gcd(g.label(1, 1), g.label(2, 1)) != 1)
    bad("weights-coprime", "labels at the isolated minimum are not coprime");
  if (!g.max.fat && g.k() >= 2 &&
      std::gcd(g.label(1, g.chain_len(1)), g.label(2, g.chain_len(2))) != 1)
    bad("weights-coprime", "labels at the isolated maximum are not coprime");

  // trivial min-to-max chains exist only as the padding the extension
  // conventions prescribe
  {
    size_t trivial = 0, nontrivial = 0;
    for (const auto& ch : g.chains) (is_trivial_chain(ch) ? trivial : nontrivial)++;
    size_t want = nontrivial >= 2 ? 0 : 2 - nontrivial;
    if (trivial > 0 && fat == 0)
      bad("trivial-chain", "trivial min-to-max spheres require a fat vertex");
    else if (trivial != want)
      bad("trivial-chain-padding", "trivial chains must pad the chain count to exactly two");
  }

  // e_min / e_max consistency
  auto [emin, emax] = extremal_self_intersections(g);
  if (g.min.fat) {
    if (!emin.is_integer()) bad("e-min", "fat minimum self-intersection " + emin.str() + " is not an integer");
  } else {
    Rat want = -Rat(1) / Rat(BigInt(g.label(1, 1)) * BigInt(g.label(2, 1)));
    if (emin != want)
      bad("e-min", "e_min = " + emin.str() + " but the isolated minimum requires " + want.str());
  }
  if (g.max.fat) {
    if (!emax.is_integer()) bad("e-max", "fat maximum self-intersection " + emax.str() + " is not an integer");
  } else {
    Rat want = -Rat(1) / Rat(BigInt(g.label(1, g.chain_len(1))) * BigInt(g.label(2, g.chain_len(2))));
    if (emax != want)
      bad("e-max", "e_max = " + emax.str() + " but the isolated maximum requires " + want.str());
  }
  return out;
}

bool is_valid(const ExtendedGraph& g) { return validate(g).empty(); }

// --- decorated -> extended ---------------------------------------------------

ExtendedGraph build_extended(const DecoratedInput& in, std::vector<std::string>* warnings) {
  Rat ymin = in.min.height, ymax = in.max.height;
  if (ymax <= ymin) throw Error("height-order", "max height must exceed min height");
  struct V {
    Rat height;
    int up = -1, down = -1;  // indices into in.edges
  };
  std::vector<V> verts(in.vertices.size());
  std::vector<std::string> ids(in.vertices.size());
  for (size_t v = 0; v < in.vertices.size(); ++v) {
    verts[v].height = in.vertices[v].height;
    ids[v] = in.vertices[v].id;
    if (!(verts[v].height > ymin && verts[v].height < ymax))
      throw Error("vertex-height", "interior vertex '" + ids[v] + "' height not strictly between the extremes");
  }
  auto vertex_index = [&](const std::string& name) -> int {
    for (size_t v = 0; v < ids.size(); ++v)
      if (ids[v] == name) return static_cast<int>(v);
    throw Error("unknown-vertex", "edge endpoint '" + name + "' is not a declared vertex");
  };
  auto height_of = [&](const std::string& name) -> Rat {
    if (name == "min") return ymin;
    if (name == "max") return ymax;
    return verts[vertex_index(name)].height;
  };

  struct E {
    long long label;
    std::string lo, hi;
    Rat length;
  };
  std::vector<E> edges;
  for (const auto& de : in.edges) {
    if (de.label < 2) throw Error("decorated-label", "decorated edges must have label >= 2");
    Rat hf = height_of(de.from), ht = height_of(de.to);
    if (hf == ht) throw Error("edge-length", "decorated edge endpoints at equal heights");
    E e;
    e.label = de.label;
    if (hf < ht) {
      e.lo = de.from;
      e.hi = de.to;
      e.length = ht - hf;
    } else {
      e.lo = de.to;
      e.hi = de.from;
      e.length = hf - ht;
    }
    edges.push_back(std::move(e));
  }
  // each interior vertex carries at most one decorated edge above and below
  for (size_t v = 0; v < verts.size(); ++v) {
    for (size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].lo == ids[v]) {
        if (verts[v].up != -1) throw Error("vertex-degree", "vertex '" + ids[v] + "' has two edges above");
        verts[v].up = static_cast<int>(e);
      }
      if (edges[e].hi == ids[v]) {
        if (verts[v].down != -1) throw Error("vertex-degree", "vertex '" + ids[v] + "' has two edges below");
        verts[v].down = static_cast<int>(e);
      }
    }
  }
  if (in.min.fat || in.max.fat) {
    for (const auto& e : edges)
      if ((e.lo == "min" && in.min.fat) || (e.hi == "max" && in.max.fat))
        throw Error("fat-adjacency", "decorated edges may not touch a fat vertex");
  }

  ExtendedGraph g;
  g.genus = in.genus;
  g.min = in.min;
  g.max = in.max;

  std::vector<bool> used_edge(edges.size(), false), used_vertex(verts.size(), false);
  // walk each maximal >1 subchain bottom-up, then extend with label-1 edges
  for (size_t e0 = 0; e0 < edges.size(); ++e0) {
    if (used_edge[e0]) continue;
    // is e0 the lowest edge of its subchain?
    bool lowest = edges[e0].lo == "min";
    if (!lowest) {
      int v = vertex_index(edges[e0].lo);
      lowest = verts[v].down == -1;
    }
    if (!lowest) continue;
    Chain c;
    Rat bottom_h = height_of(edges[e0].lo);
    if (edges[e0].lo != "min") {
      c.edges.push_back({1, bottom_h - ymin});  // free sphere down to the minimum
      used_vertex[vertex_index(edges[e0].lo)] = true;
    }
    size_t e = e0;
    while (true) {
      used_edge[e] = true;
      c.edges.push_back({edges[e].label, edges[e].length});
      if (edges[e].hi == "max") break;
      int v = vertex_index(edges[e].hi);
      used_vertex[v] = true;
      if (verts[v].up == -1) {
        c.edges.push_back({1, ymax - verts[v].height});  // free sphere up to the maximum
        break;
      }
      e = static_cast<size_t>(verts[v].up);
    }
    g.chains.push_back(std::move(c));
  }
  // interior vertices on no decorated edge become [1,1] chains
  for (size_t v = 0; v < verts.size(); ++v) {
    if (used_vertex[v]) continue;
    Chain c;
    c.edges.push_back({1, verts[v].height - ymin});
    c.edges.push_back({1, ymax - verts[v].height});
    g.chains.push_back(std::move(c));
  }
  // pad with redundant trivial spheres when a fat vertex exists
  while ((in.min.fat || in.max.fat) && g.k() < 2) {
    Chain c;
    c.edges.push_back({1, ymax - ymin});
    g.chains.push_back(std::move(c));
  }
  if (g.k() < 2) throw Error("k-too-small", "k >= 2 required: decorated data yields fewer than two chains");

  normalize_heights(g);
  if (g.fat_count() == 1 && g.min.fat) {
    if (warnings) warnings->push_back("single fat vertex was minimal; stored flipped so it is maximal");
    g = reversed(g);
  }
  canonicalize(g);
  return g;
}

DecoratedInput decorated_view(const ExtendedGraph& g) {
  DecoratedInput in;
  in.genus = g.genus;
  in.min = g.min;
  in.max = g.max;
  for (size_t i = 1; i <= g.k(); ++i) {
    for (size_t j = 1; j + 1 <= g.chain_len(i); ++j) {
      std::ostringstream id;
      id << "v" << i << "_" << j;
      in.vertices.push_back({id.str(), g.vertex_height(i, j)});
    }
    for (size_t j = 1; j <= g.chain_len(i); ++j) {
      if (g.label(i, j) < 2) continue;
      std::ostringstream lo, hi;
      if (j == 1)
        lo << "min";
      else
        lo << "v" << i << "_" << j - 1;
      if (j == g.chain_len(i))
        hi << "max";
      else
        hi << "v" << i << "_" << j;
      in.edges.push_back({g.label(i, j), lo.str(), hi.str()});
    }
  }
  return in;
}

}  // namespace hamgraph
