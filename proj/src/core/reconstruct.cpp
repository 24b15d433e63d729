#include "reconstruct.hpp"

#include <json.hpp>

#include <algorithm>

#include "localization.hpp"

namespace hamgraph {

using nlohmann::json;

BigInt AlgebraicInput::pair(const std::string& a, const std::string& b) const {
  auto it = pairing.find(a <= b ? std::make_pair(a, b) : std::make_pair(b, a));
  return it == pairing.end() ? BigInt(0) : it->second;
}

AlgebraicInput algebraic_input(const ExtendedGraph& g, bool with_omega, unsigned shuffle_seed) {
  AlgebraicInput in;
  in.fat_min = g.min.fat;
  in.fat_max = g.max.fat;
  in.genus = g.genus;
  in.has_omega = with_omega;

  std::vector<Gen> S;
  for (size_t i = 1; i <= g.k(); ++i)
    for (size_t j = 1; j <= g.chain_len(i); ++j) {
      if (i >= 3 && j == 1) continue;
      S.push_back(Gen::sigma(i, j));
    }
  std::vector<size_t> perm(S.size());
  for (size_t s = 0; s < S.size(); ++s) perm[s] = s;
  if (shuffle_seed) {
    unsigned state = shuffle_seed;
    for (size_t s = S.size(); s > 1; --s) {
      state = state * 1664525u + 1013904223u;
      std::swap(perm[s - 1], perm[state % s]);
    }
  }
  std::map<size_t, std::string> name_of;
  for (size_t s = 0; s < S.size(); ++s) name_of[perm[s]] = "e" + std::to_string(s + 1);
  for (size_t s = 0; s < S.size(); ++s) in.ids.push_back(name_of[s]);

  auto put = [&](std::string a, std::string b, const BigInt& v) {
    if (v.is_zero()) return;
    if (b < a) std::swap(a, b);
    in.pairing[{a, b}] = v;
  };

  // degree-6 pairing against a formal product tau = s1 * s2
  auto triple = [&](const CohClass2& x, const Gen& s1, const Gen& s2) {
    Laurent v = integrate(
        g, restrict_product(g, {x, CohClass2::unit(s1), CohClass2::unit(s2)}));
    Rat c = v.coeff(1);
    if (!c.is_integer()) throw Error("internal", "non-integral triple pairing");
    return c.num();
  };

  Gen top1 = Gen::sigma(1, g.chain_len(1)), top2 = Gen::sigma(2, g.chain_len(2));
  Gen bot1 = Gen::sigma(1, 1), bot2 = Gen::sigma(2, 1);
  auto [emin, emax] = extremal_self_intersections(g);

  for (size_t a = 0; a < S.size(); ++a) {
    CohClass2 ca = CohClass2::unit(S[a]);
    for (size_t b2 = a; b2 < S.size(); ++b2)
      put(name_of[a], name_of[b2], intersect(g, ca, CohClass2::unit(S[b2])));
    if (g.max.fat)
      put(name_of[a], "tau_max", intersect(g, ca, CohClass2::unit(Gen::tauinf())));
    else
      put(name_of[a], "tau_max", triple(ca, top1, top2));
    if (g.min.fat)
      put(name_of[a], "tau_min", intersect(g, ca, CohClass2::unit(Gen::tau0())));
    else
      put(name_of[a], "tau_min", triple(ca, bot1, bot2));
  }
  if (g.max.fat) {
    if (!emax.is_integer()) throw Error("invalid-graph", "fat maximum self-intersection not integral");
    put("tau_max", "tau_max", emax.num());
  }
  if (g.min.fat) {
    if (!emin.is_integer()) throw Error("invalid-graph", "fat minimum self-intersection not integral");
    put("tau_min", "tau_min", emin.num());
  }
  if (with_omega) {
    for (size_t a = 0; a < S.size(); ++a) {
      const Gen& s = S[a];
      in.omega[name_of[a]] = g.length(s.i, s.j) / Rat(g.label(s.i, s.j));
    }
    if (g.min.fat) in.omega_tau_min = g.min.area;
    if (g.max.fat) in.omega_tau_max = g.max.area;
  }
  return in;
}

namespace {

// recovered structure of one chain, top to bottom over the ids of S
struct RecoveredChain {
  std::vector<std::string> path;     // top first
  std::vector<BigInt> labels;        // parallel to path
  bool bottom_attached = false;      // the lowest S-element is sigma_{i,1}
  BigInt below_bottom;               // recovered label just below the lowest S-element
};

struct Recovered {
  bool fat_min = false, fat_max = false;
  long long genus = 0;
  BigInt e_min, e_max;  // self-intersections when fat
  std::vector<RecoveredChain> chains;
};

Recovered run_recursion(const AlgebraicInput& in) {
  Recovered out;
  out.fat_min = in.fat_min;
  out.fat_max = in.fat_max;
  out.genus = in.genus;
  if (in.genus < 0) throw Error("inconsistent-input", "negative genus");
  if (in.fat_min) out.e_min = in.pair("tau_min", "tau_min");
  if (in.fat_max) out.e_max = in.pair("tau_max", "tau_max");

  auto ptop = [&](const std::string& x) { return in.pair(x, "tau_max"); };
  auto pbot = [&](const std::string& x) { return in.pair(x, "tau_min"); };

  // neighbour graph, with the extremal cross-pairs cut
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& x : in.ids) adj[x];
  for (size_t a = 0; a < in.ids.size(); ++a)
    for (size_t b = a + 1; b < in.ids.size(); ++b) {
      const std::string &x = in.ids[a], &y = in.ids[b];
      if (in.pair(x, y).is_zero()) continue;
      bool top_cross = !in.fat_max && !ptop(x).is_zero() && !ptop(y).is_zero();
      bool bottom_cross = !in.fat_min && !pbot(x).is_zero() && !pbot(y).is_zero();
      if (top_cross || bottom_cross) continue;
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
  for (const auto& [x, nb] : adj)
    if (nb.size() > 2)
      throw Error("inconsistent-input", "generator " + x + " pairs with more than two neighbours");

  std::map<std::string, bool> used;
  std::vector<std::string> tops;
  for (const auto& x : in.ids)
    if (!ptop(x).is_zero()) tops.push_back(x);
  if (tops.empty()) throw Error("inconsistent-input", "no generator pairs with tau_max");

  for (const auto& top : tops) {
    if (used[top]) continue;
    RecoveredChain rc;
    std::string prev, cur = top;
    while (true) {
      rc.path.push_back(cur);
      used[cur] = true;
      std::string next;
      for (const auto& nb : adj[cur])
        if (nb != prev) {
          if (!next.empty()) throw Error("inconsistent-input", "branching chain at " + cur);
          next = nb;
        }
      if (next.empty()) break;
      if (!ptop(next).is_zero())
        throw Error("inconsistent-input", "two top generators share a chain");
      prev = cur;
      cur = next;
    }
    rc.bottom_attached = !pbot(rc.path.back()).is_zero();
    out.chains.push_back(std::move(rc));
  }
  for (const auto& x : in.ids)
    if (!used[x]) throw Error("inconsistent-input", "generator " + x + " lies on no chain");

  // labels, from the top down
  // top labels: 1 at a fixed surface, crossed tau_max pairings otherwise
  if (!in.fat_max && out.chains.size() != 2)
    throw Error("inconsistent-input", "an isolated maximum requires exactly two chains");
  for (size_t c = 0; c < out.chains.size(); ++c) {
    RecoveredChain& rc = out.chains[c];
    BigInt m_top, m_above;  // m_above = signed boundary label above the top edge
    if (in.fat_max) {
      m_top = BigInt(1);
      m_above = BigInt(0);
    } else {
      const RecoveredChain& other = out.chains[1 - c];
      m_top = ptop(other.path.front());
      m_above = -ptop(rc.path.front());
    }
    if (m_top <= BigInt(0))
      throw Error("inconsistent-input", "non-positive recovered label");
    rc.labels.assign(rc.path.size(), BigInt(0));
    rc.labels[0] = m_top;
    BigInt above = m_above;
    for (size_t s = 0; s < rc.path.size(); ++s) {
      const std::string& x = rc.path[s];
      BigInt self = in.pair(x, x);
      BigInt below = -(rc.labels[s] * self) - above;
      if (s + 1 < rc.path.size()) {
        if (below <= BigInt(0))
          throw Error("inconsistent-input", "non-positive recovered label below " + x);
        if (in.pair(x, rc.path[s + 1]) != BigInt(1))
          throw Error("inconsistent-input", "adjacent generators must pair to 1");
        rc.labels[s + 1] = below;
      } else {
        rc.below_bottom = below;
        if (!rc.bottom_attached && !below.is_one())
          throw Error("inconsistent-input",
                      "the implicit first edge must recover label 1, got " + below.to_string());
      }
      above = rc.labels[s];
    }
  }
  // bottom boundary consistency
  if (in.fat_min) {
    for (const auto& rc : out.chains)
      if (rc.bottom_attached && !rc.below_bottom.is_zero())
        throw Error("inconsistent-input", "bottom boundary label must vanish at a surface");
  } else {
    std::vector<size_t> attached;
    for (size_t c = 0; c < out.chains.size(); ++c)
      if (out.chains[c].bottom_attached) attached.push_back(c);
    if (attached.size() != 2)
      throw Error("inconsistent-input", "an isolated minimum requires two attached chains");
    for (size_t t = 0; t < 2; ++t) {
      const RecoveredChain& rc = out.chains[attached[t]];
      const RecoveredChain& other = out.chains[attached[1 - t]];
      BigInt want = -other.labels.back();
      if (rc.below_bottom != want)
        throw Error("inconsistent-input", "bottom boundary labels disagree: " +
                                              rc.below_bottom.to_string() + " vs " + want.to_string());
    }
  }
  return out;
}

// full bottom-to-top label vector of a recovered chain, including the
// implicit label-1 first edge when the chain is not bottom-attached
std::vector<long long> full_labels(const RecoveredChain& rc) {
  std::vector<long long> v;
  if (!rc.bottom_attached) v.push_back(1);
  for (size_t s = rc.path.size(); s-- > 0;) {
    if (!rc.labels[s].fits_int64())
      throw Error("inconsistent-input", "recovered label overflows");
    v.push_back(rc.labels[s].to_int64());
  }
  return v;
}

}  // namespace

DullGraph recover_dull(const AlgebraicInput& in) {
  Recovered rec = run_recursion(in);
  DullGraph d;
  d.genus = rec.genus;
  d.min.fat = rec.fat_min;
  d.max.fat = rec.fat_max;
  if (rec.fat_min) d.min.self_int = rec.e_min.to_int64();
  if (rec.fat_max) d.max.self_int = rec.e_max.to_int64();
  for (const auto& rc : rec.chains) {
    auto labels = full_labels(rc);
    size_t l = labels.size();
    size_t first = 0;
    while (first < l && labels[first] == 1) ++first;
    for (size_t j = 0; j + 1 < l; ++j)
      if (labels[j] == 1 && labels[j + 1] == 1) ++d.free_vertices;
    if (first == l) continue;
    size_t last = l;
    while (last > first && labels[last - 1] == 1) --last;
    DullBlock blk;
    blk.labels.assign(labels.begin() + first, labels.begin() + last);
    blk.attached_min = first == 0;
    blk.attached_max = last == l;
    d.blocks.push_back(std::move(blk));
  }
  // padding chains carry no dull data; nothing else to add
  return canonical_dull(std::move(d));
}

ExtendedGraph recover_decorated(const AlgebraicInput& in) {
  if (!in.has_omega) throw Error("missing-omega", "symplectic pairings are required");
  if (!in.fat_min && !in.fat_max)
    throw Error("unsupported", "recovery requires at least one fixed surface");
  Recovered rec = run_recursion(in);

  auto omega_of = [&](const std::string& x) {
    auto it = in.omega.find(x);
    if (it == in.omega.end()) throw Error("missing-omega", "no symplectic pairing for " + x);
    return it->second;
  };

  // total height from a bottom-attached chain: h = sum m_j <x_j, omega>
  Rat h;
  bool have_h = false;
  for (const auto& rc : rec.chains) {
    if (!rc.bottom_attached) continue;
    Rat sum;
    for (size_t s = 0; s < rc.path.size(); ++s)
      sum += Rat(rc.labels[s]) * omega_of(rc.path[s]);
    if (!have_h) {
      h = sum;
      have_h = true;
    } else if (h != sum) {
      throw Error("inconsistent-input", "chains disagree on the moment span");
    }
  }
  if (!have_h) throw Error("inconsistent-input", "no chain reaches the minimum");

  ExtendedGraph g;
  g.genus = rec.genus;
  g.min.fat = rec.fat_min;
  g.min.height = Rat(0);
  if (rec.fat_min) g.min.area = in.omega_tau_min;
  g.max.fat = rec.fat_max;
  g.max.height = h;
  if (rec.fat_max) g.max.area = in.omega_tau_max;
  for (const auto& rc : rec.chains) {
    Chain c;
    Rat upper_sum;
    for (size_t s = 0; s < rc.path.size(); ++s) {
      if (!rc.labels[s].fits_int64()) throw Error("inconsistent-input", "label overflow");
      long long m = rc.labels[s].to_int64();
      Rat len = Rat(rc.labels[s]) * omega_of(rc.path[s]);
      c.edges.insert(c.edges.begin(), Edge{m, len});
      upper_sum += len;
    }
    if (!rc.bottom_attached) {
      Rat first = h - upper_sum;
      if (!first.is_positive())
        throw Error("inconsistent-input", "implicit first edge has non-positive length");
      c.edges.insert(c.edges.begin(), Edge{1, first});
    }
    g.chains.push_back(std::move(c));
  }
  canonicalize(g);
  auto v = validate(g);
  if (!v.empty()) throw Error("inconsistent-input", "recovered graph invalid: " + v[0].message);
  return g;
}

AlgebraicInput parse_algebraic_input(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("parse", std::string("syntax error: ") + e.what());
  }
  AlgebraicInput in;
  if (!j.contains("generators") || !j["generators"].is_array())
    throw Error("parse", "generators: expected an array of ids");
  for (const auto& id : j["generators"]) in.ids.push_back(id.get<std::string>());
  in.genus = j.value("genus", 0);
  std::string tau_min_id, tau_max_id;
  auto read_tau = [&](const char* key, bool& fat, std::string& tid) {
    if (!j.contains(key)) throw Error("parse", std::string(key) + ": missing");
    if (j[key].is_string()) {
      fat = true;
      tid = j[key].get<std::string>();
    } else if (j[key].is_array() && j[key].size() == 2) {
      fat = false;
    } else {
      throw Error("parse", std::string(key) + ": expected an id or a pair of ids");
    }
  };
  read_tau("tau_min", in.fat_min, tau_min_id);
  read_tau("tau_max", in.fat_max, tau_max_id);
  auto canon = [&](std::string s) {
    if (in.fat_min && s == tau_min_id) return std::string("tau_min");
    if (in.fat_max && s == tau_max_id) return std::string("tau_max");
    return s;
  };
  if (j.contains("pairing")) {
    for (const auto& row : j["pairing"]) {
      if (!row.is_array() || row.size() != 3) throw Error("parse", "pairing rows are [id, id, int]");
      std::string a = canon(row[0].get<std::string>());
      std::string b = canon(row[1].get<std::string>());
      if (b < a) std::swap(a, b);
      in.pairing[{a, b}] = BigInt(row[2].get<long long>());
    }
  }
  if (j.contains("omega")) {
    in.has_omega = true;
    for (const auto& row : j["omega"]) {
      if (!row.is_array() || row.size() != 2) throw Error("parse", "omega rows are [id, rational]");
      std::string id = canon(row[0].get<std::string>());
      Rat v = row[1].is_string() ? Rat::parse(row[1].get<std::string>())
                                 : Rat(row[1].get<long long>());
      if (id == "tau_min")
        in.omega_tau_min = v;
      else if (id == "tau_max")
        in.omega_tau_max = v;
      else
        in.omega[id] = v;
    }
  }
  return in;
}

std::string algebraic_input_to_json(const AlgebraicInput& in) {
  json j;
  j["generators"] = in.ids;
  j["genus"] = in.genus;
  j["tau_min"] = in.fat_min ? json("tau_min") : json::array({"(bottom1)", "(bottom2)"});
  j["tau_max"] = in.fat_max ? json("tau_max") : json::array({"(top1)", "(top2)"});
  json rows = json::array();
  for (const auto& [k, v] : in.pairing) {
    if (!v.fits_int64()) throw Error("internal", "pairing overflow");
    rows.push_back(json::array({k.first, k.second, v.to_int64()}));
  }
  j["pairing"] = rows;
  if (in.has_omega) {
    json om = json::array();
    for (const auto& [id, v] : in.omega) om.push_back(json::array({id, v.str()}));
    if (in.fat_min) om.push_back(json::array({"tau_min", in.omega_tau_min.str()}));
    if (in.fat_max) om.push_back(json::array({"tau_max", in.omega_tau_max.str()}));
    j["omega"] = om;
  }
  return j.dump(2);
}

}  // namespace hamgraph
