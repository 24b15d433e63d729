#include "reports.hpp"

#include <sstream>

#include "cohomology.hpp"
#include "dull.hpp"
#include "enumerate.hpp"
#include "expr.hpp"
#include "finiteness.hpp"
#include "morphisms.hpp"
#include "reconstruct.hpp"
#include "surgery.hpp"

namespace hamgraph::api {

using nlohmann::json;

namespace {

ExtendedGraph need_graph(const std::vector<std::string>& inputs, size_t idx,
                         std::vector<std::string>* warnings = nullptr) {
  if (idx >= inputs.size()) throw Error("usage", "missing input graph");
  return parse_graph(inputs[idx], warnings);
}

json graph_json(const ExtendedGraph& g) { return json::parse(graph_to_json(g)); }

BlowupSite parse_site(const std::string& s) {
  BlowupSite site;
  auto bad = [&]() -> BlowupSite {
    throw Error("usage", "unrecognized site '" + s +
                             "' (expected interior:i=I,j=J, extreme:min|max, fat:min|max)");
  };
  auto endpart = [&](const std::string& rest) {
    if (rest == "min") return false;
    if (rest == "max") return true;
    bad();
    return true;
  };
  if (s.rfind("interior:", 0) == 0) {
    site.kind = BlowupSite::Interior;
    if (sscanf(s.c_str(), "interior:i=%zu,j=%zu", &site.i, &site.j) != 2) bad();
    return site;
  }
  if (s.rfind("extreme:", 0) == 0) {
    site.kind = BlowupSite::IsolatedExtreme;
    site.at_max = endpart(s.substr(8));
    return site;
  }
  if (s.rfind("fat:", 0) == 0) {
    site.kind = BlowupSite::FatSurface;
    site.at_max = endpart(s.substr(4));
    return site;
  }
  if (s.rfind("fat-surface:", 0) == 0) {
    site.kind = BlowupSite::FatSurface;
    site.at_max = endpart(s.substr(12));
    return site;
  }
  return bad();
}

BlowdownTarget parse_target(const std::string& s) {
  BlowdownTarget t;
  if (s.rfind("edge:", 0) == 0) {
    if (sscanf(s.c_str(), "edge:i=%zu,j=%zu", &t.i, &t.j) != 2)
      throw Error("usage", "unrecognized target '" + s + "'");
    return t;
  }
  if (s == "fat:min" || s == "fat:max") {
    t.fat = true;
    t.at_max = s == "fat:max";
    return t;
  }
  throw Error("usage", "unrecognized target '" + s + "' (expected edge:i=I,j=J or fat:min|max)");
}

json record_json(const BlowupRecord& rec) {
  json r;
  r["site"] = rec.site.str();
  r["lambda"] = rec.lambda.str();
  r["type"] = rec.paper_type;
  r["at_max"] = rec.at_max;
  r["flip_after"] = rec.flip_after;
  if (rec.pre_chain) r["chain"] = rec.pre_chain;
  if (rec.pos) r["pos"] = rec.pos;
  if (rec.new_chain) r["new_chain"] = rec.new_chain;
  if (rec.dropped_pad) r["dropped_pad"] = rec.dropped_pad;
  json cm = json::array();
  for (size_t i = 1; i < rec.chain_map.size(); ++i) cm.push_back(rec.chain_map[i]);
  r["chain_map"] = cm;
  return r;
}

json dull_json(const DullGraph& d) {
  json j;
  j["genus"] = d.genus;
  j["min"] = d.min.fat ? json{{"fat", true}, {"self_intersection", d.min.self_int}}
                       : json{{"fat", false}};
  j["max"] = d.max.fat ? json{{"fat", true}, {"self_intersection", d.max.self_int}}
                       : json{{"fat", false}};
  j["free_vertices"] = d.free_vertices;
  json blocks = json::array();
  for (const auto& b : d.blocks) {
    json bj;
    bj["labels"] = b.labels;
    bj["attached_min"] = b.attached_min;
    bj["attached_max"] = b.attached_max;
    blocks.push_back(bj);
  }
  j["blocks"] = blocks;
  j["key"] = d.key();
  return j;
}

json presentation_json(const ExtendedGraph& g, const Presentation& p) {
  json j;
  json gens = json::array();
  for (const auto& gen : p.table.gens) gens.push_back(gen.name());
  j["generators"] = gens;
  json lin = json::array();
  for (const auto& rel : p.linear_relations) lin.push_back(rel.str());
  j["linear_relations"] = lin;
  json prod = json::array();
  for (const auto& mono : p.product_relations) {
    std::string s;
    for (size_t t = 0; t < mono.size(); ++t) s += (t ? "*" : "") + mono[t].name();
    prod.push_back(s);
  }
  j["product_relations"] = prod;
  j["cp2_triple"] = p.cp2_triple;
  j["pi_star_t"] = p.pi_t.str();
  json basis = json::array();
  for (size_t idx : p.basis) basis.push_back(p.table.gens[idx].name());
  j["basis"] = basis;
  j["rank_deg2"] = poincare_rank(g, 2);
  return j;
}

std::string laurent_or_int(const Laurent& v) {
  if (v.is_zero()) return "0";
  if (v.high_degree() == 0 && v.low_degree() == 0) return v.coeff(0).str();
  return v.str();
}

EnumerateBounds parse_bounds(const json& args) {
  EnumerateBounds b;
  b.max_edges = args.value("max_edges", 4);
  b.max_label = args.value("max_label", 2);
  b.max_denominator = args.value("max_den", 1);
  b.max_genus = args.value("max_genus", 2);
  if (b.max_edges < 1 || b.max_label < 1 || b.max_denominator < 1)
    throw Error("usage", "enumeration bounds must be at least 1");
  return b;
}

}  // namespace

std::vector<std::string> op_names() {
  return {"validate",  "extend",   "dull",     "weights",   "ranks",     "blowup",
          "blowdown",  "reduce",   "presentation", "pit",   "intersect", "restrict",
          "integrate", "zerolength", "label",  "flip",      "dull-iso",  "weak-iso",
          "obstruct",  "recover-dull", "recover", "bounds",  "fiber",     "enumerate",
          "sweep",     "report"};
}

OpResult run_op(const std::string& op, const std::vector<std::string>& inputs, const json& args) {
  OpResult out;
  std::ostringstream text;

  if (op == "validate") {
    std::vector<std::string> warnings;
    ExtendedGraph g = need_graph(inputs, 0, &warnings);
    auto viols = validate(g);
    json vj = json::array();
    for (const auto& v : viols) vj.push_back(json{{"code", v.code}, {"message", v.message}});
    out.machine = {{"ok", viols.empty()}, {"violations", vj}, {"warnings", warnings}};
    for (const auto& w : warnings) text << "warning: " << w << "\n";
    if (viols.empty()) {
      auto [emin, emax] = extremal_self_intersections(g);
      out.machine["e_min"] = emin.str();
      out.machine["e_max"] = emax.str();
      text << "valid; e_min=" << emin.str() << ", e_max=" << emax.str() << "\n";
    } else {
      for (const auto& v : viols) text << v.code << ": " << v.message << "\n";
      out.exit_code = 1;
    }
  } else if (op == "extend") {
    std::vector<std::string> warnings;
    ExtendedGraph g = need_graph(inputs, 0, &warnings);
    out.machine = graph_json(g);
    for (const auto& w : warnings) text << "warning: " << w << "\n";
    text << graph_to_json(g) << "\n";
  } else if (op == "dull") {
    ExtendedGraph g = need_graph(inputs, 0);
    DullGraph d = dull(g);
    out.machine = dull_json(d);
    text << d.key() << "\n";
  } else if (op == "weights") {
    ExtendedGraph g = need_graph(inputs, 0);
    auto w = isotropy_weights(g);
    json wj = json::array();
    for (const auto& p : w) wj.push_back(json::array({p.a, p.b}));
    out.machine = {{"weights", wj}};
    for (const auto& p : w) text << "{" << p.a << "," << p.b << "} ";
    text << "\n";
  } else if (op == "ranks") {
    ExtendedGraph g = need_graph(inputs, 0);
    long long qmax = args.value("qmax", 8);
    json rj = json::array();
    for (long long q = 0; q <= qmax; ++q) rj.push_back(poincare_rank(g, q));
    out.machine = {{"ranks", rj}};
    for (long long q = 0; q <= qmax; ++q) text << poincare_rank(g, q) << (q == qmax ? "\n" : " ");
  } else if (op == "blowup") {
    ExtendedGraph g = need_graph(inputs, 0);
    BlowupSite site = parse_site(args.value("site", ""));
    Rat lambda = Rat::parse(args.value("lambda", "1"));
    auto [h, rec] = blowup(g, site, lambda);
    out.machine = graph_json(h);
    out.machine["history"] = json::array({record_json(rec)});
    text << out.machine.dump(2) << "\n";
  } else if (op == "blowdown") {
    ExtendedGraph g = need_graph(inputs, 0);
    BlowdownTarget t = parse_target(args.value("target", ""));
    auto [h, rec] = blowdown(g, t);
    out.machine = graph_json(h);
    out.machine["history"] = json::array({record_json(rec)});
    text << out.machine.dump(2) << "\n";
  } else if (op == "reduce") {
    ExtendedGraph g = need_graph(inputs, 0);
    Reduction red = reduce_to_minimal(g);
    out.machine["model"] = red.model.str();
    out.machine["blowups"] = red.records.size();
    out.machine["terminal"] = graph_json(red.terminal);
    json hist = json::array();
    for (const auto& rec : red.records) hist.push_back(record_json(rec));
    out.machine["history"] = hist;
    text << "minimal model: " << red.model.str() << "\n";
    text << "blowups: " << red.records.size() << "\n";
    for (const auto& rec : red.records)
      text << "  " << rec.site.str() << " lambda=" << rec.lambda.str()
           << (rec.flip_after ? " (flip)" : "") << "\n";
  } else if (op == "presentation" || op == "report") {
    ExtendedGraph g = need_graph(inputs, 0);
    auto viols = validate(g);
    if (!viols.empty()) {
      for (const auto& v : viols) text << v.code << ": " << v.message << "\n";
      out.exit_code = 1;
      out.machine = {{"ok", false}};
      out.text = text.str();
      return out;
    }
    Presentation p(g);
    out.machine = presentation_json(g, p);
    auto [emin, emax] = extremal_self_intersections(g);
    text << "generators:";
    for (const auto& gen : p.table.gens) text << " " << gen.name();
    text << "\nlinear relations:\n";
    for (const auto& rel : p.linear_relations) text << "  " << rel.str() << " = 0\n";
    text << "vanishing products:\n";
    for (const auto& mono : p.product_relations) {
      text << "  ";
      for (size_t t = 0; t < mono.size(); ++t) text << (t ? "*" : "") << mono[t].name();
      text << " = 0\n";
    }
    text << "pi*(t) = " << p.pi_t.str() << "\n";
    text << "degree-2 basis:";
    for (size_t idx : p.basis) text << " " << p.table.gens[idx].name();
    text << "\n";
    if (op == "report") {
      text << "e_min=" << emin.str() << ", e_max=" << emax.str() << "\n";
      // invariant digest: the localization oracle on this one graph
      GenTable table(g);
      bool oracle_ok = true;
      for (size_t a = 0; a < table.gens.size() && oracle_ok; ++a)
        for (size_t b = a; b < table.gens.size() && oracle_ok; ++b) {
          CohClass2 ca = CohClass2::unit(table.gens[a]);
          CohClass2 cb = CohClass2::unit(table.gens[b]);
          oracle_ok = Rat(intersect(g, ca, cb)) == intersect_abbv(g, ca, cb);
        }
      bool pi_ok = true;
      RestrictionTuple rt = restrict_class(g, p.pi_t);
      for (const auto& f : fixed_components(g)) {
        ComponentValue want = is_isolated(g, f)
                                  ? ComponentValue::point(Laurent::term(Rat(1), 1))
                                  : ComponentValue::at_surface(Laurent::term(Rat(1), 1), {});
        pi_ok = pi_ok && rt.at(f) == want;
      }
      text << "intersection oracle: " << (oracle_ok ? "ok" : "FAIL") << "\n";
      text << "pi*(t) restriction oracle: " << (pi_ok ? "ok" : "FAIL") << "\n";
      out.machine["oracle_ok"] = oracle_ok;
      out.machine["pi_ok"] = pi_ok;
      out.machine["e_min"] = emin.str();
      out.machine["e_max"] = emax.str();
      if (!oracle_ok || !pi_ok) out.exit_code = 1;
    }
  } else if (op == "pit") {
    ExtendedGraph g = need_graph(inputs, 0);
    CohClass2 pit = pi_star_t(g);
    out.machine = {{"pi_star_t", pit.str()}};
    text << pit.str() << "\n";
  } else if (op == "intersect") {
    ExtendedGraph g = need_graph(inputs, 0);
    CohClass2 a = parse_class(args.value("a", ""));
    CohClass2 b = parse_class(args.value("b", ""));
    BigInt v = intersect(g, a, b);
    Rat oracle = intersect_abbv(g, a, b);
    if (Rat(v) != oracle)
      throw Error("oracle-mismatch", "table value " + v.to_string() + " vs localization " + oracle.str());
    out.machine = {{"value", v.to_string()}};
    text << v.to_string() << "\n";
  } else if (op == "restrict") {
    ExtendedGraph g = need_graph(inputs, 0);
    auto factors = parse_class_product(args.value("class", ""));
    RestrictionTuple r = restrict_product(g, factors);
    json mj = json::object();
    for (const auto& f : fixed_components(g)) mj[f.name()] = r.at(f).str();
    out.machine = {{"restriction", mj}};
    for (const auto& f : fixed_components(g))
      text << f.name() << ": " << r.at(f).str() << "\n";
  } else if (op == "integrate") {
    ExtendedGraph g = need_graph(inputs, 0);
    auto factors = parse_class_product(args.value("class", ""));
    Laurent v = integrate(g, restrict_product(g, factors));
    out.machine = {{"value", laurent_or_int(v)}};
    text << laurent_or_int(v) << "\n";
  } else if (op == "zerolength") {
    ExtendedGraph g = need_graph(inputs, 0);
    CohClass2 c = parse_class(args.value("class", ""));
    long long z = zero_length(g, c);
    out.machine = {{"zero_length", z}};
    text << z << "\n";
  } else if (op == "label") {
    ExtendedGraph g = need_graph(inputs, 0);
    CohClass2 c = parse_class(args.value("class", ""));
    ClassLabel l = class_label(g, c);
    out.machine = {{"defined", l.defined}};
    if (l.defined) {
      out.machine["label"] = l.value.str();
      text << l.value.str() << "\n";
    } else {
      text << "label undefined\n";
      out.exit_code = 1;
    }
  } else if (op == "flip") {
    ExtendedGraph g = need_graph(inputs, 0);
    std::string kind = args.value("kind", "full");
    std::pair<ExtendedGraph, GeneratorMap> r =
        kind == "full"         ? full_flip(g)
        : kind == "symplectic" ? symplectic_flip(g)
        : kind == "partial"    ? partial_flip(g, args.value("chain", 1))
                               : throw Error("usage", "unknown flip kind '" + kind + "'");
    out.machine = graph_json(r.first);
    json mm = json::object();
    for (const auto& [gen, img] : r.second.map) mm[gen.name()] = img.str();
    out.machine["map"] = mm;
    out.machine["epsilon"] = r.second.epsilon;
    out.machine["rescaled"] = r.second.rescaled;
    text << "epsilon = " << r.second.epsilon << (r.second.rescaled ? " (lengths rebalanced)" : "")
         << "\n";
    for (const auto& [gen, img] : r.second.map) text << gen.name() << " -> " << img.str() << "\n";
  } else if (op == "dull-iso") {
    ExtendedGraph g1 = need_graph(inputs, 0), g2 = need_graph(inputs, 1);
    DullGraph d1 = dull(g1), d2 = dull(g2);
    auto iso = dull_isomorphic(d1, d2);
    out.machine = {{"isomorphic", bool(iso)}};
    if (iso) {
      out.machine["flipped"] = iso->flipped;
      text << "isomorphic" << (iso->flipped ? " (global flip)" : "") << "\n";
    } else {
      out.machine["witness"] = dull_mismatch_witness(d1, d2);
      text << "not isomorphic: " << dull_mismatch_witness(d1, d2) << "\n";
      out.exit_code = 1;
    }
  } else if (op == "weak-iso") {
    ExtendedGraph g1 = need_graph(inputs, 0), g2 = need_graph(inputs, 1);
    WeakIsoVerdict v = weak_isomorphisms(g1, g2);
    out.machine = {{"isomorphic", v.isomorphic}};
    if (v.isomorphic) {
      out.machine["factors"] = v.factors;
      out.machine["epsilon"] = v.map->epsilon;
      text << "isomorphic via:";
      for (const auto& f : v.factors) text << " " << f;
      text << "\n";
      json mm = json::object();
      for (const auto& [gen, img] : v.map->map) mm[gen.name()] = img.str();
      out.machine["map"] = mm;
    } else {
      out.machine["witness"] = v.witness;
      text << "not isomorphic: " << v.witness << "\n";
      out.exit_code = 1;
    }
  } else if (op == "obstruct") {
    ExtendedGraph g1 = need_graph(inputs, 0), g2 = need_graph(inputs, 1);
    ObstructionVerdict v = diffeo_obstruction(g1, g2);
    out.machine = {{"obstructed", v.obstructed}, {"code", v.code}, {"reason", v.reason}};
    if (v.obstructed) {
      text << "equivariant diffeomorphism obstructed: " << v.reason << "\n";
    } else {
      text << "not obstructed (no conclusion about existence)\n";
      out.exit_code = 1;
    }
  } else if (op == "recover-dull") {
    if (inputs.empty()) throw Error("usage", "missing algebraic input");
    AlgebraicInput in = parse_algebraic_input(inputs[0]);
    DullGraph d = recover_dull(in);
    out.machine = dull_json(d);
    text << d.key() << "\n";
  } else if (op == "recover") {
    if (inputs.empty()) throw Error("usage", "missing algebraic input");
    AlgebraicInput in = parse_algebraic_input(inputs[0]);
    ExtendedGraph g = recover_decorated(in);
    out.machine = graph_json(g);
    text << graph_to_json(g) << "\n";
  } else if (op == "bounds") {
    ExtendedGraph g = need_graph(inputs, 0);
    BoundReport r = bound_constants(g);
    out.machine = {{"N", r.N},           {"b2", r.b2},
                   {"C_h", r.C_h.str()}, {"c1_omega", r.c1_omega.str()},
                   {"C", r.C.str()},     {"A", r.A.to_string()},
                   {"omega_omega", r.omega_omega.str()},
                   {"model", r.model.str()},
                   {"box", r.box()}};
    text << "model: " << r.model.str() << "\n";
    text << "N=" << r.N << " b2=" << r.b2 << " C_h=" << r.C_h.str() << " C=" << r.C.str()
         << " A=" << r.A.to_string() << " <omega,omega>=" << r.omega_omega.str() << "\n";
    text << "box: " << r.box() << "\n";
    auto bad = box_check(g, r);
    out.machine["box_ok"] = bad.empty();
    for (const auto& b : bad) text << "box violation: " << b << "\n";
    if (!bad.empty()) out.exit_code = 1;
  } else if (op == "fiber") {
    FiberResult r = recognize_fiber_class(args.value("p", 0), args.value("q", 0),
                                          args.value("genus", 0), args.value("parity", 0) % 2 == 0);
    const char* names[] = {"fiber", "base", "neither"};
    int idx = r.verdict == FiberVerdict::Fiber ? 0 : r.verdict == FiberVerdict::Base ? 1 : 2;
    out.machine = {{"verdict", names[idx]}, {"violated", r.violated}};
    text << names[idx];
    if (!r.violated.empty()) text << " (" << r.violated << " violated)";
    text << "\n";
    if (r.verdict == FiberVerdict::Neither) out.exit_code = 1;
  } else if (op == "enumerate") {
    EnumerateBounds b = parse_bounds(args);
    auto graphs = enumerate_graphs(b);
    json arr = json::array();
    for (const auto& g : graphs) arr.push_back(graph_json(g));
    out.machine = {{"count", graphs.size()}, {"graphs", arr}};
    text << graphs.size() << " graphs\n";
    for (const auto& g : graphs) text << canonical_key(g) << "\n";
  } else if (op == "sweep") {
    EnumerateBounds b = parse_bounds(args);
    auto graphs = enumerate_graphs(b);
    size_t oracle_bad = 0, pi_bad = 0, replay_bad = 0;
    for (const auto& g : graphs) {
      GenTable table(g);
      for (size_t x = 0; x < table.gens.size(); ++x)
        for (size_t y = x; y < table.gens.size(); ++y) {
          CohClass2 cx = CohClass2::unit(table.gens[x]);
          CohClass2 cy = CohClass2::unit(table.gens[y]);
          if (Rat(intersect(g, cx, cy)) != intersect_abbv(g, cx, cy)) ++oracle_bad;
        }
      RestrictionTuple rt = restrict_class(g, pi_star_t(g));
      for (const auto& f : fixed_components(g)) {
        ComponentValue want = is_isolated(g, f)
                                  ? ComponentValue::point(Laurent::term(Rat(1), 1))
                                  : ComponentValue::at_surface(Laurent::term(Rat(1), 1), {});
        if (!(rt.at(f) == want)) ++pi_bad;
      }
      Reduction red = reduce_to_minimal(g);
      if (!canonical_equal(replay(red), g)) ++replay_bad;
    }
    out.machine = {{"count", graphs.size()},
                   {"oracle_mismatches", oracle_bad},
                   {"pi_mismatches", pi_bad},
                   {"replay_mismatches", replay_bad}};
    text << graphs.size() << " graphs; oracle mismatches " << oracle_bad << "; pi mismatches "
         << pi_bad << "; replay mismatches " << replay_bad << "\n";
    if (oracle_bad || pi_bad || replay_bad) out.exit_code = 1;
  } else {
    throw Error("usage", "unknown operation '" + op + "'");
  }
  out.text = text.str();
  return out;
}

}  // namespace hamgraph::api
