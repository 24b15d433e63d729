#include <json.hpp>

#include "graph.hpp"

namespace hamgraph {

using nlohmann::json;

namespace {

Rat rat_field(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<long long>()));
  if (!j.is_string()) throw Error("parse", path + ": expected a rational string");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw Error("parse", path + ": malformed rational: " + std::string(e.what()));
  }
}

ExtremalComponent parse_extreme(const json& j, const std::string& path) {
  if (!j.is_object()) throw Error("parse", path + ": expected an object");
  ExtremalComponent c;
  if (!j.contains("fat") || !j["fat"].is_boolean()) throw Error("parse", path + ".fat: expected a boolean");
  c.fat = j["fat"].get<bool>();
  if (!j.contains("height")) throw Error("parse", path + ".height: missing");
  c.height = rat_field(j["height"], path + ".height");
  if (c.fat) {
    if (!j.contains("area")) throw Error("parse", path + ".area: missing for a fat vertex");
    c.area = rat_field(j["area"], path + ".area");
    if (!c.area.is_positive()) throw Error("parse", path + ".area: area must be positive");
  } else if (j.contains("area")) {
    throw Error("parse", path + ".area: an isolated extreme carries no area");
  }
  return c;
}

}  // namespace

ExtendedGraph parse_graph(const std::string& text, std::vector<std::string>* warnings) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("parse", std::string("syntax error: ") + e.what());
  }
  if (!j.is_object()) throw Error("parse", "top level: expected an object");
  if (!j.contains("genus") || !j["genus"].is_number_integer())
    throw Error("parse", "genus: expected an integer");
  long long genus = j["genus"].get<long long>();
  if (genus < 0) throw Error("parse", "genus: must be non-negative");
  ExtremalComponent mn = parse_extreme(j.value("min", json()), "min");
  ExtremalComponent mx = parse_extreme(j.value("max", json()), "max");

  ExtendedGraph g;
  if (j.contains("chains")) {
    g.genus = genus;
    g.min = mn;
    g.max = mx;
    const json& chains = j["chains"];
    if (!chains.is_array()) throw Error("parse", "chains: expected an array");
    for (size_t ci = 0; ci < chains.size(); ++ci) {
      std::string cpath = "chains[" + std::to_string(ci) + "]";
      const json& cj = chains[ci];
      if (!cj.is_object() || !cj.contains("edges") || !cj["edges"].is_array())
        throw Error("parse", cpath + ".edges: expected an array");
      Chain c;
      for (size_t ei = 0; ei < cj["edges"].size(); ++ei) {
        std::string epath = cpath + ".edges[" + std::to_string(ei) + "]";
        const json& ej = cj["edges"][ei];
        if (!ej.is_object() || !ej.contains("m") || !ej["m"].is_number_integer())
          throw Error("parse", epath + ".m: expected an integer");
        Edge e;
        e.label = ej["m"].get<long long>();
        if (e.label < 1) throw Error("parse", epath + ".m: label must be >= 1");
        if (!ej.contains("len")) throw Error("parse", epath + ".len: missing");
        e.length = rat_field(ej["len"], epath + ".len");
        if (!e.length.is_positive()) throw Error("parse", epath + ".len: length must be positive");
        c.edges.push_back(std::move(e));
      }
      g.chains.push_back(std::move(c));
    }
  } else if (j.contains("vertices") || j.contains("edges")) {
    DecoratedInput in;
    in.genus = genus;
    in.min = mn;
    in.max = mx;
    const json verts = j.value("vertices", json::array());
    if (!verts.is_array()) throw Error("parse", "vertices: expected an array");
    for (size_t vi = 0; vi < verts.size(); ++vi) {
      std::string vpath = "vertices[" + std::to_string(vi) + "]";
      const json& vj = verts[vi];
      if (!vj.is_object() || !vj.contains("id") || !vj["id"].is_string())
        throw Error("parse", vpath + ".id: expected a string");
      DecoratedVertex v;
      v.id = vj["id"].get<std::string>();
      if (!vj.contains("height")) throw Error("parse", vpath + ".height: missing");
      v.height = rat_field(vj["height"], vpath + ".height");
      in.vertices.push_back(std::move(v));
    }
    const json edges = j.value("edges", json::array());
    if (!edges.is_array()) throw Error("parse", "edges: expected an array");
    for (size_t ei = 0; ei < edges.size(); ++ei) {
      std::string epath = "edges[" + std::to_string(ei) + "]";
      const json& ej = edges[ei];
      if (!ej.is_object() || !ej.contains("m") || !ej["m"].is_number_integer())
        throw Error("parse", epath + ".m: expected an integer");
      DecoratedEdge e;
      e.label = ej["m"].get<long long>();
      if (!ej.contains("from") || !ej["from"].is_string() || !ej.contains("to") || !ej["to"].is_string())
        throw Error("parse", epath + ": expected string endpoints 'from'/'to'");
      e.from = ej["from"].get<std::string>();
      e.to = ej["to"].get<std::string>();
      in.edges.push_back(std::move(e));
    }
    g = build_extended(in, warnings);
  } else {
    throw Error("parse", "expected either 'chains' or 'vertices'/'edges'");
  }

  if (!g.min.height.is_zero()) {
    if (warnings) warnings->push_back("minimum height translated to 0 (was " + g.min.height.str() + ")");
    normalize_heights(g);
  }
  if (g.fat_count() == 1 && g.min.fat) {
    if (warnings) warnings->push_back("single fat vertex was minimal; stored flipped so it is maximal");
    g = reversed(g);
  }
  canonicalize(g);
  return g;
}

std::string graph_to_json(const ExtendedGraph& g) {
  json j;
  j["genus"] = g.genus;
  auto extreme = [](const ExtremalComponent& c) {
    json e;
    e["fat"] = c.fat;
    e["height"] = c.height.str();
    if (c.fat) e["area"] = c.area.str();
    return e;
  };
  j["min"] = extreme(g.min);
  j["max"] = extreme(g.max);
  j["chains"] = json::array();
  for (const auto& c : g.chains) {
    json cj;
    cj["edges"] = json::array();
    for (const auto& e : c.edges) {
      json ej;
      ej["m"] = e.label;
      ej["len"] = e.length.str();
      cj["edges"].push_back(ej);
    }
    j["chains"].push_back(cj);
  }
  return j.dump(2);
}

}  // namespace hamgraph
