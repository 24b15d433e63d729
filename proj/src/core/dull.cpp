#include "dull.hpp"

#include <algorithm>
#include <sstream>

namespace hamgraph {

std::string DullBlock::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t s = 0; s < labels.size(); ++s) os << (s ? "," : "") << labels[s];
  os << "]";
  if (attached_min) os << "@min";
  if (attached_max) os << "@max";
  if (free_interior()) os << "@free";
  return os.str();
}

bool operator<(const DullBlock& a, const DullBlock& b) {
  if (a.attached_min != b.attached_min) return a.attached_min > b.attached_min;
  if (a.attached_max != b.attached_max) return a.attached_max > b.attached_max;
  return a.labels < b.labels;
}

DullGraph canonical_dull(DullGraph d) {
  for (auto& blk : d.blocks) {
    if (blk.free_interior()) {
      std::vector<long long> rev(blk.labels.rbegin(), blk.labels.rend());
      if (rev < blk.labels) blk.labels = rev;
    }
  }
  std::sort(d.blocks.begin(), d.blocks.end());
  return d;
}

DullGraph dull(const ExtendedGraph& g) {
  DullGraph d;
  d.genus = g.genus;
  auto [emin, emax] = extremal_self_intersections(g);
  d.min.fat = g.min.fat;
  d.max.fat = g.max.fat;
  if (g.min.fat) {
    if (!emin.is_integer()) throw Error("invalid-graph", "fat minimum self-intersection not integral");
    d.min.self_int = emin.num().to_int64();
  }
  if (g.max.fat) {
    if (!emax.is_integer()) throw Error("invalid-graph", "fat maximum self-intersection not integral");
    d.max.self_int = emax.num().to_int64();
  }
  for (size_t i = 1; i <= g.k(); ++i) {
    auto labels = g.chains[i - 1].labels();
    size_t l = labels.size();
    size_t first = 0;
    while (first < l && labels[first] == 1) ++first;
    if (first == l) {
      // all label-1: only its interior vertices survive in the dull graph
      d.free_vertices += static_cast<long long>(l) - 1;
      continue;
    }
    size_t last = l;
    while (last > first && labels[last - 1] == 1) --last;
    DullBlock blk;
    blk.labels.assign(labels.begin() + first, labels.begin() + last);
    blk.attached_min = first == 0;
    blk.attached_max = last == l;
    d.blocks.push_back(std::move(blk));
  }
  return canonical_dull(std::move(d));
}

DullGraph dull_flip(const DullGraph& d) {
  DullGraph r = d;
  std::swap(r.min, r.max);
  for (auto& blk : r.blocks) {
    std::reverse(blk.labels.begin(), blk.labels.end());
    std::swap(blk.attached_min, blk.attached_max);
  }
  return canonical_dull(std::move(r));
}

std::string DullGraph::key() const {
  std::ostringstream os;
  os << "g=" << genus << ";min=" << (min.fat ? "F" + std::to_string(min.self_int) : "I")
     << ";max=" << (max.fat ? "F" + std::to_string(max.self_int) : "I") << ";free=" << free_vertices;
  for (const auto& blk : blocks) os << ";" << blk.str();
  return os.str();
}

std::optional<DullIso> dull_isomorphic(const DullGraph& a, const DullGraph& b) {
  auto pairing = [&](void) {
    std::vector<std::pair<size_t, size_t>> p;
    for (size_t s = 0; s < a.blocks.size(); ++s) p.emplace_back(s, s);
    return p;
  };
  if (a == b) {
    DullIso out;
    out.block_pairs = pairing();
    return out;
  }
  if (a == dull_flip(b)) {
    DullIso out;
    out.flipped = true;
    out.block_pairs = pairing();
    return out;
  }
  return std::nullopt;
}

std::string dull_mismatch_witness(const DullGraph& a, const DullGraph& b) {
  auto bf = dull_flip(b);
  auto describe = [](const DullGraph& x, const DullGraph& y) -> std::string {
    if (x.genus != y.genus) return "genus";
    if (!(x.min == y.min) || !(x.max == y.max)) return "extreme markers";
    if (x.free_vertices != y.free_vertices) return "free interior vertex count";
    if (x.blocks != y.blocks) return "interior chain label multisets";
    return "";
  };
  std::string direct = describe(a, b);
  std::string flipped = describe(a, bf);
  if (direct.empty() || flipped.empty()) return "";
  return direct == flipped ? direct : direct + " (or, flipped, " + flipped + ")";
}

}  // namespace hamgraph
