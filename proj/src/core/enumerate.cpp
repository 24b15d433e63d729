#include "enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "surgery.hpp"

namespace hamgraph {

namespace {

// label vectors that can appear as one chain
std::vector<std::vector<long long>> chain_label_shapes(size_t max_len, long long max_label) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  std::function<void()> go = [&]() {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_len) return;
    for (long long m = 1; m <= max_label; ++m) {
      if (!cur.empty()) {
        if (std::gcd(cur.back(), m) != 1) continue;
        if (cur.back() == 1 && cur.size() >= 2) continue;  // 1 only at the ends
      }
      if (m == 1 && cur.size() >= 2) {
        // a label-1 edge after position 1 must close the chain
        cur.push_back(m);
        out.push_back(cur);
        cur.pop_back();
        continue;
      }
      cur.push_back(m);
      go();
      cur.pop_back();
    }
  };
  go();
  // the generator above can emit interior-1 shapes like [1,1,x]; filter
  std::vector<std::vector<long long>> ok;
  for (auto& v : out) {
    bool good = true;
    for (size_t j = 1; j + 1 < v.size(); ++j) good = good && v[j] != 1;
    if (good) ok.push_back(std::move(v));
  }
  std::sort(ok.begin(), ok.end());
  ok.erase(std::unique(ok.begin(), ok.end()), ok.end());
  return ok;
}

bool chain_labels_before(const std::vector<long long>& a, const std::vector<long long>& b);

struct Shell {
  std::vector<std::vector<long long>> chains;  // canonical descending order
  bool fat_min = false, fat_max = false;
  long long genus = 0;
};

bool chain_labels_before(const std::vector<long long>& a, const std::vector<long long>& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t s = 0; s < n; ++s)
    if (a[s] != b[s]) return a[s] > b[s];
  return a.size() > b.size();
}

}  // namespace

std::vector<ExtendedGraph> enumerate_graphs(const EnumerateBounds& b) {
  std::vector<ExtendedGraph> out;
  std::set<std::string> seen;
  auto shapes = chain_label_shapes(b.max_edges, b.max_label);
  // canonical chain order is descending; keep the shape list in that order
  // so shells are built monotonically
  std::sort(shapes.begin(), shapes.end(), chain_labels_before);

  // assemble shells: multisets of chains in canonical order
  std::vector<Shell> shells;
  std::function<void(std::vector<std::vector<long long>>&, size_t, size_t)> build =
      [&](std::vector<std::vector<long long>>& acc, size_t start, size_t used) {
        if (acc.size() >= 2) {
          for (int fm = 0; fm <= 1; ++fm)
            for (int fx = 0; fx <= 1; ++fx) {
              int fat = fm + fx;
              if (fat == 0 && acc.size() != 2) continue;
              bool ok = true;
              size_t nontrivial = 0;
              for (const auto& c : acc) {
                if (fm && c.front() != 1) ok = false;
                if (fx && c.back() != 1) ok = false;
                if (!(c.size() == 1 && c[0] == 1)) ++nontrivial;
              }
              if (fat == 1 && fm) continue;  // single surface sits at the top
              for (size_t i = 2; ok && i < acc.size(); ++i)
                if (fat <= 1 && acc[i].front() != 1) ok = false;
              size_t trivial = acc.size() - nontrivial;
              size_t want = nontrivial >= 2 ? 0 : 2 - nontrivial;
              if (trivial > 0 && fat == 0) ok = false;
              if (trivial != want) ok = false;
              if (!fm && !fx && std::gcd(acc[0].front(), acc[1].front()) != 1) ok = false;
              if (!ok) continue;
              long long gmax = fat == 2 ? b.max_genus : 0;
              for (long long g = 0; g <= gmax; ++g) shells.push_back({acc, fm == 1, fx == 1, g});
            }
        }
        for (size_t s = start; s < shapes.size(); ++s) {
          if (used + shapes[s].size() > b.max_edges) continue;
          if (!acc.empty() && chain_labels_before(shapes[s], acc.back())) continue;
          acc.push_back(shapes[s]);
          build(acc, s, used + shapes[s].size());
          acc.pop_back();
        }
      };
  std::vector<std::vector<long long>> acc;
  build(acc, 0, 0);

  // rational grid for heights, lengths, areas
  std::vector<Rat> grid;
  for (long long k = 1; k <= b.grid_span * b.max_denominator; ++k)
    grid.push_back(Rat(k, b.max_denominator));

  for (const auto& shell : shells) {
    const size_t k = shell.chains.size();
    Rat sum_e;  // sum of e_p over interior points, fixed by the labels
    for (const auto& c : shell.chains)
      for (size_t j = 0; j + 1 < c.size(); ++j) sum_e += Rat(1, c[j] * c[j + 1]);

    Rat emin_fixed, emax_fixed;
    if (!shell.fat_min) emin_fixed = -Rat(1, shell.chains[0].front() * shell.chains[1].front());
    if (!shell.fat_max) emax_fixed = -Rat(1, shell.chains[0].back() * shell.chains[1].back());
    if (!shell.fat_min && !shell.fat_max && emin_fixed + emax_fixed != -sum_e) continue;
    if (shell.fat_min != shell.fat_max) {
      // the surface side must come out integral
      Rat other = shell.fat_max ? -sum_e - emin_fixed : -sum_e - emax_fixed;
      if (!other.is_integer()) continue;
    }

    // per-chain height compositions for a given total height
    auto chain_options = [&](const std::vector<long long>& labels, const Rat& h) {
      // returns (weighted vertex sum, lengths) pairs
      std::vector<std::pair<Rat, std::vector<Rat>>> opts;
      size_t l = labels.size();
      std::vector<Rat> lens(l);
      std::function<void(size_t, Rat, Rat)> go = [&](size_t j, Rat used, Rat wsum) {
        if (j + 1 == l) {
          Rat last = h - used;
          if (!last.is_positive()) return;
          // last length must sit on the grid as well
          Rat scaled = last * Rat(b.max_denominator);
          if (!scaled.is_integer() || scaled.num() > BigInt(b.grid_span * b.max_denominator)) return;
          lens[j] = last;
          opts.emplace_back(wsum, lens);
          return;
        }
        for (const Rat& v : grid) {
          Rat nu = used + v;
          if (nu >= h) continue;
          lens[j] = v;
          Rat ep = Rat(1, labels[j] * labels[j + 1]);
          go(j + 1, nu, wsum + nu * ep);
        }
      };
      if (l == 1) {
        // a single edge spans the whole height
        Rat scaled = h * Rat(b.max_denominator);
        if (scaled.is_integer() && scaled.num() <= BigInt(b.grid_span * b.max_denominator))
          opts.emplace_back(Rat(0), std::vector<Rat>{h});
      } else {
        go(0, Rat(0), Rat(0));
      }
      return opts;
    };

    auto try_assemble = [&](const Rat& h, const Rat& amin, const Rat& amax, const Rat& target_S) {
      // pick per-chain compositions whose weighted sums add to target_S
      std::vector<std::vector<std::pair<Rat, std::vector<Rat>>>> opts;
      for (const auto& c : shell.chains) {
        opts.push_back(chain_options(c, h));
        if (opts.back().empty()) return;
      }
      std::vector<size_t> pick(k, 0);
      std::function<void(size_t, Rat)> go = [&](size_t i, Rat acc_S) {
        if (acc_S > target_S) return;
        if (i == k) {
          if (acc_S != target_S) return;
          ExtendedGraph g;
          g.genus = shell.genus;
          g.min = {shell.fat_min, Rat(0), amin};
          g.max = {shell.fat_max, h, amax};
          for (size_t c = 0; c < k; ++c) {
            Chain ch;
            const auto& lens = opts[c][pick[c]].second;
            for (size_t j = 0; j < shell.chains[c].size(); ++j)
              ch.edges.push_back({shell.chains[c][j], lens[j]});
            g.chains.push_back(std::move(ch));
          }
          canonicalize(g);
          std::string key = canonical_key(g);
          if (seen.count(key)) return;
          if (!is_valid(g)) return;
          try {
            reduce_to_minimal(g);
          } catch (const Error&) {
            return;  // not realizable: keep it out of the corpus
          }
          seen.insert(key);
          out.push_back(std::move(g));
          return;
        }
        for (size_t s = 0; s < opts[i].size(); ++s) {
          pick[i] = s;
          go(i + 1, acc_S + opts[i][s].first);
        }
      };
      go(0, Rat(0));
    };

    for (const Rat& h : grid) {
      if (shell.fat_min && shell.fat_max) {
        for (const Rat& amin : grid)
          for (const Rat& amax : grid) {
            // integral e_min with 0 < S < h * sum_e
            // S = (e_min + sum_e) h + a_max - a_min
            Rat lo = (amin - amax) / h - sum_e;  // e_min > lo
            Rat hi = (amin - amax) / h;          // e_min < hi  (when sum_e > 0)
            if (sum_e.is_zero()) {
              // no interior points: S must be 0 exactly
              Rat emin = (amin - amax) / h;
              if (!emin.is_integer()) continue;
              try_assemble(h, amin, amax, Rat(0));
              continue;
            }
            BigInt e = floor_div(lo.num(), lo.den()) + BigInt(1);
            for (; Rat(e) < hi; e += BigInt(1)) {
              Rat S = (Rat(e) + sum_e) * h + amax - amin;
              try_assemble(h, amin, amax, S);
            }
          }
      } else if (shell.fat_max) {
        Rat emax = -sum_e - emin_fixed;
        for (const Rat& amax : grid) {
          // e_max h = a_max - S
          Rat S = amax - emax * h;
          if (S.is_negative() && !sum_e.is_zero()) continue;
          try_assemble(h, Rat(), amax, S);
        }
      } else {
        // no fixed surfaces
        Rat S = (emin_fixed + sum_e) * h;
        try_assemble(h, Rat(), Rat(), S);
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const ExtendedGraph& a, const ExtendedGraph& b2) {
    if (a.total_edges() != b2.total_edges()) return a.total_edges() < b2.total_edges();
    return canonical_key(a) < canonical_key(b2);
  });
  return out;
}

}  // namespace hamgraph
