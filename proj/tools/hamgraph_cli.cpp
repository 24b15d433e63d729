// Command-line front end.  All functionality goes through the C API in
// hamgraph.h; this file only handles argument parsing and file IO.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hamgraph.h"

namespace {

struct Options {
  bool machine = false;
  bool quiet = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    std::exit(2);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Freed {
  char* p = nullptr;
  ~Freed() { hg_string_free(p); }
};

int run(const Options& opt, const std::string& op, const std::vector<std::string>& graph_files,
        const std::string& extra_file, const std::string& args_json) {
  std::vector<hg_graph*> graphs;
  for (const auto& f : graph_files) {
    Freed err;
    hg_graph* g = hg_graph_parse(slurp(f).c_str(), &err.p);
    if (!g) {
      std::cerr << "error: " << f << ": " << (err.p ? err.p : "parse failure") << "\n";
      for (auto* h : graphs) hg_graph_free(h);
      return 2;
    }
    graphs.push_back(g);
  }
  std::string extra;
  if (!extra_file.empty()) extra = slurp(extra_file);

  Freed text, machine, err;
  hg_status st = hg_run(op.c_str(), graphs.size() > 0 ? graphs[0] : nullptr,
                        graphs.size() > 1 ? graphs[1] : nullptr,
                        extra_file.empty() ? nullptr : extra.c_str(), args_json.c_str(), &text.p,
                        &machine.p, &err.p);
  for (auto* h : graphs) hg_graph_free(h);
  if (st == HG_USAGE || st == HG_ERROR) {
    std::cerr << "error: " << (err.p ? err.p : "unknown") << "\n";
    return st == HG_USAGE ? 2 : 1;
  }
  if (!opt.quiet) {
    if (opt.machine && machine.p)
      std::cout << machine.p << "\n";
    else if (text.p)
      std::cout << text.p;
  }
  return st == HG_OK ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of Hamiltonian circle actions on symplectic 4-manifolds"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--machine", opt.machine, "emit machine-readable JSON");
  app.add_flag("--quiet", opt.quiet, "suppress output; exit code only");

  struct Sub {
    std::string op;
    std::vector<std::string> graphs;
    std::string extra;
    std::string site, target, cls, a, b, kind, lambda;
    long long chain = 1, p = 0, q = 0, genus = 0, parity = 0, qmax = 8;
    long long max_edges = 4, max_label = 2, max_den = 1, max_genus = 2;
  };
  std::vector<std::shared_ptr<Sub>> subs;

  auto add = [&](const std::string& name, const std::string& help, int ngraphs,
                 bool takes_extra = false) {
    auto sub = std::make_shared<Sub>();
    sub->op = name;
    subs.push_back(sub);
    CLI::App* s = app.add_subcommand(name, help);
    s->add_flag("--machine", opt.machine, "emit machine-readable JSON");
    s->add_flag("--quiet", opt.quiet, "suppress output; exit code only");
    if (takes_extra)
      s->add_option("input", sub->extra, "algebraic input file")->required();
    else if (ngraphs == 1)
      s->add_option("graph", sub->graphs, "graph file")->expected(1)->required();
    else if (ngraphs == 2)
      s->add_option("graphs", sub->graphs, "graph files")->expected(2)->required();
    return s;
  };

  add("validate", "check the graph invariants and report e_min / e_max", 1);
  add("extend", "convert decorated input to the extended graph", 1);
  add("dull", "print the dull graph", 1);
  add("weights", "isotropy weight multiset", 1);
  {
    auto* s = add("ranks", "equivariant cohomology ranks", 1);
    s->add_option("--qmax", subs.back()->qmax, "largest degree to print");
  }
  {
    auto* s = add("blowup", "equivariant blowup at a site", 1);
    s->add_option("--site", subs.back()->site, "interior:i=I,j=J | extreme:min|max | fat:min|max")
        ->required();
    s->add_option("--lambda", subs.back()->lambda, "blowup size (rational)")->required();
  }
  {
    auto* s = add("blowdown", "contract a -1 feature", 1);
    s->add_option("--target", subs.back()->target, "edge:i=I,j=J | fat:min|max")->required();
  }
  add("reduce", "blow down to a minimal model", 1);
  add("presentation", "generators-and-relations presentation", 1);
  add("pit", "the class pi*(t)", 1);
  {
    auto* s = add("intersect", "intersection number of two degree-2 classes", 1);
    s->add_option("--a", subs.back()->a, "first class")->required();
    s->add_option("--b", subs.back()->b, "second class")->required();
  }
  {
    auto* s = add("restrict", "restriction to the fixed components", 1);
    s->add_option("--class", subs.back()->cls, "class or product expression")->required();
  }
  {
    auto* s = add("integrate", "localization integral of a class expression", 1);
    s->add_option("--class", subs.back()->cls, "class or product expression")->required();
  }
  {
    auto* s = add("zerolength", "number of fixed components where a class vanishes", 1);
    s->add_option("--class", subs.back()->cls, "class expression")->required();
  }
  {
    auto* s = add("label", "the rational label of a class", 1);
    s->add_option("--class", subs.back()->cls, "class expression")->required();
  }
  {
    auto* s = add("flip", "full, symplectic, or partial flip", 1);
    s->add_option("--kind", subs.back()->kind, "full | symplectic | partial")->required();
    s->add_option("--chain", subs.back()->chain, "chain index for a partial flip");
  }
  add("dull-iso", "decide isomorphism of the dull graphs", 2);
  add("weak-iso", "decide weak isomorphism and factor it", 2);
  add("obstruct", "equivariant-diffeomorphism weight obstruction", 2);
  add("recover-dull", "rebuild the dull graph from algebraic data", 0, true);
  add("recover", "rebuild the decorated graph from algebraic data", 0, true);
  add("bounds", "finiteness constants and bounding box", 1);
  {
    auto* s = add("fiber", "fiber-class recognition in the ruled model", 0);
    s->add_option("--p", subs.back()->p)->required();
    s->add_option("--q", subs.back()->q)->required();
    s->add_option("--genus", subs.back()->genus)->required();
    s->add_option("--parity", subs.back()->parity, "0 trivial bundle, 1 twisted");
  }
  {
    auto* s = add("enumerate", "enumerate the bounded graph corpus", 0);
    s->add_option("--max-edges", subs.back()->max_edges)->required();
    s->add_option("--max-label", subs.back()->max_label)->required();
    s->add_option("--max-den", subs.back()->max_den)->required();
    s->add_option("--max-genus", subs.back()->max_genus);
  }
  {
    auto* s = add("sweep", "run the invariant sweeps over the corpus", 0);
    s->add_option("--max-edges", subs.back()->max_edges)->required();
    s->add_option("--max-label", subs.back()->max_label)->required();
    s->add_option("--max-den", subs.back()->max_den)->required();
    s->add_option("--max-genus", subs.back()->max_genus);
  }
  add("report", "validation, presentation, and invariant digest", 1);

  CLI11_PARSE(app, argc, argv);

  for (const auto& sub : subs) {
    CLI::App* s = app.get_subcommand(sub->op);
    if (!s->parsed()) continue;
    std::ostringstream args;
    args << "{";
    auto emit = [&args, first = true](const std::string& k, const std::string& v,
                                      bool quote = true) mutable {
      if (!first) args << ",";
      first = false;
      args << "\"" << k << "\":";
      if (quote) {
        args << "\"";
        for (char c : v) {
          if (c == '"' || c == '\\') args << '\\';
          args << c;
        }
        args << "\"";
      } else {
        args << v;
      }
    };
    if (!sub->site.empty()) emit("site", sub->site);
    if (!sub->lambda.empty()) emit("lambda", sub->lambda);
    if (!sub->target.empty()) emit("target", sub->target);
    if (!sub->cls.empty()) emit("class", sub->cls);
    if (!sub->a.empty()) emit("a", sub->a);
    if (!sub->b.empty()) emit("b", sub->b);
    if (!sub->kind.empty()) emit("kind", sub->kind);
    emit("chain", std::to_string(sub->chain), false);
    emit("p", std::to_string(sub->p), false);
    emit("q", std::to_string(sub->q), false);
    emit("genus", std::to_string(sub->genus), false);
    emit("parity", std::to_string(sub->parity), false);
    emit("qmax", std::to_string(sub->qmax), false);
    emit("max_edges", std::to_string(sub->max_edges), false);
    emit("max_label", std::to_string(sub->max_label), false);
    emit("max_den", std::to_string(sub->max_den), false);
    emit("max_genus", std::to_string(sub->max_genus), false);
    args << "}";
    return run(opt, sub->op, sub->graphs, sub->extra, args.str());
  }
  return 2;
}
