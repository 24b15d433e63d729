#include "hamgraph.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/graph.hpp"
#include "core/reports.hpp"

using hamgraph::ExtendedGraph;

struct hg_graph {
  ExtendedGraph g;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

}  // namespace

extern "C" {

const char* hg_version(void) { return "hamgraph 1.0.0"; }

hg_graph* hg_graph_parse(const char* json_text, char** err) {
  if (!json_text) {
    set_err(err, "null input");
    return nullptr;
  }
  try {
    auto* h = new hg_graph{hamgraph::parse_graph(json_text)};
    return h;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return nullptr;
  }
}

hg_graph* hg_graph_clone(const hg_graph* g) { return g ? new hg_graph{g->g} : nullptr; }

void hg_graph_free(hg_graph* g) { delete g; }

char* hg_graph_json(const hg_graph* g) {
  if (!g) return nullptr;
  return dup_string(hamgraph::graph_to_json(g->g));
}

int hg_graph_equal(const hg_graph* a, const hg_graph* b) {
  if (!a || !b) return 0;
  return hamgraph::canonical_equal(a->g, b->g) ? 1 : 0;
}

hg_status hg_run(const char* op, const hg_graph* a, const hg_graph* b, const char* extra,
                 const char* args_json, char** text, char** machine, char** err) {
  if (!op) {
    set_err(err, "null operation");
    return HG_USAGE;
  }
  try {
    std::vector<std::string> inputs;
    if (extra) {
      inputs.push_back(extra);
    } else {
      if (a) inputs.push_back(hamgraph::graph_to_json(a->g));
      if (b) inputs.push_back(hamgraph::graph_to_json(b->g));
    }
    nlohmann::json args = nlohmann::json::object();
    if (args_json && *args_json) args = nlohmann::json::parse(args_json);
    hamgraph::api::OpResult r = hamgraph::api::run_op(op, inputs, args);
    if (text) *text = dup_string(r.text);
    if (machine) *machine = dup_string(r.machine.dump(2));
    return r.exit_code == 0 ? HG_OK : HG_FAIL;
  } catch (const hamgraph::Error& e) {
    set_err(err, std::string(e.code) + ": " + e.what());
    return e.code == "usage" ? HG_USAGE : HG_ERROR;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return HG_ERROR;
  }
}

void hg_string_free(char* s) { std::free(s); }

}  // extern "C"
