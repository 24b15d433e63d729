#include <doctest.h>

#include <cstring>
#include <string>

#include "hamgraph.h"

namespace {

const char* kCp2_211 = R"({
  "genus": 0,
  "min": {"fat": false, "height": "0"},
  "max": {"fat": false, "height": "2"},
  "chains": [
    {"edges": [{"m": 2, "len": "2"}]},
    {"edges": [{"m": 1, "len": "1"}, {"m": 1, "len": "1"}]}
  ]
})";

struct Freed {
  char* p = nullptr;
  ~Freed() { hg_string_free(p); }
};

}  // namespace

TEST_CASE("c api: parse, serialize, equality") {
  Freed err;
  hg_graph* g = hg_graph_parse(kCp2_211, &err.p);
  REQUIRE(g != nullptr);
  Freed js;
  js.p = hg_graph_json(g);
  REQUIRE(js.p != nullptr);
  Freed err2;
  hg_graph* g2 = hg_graph_parse(js.p, &err2.p);
  REQUIRE(g2 != nullptr);
  CHECK(hg_graph_equal(g, g2) == 1);
  hg_graph* g3 = hg_graph_clone(g);
  CHECK(hg_graph_equal(g, g3) == 1);
  hg_graph_free(g3);
  hg_graph_free(g2);
  hg_graph_free(g);

  Freed err3;
  CHECK(hg_graph_parse("{ not json", &err3.p) == nullptr);
  CHECK(err3.p != nullptr);
}

TEST_CASE("c api: run operations") {
  Freed err;
  hg_graph* g = hg_graph_parse(kCp2_211, &err.p);
  REQUIRE(g != nullptr);

  Freed text, machine, err2;
  hg_status st = hg_run("validate", g, nullptr, nullptr, nullptr, &text.p, &machine.p, &err2.p);
  CHECK(st == HG_OK);
  CHECK(std::string(text.p).find("e_min=-1/2") != std::string::npos);
  CHECK(std::string(machine.p).find("\"ok\": true") != std::string::npos);

  Freed t2, m2, e2;
  st = hg_run("intersect", g, nullptr, nullptr, R"({"a":"tauh","b":"tauh"})", &t2.p, &m2.p, &e2.p);
  CHECK(st == HG_OK);
  CHECK(std::string(t2.p) == "4\n");

  Freed t3, m3, e3;
  st = hg_run("weights", g, nullptr, nullptr, nullptr, &t3.p, &m3.p, &e3.p);
  CHECK(st == HG_OK);

  // verdict-negative exit
  Freed t4, m4, e4;
  st = hg_run("obstruct", g, g, nullptr, nullptr, &t4.p, &m4.p, &e4.p);
  CHECK(st == HG_FAIL);

  // usage error
  Freed t5, m5, e5;
  st = hg_run("no-such-op", g, nullptr, nullptr, nullptr, &t5.p, &m5.p, &e5.p);
  CHECK(st == HG_USAGE);
  CHECK(e5.p != nullptr);

  hg_graph_free(g);
  CHECK(std::string(hg_version()).find("hamgraph") == 0);
}
