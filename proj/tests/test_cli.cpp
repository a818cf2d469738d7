#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eac/cli.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
  Json json;  // discarded when stdout is not JSON
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = eac::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  r.json = Json::parse(r.out, nullptr, false);
  return r;
}

const fs::path& scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "eac_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

const std::string& example_path() {
  static const std::string path = write_file(
      "running.json",
      R"({"type":"bases","n":5,"bases":[[1,2,4],[1,2,5],[1,3,4],[1,3,5],)"
      R"([2,3,4],[2,3,5],[2,4,5],[3,4,5]]})");
  return path;
}

struct EnvVar {
  explicit EnvVar(const char* name, const std::string& value) : name_(name) {
    setenv(name, value.c_str(), 1);
  }
  ~EnvVar() { unsetenv(name_); }
  const char* name_;
};

}  // namespace

TEST_CASE("validate reports the basic invariants") {
  RunResult r = run_cli({"validate", "--input", example_path()});
  REQUIRE(r.code == 0);
  REQUIRE_FALSE(r.json.is_discarded());
  CHECK(r.json["valid"] == true);
  CHECK(r.json["n"] == 5);
  CHECK(r.json["rank"] == 3);
  CHECK(r.json["num_bases"] == 8);
  CHECK(r.json["loops"] == Json::array());
  CHECK(r.json["coloops"] == Json::array());
}

TEST_CASE("the three input forms describe the same matroid") {
  std::string graph = write_file(
      "running_graph.json",
      R"({"type":"graph","vertices":4,)"
      R"("edges":[[1,2],[1,3],[2,3],[1,4],[2,4]]})");
  RunResult from_bases = run_cli({"tutte", "--input", example_path()});
  RunResult from_graph = run_cli({"tutte", "--input", graph});
  CHECK(from_bases.code == 0);
  CHECK(from_bases.out == from_graph.out);

  std::string uni =
      write_file("u32.json", R"({"type":"uniform","n":3,"k":2})");
  RunResult u = run_cli({"validate", "--input", uni});
  CHECK(u.json["num_bases"] == 3);

  // A custom ground order relabels nothing but reorders comparisons, and
  // the Tutte polynomial is order-invariant.
  std::string reordered = write_file(
      "running_reordered.json",
      R"({"type":"bases","n":5,"order":[4,2,5,1,3],)"
      R"("bases":[[1,2,4],[1,2,5],[1,3,4],[1,3,5],)"
      R"([2,3,4],[2,3,5],[2,4,5],[3,4,5]]})");
  RunResult t = run_cli({"tutte", "--input", reordered});
  CHECK(t.out == from_bases.out);
}

TEST_CASE("activity table output") {
  RunResult r = run_cli({"activity", "--input", example_path()});
  REQUIRE(r.code == 0);
  REQUIRE(r.json.size() == 8);
  // Second row in the word order of the bases: {1,2,5}.
  Json row = r.json[1];
  CHECK(row["basis"] == Json::array({1, 2, 5}));
  CHECK(row["ea"] == Json::array());
  CHECK(row["ep"] == Json::array({3, 4}));
  CHECK(row["ia"] == Json::array({1, 2}));
  CHECK(row["ip"] == Json::array({5}));
}

TEST_CASE("tutte output is the pinned coefficient list") {
  RunResult r = run_cli({"tutte", "--input", example_path()});
  REQUIRE(r.code == 0);
  Json expected = Json::parse(R"([
    {"i": 3, "j": 0, "c": 1},
    {"i": 2, "j": 0, "c": 2},
    {"i": 1, "j": 0, "c": 1},
    {"i": 1, "j": 1, "c": 2},
    {"i": 0, "j": 1, "c": 1},
    {"i": 0, "j": 2, "c": 1}
  ])");
  CHECK(r.json == expected);
}

TEST_CASE("complex output lists vertices and facets with barred copies "
          "as negatives") {
  RunResult act = run_cli({"complex", "--input", example_path(), "--which",
                           "act"});
  REQUIRE(act.code == 0);
  CHECK(act.json["vertices"] ==
        Json::array({1, 2, 3, 4, 5, -1, -2, -3, -4, -5}));
  REQUIRE(act.json["facets"].size() == 8);
  CHECK(act.json["facets"][0] == Json::array({1, 2, 3, 4, 5, -1, -2, -4}));
  CHECK(act.json["facets"][7] ==
        Json::array({3, 4, 5, -1, -2, -3, -4, -5}));

  RunResult red = run_cli({"complex", "--input", example_path(), "--which",
                           "act", "--reduced"});
  CHECK(red.json["facets"][0] == Json::array({1, 2, -2, -4}));

  RunResult in = run_cli({"complex", "--input", example_path(), "--which",
                          "in"});
  CHECK(in.json["vertices"] == Json::array({1, 2, 3, 4, 5}));
  CHECK(in.json["facets"][0] == Json::array({1, 2, 4}));
}

TEST_CASE("shell-check in word order reports restriction sets") {
  RunResult r = run_cli({"shell-check", "--input", example_path(), "--which",
                         "act"});
  REQUIRE(r.code == 0);
  CHECK(r.json["is_shelling"] == true);
  REQUIRE(r.json["restriction_sets"].size() == 8);
  CHECK(r.json["restriction_sets"][0] == Json::array());
  CHECK(r.json["restriction_sets"][1] == Json::array({-5}));
  CHECK(r.json["restriction_sets"][5] == Json::array({-2, -3, -5}));
  CHECK(r.json["restriction_sets"][7] == Json::array({-3, -4, -5}));
}

TEST_CASE("shell-check consumes explicit facet orders from a file") {
  // Extends the int order: shells the independence complex, breaks the
  // activity complex at its sixth facet.
  std::string order = write_file("control_int.json",
                                 R"([[1,2,4],[1,2,5],[1,3,4],[1,3,5],)"
                                 R"([2,4,5],[3,4,5],[2,3,4],[2,3,5]])");
  RunResult bad = run_cli({"shell-check", "--input", example_path(),
                           "--which", "act", "--order", "file:" + order});
  REQUIRE(bad.code == 0);
  CHECK(bad.json["is_shelling"] == false);
  CHECK(bad.json["failure_index"] == 5);
  CHECK(bad.json["failure_facet"] ==
        Json::array({3, 4, 5, -1, -2, -3, -4, -5}));

  RunResult good = run_cli({"shell-check", "--input", example_path(),
                            "--which", "in", "--order", "file:" + order});
  CHECK(good.json["is_shelling"] == true);

  std::string unknown = write_file("bad_order.json", R"([[1,2,3]])");
  RunResult err = run_cli({"shell-check", "--input", example_path(),
                           "--which", "in", "--order", "file:" + unknown});
  CHECK(err.code == 2);
  CHECK(err.json["error"] == "wrong-basis-set");
}

TEST_CASE("shell-check sweeps sampled extensions") {
  RunResult r = run_cli({"shell-check", "--input", example_path(), "--which",
                         "act", "--order", "sample-extint:50", "--seed", "9"});
  REQUIRE(r.code == 0);
  CHECK(r.json["order_kind"] == "extint");
  CHECK(r.json["orders_checked"] == 21);  // exhaustive: only 21 exist
  CHECK(r.json["all_shellings"] == true);

  RunResult in = run_cli({"shell-check", "--input", example_path(), "--which",
                          "in", "--order", "sample-int:40", "--seed", "11"});
  CHECK(in.json["all_shellings"] == true);
}

TEST_CASE("orders emits the Hasse diagram and reproducible extensions") {
  std::vector<std::string> args = {"orders",       "--input",
                                   example_path(), "--kind",
                                   "ext",          "--extensions",
                                   "5",            "--seed",
                                   "42"};
  RunResult a = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.json["kind"] == "ext");
  REQUIRE(a.json["bases"].size() == 8);
  CHECK(a.json["bases"][0] == Json::array({1, 2, 4}));
  CHECK(a.json["hasse"].size() > 0);
  REQUIRE(a.json.contains("extensions"));
  for (const auto& ext : a.json["extensions"]) CHECK(ext.size() == 8);

  RunResult b = run_cli(args);
  CHECK(a.out == b.out);

  RunResult plain = run_cli({"orders", "--input", example_path()});
  CHECK(plain.json["kind"] == "extint");
  CHECK_FALSE(plain.json.contains("extensions"));
}

TEST_CASE("hvector output") {
  RunResult in = run_cli({"hvector", "--input", example_path(), "--which",
                          "in"});
  REQUIRE(in.code == 0);
  CHECK(in.json["f"] == Json::array({1, 5, 10, 8}));
  CHECK(in.json["h"] == Json::array({1, 2, 3, 2}));
  CHECK(in.json["euler"] == 3);
  CHECK(in.json["euler_reduced"] == 2);

  RunResult act = run_cli({"hvector", "--input", example_path(), "--which",
                           "act"});
  CHECK(act.json["h"] == Json::array({1, 2, 3, 2, 0, 0, 0, 0, 0}));
  CHECK(act.json["euler_reduced"] == 0);

  RunResult red = run_cli({"hvector", "--input", example_path(), "--which",
                           "act", "--reduced"});
  CHECK(red.json["h"] == Json::array({1, 2, 3, 2, 0}));
  CHECK(red.json["euler_reduced"] == 0);
}

TEST_CASE("topology output is exactly one of two shapes") {
  RunResult c = run_cli({"topology", "--input", example_path()});
  CHECK(c.json == Json::parse(R"({"class":"contractible-u31"})"));

  std::string uni =
      write_file("u32_topo.json", R"({"type":"uniform","n":3,"k":2})");
  RunResult s = run_cli({"topology", "--input", uni});
  CHECK(s.json == Json::parse(R"({"class":"sphere","dim":1})"));
}

TEST_CASE("selftest recomputes every pinned value") {
  RunResult r = run_cli({"selftest"});
  REQUIRE(r.code == 0);
  CHECK(r.json["all_pass"] == true);
  for (const auto& row : r.json["checks"]) {
    CAPTURE(row["name"].get<std::string>());
    CHECK(row["pass"] == true);
  }
}

TEST_CASE("error handling and exit codes") {
  SUBCASE("unreadable file") {
    RunResult r = run_cli({"validate", "--input", "/nonexistent/file.json"});
    CHECK(r.code == 3);
    CHECK(r.json["error"] == "parse-error");
  }

  SUBCASE("malformed JSON") {
    std::string p = write_file("broken.json", "{nope");
    RunResult r = run_cli({"validate", "--input", p});
    CHECK(r.code == 3);
    CHECK(r.json["error"] == "parse-error");
  }

  SUBCASE("unknown matroid type") {
    std::string p = write_file("mystery.json", R"({"type":"mystery"})");
    CHECK(run_cli({"validate", "--input", p}).code == 3);
  }

  SUBCASE("exchange axiom violation is a domain error") {
    std::string p = write_file(
        "notamatroid.json",
        R"({"type":"bases","n":4,"bases":[[1,2],[3,4]]})");
    RunResult r = run_cli({"validate", "--input", p});
    CHECK(r.code == 2);
    CHECK(r.json["error"] == "exchange-axiom-violated");
    CHECK(r.json.contains("detail"));
  }

  SUBCASE("bad order specification") {
    RunResult r = run_cli({"shell-check", "--input", example_path(),
                           "--which", "in", "--order", "sample-both:3"});
    CHECK(r.code == 3);
  }

  SUBCASE("usage errors") {
    CHECK(run_cli({"no-such-command"}).code == 3);
    CHECK(run_cli({"validate"}).code == 3);  // missing --input
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"complex", "--input", example_path(), "--which",
                   "bogus"})
              .code == 3);
  }
}

TEST_CASE("the ground size cap is read from the environment") {
  SUBCASE("blocks oversized input") {
    EnvVar cap("MATROID_MAX_N", "4");
    RunResult r = run_cli({"validate", "--input", example_path()});
    CHECK(r.code == 2);
    CHECK(r.json["error"] == "ground-too-large");
  }

  SUBCASE("admits input at the cap") {
    EnvVar cap("MATROID_MAX_N", "5");
    CHECK(run_cli({"validate", "--input", example_path()}).code == 0);
  }

  SUBCASE("rejects garbage values") {
    EnvVar cap("MATROID_MAX_N", "many");
    CHECK(run_cli({"validate", "--input", example_path()}).code == 3);
  }

  SUBCASE("default admits ten-element ground sets") {
    std::string p =
        write_file("u10.json", R"({"type":"uniform","n":10,"k":2})");
    CHECK(run_cli({"validate", "--input", p}).code == 0);
  }
}
