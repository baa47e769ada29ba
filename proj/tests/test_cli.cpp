#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sympow/cli.hpp"

using nlohmann::json;
using sympow::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  json doc;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  Result r{code, out.str(), nullptr};
  r.doc = json::parse(r.out);
  return r;
}

std::string data(const std::string& name) { return std::string(SYMPOW_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("sympow_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("equal on the triangle") {
  auto r = call({"equal", "--ideal", data("triangle.json"), "-n", "2"});
  CHECK(r.code == 0);
  CHECK(r.doc["equal"] == false);
  CHECK(r.doc["witness"] == json::parse("[1, 1, 1]"));
  auto one = call({"equal", "--ideal", data("triangle.json"), "-n", "1"});
  CHECK(one.doc["equal"] == true);
  CHECK(one.doc["witness"].is_null());
}

TEST_CASE("ideal-valued subcommands keep the variable names") {
  auto r = call({"symbolic", "--ideal", data("triangle.json"), "-n", "2"});
  CHECK(r.code == 0);
  CHECK(r.doc["variables"] == json::parse(R"(["x", "y", "z"])"));
  CHECK(r.doc["generators"].size() == 4);
  auto p = call({"power", "--ideal", data("triangle.json"), "-n", "0"});
  CHECK(p.doc["generators"] == json::parse("[[0, 0, 0]]"));
  auto m = call({"minor", "--ideal", data("triangle.json"), "--assign", "1kk"});
  CHECK(m.doc["generators"] == json::parse("[[0, 1, 0], [0, 0, 1]]"));
}

TEST_CASE("fano") {
  auto e2 = call({"equal", "--ideal", data("fano.json"), "-n", "2"});
  auto e3 = call({"equal", "--ideal", data("fano.json"), "-n", "3"});
  CHECK(e2.code == 0);
  CHECK(e2.doc["equal"] == false);
  CHECK(e3.doc["equal"] == false);
  auto sr = call({"sr-complex", "--ideal", data("fano.json")});
  CHECK(sr.doc["facets"].size() == 7);
  auto m = call({"matroid", "--complex", data("fano_lines.json")});
  CHECK(m.doc["matroid"] == false);
  CHECK(m.doc["counterexample"] == json::parse(R"({"F": [0, 1, 2], "G": [0, 3, 6], "i": 1})"));
}

TEST_CASE("graph and clutter subcommands") {
  auto c5 = call({"edge-analyze", "--graph", data("c5.json"), "--verify", "3"});
  CHECK(c5.code == 0);
  CHECK(c5.doc["odd_girth"] == 5);
  CHECK(c5.doc["threshold"] == 3);
  CHECK(c5.doc["cycle"] == json::parse("[0, 1, 2, 3, 4]"));
  CHECK(c5.doc["verify"]["all_agree"] == true);
  auto c4 = call({"edge-analyze", "--graph", data("c4.json")});
  CHECK(c4.doc["bipartite"] == true);
  CHECK(c4.doc["threshold"].is_null());
  CHECK_FALSE(c4.doc.contains("verify"));

  CHECK(call({"koenig", "--ideal", data("c4_ideal.json")}).doc["koenig"] == true);
  auto k = call({"koenig", "--ideal", data("triangle.json"), "-k", "1"});
  CHECK(k.doc["koenig"] == false);
  CHECK(k.doc["k_koenig"] == true);
  CHECK(call({"packing", "--ideal", data("triangle.json")}).doc["counterexample"] == "kkk");
  CHECK(call({"kpacked", "--ideal", data("triangle.json"), "-k", "1"}).doc["k_packed"] == true);
}

TEST_CASE("asymptotic subcommands") {
  auto w = call({"waldschmidt", "--ideal", data("triangle.json"), "--sequence", "6"});
  CHECK(w.doc["waldschmidt"] == json::parse(R"({"num": 3, "den": 2})"));
  CHECK(w.doc["sequence"].size() == 6);
  CHECK(call({"alpha", "--ideal", data("triangle.json"), "-n", "2"}).doc["alpha"] == 3);
  CHECK(call({"alpha", "--ideal", data("triangle.json")}).doc["alpha"] == 2);
  auto r = call({"resurgence", "--ideal", data("triangle.json"), "-N", "3"});
  CHECK(r.doc["rho_lower"] == json::parse(R"({"num": 4, "den": 3})"));
  CHECK(r.doc["rho_upper"] == 3);
  auto sr = call({"sr-ideal", "--complex", data("two_edges_complex.json")});
  CHECK(sr.doc["variables"] == json::parse(R"(["x0", "x1", "x2", "x3"])"));
}

TEST_CASE("exit code 2 on parse and validation errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"equal", "--ideal", data("triangle.json")}).code == 2);
  CHECK(call({"equal", "--ideal", data("triangle.json"), "-n", "0"}).code == 2);
  CHECK(call({"equal", "--ideal", "/nonexistent.json", "-n", "2"}).code == 2);
  auto bad = call({"equal", "--ideal", temp_file("bad.json", "{not json"), "-n", "2"});
  CHECK(bad.code == 2);
  CHECK(bad.doc["error"]["kind"] == "invalid");
  auto nsf = call({"symbolic", "--ideal", temp_file("nsf.json", R"({"variables": ["x"], "generators": [[2]]})"), "-n",
                   "2"});
  CHECK(nsf.code == 2);
  CHECK(call({"contain", "--ideal", data("triangle.json"), "-a", "1", "-b", "2"}).code == 2);
  CHECK(call({"minor", "--ideal", data("triangle.json"), "--assign", "k1"}).code == 2);
  CHECK(call({"hunt", "--family", "quartics"}).code == 2);
  CHECK(call({"hunt", "-k", "5"}).code == 2);
  auto usage = call({"equal"});
  CHECK(usage.doc["error"]["kind"] == "usage");
}

TEST_CASE("exit code 3 on size guards") {
  auto r = call({"--max-symbolic-gens", "3", "symbolic", "--ideal", data("triangle.json"), "-n", "3"});
  CHECK(r.code == 3);
  CHECK(r.doc["error"]["kind"] == "size_guard");
  CHECK(call({"edge-analyze", "--graph", data("c5.json"), "--verify", "7"}).code == 3);
  CHECK(call({"--max-minors", "5", "packing", "--ideal", data("triangle.json")}).code == 3);
  CHECK(call({"--max-primes", "1", "waldschmidt", "--ideal", data("triangle.json")}).code == 3);
}

TEST_CASE("global limits may follow the subcommand") {
  CHECK(call({"symbolic", "--ideal", data("triangle.json"), "-n", "3", "--max-symbolic-gens", "3"}).code == 3);
}

TEST_CASE("hunt output is byte-identical across runs and job counts") {
  auto a = call({"hunt", "--seed", "42", "--count", "20"});
  auto b = call({"hunt", "--seed", "42", "--count", "20"});
  auto c = call({"hunt", "--seed", "42", "--count", "20", "--jobs", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.doc["instances"] == 20);
}
