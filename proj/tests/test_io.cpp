#include <doctest.h>

#include "oracles.hpp"
#include "sympow/io.hpp"

using namespace sympow;
using nlohmann::json;

TEST_CASE("parse_ideal") {
  auto in = io::parse_ideal(json::parse(R"({"variables": ["x", "y"], "generators": [[2, 1], [1, 1], [0, 3]]})"));
  CHECK(in.variables == std::vector<std::string>{"x", "y"});
  CHECK(in.ideal == oracle::ideal(2, {{1, 1}, {0, 3}}));
  CHECK(io::to_json(in) == json::parse(R"({"variables": ["x", "y"], "generators": [[1, 1], [0, 3]]})"));

  auto zero = io::parse_ideal(json::parse(R"({"variables": ["x"], "generators": []})"));
  CHECK(zero.ideal.is_zero());
}

TEST_CASE("parse_ideal rejects malformed input") {
  const char* bad[] = {
      R"([])",
      R"({"generators": [[1]]})",
      R"({"variables": [], "generators": []})",
      R"({"variables": ["x", "x"], "generators": []})",
      R"({"variables": ["x", ""], "generators": []})",
      R"({"variables": ["x", 3], "generators": []})",
      R"({"variables": ["x", "y"], "generators": [[1]]})",
      R"({"variables": ["x", "y"], "generators": [[1, -1]]})",
      R"({"variables": ["x", "y"], "generators": [[1, 0.5]]})",
      R"({"variables": ["x"], "generators": [[4294967296]]})",
      R"({"variables": ["x"], "generators": 3})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(io::parse_ideal(json::parse(text)), ValidationError);
  }
}

TEST_CASE("parse_graph") {
  auto g = io::parse_graph(json::parse(R"({"vertices": 3, "edges": [[1, 0], [1, 2]]})"));
  CHECK(g.edges().size() == 2);
  CHECK(io::to_json(g) == json::parse(R"({"vertices": 3, "edges": [[0, 1], [1, 2]]})"));
  CHECK_THROWS_AS(io::parse_graph(json::parse(R"({"vertices": 0, "edges": []})")), ValidationError);
  CHECK_THROWS_AS(io::parse_graph(json::parse(R"({"vertices": 3, "edges": [[0, 3]]})")), ValidationError);
  CHECK_THROWS_AS(io::parse_graph(json::parse(R"({"vertices": 3, "edges": [[0, 0]]})")), ValidationError);
  CHECK_THROWS_AS(io::parse_graph(json::parse(R"({"vertices": 3, "edges": [[0, 1, 2]]})")), ValidationError);
  CHECK_THROWS_AS(io::parse_graph(json::parse(R"({"vertices": 65, "edges": []})")), ValidationError);
}

TEST_CASE("parse_complex") {
  auto c = io::parse_complex(json::parse(R"({"vertices": 3, "facets": [[0, 1], [0], [2]]})"));
  CHECK(io::to_json(c) == json::parse(R"({"vertices": 3, "facets": [[2], [0, 1]]})"));
  CHECK_THROWS_AS(io::parse_complex(json::parse(R"({"vertices": 2, "facets": [[2]]})")), ValidationError);
  CHECK_THROWS_AS(io::parse_complex(json::parse(R"({"vertices": 2, "facets": [1]})")), ValidationError);
}

TEST_CASE("rational serialization") {
  CHECK(io::to_json(ExactRational(3, 2)) == json::parse(R"({"num": 3, "den": 2})"));
  CHECK(io::to_json(ExactRational(-4, 6)) == json::parse(R"({"num": -2, "den": 3})"));
  ExactRational big = ExactRational(1) / boost::multiprecision::pow(boost::multiprecision::cpp_int(10), 30);
  CHECK(io::to_json(big)["den"] == "1000000000000000000000000000000");
}

TEST_CASE("default names and files") {
  CHECK(io::default_names(3) == std::vector<std::string>{"x0", "x1", "x2"});
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/ideal.json"), ValidationError);
  auto doc = io::read_json_file(SYMPOW_DATA_DIR "/triangle.json");
  CHECK(io::parse_ideal(doc).ideal.size() == 3);
}
