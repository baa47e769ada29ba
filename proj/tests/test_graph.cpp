#include <doctest.h>

#include "oracles.hpp"
#include "sympow/graph.hpp"
#include "sympow/symbolic.hpp"

using namespace sympow;
using oracle::mono;

TEST_CASE("graph construction") {
  Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
  CHECK(g.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), ValidationError);
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), ValidationError);
  CHECK(Graph::complete(4).edges().size() == 6);
}

TEST_CASE("edge ideal") {
  auto I = edge_ideal(Graph(4, {{0, 1}, {2, 3}}));
  CHECK(I == oracle::square_free(4, {{0, 1}, {2, 3}}));
  CHECK_THROWS_AS(edge_ideal(Graph(3, {})), ValidationError);
}

TEST_CASE("odd girth and thresholds of cycles") {
  for (std::size_t n = 3; n <= 9; ++n) {
    auto c = Graph::cycle(n);
    CHECK(is_bipartite(c) == (n % 2 == 0));
    if (n % 2) {
      CHECK(odd_girth(c) == n);
      CHECK(equality_threshold(c) == (n + 1) / 2);
    } else {
      CHECK_FALSE(odd_girth(c));
      CHECK_FALSE(equality_threshold(c));
    }
  }
  CHECK(odd_girth(Graph::complete(5)) == 3);
  CHECK_THROWS_AS(equality_threshold(Graph(3, {})), ValidationError);
}

TEST_CASE("cycle witnesses") {
  auto c5 = Graph::cycle(5);
  CHECK(find_cycle(c5, 5) == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK_FALSE(find_cycle(c5, 3));
  CHECK(odd_cycle_witness(c5, 3) == mono({1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(odd_cycle_witness(c5, 2), ValidationError);
  CHECK_THROWS_AS(odd_cycle_witness(c5, 1), ValidationError);

  // Two triangles sharing vertex 2; the least is 0-1-2.
  Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(find_cycle(bowtie, 3) == std::vector<std::size_t>{0, 1, 2});
  CHECK(odd_cycle_witness(bowtie, 2) == mono({1, 1, 1, 0, 0}));

  // K4: from 0 the smaller neighbor comes first.
  CHECK(find_cycle(Graph::complete(4), 3) == std::vector<std::size_t>{0, 1, 2});
  CHECK(find_cycle(Graph::complete(4), 4) == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("odd cycle witness lies in the symbolic but not the ordinary power") {
  for (std::size_t t = 2; t <= 4; ++t) {
    auto g = Graph::cycle(2 * t - 1);
    auto I = edge_ideal(g);
    auto w = odd_cycle_witness(g, t);
    CHECK(symbolic_membership(I, w, static_cast<unsigned>(t)));
    CHECK_FALSE(power_membership(I, w, static_cast<unsigned>(t)));
  }
}

TEST_CASE("verify_threshold") {
  auto report = verify_threshold(Graph::cycle(5), 4);
  CHECK(report.odd_girth == 5u);
  CHECK(report.threshold == 3u);
  REQUIRE(report.rows.size() == 4);
  CHECK(report.all_agree);
  CHECK(report.rows[0].computed_equal);
  CHECK(report.rows[1].computed_equal);
  CHECK_FALSE(report.rows[2].computed_equal);
  CHECK(report.rows[2].witness);
  CHECK_THROWS_AS(verify_threshold(Graph::cycle(5), 7), SizeGuardError);
  CHECK_THROWS_AS(verify_threshold(Graph::cycle(5), 0), ValidationError);
}

TEST_CASE("property: odd girth agrees with simple-cycle enumeration") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : oracle::graphs_up_to_iso(n)) {
      const auto og = oracle::odd_girth(g);
      REQUIRE(odd_girth(g) == og);
      REQUIRE(is_bipartite(g) == !og.has_value());
      if (og) {
        auto c = find_cycle(g, *og);
        REQUIRE(c);
        REQUIRE(c->size() == *og);
        for (std::size_t i = 0; i < c->size(); ++i) REQUIRE(g.adjacent((*c)[i], (*c)[(i + 1) % c->size()]));
      }
    }
  }
}

TEST_CASE("graph classes up to isomorphism") {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(oracle::graphs_up_to_iso(n).size() == expected[n - 1]);
}
