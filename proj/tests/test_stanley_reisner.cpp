#include <doctest.h>

#include <bit>
#include <random>

#include "oracles.hpp"
#include "sympow/decomposition.hpp"
#include "sympow/stanley_reisner.hpp"

using namespace sympow;
using oracle::square_free;

namespace {

VertexSet set(std::initializer_list<std::size_t> e) {
  std::vector<std::size_t> v(e);
  return make_set(v);
}

SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<VertexSet> face(0, (VertexSet{1} << n) - 1);
  std::uniform_int_distribution<int> count(1, 5);
  std::vector<VertexSet> faces;
  for (int i = count(rng); i > 0; --i) faces.push_back(face(rng));
  return SimplicialComplex::from_faces(n, faces);
}

// Independence complexes of matroids are exactly the complexes whose every
// induced subcomplex is pure.
bool matroid_by_purity(const SimplicialComplex& c) {
  const auto n = c.num_vertices;
  for (VertexSet w = 0; w < (VertexSet{1} << n); ++w) {
    int size = -1;
    for (VertexSet s = w;; s = (s - 1) & w) {
      if (c.is_face(s)) {
        bool maximal = true;
        for (VertexSet rest = w & ~s; rest && maximal; rest &= rest - 1) {
          maximal = !c.is_face(s | (rest & (~rest + 1)));
        }
        if (maximal) {
          if (size >= 0 && size != std::popcount(s)) return false;
          size = std::popcount(s);
        }
      }
      if (s == 0) break;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("from_faces keeps facets in canonical order") {
  auto c = SimplicialComplex::from_faces(4, {set({0}), set({2, 3}), set({0, 1}), set({2, 3})});
  CHECK(c.facets == std::vector<VertexSet>{set({0, 1}), set({2, 3})});
  CHECK(c.is_face(set({1})));
  CHECK_FALSE(c.is_face(set({1, 2})));
  CHECK_THROWS_AS(SimplicialComplex::from_faces(2, {set({2})}), ValidationError);
}

TEST_CASE("Stanley-Reisner ideal") {
  // Two disjoint edges: every cross pair is a minimal non-face.
  auto c = SimplicialComplex::from_faces(4, {set({0, 1}), set({2, 3})});
  CHECK(stanley_reisner_ideal(c) == square_free(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  // Boundary of a triangle.
  auto boundary = SimplicialComplex::from_faces(3, {set({0, 1}), set({1, 2}), set({0, 2})});
  CHECK(stanley_reisner_ideal(boundary) == square_free(3, {{0, 1, 2}}));
  // Full simplex, the complex {{}}, and the empty complex.
  CHECK(stanley_reisner_ideal(SimplicialComplex::from_faces(3, {set({0, 1, 2})})).is_zero());
  CHECK(stanley_reisner_ideal(SimplicialComplex::from_faces(2, {0})) == MonomialIdeal::maximal(2));
  CHECK(stanley_reisner_ideal(SimplicialComplex{3, {}}).is_unit());
  CHECK_THROWS_AS(stanley_reisner_ideal(SimplicialComplex{25, {0}}), SizeGuardError);
}

TEST_CASE("Stanley-Reisner complex") {
  auto c = stanley_reisner_complex(square_free(3, {{0, 1}}));
  CHECK(c.facets == std::vector<VertexSet>{set({0, 2}), set({1, 2})});
  CHECK(stanley_reisner_complex(MonomialIdeal::zero(3)).facets == std::vector<VertexSet>{set({0, 1, 2})});
  CHECK_THROWS_AS(stanley_reisner_complex(MonomialIdeal::unit(3)), ValidationError);
  CHECK_THROWS_AS(stanley_reisner_complex(oracle::ideal(2, {{2, 0}})), ValidationError);
}

TEST_CASE("matroid predicate") {
  std::vector<VertexSet> pairs;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) pairs.push_back(set({i, j}));
  }
  CHECK(is_matroid(SimplicialComplex::from_faces(4, pairs)));

  auto two_edges = SimplicialComplex::from_faces(4, {set({0, 1}), set({2, 3})});
  auto failure = matroid_exchange_failure(two_edges);
  REQUIRE(failure);
  CHECK(failure->f == set({0, 1}));
  CHECK(failure->g == set({2, 3}));
  CHECK(failure->i == 0);
  CHECK(is_matroid(SimplicialComplex{3, {}}));
}

TEST_CASE("fano example") {
  auto I = fano_ideal();
  CHECK(I.size() == 28);
  CHECK(I.is_square_free());
  for (const auto& g : I.generators()) CHECK(g.degree() == 3);

  // The complex of the printed ideal has the seven lines as facets.
  auto c = fano_complex();
  const std::vector<VertexSet> lines{set({0, 1, 2}), set({0, 3, 6}), set({0, 4, 5}), set({1, 3, 5}),
                                     set({1, 4, 6}), set({2, 3, 4}), set({2, 5, 6})};
  CHECK(c.facets == lines);
  CHECK(stanley_reisner_ideal(c) == I);

  // Seven triangles pairwise meeting in one point are not a matroid complex.
  auto failure = matroid_exchange_failure(c);
  REQUIRE(failure);
  CHECK(failure->f == set({0, 1, 2}));
  CHECK(failure->g == set({0, 3, 6}));
  CHECK(failure->i == 1);
  CHECK_FALSE(matroid_by_purity(c));

  // The 28 supports are the bases of the Fano matroid.
  auto bases = SimplicialComplex::from_faces(7, oracle::supports(I));
  CHECK(bases.facets.size() == 28);
  CHECK(is_matroid(bases));
  CHECK(matroid_by_purity(bases));
}

TEST_CASE("property: minimal non-faces agree with subset enumeration") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    auto c = random_complex(rng, n);
    auto expected = oracle::minimal_nonfaces(n, c.facets);
    std::sort(expected.begin(), expected.end(), subset_less);
    auto ideal = stanley_reisner_ideal(c);
    REQUIRE(oracle::supports(ideal) == expected);
  }
}

TEST_CASE("property: round trips") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    auto c = random_complex(rng, n);
    REQUIRE(stanley_reisner_complex(stanley_reisner_ideal(c)) == c);
  }
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    auto I = oracle::random_square_free(rng, n, 6, 3);
    REQUIRE(stanley_reisner_ideal(stanley_reisner_complex(I)) == I);
  }
}

TEST_CASE("property: exchange check agrees with the purity characterization") {
  std::mt19937_64 rng(53);
  int matroids = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 5;
    auto c = random_complex(rng, n);
    const bool m = is_matroid(c);
    matroids += m;
    REQUIRE(m == matroid_by_purity(c));
  }
  CHECK(matroids > 0);
}
