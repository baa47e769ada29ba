#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sympow/decomposition.hpp"
#include "sympow/monomial.hpp"

namespace sympow {

/// A simplicial complex given by its facets (an antichain, canonically ordered).
/// No facets is the empty complex; the single facet {} is the complex {{}}.
struct SimplicialComplex {
  std::size_t num_vertices = 0;
  std::vector<VertexSet> facets;

  // Drops non-maximal faces and sorts. Throws on out-of-range vertices.
  static SimplicialComplex from_faces(std::size_t num_vertices, std::vector<VertexSet> faces);
  bool is_face(VertexSet s) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

inline constexpr std::size_t kMaxComplexVertices = 24;

// Minimal non-faces, found by increasing cardinality. The empty complex maps
// to the unit ideal, the full simplex to the zero ideal.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

// Facets are the complements of the minimal primes; the zero ideal gives the full simplex.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal, const Limits& limits = {});

struct ExchangeFailure {
  VertexSet f = 0;
  VertexSet g = 0;
  std::size_t i = 0;
};

// Facet exchange check over facet pairs (F, G) in canonical order and i in F
// increasing; reports the first failure.
std::optional<ExchangeFailure> matroid_exchange_failure(const SimplicialComplex& complex);
inline bool is_matroid(const SimplicialComplex& complex) { return !matroid_exchange_failure(complex); }

// The 28 square-free cubics of the Fano example, over x1..x7 (indices 0..6),
// and the complex derived from them.
MonomialIdeal fano_ideal();
SimplicialComplex fano_complex();

}  // namespace sympow
