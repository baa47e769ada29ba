#include "sympow/stanley_reisner.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace sympow {

SimplicialComplex SimplicialComplex::from_faces(std::size_t num_vertices, std::vector<VertexSet> faces) {
  if (num_vertices > kMaxSetVars) throw SizeGuardError("complexes are limited to 64 vertices");
  const VertexSet all = num_vertices == kMaxSetVars ? ~VertexSet{0} : (VertexSet{1} << num_vertices) - 1;
  for (auto f : faces) {
    if (f & ~all) throw ValidationError("face mentions a vertex outside 0.." + std::to_string(num_vertices - 1));
  }
  // Largest first so every kept face is checked against possible supersets.
  std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) { return subset_less(b, a); });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<VertexSet> facets;
  for (auto f : faces) {
    if (std::none_of(facets.begin(), facets.end(), [f](VertexSet big) { return (f & ~big) == 0; })) facets.push_back(f);
  }
  std::sort(facets.begin(), facets.end(), subset_less);
  return {num_vertices, std::move(facets)};
}

bool SimplicialComplex::is_face(VertexSet s) const {
  return std::any_of(facets.begin(), facets.end(), [s](VertexSet f) { return (s & ~f) == 0; });
}

namespace {

// Next subset with the same popcount (Gosper's hack).
VertexSet next_same_size(VertexSet s) {
  const VertexSet c = s & (~s + 1);
  const VertexSet r = s + c;
  return (((r ^ s) >> 2) / c) | r;
}

}  // namespace

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
  const auto n = complex.num_vertices;
  if (n > kMaxComplexVertices) {
    throw SizeGuardError("stanley_reisner_ideal: more than " + std::to_string(kMaxComplexVertices) + " vertices");
  }
  if (complex.facets.empty()) return MonomialIdeal::unit(n);

  std::size_t max_facet = 0;
  for (auto f : complex.facets) max_facet = std::max<std::size_t>(max_facet, std::popcount(f));

  // A minimal non-face has at most max_facet + 1 elements.
  std::vector<VertexSet> nonfaces;
  const VertexSet limit = VertexSet{1} << n;
  for (std::size_t size = 1; size <= std::min(n, max_facet + 1); ++size) {
    for (VertexSet s = (VertexSet{1} << size) - 1; s < limit; s = next_same_size(s)) {
      if (std::any_of(nonfaces.begin(), nonfaces.end(), [s](VertexSet nf) { return (nf & ~s) == 0; })) continue;
      if (!complex.is_face(s)) nonfaces.push_back(s);
    }
  }
  return MonomialIdeal::square_free(n, nonfaces);
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal, const Limits& limits) {
  require_square_free(ideal, "stanley_reisner_complex");
  if (ideal.is_unit()) throw ValidationError("stanley_reisner_complex: the unit ideal is not proper");
  const auto n = ideal.num_vars();
  const VertexSet all = n == kMaxSetVars ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  if (ideal.is_zero()) return {n, {all}};
  std::vector<VertexSet> facets;
  for (auto p : minimal_primes(ideal, limits)) facets.push_back(all & ~p);
  std::sort(facets.begin(), facets.end(), subset_less);
  return {n, std::move(facets)};
}

std::optional<ExchangeFailure> matroid_exchange_failure(const SimplicialComplex& complex) {
  const auto& facets = complex.facets;
  auto is_facet = [&](VertexSet s) { return std::binary_search(facets.begin(), facets.end(), s, subset_less); };
  for (auto f : facets) {
    for (auto g : facets) {
      for (auto i : elements(f)) {
        const VertexSet base = f & ~(VertexSet{1} << i);
        bool found = false;
        for (VertexSet rest = g; rest && !found; rest &= rest - 1) found = is_facet(base | (rest & (~rest + 1)));
        if (!found) return ExchangeFailure{f, g, i};
      }
    }
  }
  return std::nullopt;
}

MonomialIdeal fano_ideal() {
  // Variable indices are 1-based here, matching x1..x7.
  static constexpr std::array<std::array<int, 3>, 28> kCubics{{
      {4, 2, 1}, {4, 3, 1}, {4, 3, 2}, {5, 2, 1}, {5, 3, 1}, {5, 3, 2}, {5, 4, 1},
      {5, 4, 2}, {6, 2, 1}, {6, 3, 1}, {6, 3, 2}, {6, 4, 1}, {6, 4, 3}, {6, 5, 2},
      {6, 5, 3}, {6, 5, 4}, {7, 2, 1}, {7, 3, 1}, {7, 3, 2}, {7, 4, 2}, {7, 4, 3},
      {7, 5, 1}, {7, 5, 3}, {7, 5, 4}, {7, 6, 1}, {7, 6, 2}, {7, 6, 4}, {7, 6, 5},
  }};
  std::vector<Monomial> gens;
  for (const auto& cubic : kCubics) {
    std::vector<Exponent> e(7, 0);
    for (int v : cubic) e[static_cast<std::size_t>(v - 1)] = 1;
    gens.emplace_back(std::move(e));
  }
  return minimalize(7, std::move(gens));
}

SimplicialComplex fano_complex() { return stanley_reisner_complex(fano_ideal()); }

}  // namespace sympow
