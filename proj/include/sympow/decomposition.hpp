#pragma once

#include <span>
#include <vector>

#include "sympow/error.hpp"
#include "sympow/monomial.hpp"

namespace sympow {

// Subsets in the order of their square-free monomials: smaller sets first,
// equal sizes compared by their sorted element lists.
bool subset_less(VertexSet a, VertexSet b);
std::vector<std::size_t> elements(VertexSet s);
VertexSet make_set(std::span<const std::size_t> elems);

/// The support hypergraph of a square-free monomial ideal.
struct Clutter {
  std::size_t num_vertices = 0;
  std::vector<VertexSet> edges;  // antichain, canonical order
  bool unit = false;             // the unit ideal: a single empty edge

  friend bool operator==(const Clutter&, const Clutter&) = default;
};

Clutter to_clutter(const MonomialIdeal& ideal);

// Inclusion-minimal vertex sets meeting every edge, canonically ordered.
// Berge's incremental dualization: edges are absorbed one at a time.
std::vector<VertexSet> minimal_transversals(std::span<const VertexSet> edges, const Limits& limits = {});

/// Minimal primes of a proper, nonzero square-free monomial ideal, each given
/// by the variable set of the monomial prime (x_i : i in C).
std::vector<VertexSet> minimal_primes(const MonomialIdeal& ideal, const Limits& limits = {});

std::size_t height(const MonomialIdeal& ideal, const Limits& limits = {});
std::size_t big_height(const MonomialIdeal& ideal, const Limits& limits = {});

// Size of a smallest transversal, found by branching on the vertices of an
// uncovered edge. Used where only the height is needed.
std::size_t min_transversal_size(std::span<const VertexSet> edges);

}  // namespace sympow
