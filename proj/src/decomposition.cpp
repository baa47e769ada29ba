#include "sympow/decomposition.hpp"

#include <algorithm>
#include <bit>

namespace sympow {

bool subset_less(VertexSet a, VertexSet b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  const VertexSet diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

std::vector<std::size_t> elements(VertexSet s) {
  std::vector<std::size_t> out;
  while (s) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

VertexSet make_set(std::span<const std::size_t> elems) {
  VertexSet s = 0;
  for (auto e : elems) {
    if (e >= kMaxSetVars) throw SizeGuardError("vertex index exceeds 63");
    s |= VertexSet{1} << e;
  }
  return s;
}

Clutter to_clutter(const MonomialIdeal& ideal) {
  require_square_free(ideal, "to_clutter");
  Clutter c;
  c.num_vertices = ideal.num_vars();
  if (ideal.is_unit()) {
    c.unit = true;
    c.edges.push_back(0);
    return c;
  }
  for (const auto& g : ideal.generators()) c.edges.push_back(g.support());
  // Canonical monomial order restricted to square-free monomials is subset_less.
  return c;
}

namespace {

// Keep only inclusion-minimal sets; input and output in canonical order.
std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), subset_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (auto s : sets) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [s](VertexSet k) { return (k & ~s) == 0; });
    if (!redundant) kept.push_back(s);
  }
  return kept;
}

}  // namespace

std::vector<VertexSet> minimal_transversals(std::span<const VertexSet> edges, const Limits& limits) {
  std::vector<VertexSet> family{0};
  for (auto edge : edges) {
    std::vector<VertexSet> next;
    next.reserve(family.size() * 2);
    for (auto t : family) {
      if (t & edge) {
        next.push_back(t);
        continue;
      }
      for (VertexSet rest = edge; rest; rest &= rest - 1) next.push_back(t | (rest & (~rest + 1)));
    }
    family = minimal_sets(std::move(next));
    if (family.size() > limits.max_primes) {
      throw SizeGuardError("more than " + std::to_string(limits.max_primes) + " minimal transversals");
    }
  }
  return family;
}

std::vector<VertexSet> minimal_primes(const MonomialIdeal& ideal, const Limits& limits) {
  require_square_free(ideal, "minimal_primes");
  if (ideal.is_zero()) throw ValidationError("minimal_primes: the zero ideal has no minimal monomial primes");
  if (ideal.is_unit()) throw ValidationError("minimal_primes: the unit ideal has no minimal primes");
  const Clutter c = to_clutter(ideal);
  return minimal_transversals(c.edges, limits);
}

std::size_t height(const MonomialIdeal& ideal, const Limits& limits) {
  std::size_t best = ideal.num_vars();
  for (auto p : minimal_primes(ideal, limits)) best = std::min<std::size_t>(best, std::popcount(p));
  return best;
}

std::size_t big_height(const MonomialIdeal& ideal, const Limits& limits) {
  std::size_t best = 0;
  for (auto p : minimal_primes(ideal, limits)) best = std::max<std::size_t>(best, std::popcount(p));
  return best;
}

namespace {

void min_cover_search(std::span<const VertexSet> edges, VertexSet chosen, std::size_t size, std::size_t& best) {
  if (size >= best) return;
  auto uncovered = std::find_if(edges.begin(), edges.end(), [chosen](VertexSet e) { return (e & chosen) == 0; });
  if (uncovered == edges.end()) {
    best = size;
    return;
  }
  for (VertexSet rest = *uncovered; rest; rest &= rest - 1) {
    min_cover_search(edges, chosen | (rest & (~rest + 1)), size + 1, best);
  }
}

}  // namespace

std::size_t min_transversal_size(std::span<const VertexSet> edges) {
  std::size_t best = kMaxSetVars + 1;
  min_cover_search(edges, 0, 0, best);
  return best;
}

}  // namespace sympow
