#pragma once

#include <optional>
#include <span>

#include "sympow/error.hpp"
#include "sympow/monomial.hpp"

namespace sympow {

// Symbolic powers are defined here for square-free ideals only, as the
// intersection of the n-th powers of the minimal monomial primes. Every entry
// point throws ValidationError for non-square-free, zero or unit input.

bool symbolic_membership(const MonomialIdeal& ideal, const Monomial& m, unsigned n, const Limits& limits = {});
// Same test against precomputed minimal primes.
bool symbolic_membership(std::span<const VertexSet> primes, const Monomial& m, unsigned n);

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned n, const Limits& limits = {});
MonomialIdeal symbolic_power(std::span<const VertexSet> primes, std::size_t num_vars, unsigned n,
                             const Limits& limits = {});

/// Membership in the n-th differential power with characteristic-zero
/// semantics: every x^(m-b) with b <= m and |b| <= n-1 must lie in the ideal.
/// Works for any monomial ideal.
bool differential_membership(const MonomialIdeal& ideal, const Monomial& m, unsigned n);

struct EqualityResult {
  bool equal = true;
  // Canonically least minimal generator of I^(n) outside I^n.
  std::optional<Monomial> witness;
};

EqualityResult equals_ordinary(const MonomialIdeal& ideal, unsigned n, const Limits& limits = {});

struct ContainmentResult {
  bool contained = true;
  std::optional<Monomial> witness;
};

// I^(a) inside I^b; requires a >= b >= 1.
ContainmentResult containment(const MonomialIdeal& ideal, unsigned a, unsigned b, const Limits& limits = {});

}  // namespace sympow
