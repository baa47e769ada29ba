#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sympow/error.hpp"
#include "sympow/monomial.hpp"
#include "sympow/rational_lp.hpp"

namespace sympow {

// Least degree of a minimal generator. Throws on the zero ideal.
std::uint64_t alpha(const MonomialIdeal& ideal);

// alpha(I^(m)) / m for m = 1..max_m.
std::vector<ExactRational> waldschmidt_sequence(const MonomialIdeal& ideal, unsigned max_m, const Limits& limits = {});

struct WaldschmidtResult {
  ExactRational value;
  std::vector<ExactRational> point;  // an optimal vertex of the symbolic polyhedron
};

/// min sum x_i over x >= 0 with sum_{i in C} x_i >= 1 for every minimal prime C,
/// solved exactly through its dual packing LP. For square-free ideals this is
/// the limit (and, by subadditivity of alpha(I^(m)), the infimum) of the sequence.
WaldschmidtResult waldschmidt_exact(const MonomialIdeal& ideal, const Limits& limits = {});

struct ResurgenceReport {
  std::uint64_t alpha = 0;
  ExactRational waldschmidt;
  ExactRational rho_lower;              // alpha / waldschmidt
  std::size_t rho_upper = 0;            // number of variables
  std::vector<std::pair<unsigned, unsigned>> failures;  // (n, m) with I^(n) not inside I^m, 1 <= m <= n <= N
  std::optional<ExactRational> empirical_max;            // max n/m over failures; a lower bound for rho
};

ResurgenceReport resurgence_report(const MonomialIdeal& ideal, unsigned max_n, const Limits& limits = {});

}  // namespace sympow
