#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympow/error.hpp"
#include "sympow/monomial.hpp"

namespace sympow {

enum class MinorTag : unsigned char { keep = 0, zero = 1, one = 2 };

// One tag per variable. Written as a string of 'k', '0', '1'.
struct MinorAssignment {
  std::vector<MinorTag> tags;

  static MinorAssignment keep_all(std::size_t num_vars) { return {std::vector<MinorTag>(num_vars, MinorTag::keep)}; }
  static MinorAssignment parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const MinorAssignment&, const MinorAssignment&) = default;
};

// Sets zero-tagged variables to 0 and one-tagged variables to 1. The result
// stays in the same ambient ring; a generator reduced to 1 gives the unit ideal.
MonomialIdeal minor(const MonomialIdeal& ideal, const MinorAssignment& assignment);

struct RegularSequence {
  std::size_t length = 0;
  std::vector<Monomial> witness;  // generators with pairwise disjoint supports
};

// Maximum number of generators with pairwise disjoint supports (a maximum
// matching of the clutter). Zero and unit ideals give 0.
RegularSequence max_regular_sequence(const MonomialIdeal& ideal);

// Zero and unit ideals are Koenig by convention.
bool is_koenig(const MonomialIdeal& ideal);
bool is_k_koenig(const MonomialIdeal& ideal, unsigned k);

struct MinorSearchResult {
  bool holds = true;
  // First failing assignment in the order keep < zero < one, variable 0 most significant.
  std::optional<MinorAssignment> counterexample;
};

MinorSearchResult has_packing_property(const MonomialIdeal& ideal, const Limits& limits = {});
MinorSearchResult is_k_packed(const MonomialIdeal& ideal, unsigned k, const Limits& limits = {});

}  // namespace sympow
