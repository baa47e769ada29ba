#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sympow/clutter.hpp"
#include "sympow/error.hpp"
#include "sympow/monomial.hpp"

namespace sympow {

enum class HuntFamily { edge_ideals, cubic_ideals, general_squarefree };

HuntFamily parse_family(const std::string& name);
std::string family_name(HuntFamily family);

// Seeded search for ideals where "k-packed" and "I^(n) = I^n for all n <= k" disagree.
struct HuntConfig {
  unsigned num_vars = 6;
  unsigned max_generators = 8;
  unsigned k = 2;
  HuntFamily family = HuntFamily::general_squarefree;
  std::uint64_t seed = 42;
  unsigned instance_count = 100;
  unsigned min_support = 1;  // general_squarefree only
  unsigned max_support = 3;
  unsigned jobs = 1;

  void validate() const;
};

struct HuntInstance {
  std::size_t index = 0;
  MonomialIdeal ideal;
  bool k_packed = true;
  bool equal_up_to_k = true;
  std::optional<unsigned> first_unequal;
  std::optional<MinorAssignment> counterexample;
};

struct HuntReport {
  HuntConfig config;
  std::size_t instances = 0;
  std::size_t redrawn = 0;
  std::size_t both_true = 0;
  std::size_t both_false = 0;
  std::vector<HuntInstance> disagreements;
};

// Instance `index` of the stream; depends only on (config, index).
MonomialIdeal draw_instance(const HuntConfig& config, std::size_t index, std::size_t& redraws);

HuntReport hunt(const HuntConfig& config, const Limits& limits = {});

nlohmann::json to_json(const HuntReport& report);

}  // namespace sympow
