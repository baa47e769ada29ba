#include "sympow/hunt.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <thread>

#include "sympow/graph.hpp"
#include "sympow/io.hpp"
#include "sympow/symbolic.hpp"

namespace sympow {

HuntFamily parse_family(const std::string& name) {
  if (name == "edge_ideals") return HuntFamily::edge_ideals;
  if (name == "cubic_ideals") return HuntFamily::cubic_ideals;
  if (name == "general_squarefree") return HuntFamily::general_squarefree;
  throw ValidationError("unknown family \"" + name + "\" (edge_ideals, cubic_ideals, general_squarefree)");
}

std::string family_name(HuntFamily family) {
  switch (family) {
    case HuntFamily::edge_ideals: return "edge_ideals";
    case HuntFamily::cubic_ideals: return "cubic_ideals";
    case HuntFamily::general_squarefree: return "general_squarefree";
  }
  return "unknown";
}

void HuntConfig::validate() const {
  if (num_vars < 1 || num_vars > 8) throw ValidationError("hunt: num_vars must be in 1..8");
  if (k != 2 && k != 3) throw ValidationError("hunt: k must be 2 or 3");
  if (max_generators < 1) throw ValidationError("hunt: max_generators must be positive");
  if (jobs < 1) throw ValidationError("hunt: jobs must be positive");
  if (family == HuntFamily::edge_ideals && num_vars < 2) throw ValidationError("hunt: edge ideals need 2 variables");
  if (family == HuntFamily::cubic_ideals && num_vars < 3) throw ValidationError("hunt: cubic ideals need 3 variables");
  if (family == HuntFamily::general_squarefree && (min_support < 1 || min_support > max_support || max_support > num_vars)) {
    throw ValidationError("hunt: support range must satisfy 1 <= min <= max <= num_vars");
  }
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Unbiased draw in [0, bound) that does not depend on the library's distribution code.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

std::vector<VertexSet> subsets_of_size(unsigned n, unsigned size) {
  std::vector<VertexSet> out;
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
    if (static_cast<unsigned>(std::popcount(s)) == size) out.push_back(s);
  }
  return out;
}

// g distinct elements of pool by a partial Fisher-Yates shuffle.
std::vector<VertexSet> pick_distinct(std::mt19937_64& rng, std::vector<VertexSet> pool, std::size_t g) {
  g = std::min(g, pool.size());
  for (std::size_t i = 0; i < g; ++i) std::swap(pool[i], pool[i + draw_below(rng, pool.size() - i)]);
  pool.resize(g);
  return pool;
}

MonomialIdeal draw_once(const HuntConfig& config, std::mt19937_64& rng) {
  const std::size_t g = 1 + draw_below(rng, config.max_generators);
  std::vector<VertexSet> supports;
  switch (config.family) {
    case HuntFamily::edge_ideals:
      supports = pick_distinct(rng, subsets_of_size(config.num_vars, 2), g);
      break;
    case HuntFamily::cubic_ideals:
      supports = pick_distinct(rng, subsets_of_size(config.num_vars, 3), g);
      break;
    case HuntFamily::general_squarefree:
      for (std::size_t j = 0; j < g; ++j) {
        const auto size = config.min_support + static_cast<unsigned>(draw_below(rng, config.max_support - config.min_support + 1));
        supports.push_back(pick_distinct(rng, subsets_of_size(config.num_vars, size), 1).front());
      }
      break;
  }
  return MonomialIdeal::square_free(config.num_vars, supports);
}

HuntInstance evaluate(const HuntConfig& config, std::size_t index, MonomialIdeal ideal, const Limits& limits) {
  HuntInstance inst;
  inst.index = index;
  auto packed = is_k_packed(ideal, config.k, limits);
  inst.k_packed = packed.holds;
  inst.counterexample = packed.counterexample;
  for (unsigned n = 1; n <= config.k; ++n) {
    if (!equals_ordinary(ideal, n, limits).equal) {
      inst.equal_up_to_k = false;
      inst.first_unequal = n;
      break;
    }
  }
  inst.ideal = std::move(ideal);
  return inst;
}

}  // namespace

MonomialIdeal draw_instance(const HuntConfig& config, std::size_t index, std::size_t& redraws) {
  std::mt19937_64 rng(splitmix64(config.seed ^ splitmix64(index)));
  for (;;) {
    auto ideal = draw_once(config, rng);
    if (!ideal.is_zero() && !ideal.is_unit()) return ideal;
    ++redraws;
  }
}

HuntReport hunt(const HuntConfig& config, const Limits& limits) {
  config.validate();
  const std::size_t count = config.instance_count;
  std::vector<HuntInstance> results(count);
  std::vector<std::size_t> redraws(count, 0);

  auto work = [&](std::size_t worker, std::size_t workers) {
    for (std::size_t i = worker; i < count; i += workers) {
      auto ideal = draw_instance(config, i, redraws[i]);
      results[i] = evaluate(config, i, std::move(ideal), limits);
    }
  };
  const std::size_t workers = std::min<std::size_t>(config.jobs, std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          work(w, workers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  HuntReport report;
  report.config = config;
  report.instances = count;
  for (std::size_t i = 0; i < count; ++i) {
    report.redrawn += redraws[i];
    auto& r = results[i];
    if (r.k_packed != r.equal_up_to_k) {
      report.disagreements.push_back(std::move(r));
    } else if (r.k_packed) {
      ++report.both_true;
    } else {
      ++report.both_false;
    }
  }
  return report;
}

nlohmann::json to_json(const HuntReport& report) {
  using nlohmann::json;
  const auto& c = report.config;
  json disagreements = json::array();
  for (const auto& d : report.disagreements) {
    disagreements.push_back({
        {"index", d.index},
        {"ideal", io::to_json(io::NamedIdeal{io::default_names(d.ideal.num_vars()), d.ideal})},
        {"k_packed", d.k_packed},
        {"equal_up_to_k", d.equal_up_to_k},
        {"first_unequal", d.first_unequal ? json(*d.first_unequal) : json(nullptr)},
        {"counterexample", d.counterexample ? json(d.counterexample->to_string()) : json(nullptr)},
    });
  }
  return json{
      {"config",
       {{"family", family_name(c.family)},
        {"num_vars", c.num_vars},
        {"max_generators", c.max_generators},
        {"k", c.k},
        {"seed", c.seed},
        {"instance_count", c.instance_count},
        {"min_support", c.min_support},
        {"max_support", c.max_support}}},
      {"instances", report.instances},
      {"redrawn", report.redrawn},
      {"both_true", report.both_true},
      {"both_false", report.both_false},
      {"disagreements", std::move(disagreements)},
  };
}

}  // namespace sympow
