#include "sympow/clutter.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "sympow/decomposition.hpp"

namespace sympow {

MinorAssignment MinorAssignment::parse(const std::string& text) {
  MinorAssignment a;
  a.tags.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'k': a.tags.push_back(MinorTag::keep); break;
      case '0': a.tags.push_back(MinorTag::zero); break;
      case '1': a.tags.push_back(MinorTag::one); break;
      default: throw ValidationError(std::string("minor assignment: unexpected character '") + ch + "'");
    }
  }
  return a;
}

std::string MinorAssignment::to_string() const {
  std::string out;
  for (auto t : tags) out += t == MinorTag::keep ? 'k' : t == MinorTag::zero ? '0' : '1';
  return out;
}

namespace {

std::vector<VertexSet> supports_of(const MonomialIdeal& ideal) {
  std::vector<VertexSet> out;
  for (const auto& g : ideal.generators()) out.push_back(g.support());
  return out;
}

// Minor of a clutter on bitmasks. Returns nullopt for the unit ideal.
std::optional<std::vector<VertexSet>> clutter_minor(std::span<const VertexSet> edges, VertexSet zeros, VertexSet ones) {
  std::vector<VertexSet> out;
  for (auto e : edges) {
    if (e & zeros) continue;
    const VertexSet stripped = e & ~ones;
    if (stripped == 0) return std::nullopt;
    out.push_back(stripped);
  }
  std::sort(out.begin(), out.end(), subset_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<VertexSet> kept;
  for (auto s : out) {
    if (std::none_of(kept.begin(), kept.end(), [s](VertexSet k) { return (k & ~s) == 0; })) kept.push_back(s);
  }
  return kept;
}

// Greedy transversal of the edges avoiding `used`; its size bounds any matching among them.
std::size_t cover_bound(std::span<const VertexSet> edges, std::size_t from, VertexSet used) {
  std::vector<VertexSet> live;
  for (std::size_t i = from; i < edges.size(); ++i) {
    if ((edges[i] & used) == 0) live.push_back(edges[i]);
  }
  std::size_t size = 0;
  while (!live.empty()) {
    VertexSet all = 0;
    for (auto e : live) all |= e;
    std::size_t best_v = 0;
    std::size_t best_hits = 0;
    for (VertexSet rest = all; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      std::size_t hits = 0;
      for (auto e : live) hits += (e >> v) & 1U;
      if (hits > best_hits) {
        best_hits = hits;
        best_v = v;
      }
    }
    std::erase_if(live, [best_v](VertexSet e) { return (e >> best_v) & 1U; });
    ++size;
  }
  return size;
}

class MatchingSearch {
 public:
  explicit MatchingSearch(std::span<const VertexSet> edges) : edges_(edges) {}

  std::vector<std::size_t> run() {
    // Greedy lower bound.
    VertexSet used = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if ((edges_[i] & used) == 0) {
        used |= edges_[i];
        best_.push_back(i);
      }
    }
    std::vector<std::size_t> current;
    search(0, 0, current);
    return best_;
  }

 private:
  void search(std::size_t from, VertexSet used, std::vector<std::size_t>& current) {
    if (current.size() > best_.size()) best_ = current;
    if (from >= edges_.size()) return;
    if (current.size() + cover_bound(edges_, from, used) <= best_.size()) return;
    for (std::size_t i = from; i < edges_.size(); ++i) {
      if (edges_[i] & used) continue;
      current.push_back(i);
      search(i + 1, used | edges_[i], current);
      current.pop_back();
      if (current.size() + cover_bound(edges_, i + 1, used) <= best_.size()) return;
    }
  }

  std::span<const VertexSet> edges_;
  std::vector<std::size_t> best_;
};

std::size_t matching_number(std::span<const VertexSet> edges) { return MatchingSearch(edges).run().size(); }

bool clutter_k_koenig(std::span<const VertexSet> edges, std::size_t k) {
  if (edges.empty()) return true;
  const std::size_t h = min_transversal_size(edges);
  return matching_number(edges) >= std::min(k, h);
}

using ClutterPredicate = std::function<bool(std::span<const VertexSet>)>;

MinorSearchResult search_minors(const MonomialIdeal& ideal, const Limits& limits, const ClutterPredicate& ok) {
  require_square_free(ideal, "minor search");
  MinorSearchResult result;
  if (ideal.is_zero() || ideal.is_unit()) return result;

  const auto edges = supports_of(ideal);
  VertexSet support = 0;
  for (auto e : edges) support |= e;
  const auto vars = elements(support);

  std::size_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (total > limits.max_minors / 3) {
      throw SizeGuardError("minor enumeration over " + std::to_string(vars.size()) +
                           " variables exceeds the limit of " + std::to_string(limits.max_minors) + " minors");
    }
    total *= 3;
  }

  std::map<std::vector<VertexSet>, bool> seen;
  std::vector<MinorTag> digits(vars.size(), MinorTag::keep);
  for (std::size_t count = 0; count < total; ++count) {
    VertexSet zeros = 0;
    VertexSet ones = 0;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (digits[j] == MinorTag::zero) zeros |= VertexSet{1} << vars[j];
      if (digits[j] == MinorTag::one) ones |= VertexSet{1} << vars[j];
    }
    if (auto m = clutter_minor(edges, zeros, ones)) {
      auto [it, inserted] = seen.try_emplace(*m, false);
      if (inserted) it->second = ok(it->first);
      if (!it->second) {
        MinorAssignment a = MinorAssignment::keep_all(ideal.num_vars());
        for (std::size_t j = 0; j < vars.size(); ++j) a.tags[vars[j]] = digits[j];
        result.holds = false;
        result.counterexample = std::move(a);
        return result;
      }
    }
    // Odometer with the last support variable fastest.
    for (std::size_t j = vars.size(); j-- > 0;) {
      if (digits[j] != MinorTag::one) {
        digits[j] = static_cast<MinorTag>(static_cast<unsigned char>(digits[j]) + 1);
        break;
      }
      digits[j] = MinorTag::keep;
    }
  }
  return result;
}

}  // namespace

MonomialIdeal minor(const MonomialIdeal& ideal, const MinorAssignment& assignment) {
  require_square_free(ideal, "minor");
  if (assignment.tags.size() != ideal.num_vars()) {
    throw ValidationError("minor: assignment has " + std::to_string(assignment.tags.size()) + " entries, ideal has " +
                          std::to_string(ideal.num_vars()) + " variables");
  }
  if (ideal.is_zero() || ideal.is_unit()) return ideal;
  VertexSet zeros = 0;
  VertexSet ones = 0;
  for (std::size_t i = 0; i < assignment.tags.size(); ++i) {
    if (assignment.tags[i] == MinorTag::zero) zeros |= VertexSet{1} << i;
    if (assignment.tags[i] == MinorTag::one) ones |= VertexSet{1} << i;
  }
  const auto edges = supports_of(ideal);
  auto m = clutter_minor(edges, zeros, ones);
  if (!m) return MonomialIdeal::unit(ideal.num_vars());
  return MonomialIdeal::square_free(ideal.num_vars(), *m);
}

RegularSequence max_regular_sequence(const MonomialIdeal& ideal) {
  require_square_free(ideal, "max_regular_sequence");
  RegularSequence result;
  if (ideal.is_zero() || ideal.is_unit()) return result;
  const auto edges = supports_of(ideal);
  for (auto i : MatchingSearch(edges).run()) result.witness.push_back(ideal.generators()[i]);
  result.length = result.witness.size();
  return result;
}

bool is_koenig(const MonomialIdeal& ideal) {
  require_square_free(ideal, "is_koenig");
  if (ideal.is_zero() || ideal.is_unit()) return true;
  const auto edges = supports_of(ideal);
  return matching_number(edges) >= min_transversal_size(edges);
}

bool is_k_koenig(const MonomialIdeal& ideal, unsigned k) {
  require_square_free(ideal, "is_k_koenig");
  if (k == 0) throw ValidationError("is_k_koenig: k must be positive");
  if (ideal.is_zero() || ideal.is_unit()) return true;
  return clutter_k_koenig(supports_of(ideal), k);
}

MinorSearchResult has_packing_property(const MonomialIdeal& ideal, const Limits& limits) {
  return search_minors(ideal, limits, [](std::span<const VertexSet> edges) {
    return edges.empty() || matching_number(edges) >= min_transversal_size(edges);
  });
}

MinorSearchResult is_k_packed(const MonomialIdeal& ideal, unsigned k, const Limits& limits) {
  if (k == 0) throw ValidationError("is_k_packed: k must be positive");
  return search_minors(ideal, limits, [k](std::span<const VertexSet> edges) { return clutter_k_koenig(edges, k); });
}

}  // namespace sympow
