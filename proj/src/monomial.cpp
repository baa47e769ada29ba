#include "sympow/monomial.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace sympow {

namespace {

void require_same_length(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw ValidationError("monomials over different variable counts (" + std::to_string(a.num_vars()) +
                          " vs " + std::to_string(b.num_vars()) + ")");
  }
}

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) {
    throw ValidationError("ideals over different variable counts (" + std::to_string(a.num_vars()) +
                          " vs " + std::to_string(b.num_vars()) + ")");
  }
}

void require_ring(const MonomialIdeal& ideal, const Monomial& m) {
  if (ideal.num_vars() != m.num_vars()) {
    throw ValidationError("monomial has " + std::to_string(m.num_vars()) + " variables, ideal has " +
                          std::to_string(ideal.num_vars()));
  }
}

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

Monomial Monomial::from_support(std::size_t num_vars, VertexSet support) {
  std::vector<Exponent> e(num_vars, 0);
  for (std::size_t i = 0; i < num_vars && i < kMaxSetVars; ++i) {
    if (support >> i & 1U) e[i] = 1;
  }
  return Monomial(std::move(e));
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_square_free() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

VertexSet Monomial::support() const {
  if (exps_.size() > kMaxSetVars) {
    throw SizeGuardError("support sets are limited to " + std::to_string(kMaxSetVars) + " variables");
  }
  VertexSet s = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) s |= VertexSet{1} << i;
  }
  return s;
}

std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto n = std::min(a.num_vars(), b.num_vars());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.num_vars() <=> b.num_vars();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (a[i] > std::numeric_limits<Exponent>::max() - b[i]) {
      throw std::overflow_error("exponent overflow in monomial product");
    }
    e[i] = a[i] + b[i];
  }
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return Monomial(std::move(e));
}

Monomial divide(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw ValidationError("divide: " + to_string(b) + " does not divide " + to_string(a));
  return colon(a, b);
}

Monomial radical(const Monomial& a) {
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] ? 1 : 0;
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    out += "x" + std::to_string(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t seed = m.num_vars();
  for (auto e : m.exponents()) hash_combine(seed, e);
  return seed;
}

MonomialIdeal MonomialIdeal::unit(std::size_t num_vars) {
  MonomialIdeal ideal(num_vars);
  ideal.gens_.push_back(Monomial::one(num_vars));
  return ideal;
}

MonomialIdeal MonomialIdeal::generated_by(std::size_t num_vars, std::vector<Monomial> gens) {
  return minimalize(num_vars, std::move(gens));
}

MonomialIdeal MonomialIdeal::from_minimal_sorted(std::size_t num_vars, std::vector<Monomial> gens) {
  MonomialIdeal ideal(num_vars);
  ideal.gens_ = std::move(gens);
  return ideal;
}

MonomialIdeal MonomialIdeal::square_free(std::size_t num_vars, std::span<const VertexSet> supports) {
  std::vector<Monomial> gens;
  gens.reserve(supports.size());
  for (auto s : supports) gens.push_back(Monomial::from_support(num_vars, s));
  return minimalize(num_vars, std::move(gens));
}

MonomialIdeal MonomialIdeal::maximal(std::size_t num_vars) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < num_vars; ++i) {
    std::vector<Exponent> e(num_vars, 0);
    e[i] = 1;
    gens.emplace_back(std::move(e));
  }
  return minimalize(num_vars, std::move(gens));
}

bool MonomialIdeal::is_square_free() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_square_free(); });
}

MonomialIdeal minimalize(std::size_t num_vars, std::vector<Monomial> gens) {
  for (const auto& g : gens) {
    if (g.num_vars() != num_vars) {
      throw ValidationError("generator " + to_string(g) + " has " + std::to_string(g.num_vars()) +
                            " exponents, expected " + std::to_string(num_vars));
    }
  }
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // After sorting by degree, a divisor of gens[i] can only appear before it.
  // Support masks give a cheap rejection filter when they fit in a word.
  const bool use_masks = num_vars <= kMaxSetVars;
  std::vector<Monomial> kept;
  std::vector<VertexSet> kept_masks;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    const VertexSet mask = use_masks ? g.support() : 0;
    bool redundant = false;
    for (std::size_t j = 0; j < kept.size() && !redundant; ++j) {
      if (use_masks && (kept_masks[j] & ~mask) != 0) continue;
      redundant = kept[j].divides(g);
    }
    if (!redundant) {
      kept.push_back(std::move(g));
      kept_masks.push_back(mask);
    }
  }
  return MonomialIdeal::from_minimal_sorted(num_vars, std::move(kept));
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  require_ring(ideal, m);
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& u : a.generators()) {
    for (const auto& v : b.generators()) gens.push_back(u * v);
  }
  return minimalize(a.num_vars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned n) {
  MonomialIdeal result = MonomialIdeal::unit(ideal.num_vars());
  for (unsigned i = 0; i < n; ++i) result = product(result, ideal);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& u : a.generators()) {
    for (const auto& v : b.generators()) gens.push_back(lcm(u, v));
  }
  return minimalize(a.num_vars(), std::move(gens));
}

MonomialIdeal quotient(const MonomialIdeal& ideal, const Monomial& m) {
  require_ring(ideal, m);
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(colon(g, m));
  return minimalize(ideal.num_vars(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(radical(g));
  return minimalize(ideal.num_vars(), std::move(gens));
}

namespace {

struct SearchState {
  Monomial residual;
  unsigned budget;
  std::size_t start;
  friend bool operator==(const SearchState&, const SearchState&) = default;
};

struct SearchStateHash {
  std::size_t operator()(const SearchState& s) const noexcept {
    std::size_t seed = MonomialHash{}(s.residual);
    hash_combine(seed, s.budget);
    hash_combine(seed, s.start);
    return seed;
  }
};

class PowerSearch {
 public:
  explicit PowerSearch(const MonomialIdeal& ideal) : gens_(ideal.generators()) {
    min_degree_ = gens_.front().degree();
    for (const auto& g : gens_) min_degree_ = std::min(min_degree_, g.degree());
  }

  bool run(const Monomial& residual, unsigned budget, std::size_t start) {
    if (budget == 0) return true;
    if (residual.degree() < static_cast<std::uint64_t>(budget) * min_degree_) return false;
    SearchState key{residual, budget, start};
    if (failed_.contains(key)) return false;
    for (std::size_t i = start; i < gens_.size(); ++i) {
      if (gens_[i].divides(residual) && run(colon(residual, gens_[i]), budget - 1, i)) return true;
    }
    failed_.insert(std::move(key));
    return false;
  }

 private:
  std::span<const Monomial> gens_;
  std::uint64_t min_degree_ = 0;
  std::unordered_set<SearchState, SearchStateHash> failed_;
};

}  // namespace

bool power_membership(const MonomialIdeal& ideal, const Monomial& m, unsigned n) {
  require_ring(ideal, m);
  if (ideal.is_zero()) throw ValidationError("power_membership: zero ideal");
  if (n == 0) return true;
  if (ideal.is_unit()) return true;
  return PowerSearch(ideal).run(m, n, 0);
}

void require_square_free(const MonomialIdeal& ideal, const char* what) {
  if (!ideal.is_square_free()) {
    throw ValidationError(std::string(what) + ": input ideal is not square-free");
  }
  if (ideal.num_vars() > kMaxSetVars) {
    throw SizeGuardError(std::string(what) + ": square-free routines support at most 64 variables");
  }
}

}  // namespace sympow
