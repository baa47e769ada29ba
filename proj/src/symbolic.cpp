#include "sympow/symbolic.hpp"

#include <algorithm>
#include <bit>

#include "sympow/decomposition.hpp"

namespace sympow {

namespace {

void require_symbolic_input(const MonomialIdeal& ideal, const char* what) {
  if (!ideal.is_square_free()) {
    throw ValidationError(std::string(what) +
                          ": symbolic powers are only supported for square-free ideals; for other monomial ideals "
                          "the associated-prime and minimal-prime definitions differ (embedded primes)");
  }
  if (ideal.is_zero() || ideal.is_unit()) {
    throw ValidationError(std::string(what) + ": the ideal must be proper and nonzero");
  }
}

void require_positive(unsigned n, const char* what) {
  if (n == 0) throw ValidationError(std::string(what) + ": exponent must be at least 1");
}

// Enumerates the minimal exponent vectors a with sum_{i in C} a_i >= n for
// every prime C. A coordinate of a minimal vector is bounded by the deficit
// of some prime through that variable when it is assigned: minimality forces a
// prime C containing i with sum_C(a) == n, and sum_C only grows afterwards.
// Hence no coordinate ever exceeds n.
class CoveringVectorEnumerator {
 public:
  CoveringVectorEnumerator(std::span<const VertexSet> primes, std::size_t num_vars, unsigned n,
                           std::size_t max_results)
      : primes_(primes), num_vars_(num_vars), n_(n), max_results_(max_results),
        through_(num_vars), closing_(num_vars), sums_(primes.size(), 0), exps_(num_vars, 0) {
    for (std::size_t c = 0; c < primes.size(); ++c) {
      if (primes[c] == 0) throw ValidationError("symbolic_power: empty prime");
      for (auto v : elements(primes[c])) {
        if (v >= num_vars) throw ValidationError("prime mentions a variable outside the ring");
        through_[v].push_back(c);
      }
      closing_[static_cast<std::size_t>(std::bit_width(primes[c]) - 1)].push_back(c);
    }
  }

  std::vector<Monomial> run() {
    recurse(0);
    std::sort(out_.begin(), out_.end(), canonical_less);
    return std::move(out_);
  }

 private:
  void recurse(std::size_t var) {
    if (var == num_vars_) {
      emit_if_minimal();
      return;
    }
    unsigned cap = 0;
    for (auto c : through_[var]) {
      if (sums_[c] < n_) cap = std::max(cap, n_ - sums_[c]);
    }
    for (unsigned v = 0; v <= cap; ++v) {
      exps_[var] = v;
      for (auto c : through_[var]) sums_[c] += v;

      bool can_be_tight = v == 0 || std::any_of(through_[var].begin(), through_[var].end(),
                                                [&](std::size_t c) { return sums_[c] <= n_; });
      bool closed_ok = std::all_of(closing_[var].begin(), closing_[var].end(),
                                   [&](std::size_t c) { return sums_[c] >= n_; });
      if (can_be_tight && closed_ok) recurse(var + 1);

      for (auto c : through_[var]) sums_[c] -= v;
      exps_[var] = 0;
      if (!can_be_tight) break;
    }
  }

  void emit_if_minimal() {
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (exps_[i] == 0) continue;
      bool tight = std::any_of(through_[i].begin(), through_[i].end(), [&](std::size_t c) { return sums_[c] == n_; });
      if (!tight) return;
    }
    if (out_.size() >= max_results_) {
      throw SizeGuardError("symbolic power has more than " + std::to_string(max_results_) + " minimal generators");
    }
    out_.emplace_back(exps_);
  }

  std::span<const VertexSet> primes_;
  std::size_t num_vars_;
  unsigned n_;
  std::size_t max_results_;
  std::vector<std::vector<std::size_t>> through_;  // primes containing each variable
  std::vector<std::vector<std::size_t>> closing_;  // primes whose largest variable is this one
  std::vector<unsigned> sums_;
  std::vector<Exponent> exps_;
  std::vector<Monomial> out_;
};

}  // namespace

bool symbolic_membership(std::span<const VertexSet> primes, const Monomial& m, unsigned n) {
  require_positive(n, "symbolic_membership");
  for (auto p : primes) {
    std::uint64_t total = 0;
    for (VertexSet rest = p; rest; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      if (i >= m.num_vars()) throw ValidationError("symbolic_membership: monomial has too few variables");
      total += m[i];
    }
    if (total < n) return false;
  }
  return true;
}

bool symbolic_membership(const MonomialIdeal& ideal, const Monomial& m, unsigned n, const Limits& limits) {
  require_symbolic_input(ideal, "symbolic_membership");
  if (m.num_vars() != ideal.num_vars()) throw ValidationError("symbolic_membership: variable count mismatch");
  const auto primes = minimal_primes(ideal, limits);
  return symbolic_membership(primes, m, n);
}

MonomialIdeal symbolic_power(std::span<const VertexSet> primes, std::size_t num_vars, unsigned n,
                             const Limits& limits) {
  require_positive(n, "symbolic_power");
  if (primes.empty()) throw ValidationError("symbolic_power: no minimal primes given");
  CoveringVectorEnumerator enumerator(primes, num_vars, n, limits.max_symbolic_gens);
  return MonomialIdeal::from_minimal_sorted(num_vars, enumerator.run());
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned n, const Limits& limits) {
  require_symbolic_input(ideal, "symbolic_power");
  require_positive(n, "symbolic_power");
  const auto primes = minimal_primes(ideal, limits);
  return symbolic_power(primes, ideal.num_vars(), n, limits);
}

namespace {

// Walks every b <= m with |b| <= budget, checking x^(m-b) in I.
bool all_derivatives_in(const MonomialIdeal& ideal, std::vector<Exponent>& exps, std::size_t var, unsigned budget) {
  if (var == exps.size()) return contains(ideal, Monomial(exps));
  const Exponent original = exps[var];
  const unsigned top = std::min<unsigned>(budget, original);
  for (unsigned b = 0; b <= top; ++b) {
    exps[var] = original - b;
    if (!all_derivatives_in(ideal, exps, var + 1, budget - b)) {
      exps[var] = original;
      return false;
    }
  }
  exps[var] = original;
  return true;
}

}  // namespace

bool differential_membership(const MonomialIdeal& ideal, const Monomial& m, unsigned n) {
  require_positive(n, "differential_membership");
  if (m.num_vars() != ideal.num_vars()) throw ValidationError("differential_membership: variable count mismatch");
  std::vector<Exponent> exps(m.exponents().begin(), m.exponents().end());
  return all_derivatives_in(ideal, exps, 0, n - 1);
}

EqualityResult equals_ordinary(const MonomialIdeal& ideal, unsigned n, const Limits& limits) {
  require_symbolic_input(ideal, "equals_ordinary");
  require_positive(n, "equals_ordinary");
  EqualityResult result;
  // I^n is always inside I^(n), so only the reverse inclusion needs checking.
  const auto power = symbolic_power(ideal, n, limits);
  for (const auto& g : power.generators()) {
    if (!power_membership(ideal, g, n)) {
      result.equal = false;
      result.witness = g;
      break;
    }
  }
  return result;
}

ContainmentResult containment(const MonomialIdeal& ideal, unsigned a, unsigned b, const Limits& limits) {
  require_symbolic_input(ideal, "containment");
  require_positive(b, "containment");
  if (a < b) throw ValidationError("containment: requires a >= b");
  ContainmentResult result;
  const auto power = symbolic_power(ideal, a, limits);
  for (const auto& g : power.generators()) {
    if (!power_membership(ideal, g, b)) {
      result.contained = false;
      result.witness = g;
      break;
    }
  }
  return result;
}

}  // namespace sympow
