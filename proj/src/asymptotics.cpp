#include "sympow/asymptotics.hpp"

#include <algorithm>
#include <bit>

#include "sympow/decomposition.hpp"
#include "sympow/symbolic.hpp"

namespace sympow {

namespace {

void require_asymptotic_input(const MonomialIdeal& ideal, const char* what) {
  require_square_free(ideal, what);
  if (ideal.is_zero() || ideal.is_unit()) throw ValidationError(std::string(what) + ": the ideal must be proper and nonzero");
}

}  // namespace

std::uint64_t alpha(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ValidationError("alpha: the zero ideal has no nonzero elements");
  std::uint64_t best = ideal.generators().front().degree();
  for (const auto& g : ideal.generators()) best = std::min(best, g.degree());
  return best;
}

std::vector<ExactRational> waldschmidt_sequence(const MonomialIdeal& ideal, unsigned max_m, const Limits& limits) {
  require_asymptotic_input(ideal, "waldschmidt_sequence");
  const auto primes = minimal_primes(ideal, limits);
  std::vector<ExactRational> out;
  for (unsigned m = 1; m <= max_m; ++m) {
    const auto power = symbolic_power(primes, ideal.num_vars(), m, limits);
    out.emplace_back(alpha(power), m);
  }
  return out;
}

WaldschmidtResult waldschmidt_exact(const MonomialIdeal& ideal, const Limits& limits) {
  require_asymptotic_input(ideal, "waldschmidt_exact");
  const auto primes = minimal_primes(ideal, limits);
  const auto n = ideal.num_vars();

  // Dual: max sum_C y_C  s.t.  sum_{C ∋ i} y_C <= 1 for each variable i, y >= 0.
  RationalMatrix a(n, std::vector<ExactRational>(primes.size()));
  for (std::size_t c = 0; c < primes.size(); ++c) {
    for (auto i : elements(primes[c])) a[i][c] = 1;
  }
  const std::vector<ExactRational> objective(primes.size(), ExactRational(1));
  const std::vector<ExactRational> rhs(n, ExactRational(1));
  auto sol = maximize(objective, a, rhs);
  if (sol.status != LpStatus::optimal) throw std::logic_error("waldschmidt_exact: bounded LP reported unbounded");
  return {sol.value, std::move(sol.dual)};
}

ResurgenceReport resurgence_report(const MonomialIdeal& ideal, unsigned max_n, const Limits& limits) {
  require_asymptotic_input(ideal, "resurgence_report");
  ResurgenceReport report;
  report.alpha = alpha(ideal);
  report.waldschmidt = waldschmidt_exact(ideal, limits).value;
  report.rho_lower = ExactRational(report.alpha) / report.waldschmidt;
  report.rho_upper = ideal.num_vars();
  for (unsigned n = 1; n <= max_n; ++n) {
    for (unsigned m = 1; m <= n; ++m) {
      if (containment(ideal, n, m, limits).contained) continue;
      report.failures.emplace_back(n, m);
      ExactRational ratio(n, m);
      if (!report.empirical_max || ratio > *report.empirical_max) report.empirical_max = ratio;
    }
  }
  return report;
}

}  // namespace sympow
