#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sympow {

// Arbitrary-precision rational, always stored reduced with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

using RationalMatrix = std::vector<std::vector<ExactRational>>;

enum class LpStatus { optimal, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::optimal;
  ExactRational value;
  std::vector<ExactRational> primal;  // y
  std::vector<ExactRational> dual;    // x, optimal for min b.x s.t. A^T x >= c, x >= 0
};

/// Exact tableau simplex for max c.y s.t. A y <= b, y >= 0 with b >= 0, so the
/// slack basis is feasible from the start. Bland's rule for entering and
/// leaving variables guarantees termination.
LpSolution maximize(const std::vector<ExactRational>& c, const RationalMatrix& a, const std::vector<ExactRational>& b);

}  // namespace sympow
