#include "sympow/rational_lp.hpp"

#include <optional>

#include "sympow/error.hpp"

namespace sympow {

LpSolution maximize(const std::vector<ExactRational>& c, const RationalMatrix& a, const std::vector<ExactRational>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = c.size();
  if (b.size() != rows) throw ValidationError("maximize: right-hand side has the wrong length");
  for (const auto& row : a) {
    if (row.size() != cols) throw ValidationError("maximize: ragged constraint matrix");
  }
  for (const auto& bi : b) {
    if (bi < 0) throw ValidationError("maximize: right-hand side must be nonnegative");
  }

  // Columns: structural 0..cols-1, slacks cols..cols+rows-1, then the right-hand side.
  const std::size_t width = cols + rows;
  RationalMatrix t(rows, std::vector<ExactRational>(width + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = 1;
    t[i][width] = b[i];
    basis[i] = cols + i;
  }
  // Reduced costs; objective value kept negated in the last entry.
  std::vector<ExactRational> reduced(width + 1);
  for (std::size_t j = 0; j < cols; ++j) reduced[j] = c[j];

  LpSolution sol;
  for (;;) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < width; ++j) {
      if (reduced[j] > 0) {
        entering = j;
        break;
      }
    }
    if (!entering) break;
    const std::size_t e = *entering;

    std::optional<std::size_t> leaving;
    ExactRational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][e] <= 0) continue;
      ExactRational ratio = t[i][width] / t[i][e];
      if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (!leaving) {
      sol.status = LpStatus::unbounded;
      return sol;
    }
    const std::size_t r = *leaving;

    const ExactRational pivot = t[r][e];
    for (auto& v : t[r]) v /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || t[i][e] == 0) continue;
      const ExactRational factor = t[i][e];
      for (std::size_t j = 0; j <= width; ++j) t[i][j] -= factor * t[r][j];
    }
    const ExactRational factor = reduced[e];
    for (std::size_t j = 0; j <= width; ++j) reduced[j] -= factor * t[r][j];
    basis[r] = e;
  }

  sol.value = -reduced[width];
  sol.primal.assign(cols, ExactRational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < cols) sol.primal[basis[i]] = t[i][width];
  }
  sol.dual.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) sol.dual[i] = -reduced[cols + i];
  return sol;
}

}  // namespace sympow
