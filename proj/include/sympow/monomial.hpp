#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sympow/error.hpp"

namespace sympow {

using Exponent = std::uint32_t;

// Bitmask of variable indices. Square-free routines are limited to 64 variables.
using VertexSet = std::uint64_t;
inline constexpr std::size_t kMaxSetVars = 64;

/// A monomial x^a over a fixed ordered set of variables, stored as its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

  static Monomial one(std::size_t num_vars) { return Monomial(std::vector<Exponent>(num_vars, 0)); }
  static Monomial from_support(std::size_t num_vars, VertexSet support);

  std::size_t num_vars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool is_square_free() const;
  bool divides(const Monomial& other) const;
  // Requires num_vars() <= 64.
  VertexSet support() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

// Canonical order: total degree first, then the exponent vector with the larger
// leading exponent comes first (so x^2 < xy < y^2).
std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b);
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  return canonical_compare(a, b) < 0;
}

// Exponent arithmetic. Mismatched lengths throw ValidationError; exponent
// overflow throws std::overflow_error.
Monomial operator*(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
// Componentwise max(a_i - b_i, 0), i.e. the generator of (a) : b.
Monomial colon(const Monomial& a, const Monomial& b);
// a / b; requires b | a.
Monomial divide(const Monomial& a, const Monomial& b);
Monomial radical(const Monomial& a);

std::string to_string(const Monomial& m);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// A monomial ideal held by its unique minimal generating set in canonical order.
/// No generators is the zero ideal; the single generator 1 is the unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MonomialIdeal zero(std::size_t num_vars) { return MonomialIdeal(num_vars); }
  static MonomialIdeal unit(std::size_t num_vars);
  // The ideal generated by the given monomials; throws on mismatched lengths.
  static MonomialIdeal generated_by(std::size_t num_vars, std::vector<Monomial> gens);
  // Trusts the caller: gens must already be minimal and canonically sorted.
  static MonomialIdeal from_minimal_sorted(std::size_t num_vars, std::vector<Monomial> gens);
  // (x_i : i in S) for each listed support set.
  static MonomialIdeal square_free(std::size_t num_vars, std::span<const VertexSet> supports);
  static MonomialIdeal maximal(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  std::span<const Monomial> generators() const& { return gens_; }
  // A span into a temporary would dangle.
  std::span<const Monomial> generators() && = delete;
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_square_free() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<Monomial> gens_;
};

// The divisibility-minimal elements of gens, canonically ordered.
MonomialIdeal minimalize(std::size_t num_vars, std::vector<Monomial> gens);

bool contains(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, unsigned n);
// Pairwise lcm followed by minimalization; quadratic in the generator counts.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal quotient(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Decides m in I^n without building I^n: depth-first search over residual
/// exponent vectors, choosing generators in non-decreasing index order and
/// memoizing failed states. Requires I nonzero.
bool power_membership(const MonomialIdeal& ideal, const Monomial& m, unsigned n);

// Throws ValidationError unless every generator is square-free.
void require_square_free(const MonomialIdeal& ideal, const char* what);

}  // namespace sympow
