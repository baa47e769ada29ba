#pragma once

#include <stdexcept>
#include <string>

namespace sympow {

// Malformed input or a violated precondition. The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable size guard was exceeded. The CLI maps this to exit code 3.
class SizeGuardError : public std::runtime_error {
 public:
  explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

// Resource caps shared by the enumerating algorithms.
struct Limits {
  std::size_t max_primes = 100000;         // minimal transversals
  std::size_t max_symbolic_gens = 2000000; // generators of one symbolic power
  std::size_t max_minors = 14348907;       // 3^15 minor assignments
};

}  // namespace sympow
