#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sympow/error.hpp"
#include "sympow/monomial.hpp"
#include "sympow/symbolic.hpp"

namespace sympow {

/// A finite simple graph. Edges are stored with u < v, deduplicated and sorted.
class Graph {
 public:
  Graph() = default;
  // Throws ValidationError on loops or out-of-range endpoints; repeated edges collapse.
  Graph(std::size_t num_vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

  static Graph cycle(std::size_t length);
  static Graph complete(std::size_t n);

  std::size_t num_vertices() const { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adj_;
};

// (x_i x_j : ij an edge). Isolated vertices stay as unused variables.
MonomialIdeal edge_ideal(const Graph& g);

bool is_bipartite(const Graph& g);

// Length of a shortest odd cycle; nullopt when the graph is bipartite.
std::optional<std::size_t> odd_girth(const Graph& g);

// Least t with I^(t) != I^t, predicted as (odd girth + 1) / 2; nullopt when bipartite.
std::optional<std::size_t> equality_threshold(const Graph& g);

// Lexicographically least vertex sequence of an odd cycle of the given
// length: it starts at its smallest vertex, then the smaller neighbor.
std::optional<std::vector<std::size_t>> find_cycle(const Graph& g, std::size_t length);

// Product of the vertices of an odd cycle of length 2t-1, which lies in
// I^(t) but not in I^t. Throws ValidationError if there is no such cycle.
Monomial odd_cycle_witness(const Graph& g, std::size_t t);

struct ThresholdRow {
  unsigned k = 0;
  bool predicted_equal = true;
  bool computed_equal = true;
  bool agree = true;
  std::optional<Monomial> witness;
};

struct ThresholdReport {
  std::optional<std::size_t> odd_girth;
  std::optional<std::size_t> threshold;
  std::vector<ThresholdRow> rows;
  bool all_agree = true;
};

inline constexpr unsigned kDefaultMaxVerify = 6;

// Compares the odd-girth prediction with equals_ordinary for k = 1..up_to.
ThresholdReport verify_threshold(const Graph& g, unsigned up_to, bool allow_large = false, const Limits& limits = {});

}  // namespace sympow
