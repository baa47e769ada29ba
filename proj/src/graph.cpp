#include "sympow/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace sympow {

Graph::Graph(std::size_t num_vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(num_vertices), adj_(num_vertices) {
  for (auto& [u, v] : edges) {
    if (u >= n_ || v >= n_) {
      throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint out of range");
    }
    if (u == v) throw ValidationError("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

Graph Graph::cycle(std::size_t length) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < length; ++i) e.emplace_back(i, (i + 1) % length);
  return Graph(length, std::move(e));
}

Graph Graph::complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, std::move(e));
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

MonomialIdeal edge_ideal(const Graph& g) {
  if (g.edges().empty()) throw ValidationError("edge_ideal: the graph has no edges");
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges()) {
    std::vector<Exponent> e(g.num_vertices(), 0);
    e[u] = 1;
    e[v] = 1;
    gens.emplace_back(std::move(e));
  }
  return minimalize(g.num_vertices(), std::move(gens));
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.num_vertices(), -1);
  for (std::size_t root = 0; root < g.num_vertices(); ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// BFS distances from root within the subgraph induced by vertices >= floor.
std::vector<std::size_t> distances(const Graph& g, std::size_t root, std::size_t floor = 0) {
  std::vector<std::size_t> dist(g.num_vertices(), kUnreached);
  dist[root] = 0;
  std::queue<std::size_t> q;
  q.push(root);
  while (!q.empty()) {
    const auto u = q.front();
    q.pop();
    for (auto w : g.neighbors(u)) {
      if (w < floor || dist[w] != kUnreached) continue;
      dist[w] = dist[u] + 1;
      q.push(w);
    }
  }
  return dist;
}

}  // namespace

std::optional<std::size_t> odd_girth(const Graph& g) {
  // An edge joining two vertices at equal BFS depth d closes an odd walk of
  // length 2d+1 through the root; rooting on a shortest odd cycle attains it.
  std::optional<std::size_t> best;
  for (std::size_t root = 0; root < g.num_vertices(); ++root) {
    const auto dist = distances(g, root);
    for (auto [u, v] : g.edges()) {
      if (dist[u] == kUnreached || dist[u] != dist[v]) continue;
      const auto len = 2 * dist[u] + 1;
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

std::optional<std::size_t> equality_threshold(const Graph& g) {
  if (g.edges().empty()) throw ValidationError("equality_threshold: the graph has no edges");
  if (auto og = odd_girth(g)) return (*og + 1) / 2;
  return std::nullopt;
}

namespace {

class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::size_t start, std::size_t length)
      : g_(g), start_(start), length_(length), dist_(distances(g, start, start)), on_path_(g.num_vertices(), false) {}

  std::optional<std::vector<std::size_t>> run() {
    path_.push_back(start_);
    on_path_[start_] = true;
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  bool extend() {
    const auto last = path_.back();
    if (path_.size() == length_) return g_.adjacent(last, start_);
    const auto remaining = length_ - path_.size();  // edges still to walk, including the closing one
    for (auto w : g_.neighbors(last)) {
      if (w <= start_ || on_path_[w] || dist_[w] == kUnreached || dist_[w] > remaining) continue;
      path_.push_back(w);
      on_path_[w] = true;
      if (extend()) return true;
      on_path_[w] = false;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::size_t start_;
  std::size_t length_;
  std::vector<std::size_t> dist_;
  std::vector<bool> on_path_;
  std::vector<std::size_t> path_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_cycle(const Graph& g, std::size_t length) {
  if (length < 3) return std::nullopt;
  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    if (auto c = CycleSearch(g, s, length).run()) return c;
  }
  return std::nullopt;
}

Monomial odd_cycle_witness(const Graph& g, std::size_t t) {
  if (t < 2) throw ValidationError("odd_cycle_witness: t must be at least 2");
  const auto length = 2 * t - 1;
  auto cycle = find_cycle(g, length);
  if (!cycle) throw ValidationError("odd_cycle_witness: the graph has no cycle of length " + std::to_string(length));
  std::vector<Exponent> e(g.num_vertices(), 0);
  for (auto v : *cycle) e[v] = 1;
  return Monomial(std::move(e));
}

ThresholdReport verify_threshold(const Graph& g, unsigned up_to, bool allow_large, const Limits& limits) {
  if (up_to == 0) throw ValidationError("verify_threshold: up_to must be positive");
  if (up_to > kDefaultMaxVerify && !allow_large) {
    throw SizeGuardError("verify_threshold: up_to " + std::to_string(up_to) + " exceeds the default cap of " +
                         std::to_string(kDefaultMaxVerify) + " (override to proceed)");
  }
  ThresholdReport report;
  report.odd_girth = odd_girth(g);
  report.threshold = equality_threshold(g);
  const auto ideal = edge_ideal(g);
  for (unsigned k = 1; k <= up_to; ++k) {
    ThresholdRow row;
    row.k = k;
    row.predicted_equal = !report.threshold || k < *report.threshold;
    auto eq = equals_ordinary(ideal, k, limits);
    row.computed_equal = eq.equal;
    row.witness = eq.witness;
    row.agree = row.predicted_equal == row.computed_equal;
    report.all_agree = report.all_agree && row.agree;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace sympow
