#ifndef CLIQUECOVER_GENERATE_HPP
#define CLIQUECOVER_GENERATE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliquecover/graph.hpp"
#include "cliquecover/structure.hpp"

// Seeded generators of (bull, C4)-free instances.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Raw 64-bit draws are turned into doubles in [0, 1) by
// taking the top 53 bits, so no implementation-defined distribution is
// involved and a (spec, seed) pair yields the same graph on every platform.

namespace cliquecover::gen {

enum class Family { kRejection, kGirth5, kTwinExpand };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::kRejection:
      return "rejection";
    case Family::kGirth5:
      return "girth5";
    case Family::kTwinExpand:
      return "twin-expand";
  }
  return "unknown";
}

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "rejection") return Family::kRejection;
  if (s == "girth5") return Family::kGirth5;
  if (s == "twin-expand") return Family::kTwinExpand;
  return std::nullopt;
}

struct GenSpec {
  Family family = Family::kGirth5;
  std::size_t n = 0;
  double edge_prob = 0.0;
  /// Twin duplications (twin-expand only).
  std::size_t steps = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kRejectionBudget = 1'000'000;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Labelled G(n, p), pairs (i, j), i < j, drawn in lexicographic order.
inline std::vector<std::vector<Vertex>> sample_gnp(std::size_t n, double p, Rng& rng) {
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

namespace detail {

inline bool sorted_contains(const std::vector<Vertex>& a, Vertex v) {
  return std::binary_search(a.begin(), a.end(), v);
}

// Some c > floor in both lists.
inline bool common_above(const std::vector<Vertex>& a, const std::vector<Vertex>& b, Vertex floor) {
  auto i = std::upper_bound(a.begin(), a.end(), floor);
  auto j = std::upper_bound(b.begin(), b.end(), floor);
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

inline void erase_edge(std::vector<std::vector<Vertex>>& adj, Vertex u, Vertex v) {
  auto& au = adj[u];
  au.erase(std::lower_bound(au.begin(), au.end(), v));
  auto& av = adj[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
}

}  // namespace detail

/// Deletes edges until no 3- or 4-cycle remains.
///
/// Cycles are ordered by their smallest vertex u, then by the smaller of
/// u's two cycle neighbours a; the smallest cycle loses its smallest edge,
/// which is always (u, a). Deleting edges never creates a cycle, so one pass
/// over u and then a, both ascending, reaches the same result as repeatedly
/// removing the globally smallest cycle.
inline void prune_to_girth5(std::vector<std::vector<Vertex>>& adj) {
  const std::size_t n = adj.size();
  for (Vertex u = 0; u < n; ++u) {
    std::size_t i = 0;
    while (i < adj[u].size()) {
      const Vertex a = adj[u][i];
      if (a <= u) {
        ++i;
        continue;
      }
      bool on_short_cycle = false;
      for (Vertex b : adj[u]) {
        if (b <= a) continue;
        if (detail::sorted_contains(adj[a], b) || detail::common_above(adj[a], adj[b], u)) {
          on_short_cycle = true;
          break;
        }
      }
      if (on_short_cycle) {
        detail::erase_edge(adj, u, a);
      } else {
        ++i;
      }
    }
  }
}

/// Appends vertex n adjacent to `v` and to every neighbour of `v`.
inline void add_true_twin(std::vector<std::vector<Vertex>>& adj, Vertex v) {
  const auto twin = static_cast<Vertex>(adj.size());
  std::vector<Vertex> nb = adj[v];
  nb.push_back(v);
  std::sort(nb.begin(), nb.end());
  for (Vertex w : nb) adj[w].push_back(twin);
  adj.push_back(std::move(nb));
}

inline Graph add_true_twin(const Graph& g, Vertex v) {
  std::vector<std::vector<Vertex>> adj(g.n());
  for (Vertex u = 0; u < g.n(); ++u) adj[u].assign(g.neighbours(u).begin(), g.neighbours(u).end());
  add_true_twin(adj, v);
  return Graph::from_adjacency(std::move(adj));
}

inline void check_spec(const GenSpec& spec) {
  if (!(spec.edge_prob >= 0.0 && spec.edge_prob <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  if (spec.family == Family::kTwinExpand && spec.n == 0 && spec.steps > 0) {
    throw std::invalid_argument("twin-expand needs n >= 1 to duplicate vertices");
  }
}

/// Every output is certified (bull, C4)-free before it is returned; a
/// failing certificate is a logic_error.
///
/// - rejection: G(n, p) resampled until in class, at most rejection_budget
///   attempts (RejectionBudgetExceeded otherwise). The one-argument
///   overload uses kRejectionBudget.
/// - girth5: G(n, p) pruned by prune_to_girth5.
/// - twin-expand: a girth5 graph on n vertices, then step k adds a true twin
///   of vertex k modulo the current vertex count.
inline Graph generate(const GenSpec& spec, std::uint64_t rejection_budget) {
  check_spec(spec);
  Rng rng(spec.seed);
  Graph out;
  switch (spec.family) {
    case Family::kRejection: {
      std::uint64_t attempt = 0;
      for (;; ++attempt) {
        if (attempt == rejection_budget) throw RejectionBudgetExceeded(attempt);
        Graph g = Graph::from_adjacency(sample_gnp(spec.n, spec.edge_prob, rng));
        if (in_class(g)) {
          out = std::move(g);
          break;
        }
      }
      break;
    }
    case Family::kGirth5: {
      auto adj = sample_gnp(spec.n, spec.edge_prob, rng);
      prune_to_girth5(adj);
      out = Graph::from_adjacency(std::move(adj));
      break;
    }
    case Family::kTwinExpand: {
      auto adj = sample_gnp(spec.n, spec.edge_prob, rng);
      prune_to_girth5(adj);
      for (std::size_t k = 0; k < spec.steps; ++k) {
        add_true_twin(adj, static_cast<Vertex>(k % adj.size()));
      }
      out = Graph::from_adjacency(std::move(adj));
      break;
    }
  }
  if (!in_class(out)) throw std::logic_error("generator produced a graph outside the class");
  return out;
}

inline Graph generate(const GenSpec& spec) { return generate(spec, kRejectionBudget); }

}  // namespace cliquecover::gen

#endif  // CLIQUECOVER_GENERATE_HPP
