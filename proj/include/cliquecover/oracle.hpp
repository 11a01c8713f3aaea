#ifndef CLIQUECOVER_ORACLE_HPP
#define CLIQUECOVER_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "cliquecover/graph.hpp"
#include "cliquecover/structure.hpp"

// Exponential-time reference solvers for small graphs. They share no code
// with the polynomial algorithms they are used to check.

namespace cliquecover::oracle {

inline constexpr std::size_t kMaxThetaVertices = 16;
inline constexpr std::size_t kMaxMatchingVertices = 16;
inline constexpr std::size_t kMaxChromaticVertices = 12;
inline constexpr std::size_t kMaxEnumerationVertices = 8;

namespace detail {

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> masks(g.n(), 0);
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v : g.neighbours(u)) masks[u] |= std::uint32_t{1} << v;
  }
  return masks;
}

}  // namespace detail

/// Clique cover number by dynamic programming over vertex subsets:
/// theta(S) = 1 + min theta(S - Q) over maximal cliques Q of G[S] through the
/// lowest vertex of S.
inline std::size_t brute_theta(const Graph& g) {
  const std::size_t n = g.n();
  if (n > kMaxThetaVertices) throw TooLarge("brute_theta vertex count", n, kMaxThetaVertices);
  const auto adj = detail::adjacency_masks(g);
  std::vector<std::int8_t> memo(std::size_t{1} << n, -1);
  memo[0] = 0;

  std::function<int(std::uint32_t)> theta = [&](std::uint32_t s) -> int {
    if (memo[s] >= 0) return memo[s];
    const int pivot = std::countr_zero(s);
    int best = static_cast<int>(n) + 1;
    // Bron-Kerbosch inside N(pivot) & S; each maximal R gives Q = R + pivot.
    std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)> expand =
        [&](std::uint32_t r, std::uint32_t p, std::uint32_t x) {
          if (p == 0 && x == 0) {
            best = std::min(best, 1 + theta(s & ~(r | (std::uint32_t{1} << pivot))));
            return;
          }
          while (p != 0) {
            const int v = std::countr_zero(p);
            const std::uint32_t bit = std::uint32_t{1} << v;
            expand(r | bit, p & adj[v], x & adj[v]);
            p &= ~bit;
            x |= bit;
          }
        };
    expand(0, adj[pivot] & s, 0);
    memo[s] = static_cast<std::int8_t>(best);
    return best;
  };
  return static_cast<std::size_t>(theta(n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1)));
}

/// Matching number by exhaustive search: the lowest free vertex is either
/// left exposed or matched to each free neighbour in turn. Memoized on the
/// set of free vertices.
inline std::size_t brute_matching(const Graph& g) {
  const std::size_t n = g.n();
  if (n > kMaxMatchingVertices) {
    throw TooLarge("brute_matching vertex count", n, kMaxMatchingVertices);
  }
  const auto adj = detail::adjacency_masks(g);
  std::vector<std::int8_t> memo(std::size_t{1} << n, -1);
  std::function<int(std::uint32_t)> best = [&](std::uint32_t free) -> int {
    if (free == 0) return 0;
    if (memo[free] >= 0) return memo[free];
    const int u = std::countr_zero(free);
    const std::uint32_t rest = free & ~(std::uint32_t{1} << u);
    int result = best(rest);
    for (std::uint32_t cand = adj[u] & rest; cand != 0; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      result = std::max(result, 1 + best(rest & ~(std::uint32_t{1} << w)));
    }
    memo[free] = static_cast<std::int8_t>(result);
    return result;
  };
  return static_cast<std::size_t>(best(n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1)));
}

/// Chromatic number by iterative deepening over k with backtracking; a
/// vertex may open at most one new colour.
inline std::size_t brute_chromatic(const Graph& h) {
  const std::size_t n = h.n();
  if (n > kMaxChromaticVertices) {
    throw TooLarge("brute_chromatic vertex count", n, kMaxChromaticVertices);
  }
  if (n == 0) return 0;
  std::vector<int> colour(n, -1);
  std::function<bool(std::size_t, int, int)> assign = [&](std::size_t v, int used, int k) {
    if (v == n) return true;
    for (int c = 0; c < std::min(used + 1, k); ++c) {
      bool ok = true;
      for (Vertex w : h.neighbours(static_cast<Vertex>(v))) {
        if (w < v && colour[w] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      colour[v] = c;
      if (assign(v + 1, std::max(used, c + 1), k)) return true;
      colour[v] = -1;
    }
    return false;
  };
  for (int k = 1;; ++k) {
    if (assign(0, 0, k)) return static_cast<std::size_t>(k);
  }
}

// ---------------------------------------------------------------------------
// Canonical forms for graphs with at most 11 vertices

/// Upper-triangle adjacency bits of g relabelled by `order` (new label i is
/// old vertex order[i]), pair (i, j) with i < j at bit position in row-major
/// order.
inline std::uint64_t adjacency_code(const Graph& g, std::span<const Vertex> order) {
  std::uint64_t code = 0;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j, ++bit) {
      if (g.has_edge(order[i], order[j])) code |= std::uint64_t{1} << bit;
    }
  }
  return code;
}

inline Graph decode_adjacency(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++bit) {
      if ((code >> bit) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

/// Cells of the stable colour-refinement partition, in an isomorphism
/// invariant order (initial colour is the degree).
inline std::vector<std::vector<Vertex>> refined_cells(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::size_t> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
  std::size_t num_colours = 0;
  while (true) {
    std::vector<std::vector<std::size_t>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<std::size_t> nb;
      for (Vertex w : g.neighbours(v)) nb.push_back(colour[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<std::size_t>> distinct(sig.begin(), sig.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v) {
      colour[v] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    if (distinct.size() == num_colours) break;
    num_colours = distinct.size();
  }
  std::vector<std::vector<Vertex>> cells(num_colours);
  for (Vertex v = 0; v < n; ++v) cells[colour[v]].push_back(v);
  return cells;
}

/// Minimum adjacency code over all labellings that respect the refined
/// cell order. Equal for two graphs iff they are isomorphic.
inline std::uint64_t canonical_code(const Graph& g) {
  if (g.n() > 11) throw TooLarge("canonical_code vertex count", g.n(), 11);
  auto cells = refined_cells(g);
  std::vector<Vertex> order;
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> walk = [&](std::size_t cell) {
    if (cell == cells.size()) {
      best = std::min(best, adjacency_code(g, order));
      return;
    }
    std::vector<Vertex> perm = cells[cell];
    do {
      order.insert(order.end(), perm.begin(), perm.end());
      walk(cell + 1);
      order.resize(order.size() - perm.size());
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  walk(0);
  return best;
}

inline Graph canonical_form(const Graph& g) { return decode_adjacency(g.n(), canonical_code(g)); }

/// Every connected (bull, C4)-free graph on n vertices exactly once up to
/// isomorphism, in canonical form, ordered by canonical code.
///
/// Grows graphs one vertex at a time: every connected graph has a vertex
/// whose deletion leaves it connected, and the class is closed under
/// induced subgraphs, so each member on n vertices extends a member on n - 1.
inline std::vector<Graph> enumerate_class_graphs(std::size_t n) {
  if (n > kMaxEnumerationVertices) {
    throw TooLarge("enumerate_class_graphs vertex count", n, kMaxEnumerationVertices);
  }
  if (n == 0) return {};
  std::vector<Graph> level{Graph(1)};
  for (std::size_t k = 2; k <= n; ++k) {
    std::set<std::uint64_t> codes;
    for (const auto& g : level) {
      const std::size_t old_n = g.n();
      auto base = g.edges();
      for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << old_n); ++mask) {
        auto edges = base;
        for (Vertex u = 0; u < old_n; ++u) {
          if ((mask >> u) & 1U) edges.emplace_back(u, static_cast<Vertex>(old_n));
        }
        Graph h(k, edges);
        if (in_class(h)) codes.insert(canonical_code(h));
      }
    }
    level.clear();
    for (auto code : codes) level.push_back(decode_adjacency(k, code));
  }
  return level;
}

}  // namespace cliquecover::oracle

#endif  // CLIQUECOVER_ORACLE_HPP
