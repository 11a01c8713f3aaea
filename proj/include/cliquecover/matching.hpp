#ifndef CLIQUECOVER_MATCHING_HPP
#define CLIQUECOVER_MATCHING_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "cliquecover/graph.hpp"
#include "cliquecover/structure.hpp"

#ifndef CLIQUECOVER_DEBUG_CHECKS
#ifdef NDEBUG
#define CLIQUECOVER_DEBUG_CHECKS 0
#else
#define CLIQUECOVER_DEBUG_CHECKS 1
#endif
#endif

namespace cliquecover {

/// Pairwise vertex-disjoint edges, each stored as (u, v) with u < v, sorted.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const noexcept { return edges.size(); }
};

/// A list of vertex sets, each meant to induce a clique, jointly covering
/// every vertex. The solvers in this library always emit partitions.
struct CliqueCover {
  std::vector<VertexSet> cliques;

  std::size_t size() const noexcept { return cliques.size(); }
  friend bool operator==(const CliqueCover&, const CliqueCover&) = default;
};

namespace detail {

/// Edmonds' blossom algorithm, one BFS per exposed root. Vertices and
/// neighbours are scanned in ascending order so the result depends only on
/// the input graph.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g), n_(g.n()), mate_(n_, kNone), parent_(n_), base_(n_), in_queue_(n_),
        in_blossom_(n_), lca_mark_(n_) {}

  std::vector<Vertex> run() {
    // Greedy start: each free vertex takes its smallest free neighbour.
    for (Vertex u = 0; u < n_; ++u) {
      if (mate_[u] != kNone) continue;
      for (Vertex w : g_.neighbours(u)) {
        if (mate_[w] == kNone) {
          mate_[u] = w;
          mate_[w] = u;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != kNone) continue;
      Vertex end = find_augmenting_path(root);
      if (end != kNone) augment(end);
    }
    return mate_;
  }

  static constexpr Vertex kNone = static_cast<Vertex>(-1);

 private:
  Vertex find_augmenting_path(Vertex root) {
    std::fill(parent_.begin(), parent_.end(), kNone);
    std::fill(in_queue_.begin(), in_queue_.end(), false);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    queue_.clear();
    in_queue_[root] = true;
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex v = queue_[head];
      for (Vertex to : g_.neighbours(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          contract(v, to);
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          Vertex next = mate_[to];
          in_queue_[next] = true;
          queue_.push_back(next);
        }
      }
    }
    return kNone;
  }

  // Shrinks the odd cycle closed by edge (v, to) onto its base.
  void contract(Vertex v, Vertex to) {
    Vertex cycle_base = lowest_common_ancestor(v, to);
    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
    mark_path(v, cycle_base, to);
    mark_path(to, cycle_base, v);
    for (Vertex i = 0; i < n_; ++i) {
      if (!in_blossom_[base_[i]]) continue;
      base_[i] = cycle_base;
      if (!in_queue_[i]) {
        in_queue_[i] = true;
        queue_.push_back(i);
      }
    }
  }

  Vertex lowest_common_ancestor(Vertex a, Vertex b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), false);
    while (true) {
      a = base_[a];
      lca_mark_[a] = true;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (lca_mark_[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex cycle_base, Vertex child) {
    while (base_[v] != cycle_base) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  void augment(Vertex end) {
    while (end != kNone) {
      Vertex prev = parent_[end];
      Vertex prev_mate = mate_[prev];
      mate_[end] = prev;
      mate_[prev] = end;
      end = prev_mate;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> in_queue_;
  std::vector<bool> in_blossom_;
  std::vector<bool> lca_mark_;
  std::vector<Vertex> queue_;
};

}  // namespace detail

/// Maximum cardinality matching in a general graph.
inline Matching maximum_matching(const Graph& g) {
  auto mate = detail::BlossomMatcher(g).run();
  Matching m;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (mate[u] != detail::BlossomMatcher::kNone && u < mate[u]) m.edges.emplace_back(u, mate[u]);
  }
  return m;
}

inline std::size_t matching_number(const Graph& g) { return maximum_matching(g).size(); }

/// Minimum clique cover of a triangle-free graph: the edges of a maximum
/// matching plus a singleton for every exposed vertex, |cover| = n - m(g).
/// With `check_triangle_free` set, throws TriangleFound on a triangle.
inline CliqueCover triangle_free_cover(const Graph& g,
                                       bool check_triangle_free = CLIQUECOVER_DEBUG_CHECKS) {
  if (check_triangle_free) {
    if (auto t = find_triangle(g)) throw TriangleFound((*t)[0], (*t)[1], (*t)[2]);
  }
  Matching m = maximum_matching(g);
  std::vector<bool> matched(g.n(), false);
  CliqueCover cover;
  cover.cliques.reserve(g.n() - m.size());
  for (auto [u, v] : m.edges) {
    matched[u] = matched[v] = true;
    cover.cliques.push_back(VertexSet{u, v});
  }
  for (Vertex u = 0; u < g.n(); ++u) {
    if (!matched[u]) cover.cliques.push_back(VertexSet{u});
  }
  return cover;
}

}  // namespace cliquecover

#endif  // CLIQUECOVER_MATCHING_HPP
