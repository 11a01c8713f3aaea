#ifndef CLIQUECOVER_GRAPH_HPP
#define CLIQUECOVER_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cliquecover/errors.hpp"

namespace cliquecover {

using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

  /// Sorts and de-duplicates.
  explicit VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static VertexSet range(std::size_t n) {
    VertexSet s;
    s.members_.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.members_[i] = static_cast<Vertex>(i);
    return s;
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  VertexSet with(Vertex v) const {
    VertexSet s = *this;
    auto it = std::lower_bound(s.members_.begin(), s.members_.end(), v);
    if (it == s.members_.end() || *it != v) s.members_.insert(it, v);
    return s;
  }

  VertexSet without(const VertexSet& other) const {
    VertexSet s;
    std::set_difference(members_.begin(), members_.end(), other.begin(), other.end(),
                        std::back_inserter(s.members_));
    return s;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices [0, n) with sorted neighbour lists.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : adjacency_(n) {}

  /// Duplicate and reversed edges collapse; self-loops and out-of-range
  /// endpoints throw ConstructionError.
  Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw ConstructionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has an endpoint >= n = " + std::to_string(n));
      }
      if (u == v) throw ConstructionError("self-loop at vertex " + std::to_string(u));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    finish();
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Takes ownership of adjacency lists that are already symmetric and loop
  /// free; only sorting and de-duplication happen here.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
    Graph g;
    g.adjacency_ = std::move(adjacency);
    g.finish();
    return g;
  }

  std::size_t n() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& a = adjacency_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  /// All edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < n(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  /// Checks symmetry, sortedness, and absence of loops and duplicates.
  bool audit() const {
    std::size_t half_edges = 0;
    for (Vertex u = 0; u < n(); ++u) {
      const auto& a = adjacency_[u];
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] >= n() || a[i] == u) return false;
        if (i > 0 && a[i - 1] >= a[i]) return false;
        if (!has_edge(a[i], u)) return false;
      }
      half_edges += a.size();
    }
    return half_edges == 2 * num_edges_;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  void finish() {
    std::size_t half_edges = 0;
    for (auto& a : adjacency_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      half_edges += a.size();
    }
    num_edges_ = half_edges / 2;
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
};

/// An induced subgraph plus the map from its vertex ids to the parent's.
struct Induced {
  Graph graph;
  /// to_parent[i] is the parent id of vertex i of `graph`.
  std::vector<Vertex> to_parent;
};

inline Graph complement(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbours(u);
    std::size_t k = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (k < nb.size() && nb[k] == v) {
        ++k;
        continue;
      }
      if (v != u) adj[u].push_back(v);
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

/// Vertex i of the result is the i-th smallest member of s.
inline Induced induced(const Graph& g, const VertexSet& s) {
  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(g.n(), kAbsent);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.n()) {
      throw ConstructionError("vertex " + std::to_string(s[i]) + " out of range for n = " +
                              std::to_string(g.n()));
    }
    local[s[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::vector<Vertex>> adj(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex w : g.neighbours(s[i])) {
      if (local[w] != kAbsent) adj[i].push_back(local[w]);
    }
  }
  return {Graph::from_adjacency(std::move(adj)), s.members()};
}

/// Connected components, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbours(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// Lifts a set of local ids through an index map.
inline VertexSet lift(const VertexSet& s, std::span<const Vertex> to_parent) {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(to_parent[v]);
  return VertexSet(std::move(out));
}

}  // namespace cliquecover

#endif  // CLIQUECOVER_GRAPH_HPP
