#ifndef CLIQUECOVER_STRUCTURE_HPP
#define CLIQUECOVER_STRUCTURE_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <tuple>
#include <vector>

#include "cliquecover/graph.hpp"

namespace cliquecover {

namespace detail {

/// Dense adjacency bit-matrix for the forbidden-subgraph detectors.
class BitMatrix {
 public:
  explicit BitMatrix(const Graph& g)
      : n_(g.n()), words_((g.n() + 63) / 64), bits_(n_ * words_, 0) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : g.neighbours(u)) bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }

  std::size_t words() const noexcept { return words_; }
  const std::uint64_t* row(Vertex v) const { return bits_.data() + v * words_; }
  bool test(Vertex u, Vertex v) const { return (row(u)[v / 64] >> (v % 64)) & 1U; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Smallest set bit at index >= from.
inline std::optional<Vertex> first_bit(std::span<const std::uint64_t> scratch, Vertex from) {
  for (std::size_t w = from / 64; w < scratch.size(); ++w) {
    std::uint64_t word = scratch[w];
    if (w == from / 64) word &= ~std::uint64_t{0} << (from % 64);
    if (word != 0) return static_cast<Vertex>(w * 64 + std::countr_zero(word));
  }
  return std::nullopt;
}

/// True iff N(y) \ {x} is a subset of N(x); both lists sorted.
inline bool dominates(std::span<const Vertex> nx, std::span<const Vertex> ny, Vertex x) {
  if (ny.size() > nx.size() + 1) return false;
  std::size_t i = 0;
  for (Vertex w : ny) {
    if (w == x) continue;
    while (i < nx.size() && nx[i] < w) ++i;
    if (i == nx.size() || nx[i] != w) return false;
  }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Forbidden and small induced subgraphs

/// Lexicographically smallest triangle (u < v < w), if any.
inline std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  for (Vertex u = 0; u < g.n(); ++u) {
    auto nu = g.neighbours(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbours(v);
      auto iu = std::upper_bound(nu.begin(), nu.end(), v);
      auto iv = std::upper_bound(nv.begin(), nv.end(), v);
      while (iu != nu.end() && iv != nv.end()) {
        if (*iu < *iv) {
          ++iu;
        } else if (*iv < *iu) {
          ++iv;
        } else {
          return std::array<Vertex, 3>{u, v, *iu};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

/// An induced 4-cycle as (a, b, c, d) in cycle order, a < c and b < d.
inline std::optional<std::array<Vertex, 4>> find_c4(const Graph& g) {
  const std::size_t n = g.n();
  if (n < 4) return std::nullopt;
  detail::BitMatrix adj(g);
  const std::size_t words = adj.words();
  std::vector<std::uint64_t> common(words);
  std::vector<std::uint64_t> scratch(words);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c = a + 1; c < n; ++c) {
      if (adj.test(a, c)) continue;
      bool any = false;
      for (std::size_t w = 0; w < words; ++w) {
        common[w] = adj.row(a)[w] & adj.row(c)[w];
        any |= common[w] != 0;
      }
      if (!any) continue;
      for (Vertex b = 0; b < n; ++b) {
        if (!((common[b / 64] >> (b % 64)) & 1U)) continue;
        for (std::size_t w = 0; w < words; ++w) scratch[w] = common[w] & ~adj.row(b)[w];
        if (auto d = detail::first_bit(scratch, b + 1)) return std::array<Vertex, 4>{a, b, c, *d};
      }
    }
  }
  return std::nullopt;
}

/// An induced bull as (x, y, z, p, q): xyz is a triangle, p is adjacent to x
/// only and q to y only among the five.
inline std::optional<std::array<Vertex, 5>> find_bull(const Graph& g) {
  const std::size_t n = g.n();
  if (n < 5) return std::nullopt;
  detail::BitMatrix adj(g);
  const std::size_t words = adj.words();
  std::vector<std::uint64_t> pend_x(words), pend_y(words), scratch(words);

  // Vertices adjacent to `own` but to neither of the other two, minus those two.
  auto pendants = [&](Vertex own, Vertex o1, Vertex o2, std::vector<std::uint64_t>& out) {
    bool any = false;
    for (std::size_t w = 0; w < words; ++w) {
      out[w] = adj.row(own)[w] & ~adj.row(o1)[w] & ~adj.row(o2)[w];
      any |= out[w] != 0;
    }
    out[o1 / 64] &= ~(std::uint64_t{1} << (o1 % 64));
    out[o2 / 64] &= ~(std::uint64_t{1} << (o2 % 64));
    return any;
  };

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbours(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbours(v)) {
        if (w <= v || !adj.test(u, w)) continue;
        const std::array<Vertex, 3> tri{u, v, w};
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            Vertex x = tri[i], y = tri[j], z = tri[3 - i - j];
            if (!pendants(x, y, z, pend_x) || !pendants(y, x, z, pend_y)) continue;
            for (Vertex p = 0; p < n; ++p) {
              if (!((pend_x[p / 64] >> (p % 64)) & 1U)) continue;
              for (std::size_t k = 0; k < words; ++k) scratch[k] = pend_y[k] & ~adj.row(p)[k];
              if (auto q = detail::first_bit(scratch, 0)) return std::array<Vertex, 5>{x, y, z, p, *q};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

/// (bull, C4)-free membership.
inline bool in_class(const Graph& g) { return !find_c4(g) && !find_bull(g); }

// ---------------------------------------------------------------------------
// Domination and reduction

struct DominatedPair {
  Vertex dominator;
  Vertex witness;
  friend bool operator==(const DominatedPair&, const DominatedPair&) = default;
};

/// First adjacent pair (x, y), x ascending then y ascending, such that every
/// neighbour of y other than x is a neighbour of x.
inline std::optional<DominatedPair> find_dominated_pair(const Graph& g) {
  for (Vertex x = 0; x < g.n(); ++x) {
    for (Vertex y : g.neighbours(x)) {
      if (detail::dominates(g.neighbours(x), g.neighbours(y), x)) return DominatedPair{x, y};
    }
  }
  return std::nullopt;
}

inline bool is_reducible(const Graph& g) { return find_dominated_pair(g).has_value(); }

/// Removals in order, ids in the input graph's namespace.
struct ReductionTrace {
  std::vector<DominatedPair> steps;

  std::size_t size() const noexcept { return steps.size(); }
};

struct Reduction {
  Graph graph;
  /// surviving[i] is the input id of vertex i of `graph`.
  VertexSet surviving;
  ReductionTrace trace;
};

/// Repeatedly deletes the dominator of the first dominated pair until the
/// graph is irreducible.
///
/// Equivalent to calling find_dominated_pair from scratch after every
/// removal, but only re-examines vertices whose status can have changed:
/// deleting x can only create a new dominated pair whose witness was a
/// neighbour of x, so the candidates are the neighbours of N(x).
inline Reduction reduce(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v].assign(g.neighbours(v).begin(), g.neighbours(v).end());

  std::vector<bool> alive(n, true);
  std::vector<bool> pending(n, true);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> queue;
  for (Vertex v = 0; v < n; ++v) queue.push(v);

  ReductionTrace trace;
  while (!queue.empty()) {
    Vertex x = queue.top();
    queue.pop();
    if (!pending[x] || !alive[x]) continue;
    pending[x] = false;
    std::optional<Vertex> witness;
    for (Vertex y : adj[x]) {
      if (detail::dominates(adj[x], adj[y], x)) {
        witness = y;
        break;
      }
    }
    if (!witness) continue;

    trace.steps.push_back({x, *witness});
    alive[x] = false;
    std::vector<Vertex> former = std::move(adj[x]);
    adj[x].clear();
    for (Vertex b : former) {
      auto& nb = adj[b];
      nb.erase(std::lower_bound(nb.begin(), nb.end(), x));
    }
    for (Vertex b : former) {
      for (Vertex a : adj[b]) {
        if (!pending[a]) {
          pending[a] = true;
          queue.push(a);
        }
      }
    }
  }

  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) keep.push_back(v);
  }
  VertexSet surviving(std::move(keep));
  Graph reduced = induced(g, surviving).graph;
  return {std::move(reduced), std::move(surviving), std::move(trace)};
}

// ---------------------------------------------------------------------------
// Cut vertices and one-point cutsets

/// Articulation points of a connected graph (iterative Tarjan).
inline VertexSet cut_vertices(const Graph& g) {
  const std::size_t n = g.n();
  if (!is_connected(g)) throw NotConnected();
  if (n == 0) return {};
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<Vertex> disc(n, kNone), low(n, 0), parent(n, kNone);
  std::vector<std::size_t> next(n, 0);
  std::vector<bool> is_cut(n, false);
  Vertex timer = 0;
  std::size_t root_children = 0;
  const Vertex root = 0;

  std::vector<Vertex> stack{root};
  disc[root] = low[root] = timer++;
  while (!stack.empty()) {
    Vertex v = stack.back();
    auto nb = g.neighbours(v);
    if (next[v] < nb.size()) {
      Vertex w = nb[next[v]++];
      if (disc[w] == kNone) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        if (v == root) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      stack.pop_back();
      Vertex p = parent[v];
      if (p != kNone) {
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) is_cut[p] = true;
      }
    }
  }
  if (root_children >= 2) is_cut[root] = true;

  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

/// Components of g - v in g's ids, ordered by smallest member.
inline std::vector<VertexSet> components_without(const Graph& g, Vertex v) {
  auto rest = induced(g, VertexSet::range(g.n()).without(VertexSet{v}));
  std::vector<VertexSet> parts;
  for (const auto& c : components(rest.graph)) parts.push_back(lift(c, rest.to_parent));
  return parts;
}

/// Smallest component size of g - v for a cut vertex v of connected g.
inline std::size_t f_value(const Graph& g, Vertex v) {
  if (!is_connected(g)) throw NotConnected();
  if (v >= g.n()) throw NotCutVertex(v);
  auto parts = components_without(g, v);
  if (parts.size() < 2) throw NotCutVertex(v);
  std::size_t f = parts.front().size();
  for (const auto& p : parts) f = std::min(f, p.size());
  return f;
}

/// A one-point cutset with the components it leaves. `terminal_part`
/// indexes a part C such that C + v induces a triangle-free graph.
struct CutCertificate {
  Vertex v = 0;
  std::vector<VertexSet> parts;
  std::size_t f = 0;
  std::optional<std::size_t> terminal_part;
};

/// Scans cut vertices by ascending f(v), then index; within a cut vertex,
/// parts by ascending size, then part index. Returns the first (v, C) with
/// C + v triangle-free, or nullopt if there is none.
inline std::optional<CutCertificate> find_terminal_cutset(const Graph& g) {
  VertexSet cuts = cut_vertices(g);
  if (cuts.empty()) return std::nullopt;

  std::vector<CutCertificate> certs;
  certs.reserve(cuts.size());
  for (Vertex v : cuts) {
    CutCertificate c;
    c.v = v;
    c.parts = components_without(g, v);
    c.f = c.parts.front().size();
    for (const auto& p : c.parts) c.f = std::min(c.f, p.size());
    certs.push_back(std::move(c));
  }
  std::stable_sort(certs.begin(), certs.end(),
                   [](const CutCertificate& a, const CutCertificate& b) { return a.f < b.f; });

  for (auto& cert : certs) {
    std::vector<std::size_t> order(cert.parts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return cert.parts[a].size() < cert.parts[b].size();
    });
    for (std::size_t i : order) {
      if (is_triangle_free(induced(g, cert.parts[i].with(cert.v)).graph)) {
        cert.terminal_part = i;
        return std::move(cert);
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Predicates used by the structural property suites

inline bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.has_edge(s[i], s[j])) return false;
    }
  }
  return true;
}

inline bool is_stable(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.has_edge(s[i], s[j])) return false;
    }
  }
  return true;
}

inline VertexSet neighbourhood(const Graph& g, Vertex v) {
  auto nb = g.neighbours(v);
  return VertexSet(std::vector<Vertex>(nb.begin(), nb.end()));
}

inline bool is_simplicial(const Graph& g, Vertex v) { return is_clique(g, neighbourhood(g, v)); }

/// Hole-free test by repeatedly deleting a simplicial vertex.
inline bool is_chordal(const Graph& g) {
  Graph cur = g;
  while (cur.n() > 0) {
    std::optional<Vertex> simplicial;
    for (Vertex v = 0; v < cur.n() && !simplicial; ++v) {
      if (is_simplicial(cur, v)) simplicial = v;
    }
    if (!simplicial) return false;
    cur = induced(cur, VertexSet::range(cur.n()).without(VertexSet{*simplicial})).graph;
  }
  return true;
}

/// Connected with no cut vertex, at least two vertices.
inline bool is_biconnected(const Graph& g) {
  return g.n() >= 2 && is_connected(g) && cut_vertices(g).empty();
}

inline std::optional<Vertex> find_universal_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) + 1 == g.n()) return v;
  }
  return std::nullopt;
}

/// Basic in the cap-free sense: chordal, or a biconnected triangle-free
/// graph plus at most one vertex adjacent to all others.
inline bool is_basic(const Graph& g) {
  if (is_chordal(g)) return true;
  if (is_triangle_free(g) && is_biconnected(g)) return true;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (g.degree(u) + 1 != g.n()) continue;
    Graph rest = induced(g, VertexSet::range(g.n()).without(VertexSet{u})).graph;
    if (is_triangle_free(rest) && is_biconnected(rest)) return true;
  }
  return false;
}

}  // namespace cliquecover

#endif  // CLIQUECOVER_STRUCTURE_HPP
