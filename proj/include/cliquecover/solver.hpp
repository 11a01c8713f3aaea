#ifndef CLIQUECOVER_SOLVER_HPP
#define CLIQUECOVER_SOLVER_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "cliquecover/graph.hpp"
#include "cliquecover/matching.hpp"
#include "cliquecover/structure.hpp"

namespace cliquecover {

struct SolveStats {
  std::size_t reductions = 0;
  std::size_t cutset_splits = 0;
  std::size_t matching_calls = 0;
  std::size_t max_depth = 0;
};

struct SolveResult {
  std::size_t theta = 0;
  CliqueCover cover;
  SolveStats stats;
};

/// Proper colouring with colours 0..num_colours-1, every colour used.
struct Colouring {
  std::vector<std::size_t> colour_of;
  std::size_t num_colours = 0;

  std::vector<VertexSet> classes() const {
    std::vector<std::vector<Vertex>> out(num_colours);
    for (Vertex v = 0; v < colour_of.size(); ++v) out[colour_of[v]].push_back(v);
    return {out.begin(), out.end()};
  }
};

struct CoverReport {
  bool valid = true;
  std::string violation;
};

/// Above this many vertices the CLI skips class validation unless asked.
inline constexpr std::size_t kDefaultValidateLimit = 300;

inline bool default_validate(std::size_t n) { return n <= kDefaultValidateLimit; }

/// Throws ClassViolation with the witness if g has an induced C4 or bull.
inline void validate_class(const Graph& g) {
  if (auto c4 = find_c4(g)) {
    throw ClassViolation(ClassViolation::Kind::kC4, {c4->begin(), c4->end()});
  }
  if (auto bull = find_bull(g)) {
    throw ClassViolation(ClassViolation::Kind::kBull, {bull->begin(), bull->end()});
  }
}

/// Valid iff every set is a clique of g and every vertex lies in some set.
/// Overlapping sets are allowed.
inline CoverReport verify_cover(const Graph& g, const CliqueCover& cover) {
  std::vector<bool> covered(g.n(), false);
  for (std::size_t i = 0; i < cover.cliques.size(); ++i) {
    const auto& c = cover.cliques[i];
    for (Vertex v : c) {
      if (v >= g.n()) {
        return {false, "set " + std::to_string(i) + " contains out-of-range vertex " +
                           std::to_string(v)};
      }
    }
    if (!is_clique(g, c)) return {false, "set " + std::to_string(i) + " not a clique"};
    for (Vertex v : c) covered[v] = true;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!covered[v]) return {false, "vertex " + std::to_string(v) + " uncovered"};
  }
  return {};
}

/// Undoes a reduction: in reverse order, each dominator joins the first
/// clique holding its witness. The cover and trace share one id namespace.
inline CliqueCover reinsert(CliqueCover cover, const ReductionTrace& trace) {
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    auto target = std::find_if(cover.cliques.begin(), cover.cliques.end(),
                               [&](const VertexSet& c) { return c.contains(it->witness); });
    if (target == cover.cliques.end()) {
      throw std::logic_error("reinsert: witness " + std::to_string(it->witness) +
                             " is in no clique");
    }
    *target = target->with(it->dominator);
  }
  return cover;
}

namespace detail {

inline void append_lifted(CliqueCover& out, const CliqueCover& local,
                          std::span<const Vertex> to_parent) {
  for (const auto& c : local.cliques) out.cliques.push_back(lift(c, to_parent));
}

inline void canonicalize(CliqueCover& cover) {
  std::sort(cover.cliques.begin(), cover.cliques.end());
}

/// Recursive driver. Every method returns a cover in the ids of the graph it
/// was handed.
class Solver {
 public:
  const SolveStats& stats() const noexcept { return stats_; }

  /// Any graph: reduce, solve each component of the reduced graph, replay.
  CliqueCover solve(const Graph& g, std::size_t depth) {
    stats_.max_depth = std::max(stats_.max_depth, depth);
    Reduction red = reduce(g);
    stats_.reductions += red.trace.size();
    CliqueCover reduced_cover;
    for (const auto& comp : components(red.graph)) {
      Induced part = induced(red.graph, comp);
      append_lifted(reduced_cover, solve_irreducible(part.graph, depth), part.to_parent);
    }
    CliqueCover cover;
    append_lifted(cover, reduced_cover, red.surviving.members());
    return reinsert(std::move(cover), red.trace);
  }

  /// Connected and irreducible.
  CliqueCover solve_irreducible(const Graph& h, std::size_t depth) {
    if (is_triangle_free(h)) {
      ++stats_.matching_calls;
      return triangle_free_cover(h, false);
    }
    auto cert = find_terminal_cutset(h);
    if (!cert) {
      throw StructureFailure("irreducible connected graph on " + std::to_string(h.n()) +
                             " vertices has a triangle but no terminal one-point cutset");
    }
    return split(h, *cert, depth);
  }

  CliqueCover split(const Graph& g, const CutCertificate& cert, std::size_t depth) {
    if (!cert.terminal_part) throw std::invalid_argument("split: certificate is not terminal");
    ++stats_.cutset_splits;
    const VertexSet& part = cert.parts[*cert.terminal_part];
    const Vertex v = cert.v;
    const VertexSet all = VertexSet::range(g.n());

    Induced lobe = induced(g, part.with(v));
    Induced lobe_minus_v = induced(g, part);
    stats_.matching_calls += 2;
    const std::size_t with_v = matching_number(lobe.graph);
    const std::size_t without_v = matching_number(lobe_minus_v.graph);
    if (with_v != without_v && with_v != without_v + 1) {
      throw std::logic_error("split: matching numbers differ by more than one");
    }

    CliqueCover cover;
    ++stats_.matching_calls;
    if (with_v == without_v) {
      // v can be a singleton of a minimum cover of the lobe, so it stays in G'.
      append_lifted(cover, triangle_free_cover(lobe_minus_v.graph, false), lobe_minus_v.to_parent);
      Induced rest = induced(g, all.without(part));
      append_lifted(cover, solve(rest.graph, depth + 1), rest.to_parent);
    } else {
      // Every maximum matching of the lobe covers v.
      CliqueCover lobe_cover = triangle_free_cover(lobe.graph, false);
      const auto v_local = static_cast<Vertex>(
          std::lower_bound(lobe.to_parent.begin(), lobe.to_parent.end(), v) -
          lobe.to_parent.begin());
      for (const auto& c : lobe_cover.cliques) {
        if (c.contains(v_local) && c.size() != 2) {
          throw std::logic_error("split: cut vertex unmatched although m(G_i) > m(G_i - v)");
        }
      }
      append_lifted(cover, lobe_cover, lobe.to_parent);
      Induced rest = induced(g, all.without(part.with(v)));
      append_lifted(cover, solve(rest.graph, depth + 1), rest.to_parent);
    }
    return cover;
  }

 private:
  SolveStats stats_;
};

}  // namespace detail

/// Minimum clique cover of a connected graph.
inline SolveResult solve_connected(const Graph& g) {
  if (!is_connected(g)) throw NotConnected();
  detail::Solver solver;
  SolveResult r;
  r.cover = solver.solve(g, 0);
  detail::canonicalize(r.cover);
  r.theta = r.cover.size();
  r.stats = solver.stats();
  return r;
}

/// One split step on a terminal cutset, the remainder solved recursively.
/// The caller is responsible for g being irreducible where that matters.
inline SolveResult split_at_cutset(const Graph& g, const CutCertificate& cert) {
  detail::Solver solver;
  SolveResult r;
  r.cover = solver.split(g, cert, 0);
  detail::canonicalize(r.cover);
  r.theta = r.cover.size();
  r.stats = solver.stats();
  return r;
}

/// Minimum clique cover. Exact on (bull, C4)-free graphs; with `validate`
/// other inputs are rejected with ClassViolation before solving. Without it
/// an out-of-class input yields a valid cover or StructureFailure.
inline SolveResult min_clique_cover(const Graph& g, bool validate) {
  if (validate) validate_class(g);
  detail::Solver solver;
  SolveResult r;
  for (const auto& comp : components(g)) {
    Induced part = induced(g, comp);
    detail::append_lifted(r.cover, solver.solve(part.graph, 0), part.to_parent);
  }
  detail::canonicalize(r.cover);
  r.theta = r.cover.size();
  r.stats = solver.stats();
  return r;
}

/// Minimum colouring of a (bull, 2K2)-free graph: the colour classes are the
/// cliques of a minimum clique cover of the complement.
inline Colouring min_colouring(const Graph& h, bool validate) {
  Graph co = complement(h);
  if (validate) validate_class(co);
  SolveResult r = min_clique_cover(co, false);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  Colouring col;
  col.colour_of.assign(h.n(), kUnset);
  for (const auto& c : r.cover.cliques) {
    bool used = false;
    for (Vertex v : c) {
      if (col.colour_of[v] == kUnset) {
        col.colour_of[v] = col.num_colours;
        used = true;
      }
    }
    if (used) ++col.num_colours;
  }
  return col;
}

}  // namespace cliquecover

#endif  // CLIQUECOVER_SOLVER_HPP
