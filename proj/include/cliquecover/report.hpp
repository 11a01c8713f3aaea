#ifndef CLIQUECOVER_REPORT_HPP
#define CLIQUECOVER_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "cliquecover/graph.hpp"
#include "cliquecover/solver.hpp"

// The JSON result document:
//   {"n": int, "theta": int, "cliques": [[int, ...], ...],
//    "mode": "cover" | "colouring", "validated": bool, "stats": {...}}
// Vertex ids are 0-based; each clique is ascending and the list of cliques is
// in lexicographic order.

namespace cliquecover::report {

using nlohmann::json;

enum class Mode { kCover, kColouring };

struct ResultDocument {
  std::size_t n = 0;
  std::size_t theta = 0;
  std::vector<VertexSet> cliques;
  Mode mode = Mode::kCover;
  bool validated = false;
  json stats = json::object();
};

inline json stats_json(const SolveStats& s) {
  return {{"reductions", s.reductions},
          {"cutset_splits", s.cutset_splits},
          {"matching_calls", s.matching_calls},
          {"max_depth", s.max_depth}};
}

inline ResultDocument cover_document(std::size_t n, const SolveResult& r, bool validated) {
  ResultDocument doc;
  doc.n = n;
  doc.theta = r.theta;
  doc.cliques = r.cover.cliques;
  std::sort(doc.cliques.begin(), doc.cliques.end());
  doc.mode = Mode::kCover;
  doc.validated = validated;
  doc.stats = stats_json(r.stats);
  return doc;
}

inline ResultDocument colouring_document(std::size_t n, const Colouring& c, bool validated) {
  ResultDocument doc;
  doc.n = n;
  doc.theta = c.num_colours;
  doc.cliques = c.classes();
  std::sort(doc.cliques.begin(), doc.cliques.end());
  doc.mode = Mode::kColouring;
  doc.validated = validated;
  doc.stats = {{"num_colours", c.num_colours}};
  return doc;
}

inline json to_json(const ResultDocument& doc) {
  json cliques = json::array();
  for (const auto& c : doc.cliques) cliques.push_back(c.members());
  return {{"n", doc.n},
          {"theta", doc.theta},
          {"cliques", std::move(cliques)},
          {"mode", doc.mode == Mode::kCover ? "cover" : "colouring"},
          {"validated", doc.validated},
          {"stats", doc.stats}};
}

/// Throws ParseError (line 0) on schema violations.
inline ResultDocument from_json(const json& j) {
  auto fail = [](const std::string& what) { return ParseError(0, "result document: " + what); };
  if (!j.is_object()) throw fail("top level must be an object");
  for (const char* key : {"n", "theta", "cliques"}) {
    if (!j.contains(key)) throw fail(std::string("missing key '") + key + "'");
  }
  if (!j["n"].is_number_unsigned()) throw fail("'n' must be a non-negative integer");
  if (!j["theta"].is_number_unsigned()) throw fail("'theta' must be a non-negative integer");
  if (!j["cliques"].is_array()) throw fail("'cliques' must be an array");

  ResultDocument doc;
  doc.n = j["n"].get<std::size_t>();
  doc.theta = j["theta"].get<std::size_t>();
  for (const auto& c : j["cliques"]) {
    if (!c.is_array()) throw fail("each clique must be an array");
    std::vector<Vertex> members;
    for (const auto& v : c) {
      if (!v.is_number_unsigned()) throw fail("vertex ids must be non-negative integers");
      members.push_back(v.get<Vertex>());
    }
    doc.cliques.emplace_back(std::move(members));
  }
  if (j.contains("mode")) {
    const auto mode = j["mode"].get<std::string>();
    if (mode == "cover") {
      doc.mode = Mode::kCover;
    } else if (mode == "colouring") {
      doc.mode = Mode::kColouring;
    } else {
      throw fail("unknown mode '" + mode + "'");
    }
  }
  if (j.contains("validated")) doc.validated = j["validated"].get<bool>();
  if (j.contains("stats")) doc.stats = j["stats"];
  return doc;
}

/// A cover document is checked as a clique cover of g; a colouring document
/// as a clique cover of the complement (its classes must be stable in g).
/// The declared theta must equal the number of sets.
inline CoverReport verify_document(const Graph& g, const ResultDocument& doc) {
  if (doc.n != g.n()) {
    return {false, "document declares n = " + std::to_string(doc.n) + " but graph has " +
                       std::to_string(g.n()) + " vertices"};
  }
  CliqueCover cover{doc.cliques};
  CoverReport r = doc.mode == Mode::kCover ? verify_cover(g, cover)
                                           : verify_cover(complement(g), cover);
  if (!r.valid) return r;
  if (doc.theta != cover.size()) {
    return {false, "declared theta " + std::to_string(doc.theta) + " but " +
                       std::to_string(cover.size()) + " sets listed"};
  }
  return {};
}

}  // namespace cliquecover::report

#endif  // CLIQUECOVER_REPORT_HPP
