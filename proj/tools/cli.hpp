#ifndef CLIQUECOVER_TOOLS_CLI_HPP
#define CLIQUECOVER_TOOLS_CLI_HPP

// Command-line driver for the clique cover library. `run` is kept separate
// from main() so the test suites can call it in-process.
//
// Exit codes:
//   0 success
//   1 usage error, unreadable file, or malformed input (with line number)
//   2 class violation (induced bull or C4; bull or 2K2 in colour mode)
//   3 structure failure on an unvalidated out-of-class input
//   4 cover verification failure
//   5 generator rejection budget exhausted

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cliquecover/dimacs.hpp"
#include "cliquecover/generate.hpp"
#include "cliquecover/graph.hpp"
#include "cliquecover/matching.hpp"
#include "cliquecover/oracle.hpp"
#include "cliquecover/report.hpp"
#include "cliquecover/solver.hpp"

namespace cliquecover::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kClassViolation = 2,
  kStructureFailure = 3,
  kVerificationFailure = 4,
  kGenerationBudget = 5,
};

namespace detail {

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return dimacs::read(in);
}

inline std::string one_based(std::span<const Vertex> vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(vs[i] + 1);
  }
  return s;
}

inline bool resolve_validate(bool force_on, bool force_off, std::size_t n, std::ostream& err) {
  if (force_on) return true;
  if (force_off) return false;
  if (default_validate(n)) return true;
  err << "warning: n = " << n << " exceeds " << kDefaultValidateLimit
      << "; skipping class validation (pass --validate to force)\n";
  return false;
}

inline void print_violation(const ClassViolation& e, bool colour_mode, std::ostream& err) {
  std::string what = e.kind() == ClassViolation::Kind::kBull ? "bull"
                     : colour_mode                           ? "2K2"
                                                             : "C4";
  err << "induced " << what << ": " << one_based(e.witness()) << '\n';
}

inline double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t k = xs.size();
  if (k == 0) return 0.0;
  return k % 2 == 1 ? xs[k / 2] : 0.5 * (xs[k / 2 - 1] + xs[k / 2]);
}

struct SolveOptions {
  std::string file;
  bool validate = false;
  bool no_validate = false;
  bool json = false;
  bool text = false;
};

inline int cmd_solve(const SolveOptions& o, bool colour_mode, std::ostream& out,
                     std::ostream& err) {
  Graph g = load_graph(o.file);
  const bool validate = resolve_validate(o.validate, o.no_validate, g.n(), err);
  report::ResultDocument doc;
  if (colour_mode) {
    doc = report::colouring_document(g.n(), min_colouring(g, validate), validate);
  } else {
    doc = report::cover_document(g.n(), min_clique_cover(g, validate), validate);
  }
  if (o.json) {
    out << report::to_json(doc).dump() << '\n';
    return kOk;
  }
  out << (colour_mode ? "colours " : "theta ") << doc.theta << '\n';
  for (const auto& c : doc.cliques) {
    out << (colour_mode ? "class " : "clique ") << one_based(c.members()) << '\n';
  }
  return kOk;
}

inline int cmd_verify(const std::string& graph_file, const std::string& cover_file,
                      std::ostream& out, std::ostream& err) {
  Graph g = load_graph(graph_file);
  std::ifstream in(cover_file);
  if (!in) throw std::runtime_error("cannot open '" + cover_file + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  auto r = report::verify_document(g, report::from_json(j));
  if (!r.valid) {
    err << r.violation << '\n';
    return kVerificationFailure;
  }
  out << "ok\n";
  return kOk;
}

struct GenOptions {
  std::string family = "girth5";
  std::size_t n = 0;
  double p = 0.0;
  std::size_t steps = 0;
  std::uint64_t seed = 0;
  std::string out;
};

inline int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  auto family = gen::parse_family(o.family);
  if (!family) {
    err << "unknown family '" << o.family << "'\n";
    return kInputError;
  }
  gen::GenSpec spec{*family, o.n, o.p, o.steps, o.seed};
  Graph g;
  try {
    g = gen::generate(spec);
  } catch (const RejectionBudgetExceeded& e) {
    err << e.what() << '\n';
    return kGenerationBudget;
  }
  const std::string text =
      dimacs::write_string(g, {"seed=" + std::to_string(o.seed) + " family=" + o.family});
  // Re-certify what will actually be written.
  if (!in_class(dimacs::read_string(text))) {
    err << "internal error: serialized graph failed class certification\n";
    return kInputError;
  }
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + o.out + "'");
    f << text;
  }
  return kOk;
}

inline int cmd_oracle(const std::string& file, const std::string& what, std::ostream& out,
                      std::ostream& err) {
  Graph g = load_graph(file);
  if (what == "theta" || what == "all") out << "theta " << oracle::brute_theta(g) << '\n';
  if (what == "matching" || what == "all") out << "matching " << oracle::brute_matching(g) << '\n';
  if (what == "chromatic" || what == "all") {
    out << "chromatic " << oracle::brute_chromatic(g) << '\n';
  }
  if (what != "theta" && what != "matching" && what != "chromatic" && what != "all") {
    err << "unknown oracle '" << what << "'\n";
    return kInputError;
  }
  return kOk;
}

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::string family = "twin-expand";
  std::size_t repeats = 3;
  std::optional<double> p;
  std::uint64_t seed = 1;
};

/// Instance used by `bench` for a target vertex count. twin-expand splits
/// the count into a girth5 base of n/2 vertices and n - n/2 twin steps.
/// Without an explicit p, sparse families aim for average degree about 3.
inline gen::GenSpec bench_spec(gen::Family family, std::size_t n, std::optional<double> p,
                               std::uint64_t seed) {
  gen::GenSpec spec;
  spec.family = family;
  spec.seed = seed;
  spec.n = family == gen::Family::kTwinExpand ? n / 2 : n;
  spec.steps = family == gen::Family::kTwinExpand ? n - n / 2 : 0;
  if (p) {
    spec.edge_prob = *p;
  } else if (family == gen::Family::kRejection) {
    spec.edge_prob = 0.3;
  } else {
    spec.edge_prob = spec.n > 1 ? std::min(1.0, 3.0 / static_cast<double>(spec.n - 1)) : 0.0;
  }
  return spec;
}

inline int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  auto family = gen::parse_family(o.family);
  if (!family) {
    err << "unknown family '" << o.family << "'\n";
    return kInputError;
  }
  if (o.repeats == 0) {
    err << "--repeats must be positive\n";
    return kInputError;
  }
  out << "n,m_edges,median_ms,theta\n";
  std::vector<std::pair<std::size_t, double>> rows;
  for (std::size_t size : o.sizes) {
    Graph g;
    try {
      g = gen::generate(bench_spec(*family, size, o.p, o.seed));
    } catch (const RejectionBudgetExceeded& e) {
      err << e.what() << '\n';
      return kGenerationBudget;
    }
    std::vector<double> times;
    std::size_t theta = 0;
    for (std::size_t r = 0; r < o.repeats; ++r) {
      auto t0 = std::chrono::steady_clock::now();
      theta = min_clique_cover(g, false).theta;
      auto t1 = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    const double ms = median(times);
    out << g.n() << ',' << g.num_edges() << ',' << std::fixed << std::setprecision(3) << ms
        << std::defaultfloat << ',' << theta << '\n';
    rows.emplace_back(g.n(), ms);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[j].first == 2 * rows[i].first && rows[i].second > 0.0) {
        err << "ratio time(" << rows[j].first << ")/time(" << rows[i].first
            << ") = " << std::fixed << std::setprecision(2) << rows[j].second / rows[i].second
            << std::defaultfloat << '\n';
      }
    }
  }
  return kOk;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum clique cover of (bull, C4)-free graphs", "ccover"};
  app.require_subcommand(1);

  detail::SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Minimum clique cover of a DIMACS graph");
  detail::SolveOptions color_opts;
  auto* color = app.add_subcommand("color", "Minimum colouring of a (bull, 2K2)-free graph");
  for (auto [sub, o] : {std::pair{solve, &solve_opts}, std::pair{color, &color_opts}}) {
    sub->add_option("file", o->file, "DIMACS graph file")->required();
    auto* on = sub->add_flag("--validate", o->validate, "Reject graphs outside the class");
    auto* off = sub->add_flag("--no-validate", o->no_validate, "Skip class validation");
    on->excludes(off);
    auto* js = sub->add_flag("--json", o->json, "Print the JSON result document");
    auto* tx = sub->add_flag("--text", o->text, "Print plain text (default)");
    js->excludes(tx);
  }

  std::string verify_graph, verify_cover_file;
  auto* verify = app.add_subcommand("verify", "Check a JSON cover against a graph");
  verify->add_option("graph", verify_graph, "DIMACS graph file")->required();
  verify->add_option("cover", verify_cover_file, "JSON result document")->required();

  detail::GenOptions gen_opts;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a (bull, C4)-free graph");
  gen_cmd->add_option("--family", gen_opts.family, "rejection | girth5 | twin-expand")
      ->required();
  gen_cmd->add_option("--n", gen_opts.n, "Vertex count (base count for twin-expand)")->required();
  gen_cmd->add_option("--p", gen_opts.p, "Edge probability");
  gen_cmd->add_option("--steps", gen_opts.steps, "True-twin duplications (twin-expand)");
  gen_cmd->add_option("--seed", gen_opts.seed, "64-bit seed");
  gen_cmd->add_option("--out", gen_opts.out, "Output file (default stdout)");

  std::string oracle_file, oracle_what = "all";
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force theta, matching, chromatic number");
  oracle_cmd->add_option("file", oracle_file, "DIMACS graph file")->required();
  oracle_cmd->add_option("--what", oracle_what, "theta | matching | chromatic | all");

  detail::BenchOptions bench_opts;
  double bench_p = -1.0;
  auto* bench = app.add_subcommand("bench", "Time the solver on generated instances");
  bench->add_option("--sizes", bench_opts.sizes, "Comma-separated vertex counts")
      ->required()
      ->delimiter(',');
  bench->add_option("--family", bench_opts.family, "rejection | girth5 | twin-expand");
  bench->add_option("--repeats", bench_opts.repeats, "Solves per size");
  bench->add_option("--p", bench_p, "Edge probability (default: average degree about 3)");
  bench->add_option("--seed", bench_opts.seed, "64-bit seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }
  if (bench_p >= 0.0) bench_opts.p = bench_p;

  const bool colour_mode = color->parsed();
  try {
    if (solve->parsed()) return detail::cmd_solve(solve_opts, false, out, err);
    if (color->parsed()) return detail::cmd_solve(color_opts, true, out, err);
    if (verify->parsed()) return detail::cmd_verify(verify_graph, verify_cover_file, out, err);
    if (gen_cmd->parsed()) return detail::cmd_gen(gen_opts, out, err);
    if (oracle_cmd->parsed()) return detail::cmd_oracle(oracle_file, oracle_what, out, err);
    if (bench->parsed()) return detail::cmd_bench(bench_opts, out, err);
  } catch (const ClassViolation& e) {
    detail::print_violation(e, colour_mode, err);
    return kClassViolation;
  } catch (const StructureFailure& e) {
    err << "structure failure: " << e.what() << '\n';
    return kStructureFailure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace cliquecover::cli

#endif  // CLIQUECOVER_TOOLS_CLI_HPP
