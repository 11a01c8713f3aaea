#ifndef CLIQUECOVER_ERRORS_HPP
#define CLIQUECOVER_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliquecover {

using Vertex = std::uint32_t;

/// Bad vertex ids, self-loops, malformed vertex sets.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed DIMACS input. `line()` is 1-based; 0 means "no specific line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotConnected : public std::logic_error {
 public:
  NotConnected() : std::logic_error("graph is not connected") {}
};

class NotCutVertex : public std::logic_error {
 public:
  explicit NotCutVertex(Vertex v)
      : std::logic_error("vertex " + std::to_string(v) + " is not a cut vertex") {}
};

class TriangleFound : public std::logic_error {
 public:
  TriangleFound(Vertex a, Vertex b, Vertex c)
      : std::logic_error("graph contains triangle " + std::to_string(a) + " " +
                         std::to_string(b) + " " + std::to_string(c)) {}
};

class TooLarge : public std::length_error {
 public:
  TooLarge(const std::string& what, std::size_t got, std::size_t limit)
      : std::length_error(what + ": " + std::to_string(got) + " exceeds limit " +
                          std::to_string(limit)) {}
};

class RejectionBudgetExceeded : public std::runtime_error {
 public:
  explicit RejectionBudgetExceeded(std::uint64_t attempts)
      : std::runtime_error("no in-class graph after " + std::to_string(attempts) +
                           " attempts") {}
};

/// The input contains an induced bull or C4.
class ClassViolation : public std::runtime_error {
 public:
  enum class Kind { kBull, kC4 };

  ClassViolation(Kind kind, std::vector<Vertex> witness)
      : std::runtime_error(kind == Kind::kBull ? "graph contains an induced bull"
                                               : "graph contains an induced C4"),
        kind_(kind),
        witness_(std::move(witness)) {}

  Kind kind() const noexcept { return kind_; }
  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  Kind kind_;
  std::vector<Vertex> witness_;
};

/// An irreducible, connected graph with a triangle and no terminal cutset.
/// Only reachable on inputs outside the (bull, C4)-free class.
class StructureFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cliquecover

#endif  // CLIQUECOVER_ERRORS_HPP
