#pragma once

// Line-oriented text format for guarded timed automata:
//
//   gta <name>
//   clocks <id> (, <id>)*
//   location <id> [initial] [invariant: <conj>]
//   edge <id> -> <id> [guard: <conj>] [reset: <id> (, <id>)*] [locguard: <id>]
//
// `<conj>` joins atomic constraints (`x <= 4`, `x - y < 2`) with `&&`.
// Everything after `#` is a comment. The clock name `t` is reserved for the
// global-time clock and may only be declared first.

#include <string>
#include <string_view>
#include <vector>

#include "dtn/error.hpp"
#include "dtn/model.hpp"

namespace dtn {

struct SourceSpan {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, in bytes
};

struct Diagnostic {
  ErrorCode code;
  SourceSpan span;
  std::string message;
};

/// Raised by parse_gta; carries every diagnostic found. code() is the code
/// of the first one.
class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Parses and validates a model. Throws ParseError on syntax or name
/// resolution problems and dtn::Error for semantic ones (see validate).
Gta parse_gta(std::string_view text);

/// Canonical text: declaration order, one item per line; reparses to an
/// equal model.
std::string write_gta(const Gta& model);

/// Graphviz digraph. Location guards appear as `[q]` in edge labels,
/// invariants as node sublabels.
std::string export_dot(const Gta& model);

/// Renders a constraint in the text format, "true" when trivial.
std::string format_constraint(const Gta& model, const ClockConstraint& cc);

}  // namespace dtn
