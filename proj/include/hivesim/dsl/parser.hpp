#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hivesim/dsl/ast.hpp"

namespace hivesim::dsl {

struct ParseError {
  std::string message;
  int line = 1;
  int col = 1;

  // "file:line:col: message"
  std::string format(const std::string& file) const;
};

struct ParseResult {
  std::optional<TaskGraph> graph;
  std::optional<ParseError> error;

  bool ok() const { return graph.has_value(); }
};

// Parses a whole program. Never throws on malformed input; any input yields
// either a graph or a located error. Statement order is irrelevant except
// that the TaskGraph statement must precede the Task statements it lists.
ParseResult parse_program(std::string_view source);

}  // namespace hivesim::dsl
