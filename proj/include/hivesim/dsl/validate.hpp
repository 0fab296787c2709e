#pragma once

#include <string>
#include <vector>

#include "hivesim/dsl/ast.hpp"

namespace hivesim::dsl {

struct ValidationIssue {
  std::string rule;     // stable identifier, e.g. "cycle", "conflicting-ordering"
  std::string subject;  // task or directive the issue names
  std::string message;

  bool operator==(const ValidationIssue&) const = default;
};

// Empty result iff all TaskGraph invariants hold. Purely structural; never
// throws.
std::vector<ValidationIssue> validate(const TaskGraph& graph);

}  // namespace hivesim::dsl
