#pragma once

#include <string>

#include "hivesim/dsl/ast.hpp"

namespace hivesim::dsl {

// Canonical program text; parse_program(render_program(g)) yields a graph
// structurally equal to g.
std::string render_program(const TaskGraph& graph);

}  // namespace hivesim::dsl
