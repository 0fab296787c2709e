#include "hivesim/dsl/render.hpp"

#include <cctype>
#include <sstream>

namespace hivesim::dsl {

namespace {

bool identifier_safe(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return s != "None";
}

std::string bare_or_quoted(const std::string& s) {
  return identifier_safe(s) ? s : "'" + s + "'";
}

std::string data_kind(const std::string& s) {
  return s.empty() ? "None" : bare_or_quoted(s);
}

std::string name_list(const std::vector<std::string>& names) {
  std::string out = "[";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += "'" + names[i] + "'";
  }
  return out + "]";
}

}  // namespace

std::string render_program(const TaskGraph& graph) {
  std::ostringstream out;

  out << "TaskGraph(list=[";
  for (size_t i = 0; i < graph.tasks.size(); ++i) {
    if (i) out << ",";
    out << "'" << graph.tasks[i].name << "'";
  }
  out << "],constraint=[";
  for (size_t i = 0; i < graph.constraints.size(); ++i) {
    if (i) out << ",";
    const auto& c = graph.constraints[i];
    out << to_string(c.metric) << "='" << c.unit << "'";
  }
  out << "])\n";

  for (const auto& t : graph.tasks) {
    out << "\nTask(" << bare_or_quoted(t.name) << "," << data_kind(t.data_in) << ","
        << data_kind(t.data_out) << ",'" << t.code_ref << "'";
    for (const auto& [key, value] : t.task_args) out << "," << key << "='" << value << "'";
    if (t.parents_declared)
      out << ",parentTask=" << (t.parents.empty() ? "None" : name_list(t.parents));
    if (t.children_declared)
      out << ",childTask=" << (t.children.empty() ? "None" : name_list(t.children));
    out << ")\n";
  }

  if (!graph.orderings.empty()) out << "\n";
  for (const auto& o : graph.orderings) {
    if (o.kind == OrderKind::Synchronize)
      out << "Synchronize(" << bare_or_quoted(o.a) << ",'" << o.b << "')\n";
    else
      out << to_string(o.kind) << "(" << bare_or_quoted(o.a) << "," << bare_or_quoted(o.b)
          << ")\n";
  }

  if (!graph.directives.empty()) out << "\n";
  for (const auto& d : graph.directives) {
    out << to_string(d.kind) << "(" << bare_or_quoted(d.subject);
    if (d.kind == DirectiveKind::Place) {
      const auto it = d.payload.find("location");
      out << ",'" << (it == d.payload.end() ? "" : it->second) << "'";
    } else if (d.kind == DirectiveKind::Learn) {
      const auto it = d.payload.find("scope");
      out << ",'" << (it == d.payload.end() ? "" : it->second) << "'";
    } else {
      for (const auto& [key, value] : d.payload) out << "," << key << "='" << value << "'";
    }
    out << ")\n";
  }

  return out.str();
}

}  // namespace hivesim::dsl
