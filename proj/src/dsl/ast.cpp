#include "hivesim/dsl/ast.hpp"

#include <algorithm>
#include <set>

namespace hivesim::dsl {

const TaskDef* TaskGraph::find_task(const std::string& name) const {
  for (const auto& t : tasks)
    if (t.name == name) return &t;
  return nullptr;
}

int TaskGraph::task_index(const std::string& name) const {
  for (size_t i = 0; i < tasks.size(); ++i)
    if (tasks[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<std::pair<std::string, std::string>> TaskGraph::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  std::set<std::pair<std::string, std::string>> seen;
  auto add = [&](const std::string& parent, const std::string& child) {
    if (seen.insert({parent, child}).second) out.emplace_back(parent, child);
  };
  for (const auto& t : tasks) {
    for (const auto& c : t.children) add(t.name, c);
    for (const auto& p : t.parents) add(p, t.name);
  }
  return out;
}

const ManagementDirective* TaskGraph::place_for(const std::string& task) const {
  for (const auto& d : directives)
    if (d.kind == DirectiveKind::Place && d.subject == task) return &d;
  return nullptr;
}

bool TaskGraph::has_all_barrier(const std::string& task) const {
  for (const auto& o : orderings)
    if (o.kind == OrderKind::Synchronize && o.a == task && o.b == "all") return true;
  return false;
}

std::string to_string(OrderKind k) {
  switch (k) {
    case OrderKind::Parallel: return "Parallel";
    case OrderKind::Overlap: return "Overlap";
    case OrderKind::Serial: return "Serial";
    case OrderKind::Synchronize: return "Synchronize";
  }
  return "";
}

std::string to_string(DirectiveKind k) {
  switch (k) {
    case DirectiveKind::Schedule: return "Schedule";
    case DirectiveKind::Isolate: return "Isolate";
    case DirectiveKind::Place: return "Place";
    case DirectiveKind::Restore: return "Restore";
    case DirectiveKind::Learn: return "Learn";
    case DirectiveKind::Persist: return "Persist";
  }
  return "";
}

std::string to_string(Metric m) {
  switch (m) {
    case Metric::ExecTime: return "execTime";
    case Metric::Latency: return "latency";
    case Metric::Throughput: return "throughput";
    case Metric::Cost: return "cost";
  }
  return "";
}

}  // namespace hivesim::dsl
