#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hivesim::dsl {

// One task tier. Empty data_in/data_out means the slot was given as None.
struct TaskDef {
  std::string name;
  std::string data_in;
  std::string data_out;
  std::string code_ref;
  std::map<std::string, std::string> task_args;
  std::vector<std::string> parents;
  std::vector<std::string> children;
  bool parents_declared = false;   // parentTask given explicitly (even as None)
  bool children_declared = false;

  bool is_sensor_source() const { return data_in.empty(); }
  bool is_actuation() const {
    auto it = task_args.find("actuation");
    return it != task_args.end() && it->second == "true";
  }

  bool operator==(const TaskDef&) const = default;
};

enum class OrderKind { Parallel, Overlap, Serial, Synchronize };

// Pairwise ordering relation; for Synchronize, `a` is the task and `b` the
// condition string (only 'all' is interpreted).
struct OrderingDirective {
  OrderKind kind;
  std::string a;
  std::string b;

  bool operator==(const OrderingDirective&) const = default;
};

enum class DirectiveKind { Schedule, Isolate, Place, Restore, Learn, Persist };

struct ManagementDirective {
  DirectiveKind kind;
  std::string subject;
  std::map<std::string, std::string> payload;

  bool operator==(const ManagementDirective&) const = default;
};

enum class Metric { ExecTime, Latency, Throughput, Cost };

struct PerfConstraint {
  Metric metric;
  double bound = 0;       // canonical unit: µs for times, req/s, cost units
  std::string unit;       // as written, for rendering
  bool upper_bound = true;

  bool operator==(const PerfConstraint&) const = default;
};

struct TaskGraph {
  std::vector<TaskDef> tasks;
  std::vector<OrderingDirective> orderings;
  std::vector<ManagementDirective> directives;
  std::vector<PerfConstraint> constraints;

  const TaskDef* find_task(const std::string& name) const;
  int task_index(const std::string& name) const;  // -1 if absent

  // Dependency edges (parent, child), deduplicated, in declaration order of
  // the parent then child.
  std::vector<std::pair<std::string, std::string>> edges() const;

  // The Place directive for a task, if any.
  const ManagementDirective* place_for(const std::string& task) const;

  // True when the task carries a Synchronize 'all' barrier.
  bool has_all_barrier(const std::string& task) const;

  bool operator==(const TaskGraph&) const = default;
};

std::string to_string(OrderKind k);
std::string to_string(DirectiveKind k);
std::string to_string(Metric m);

}  // namespace hivesim::dsl
