#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hivesim/dsl/ast.hpp"

#include "json.hpp"

namespace hivesim::synth {

struct Location {
  enum class Kind { Cloud, Edge } kind = Kind::Cloud;
  std::string edge_scope;  // "all" or explicit device set; set iff kind==Edge

  static Location cloud() { return {Kind::Cloud, ""}; }
  static Location edge(std::string scope = "all") { return {Kind::Edge, std::move(scope)}; }
  bool is_edge() const { return kind == Kind::Edge; }

  bool operator==(const Location&) const = default;
};

enum class DataPathKind {
  RpcCloudEdge,
  RpcAccelerated,
  StoreExchange,
  RemoteMemory,
  SameContainer,
  OnDeviceLocal,
};

std::string to_string(DataPathKind k);
DataPathKind data_path_from_string(const std::string& s);

struct AccelConfig {
  bool network_accel = false;
  bool remote_mem = false;

  static AccelConfig from_flag(const std::string& flag);  // none|net|mem|all
  std::string to_flag() const;
};

struct PlacementPlan {
  std::map<std::string, Location> assignment;
  std::map<std::pair<std::string, std::string>, DataPathKind> edge_paths;
  std::int64_t plan_id = 0;

  const Location& at(const std::string& task) const { return assignment.at(task); }
  bool edge_task(const std::string& task) const { return assignment.at(task).is_edge(); }

  nlohmann::json to_json() const;
  static PlacementPlan from_json(const nlohmann::json& j);

  bool operator==(const PlacementPlan&) const = default;
};

struct PlanEvaluation {
  std::int64_t plan_id = 0;
  double predicted_p50_latency_ms = 0;
  double predicted_p99_latency_ms = 0;
  double mean_battery_drain_pct = 0;
  double peak_bandwidth_mbps = 0;
  double cloud_cost_fn_seconds = 0;

  nlohmann::json to_json() const;
  static std::string csv_header();
  std::string csv_row() const;
};

struct ConstraintConflict : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnumerationBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Applies the data-path rules to every dependency edge of `graph` for the
// given assignment: cross-tier edges ride RPC (accelerated when enabled),
// cloud-to-cloud rides the backing store unless remote memory is enabled,
// and edge-to-edge stays on-device. SameContainer is a runtime scheduler
// outcome, never planned here.
PlacementPlan attach_data_paths(PlacementPlan plan, const dsl::TaskGraph& graph,
                                const AccelConfig& accel);

struct EnumerateOptions {
  bool prune = true;       // meaningfulness rules on sources/actuation
  int max_free_tasks = 16; // beyond this, require Place directives
};

// Every {Cloud,Edge}^n assignment that honors Place directives and (when
// pruning) keeps sensor sources and actuation tasks on the edge. Plans are
// ordered by binary counting over tasks in declaration order, Cloud=0, and
// plan_id is that counter value.
std::vector<PlacementPlan> enumerate_plans(const dsl::TaskGraph& graph,
                                           const EnumerateOptions& options = {});

struct NoFeasiblePlan {
  std::int64_t nearest_plan_id = -1;
  std::vector<std::string> violated;  // constraint descriptions for the nearest miss
};

struct SelectionResult {
  bool feasible = false;
  std::int64_t plan_id = -1;
  NoFeasiblePlan miss;
};

// Among evaluations meeting all constraints, picks the plan minimizing
// (p99 latency, battery drain, cloud cost) lexicographically; ties break to
// the lowest plan_id. Pure function of its inputs; input order is irrelevant.
SelectionResult select_plan(const std::vector<PlanEvaluation>& evals,
                            const std::vector<dsl::PerfConstraint>& constraints);

// True when the evaluation meets the constraint. Throughput constraints are
// recorded by the DSL but have no counterpart in PlanEvaluation; they are
// treated as met (see README).
bool constraint_met(const PlanEvaluation& eval, const dsl::PerfConstraint& c);

}  // namespace hivesim::synth
