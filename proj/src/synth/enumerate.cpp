#include <algorithm>

#include "hivesim/synth/plan.hpp"

namespace hivesim::synth {

namespace {

// Forced placement per task: -1 free, 0 Cloud, 1 Edge. Scope carries the Edge
// device set from a Place directive when given.
struct Forced {
  int bit = -1;
  std::string scope = "all";
};

std::vector<Forced> forced_bits(const dsl::TaskGraph& graph, bool prune) {
  std::vector<Forced> forced(graph.tasks.size());
  for (size_t i = 0; i < graph.tasks.size(); ++i) {
    const auto& t = graph.tasks[i];
    if (prune && (t.is_sensor_source() || t.is_actuation())) forced[i].bit = 1;
    if (const auto* place = graph.place_for(t.name)) {
      const std::string& loc = place->payload.at("location");
      if (loc == "Cloud") {
        if (forced[i].bit == 1)
          throw ConstraintConflict("Place(" + t.name +
                                   ", Cloud) conflicts with the edge-only rule for "
                                   "sensor sources and actuation tasks");
        forced[i].bit = 0;
      } else if (loc.rfind("Edge:", 0) == 0) {
        forced[i].bit = 1;
        forced[i].scope = loc.substr(5);
      }
    }
  }
  return forced;
}

}  // namespace

std::vector<PlacementPlan> enumerate_plans(const dsl::TaskGraph& graph,
                                           const EnumerateOptions& options) {
  const size_t n = graph.tasks.size();
  const auto forced = forced_bits(graph, options.prune);

  int free_count = 0;
  for (const auto& f : forced)
    if (f.bit == -1) ++free_count;
  if (free_count > options.max_free_tasks)
    throw EnumerationBudgetExceeded(
        "placement space is 2^" + std::to_string(free_count) +
        "; add Place directives or hints to cut it below 2^" +
        std::to_string(options.max_free_tasks + 1));

  std::vector<PlacementPlan> plans;
  // Binary counting over tasks in declaration order; task i contributes bit i
  // (Cloud=0, Edge=1) and plan_id is the counter value, so ordering and ids
  // are stable regardless of pruning.
  const std::uint64_t limit = n >= 63 ? 0 : (std::uint64_t{1} << n);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) {
      const int bit = static_cast<int>((mask >> i) & 1);
      if (forced[i].bit != -1 && forced[i].bit != bit) ok = false;
    }
    if (!ok) continue;
    PlacementPlan plan;
    plan.plan_id = static_cast<std::int64_t>(mask);
    for (size_t i = 0; i < n; ++i) {
      const bool edge = ((mask >> i) & 1) != 0;
      plan.assignment[graph.tasks[i].name] =
          edge ? Location::edge(forced[i].scope) : Location::cloud();
    }
    plans.push_back(std::move(plan));
  }
  return plans;
}

PlacementPlan attach_data_paths(PlacementPlan plan, const dsl::TaskGraph& graph,
                                const AccelConfig& accel) {
  plan.edge_paths.clear();
  for (const auto& [parent, child] : graph.edges()) {
    const bool parent_edge = plan.edge_task(parent);
    const bool child_edge = plan.edge_task(child);
    DataPathKind kind;
    if (parent_edge && child_edge) {
      kind = DataPathKind::OnDeviceLocal;
    } else if (!parent_edge && !child_edge) {
      kind = accel.remote_mem ? DataPathKind::RemoteMemory : DataPathKind::StoreExchange;
    } else {
      kind = accel.network_accel ? DataPathKind::RpcAccelerated : DataPathKind::RpcCloudEdge;
    }
    plan.edge_paths[{parent, child}] = kind;
  }
  return plan;
}

}  // namespace hivesim::synth
