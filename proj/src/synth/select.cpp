#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "hivesim/synth/plan.hpp"

namespace hivesim::synth {

namespace {

std::string describe(const dsl::PerfConstraint& c, double actual) {
  return dsl::to_string(c.metric) + (c.upper_bound ? " <= " : " >= ") + c.unit +
         " violated (actual " + std::to_string(actual) + ")";
}

double constraint_actual(const PlanEvaluation& eval, const dsl::PerfConstraint& c) {
  switch (c.metric) {
    case dsl::Metric::ExecTime:
      return eval.predicted_p50_latency_ms * 1e3;  // µs, vs canonical bound
    case dsl::Metric::Latency:
      return eval.predicted_p99_latency_ms * 1e3;
    case dsl::Metric::Cost:
      return eval.cloud_cost_fn_seconds;
    case dsl::Metric::Throughput:
      return std::numeric_limits<double>::quiet_NaN();
  }
  return 0;
}

}  // namespace

bool constraint_met(const PlanEvaluation& eval, const dsl::PerfConstraint& c) {
  const double actual = constraint_actual(eval, c);
  if (std::isnan(actual)) return true;  // unevaluable in v1
  return c.upper_bound ? actual <= c.bound : actual >= c.bound;
}

SelectionResult select_plan(const std::vector<PlanEvaluation>& evals,
                            const std::vector<dsl::PerfConstraint>& constraints) {
  auto objective = [](const PlanEvaluation& e) {
    return std::make_tuple(e.predicted_p99_latency_ms, e.mean_battery_drain_pct,
                           e.cloud_cost_fn_seconds, e.plan_id);
  };

  const PlanEvaluation* best = nullptr;
  for (const auto& e : evals) {
    bool ok = true;
    for (const auto& c : constraints) ok = ok && constraint_met(e, c);
    if (!ok) continue;
    if (best == nullptr || objective(e) < objective(*best)) best = &e;
  }
  if (best) return {true, best->plan_id, {}};

  // Nearest miss: fewest violated constraints, then the usual objective.
  SelectionResult result;
  std::size_t best_violations = std::numeric_limits<std::size_t>::max();
  const PlanEvaluation* nearest = nullptr;
  std::vector<std::string> nearest_violations;
  for (const auto& e : evals) {
    std::vector<std::string> violated;
    for (const auto& c : constraints)
      if (!constraint_met(e, c)) violated.push_back(describe(c, constraint_actual(e, c)));
    if (violated.size() < best_violations ||
        (violated.size() == best_violations &&
         (nearest == nullptr || objective(e) < objective(*nearest)))) {
      best_violations = violated.size();
      nearest = &e;
      nearest_violations = std::move(violated);
    }
  }
  if (nearest) {
    result.miss.nearest_plan_id = nearest->plan_id;
    result.miss.violated = std::move(nearest_violations);
  }
  return result;
}

}  // namespace hivesim::synth
