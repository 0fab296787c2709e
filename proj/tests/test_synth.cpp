#include <algorithm>
#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "hivesim/dsl/parser.hpp"
#include "hivesim/synth/plan.hpp"

using namespace hivesim;
using namespace hivesim::synth;

namespace {

dsl::TaskGraph chain2() {
  // A is a sensor source feeding B.
  auto r = dsl::parse_program(R"(
TaskGraph(list=['a','b'],constraint=[])
Task(a,None,k0,'x',childTask=['b'])
Task(b,k0,k1,'x')
)");
  REQUIRE(r.ok());
  return *r.graph;
}

// Independent brute-force oracle: filter all 2^n bitmasks directly from the
// graph's declared fields, no shared code with enumerate_plans.
std::set<std::uint64_t> oracle_masks(const dsl::TaskGraph& g, bool prune) {
  std::set<std::uint64_t> out;
  const size_t n = g.tasks.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (size_t i = 0; i < n; ++i) {
      const bool edge = ((mask >> i) & 1) != 0;
      const auto& t = g.tasks[i];
      if (prune) {
        const bool source = t.data_in.empty();
        const auto it = t.task_args.find("actuation");
        const bool actuation = it != t.task_args.end() && it->second == "true";
        if ((source || actuation) && !edge) ok = false;
      }
      for (const auto& d : g.directives) {
        if (d.kind != dsl::DirectiveKind::Place || d.subject != t.name) continue;
        const auto& loc = d.payload.at("location");
        if (loc == "Cloud" && edge) ok = false;
        if (loc.rfind("Edge:", 0) == 0 && !edge) ok = false;
      }
    }
    if (ok) out.insert(mask);
  }
  return out;
}

std::set<std::uint64_t> plan_ids(const std::vector<PlacementPlan>& plans) {
  std::set<std::uint64_t> out;
  for (const auto& p : plans) out.insert(static_cast<std::uint64_t>(p.plan_id));
  return out;
}

}  // namespace

TEST_CASE("2-task chain: source rule keeps the sensor on the edge") {
  const auto g = chain2();
  const auto plans = enumerate_plans(g);
  REQUIRE(plans.size() == 2);  // A edge; B cloud or edge
  for (const auto& p : plans) CHECK(p.at("a").is_edge());
}

TEST_CASE("2-task chain without pruning yields all 4 plans") {
  const auto g = chain2();
  const auto plans = enumerate_plans(g, {.prune = false});
  CHECK(plans.size() == 4);
  // Deterministic order: binary counting, Cloud=0, task declaration order.
  CHECK(plans[0].plan_id == 0);
  CHECK(plans[3].plan_id == 3);
  CHECK(!plans[0].at("a").is_edge());
  CHECK(plans[3].at("b").is_edge());
}

TEST_CASE("fully constrained single task yields exactly one plan") {
  auto r = dsl::parse_program(R"(
TaskGraph(list=['t'],constraint=[])
Task(t,k0,k1,'x')
Place(t,'Cloud')
)");
  REQUIRE(r.ok());
  const auto plans = enumerate_plans(*r.graph);
  REQUIRE(plans.size() == 1);
  CHECK(!plans[0].at("t").is_edge());
}

TEST_CASE("jointly unsatisfiable Place directives raise ConstraintConflict") {
  auto r = dsl::parse_program(R"(
TaskGraph(list=['s'],constraint=[])
Task(s,None,k0,'x')
Place(s,'Cloud')
)");
  REQUIRE(r.ok());
  CHECK_THROWS_AS(enumerate_plans(*r.graph), ConstraintConflict);
}

TEST_CASE("enumeration equals brute-force bitmask oracle on random graphs") {
  sim::RngStream rng(20240811, "synth.enum");
  for (int i = 0; i < 1000; ++i) {
    const auto g = testgen::random_graph(rng, 10);
    for (bool prune : {true, false}) {
      std::set<std::uint64_t> expected = oracle_masks(g, prune);
      std::vector<PlacementPlan> got;
      try {
        got = enumerate_plans(g, {.prune = prune});
      } catch (const ConstraintConflict&) {
        CHECK(expected.empty());
        continue;
      }
      if (g.tasks.empty()) {
        CHECK(got.size() == 1);  // the empty assignment
        continue;
      }
      CHECK(plan_ids(got) == expected);
    }
  }
}

TEST_CASE("pruning monotonicity: adding a Place never increases plan count") {
  sim::RngStream rng(7, "synth.mono");
  for (int i = 0; i < 200; ++i) {
    auto g = testgen::random_graph(rng, 8);
    if (g.tasks.empty()) continue;
    std::vector<PlacementPlan> before;
    try {
      before = enumerate_plans(g);
    } catch (const ConstraintConflict&) {
      continue;
    }
    // Add one Place on a task without one.
    std::vector<const dsl::TaskDef*> unplaced;
    for (const auto& t : g.tasks)
      if (!g.place_for(t.name)) unplaced.push_back(&t);
    if (unplaced.empty()) continue;
    const auto* t = unplaced[rng.below(unplaced.size())];
    dsl::ManagementDirective d;
    d.kind = dsl::DirectiveKind::Place;
    d.subject = t->name;
    d.payload["location"] = rng.bernoulli(0.5) ? "Edge:all" : "Cloud";
    g.directives.push_back(d);
    std::vector<PlacementPlan> after;
    try {
      after = enumerate_plans(g);
    } catch (const ConstraintConflict&) {
      after.clear();
    }
    CHECK(after.size() <= before.size());
  }
}

TEST_CASE("enumeration budget: too many free tasks is refused") {
  dsl::TaskGraph g;
  for (int i = 0; i < 18; ++i) {
    dsl::TaskDef t;
    t.name = "t" + std::to_string(i);
    t.data_in = "k";
    t.data_out = "k";
    g.tasks.push_back(t);
  }
  CHECK_THROWS_AS(enumerate_plans(g), EnumerationBudgetExceeded);
}

TEST_CASE("attach_data_paths follows the path rules") {
  auto r = dsl::parse_program(R"(
TaskGraph(list=['src','mid','sink'],constraint=[])
Task(src,None,k0,'x',childTask=['mid'])
Task(mid,k0,k1,'x',childTask=['sink'])
Task(sink,k1,k2,'x')
)");
  REQUIRE(r.ok());
  const auto& g = *r.graph;

  PlacementPlan plan;
  plan.assignment["src"] = Location::edge();
  plan.assignment["mid"] = Location::cloud();
  plan.assignment["sink"] = Location::cloud();

  SUBCASE("accel off: baseline RPC and store exchange") {
    auto p = attach_data_paths(plan, g, AccelConfig{false, false});
    CHECK(p.edge_paths.at({"src", "mid"}) == DataPathKind::RpcCloudEdge);
    CHECK(p.edge_paths.at({"mid", "sink"}) == DataPathKind::StoreExchange);
  }
  SUBCASE("remote memory on intra-cloud edges") {
    auto p = attach_data_paths(plan, g, AccelConfig{false, true});
    CHECK(p.edge_paths.at({"mid", "sink"}) == DataPathKind::RemoteMemory);
    CHECK(p.edge_paths.at({"src", "mid"}) == DataPathKind::RpcCloudEdge);
  }
  SUBCASE("network acceleration on cross-tier edges") {
    auto p = attach_data_paths(plan, g, AccelConfig{true, false});
    CHECK(p.edge_paths.at({"src", "mid"}) == DataPathKind::RpcAccelerated);
  }
  SUBCASE("all-edge plan uses on-device paths regardless of accel") {
    PlacementPlan all_edge;
    for (const auto& t : g.tasks) all_edge.assignment[t.name] = Location::edge();
    for (bool net : {false, true}) {
      for (bool mem : {false, true}) {
        auto p = attach_data_paths(all_edge, g, AccelConfig{net, mem});
        for (const auto& [edge, kind] : p.edge_paths)
          CHECK(kind == DataPathKind::OnDeviceLocal);
      }
    }
  }
}

TEST_CASE("plan JSON round-trips") {
  auto g = chain2();
  auto plans = enumerate_plans(g);
  auto p = attach_data_paths(plans[1], g, AccelConfig{true, true});
  CHECK(PlacementPlan::from_json(p.to_json()) == p);
}

TEST_CASE("select_plan basics") {
  PlanEvaluation a{.plan_id = 1,
                   .predicted_p50_latency_ms = 10,
                   .predicted_p99_latency_ms = 50,
                   .mean_battery_drain_pct = 5,
                   .peak_bandwidth_mbps = 100,
                   .cloud_cost_fn_seconds = 2};
  PlanEvaluation b = a;
  b.plan_id = 2;
  b.predicted_p99_latency_ms = 300;

  dsl::PerfConstraint latency{dsl::Metric::Latency, 100'000.0, "100ms", true};

  SUBCASE("single eval meeting constraints wins") {
    auto sel = select_plan({a}, {latency});
    CHECK(sel.feasible);
    CHECK(sel.plan_id == 1);
  }
  SUBCASE("violating eval is filtered out") {
    auto sel = select_plan({b, a}, {latency});
    CHECK(sel.feasible);
    CHECK(sel.plan_id == 1);
  }
  SUBCASE("no feasible plan reports nearest miss") {
    auto sel = select_plan({b}, {latency});
    CHECK(!sel.feasible);
    CHECK(sel.miss.nearest_plan_id == 2);
    REQUIRE(sel.miss.violated.size() == 1);
    CHECK(sel.miss.violated[0].find("latency") != std::string::npos);
  }
}

TEST_CASE("select_plan matches an exhaustive filter+sort oracle and ignores input order") {
  sim::RngStream rng(5, "synth.select");
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<PlanEvaluation> evals;
    const int n = 1 + static_cast<int>(rng.below(8));
    for (int i = 0; i < n; ++i) {
      PlanEvaluation e;
      e.plan_id = i;
      e.predicted_p50_latency_ms = rng.uniform(1, 50);
      e.predicted_p99_latency_ms = e.predicted_p50_latency_ms + rng.uniform(0, 100);
      e.mean_battery_drain_pct = rng.uniform(0, 40);
      e.cloud_cost_fn_seconds = rng.uniform(0, 10);
      evals.push_back(e);
    }
    std::vector<dsl::PerfConstraint> constraints{
        {dsl::Metric::Latency, rng.uniform(10, 120) * 1e3, "x", true},
        {dsl::Metric::Cost, rng.uniform(1, 8), "y", true}};

    // Oracle: filter then lexicographic sort.
    std::vector<PlanEvaluation> feasible;
    for (const auto& e : evals) {
      if (e.predicted_p99_latency_ms * 1e3 <= constraints[0].bound &&
          e.cloud_cost_fn_seconds <= constraints[1].bound)
        feasible.push_back(e);
    }
    std::sort(feasible.begin(), feasible.end(), [](const auto& x, const auto& y) {
      return std::make_tuple(x.predicted_p99_latency_ms, x.mean_battery_drain_pct,
                             x.cloud_cost_fn_seconds, x.plan_id) <
             std::make_tuple(y.predicted_p99_latency_ms, y.mean_battery_drain_pct,
                             y.cloud_cost_fn_seconds, y.plan_id);
    });

    auto sel = select_plan(evals, constraints);
    if (feasible.empty()) {
      CHECK(!sel.feasible);
    } else {
      CHECK(sel.feasible);
      CHECK(sel.plan_id == feasible.front().plan_id);
    }

    // Permutation invariance.
    std::vector<PlanEvaluation> shuffled = evals;
    for (size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    auto sel2 = select_plan(shuffled, constraints);
    CHECK(sel2.feasible == sel.feasible);
    CHECK(sel2.plan_id == sel.plan_id);
  }
}
