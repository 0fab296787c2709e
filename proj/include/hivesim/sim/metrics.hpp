#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hivesim/sim/rng.hpp"
#include "hivesim/sim/time.hpp"

#include "json.hpp"

namespace hivesim::sim {

// Latency/value sample accumulator. Exact up to `exact_cap` samples, then
// degrades to a fixed-size uniform reservoir (algorithm R).
class SampleSet {
 public:
  explicit SampleSet(std::size_t exact_cap = 10'000'000, std::size_t reservoir_size = 1'000'000);

  void add(double v, RngStream& rng);
  double percentile(double p) const;  // p in [0, 100]
  double mean() const;
  double max() const;
  std::uint64_t count() const { return seen_; }
  bool empty() const { return seen_ == 0; }
  const std::vector<double>& raw_values() const { return values_; }

 private:
  std::size_t exact_cap_;
  std::size_t reservoir_size_;
  std::uint64_t seen_ = 0;
  double sum_ = 0;
  double max_ = 0;
  mutable bool sorted_ = false;
  mutable std::vector<double> values_;
};

struct TimePoint {
  SimTime t;
  double value;
};

// Aggregated simulation output: latency distributions per task type, battery
// and bandwidth traces, counters, completion status.
struct MetricsReport {
  std::map<std::string, SampleSet> task_latency_us;
  std::map<std::string, SampleSet> net_share;          // per task type, fraction of e2e
  std::map<int, std::vector<TimePoint>> battery_trace;  // device id -> % over time
  std::map<std::string, std::vector<TimePoint>> link_mbps;
  std::map<std::string, std::int64_t> counters;
  SimTime completion_time = 0;
  bool goals_met = false;
  bool mission_infeasible = false;
  std::uint64_t trace_hash = 0;
  std::uint64_t seed = 0;

  SampleSet& latency(const std::string& task_type) { return task_latency_us[task_type]; }
  void bump(const std::string& counter, std::int64_t by = 1) { counters[counter] += by; }
  std::int64_t counter(const std::string& name) const {
    auto it = counters.find(name);
    return it == counters.end() ? 0 : it->second;
  }

  // Pooled latency percentile across all task types, in ms.
  double pooled_latency_ms(double p) const;
  double mean_battery_drain() const;  // mean over devices of (100 - final %)
  double peak_link_mbps() const;

  nlohmann::json to_json() const;
};

}  // namespace hivesim::sim
