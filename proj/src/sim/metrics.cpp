#include "hivesim/sim/metrics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace hivesim::sim {

SampleSet::SampleSet(std::size_t exact_cap, std::size_t reservoir_size)
    : exact_cap_(exact_cap), reservoir_size_(reservoir_size) {}

void SampleSet::add(double v, RngStream& rng) {
  ++seen_;
  sum_ += v;
  max_ = seen_ == 1 ? v : std::max(max_, v);
  sorted_ = false;
  if (seen_ <= exact_cap_) {
    values_.push_back(v);
    return;
  }
  if (values_.size() > reservoir_size_) {
    // Crossing the exact cap: thin the stored set down to a uniform reservoir.
    for (std::size_t i = values_.size() - 1; i >= reservoir_size_; --i) {
      const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
      std::swap(values_[i], values_[j]);
    }
    values_.resize(reservoir_size_);
    values_.shrink_to_fit();
  }
  // Algorithm R over the remainder of the stream.
  const std::uint64_t j = rng.below(seen_);
  if (j < values_.size()) values_[j] = v;
}

namespace {

double percentile_of(std::vector<double>& sorted_values, double p) {
  if (sorted_values.empty()) return 0.0;
  const double rank = (p / 100.0) * static_cast<double>(sorted_values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(rank);
  const std::size_t hi = std::min(lo + 1, sorted_values.size() - 1);
  const double frac = rank - static_cast<double>(lo);
  return sorted_values[lo] * (1.0 - frac) + sorted_values[hi] * frac;
}

}  // namespace

double SampleSet::percentile(double p) const {
  if (values_.empty()) return 0.0;
  if (!sorted_) {
    std::sort(values_.begin(), values_.end());
    sorted_ = true;
  }
  return percentile_of(values_, p);
}

double SampleSet::mean() const {
  return seen_ > 0 ? sum_ / static_cast<double>(seen_) : 0.0;
}

double SampleSet::max() const { return max_; }

double MetricsReport::pooled_latency_ms(double p) const {
  std::vector<double> all;
  for (const auto& [type, set] : task_latency_us) {
    (void)type;
    const auto& vals = set.raw_values();
    all.insert(all.end(), vals.begin(), vals.end());
  }
  if (all.empty()) return 0.0;
  std::sort(all.begin(), all.end());
  return percentile_of(all, p) / 1e3;
}

double MetricsReport::mean_battery_drain() const {
  if (battery_trace.empty()) return 0.0;
  double total = 0;
  for (const auto& [id, trace] : battery_trace) {
    (void)id;
    if (trace.empty()) continue;
    total += trace.front().value - trace.back().value;
  }
  return total / static_cast<double>(battery_trace.size());
}

double MetricsReport::peak_link_mbps() const {
  double peak = 0;
  for (const auto& [link, trace] : link_mbps) {
    (void)link;
    for (const auto& tp : trace) peak = std::max(peak, tp.value);
  }
  return peak;
}

nlohmann::json MetricsReport::to_json() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["trace_hash"] = trace_hash;
  j["completion_time_s"] = to_sec(completion_time);
  j["goals_met"] = goals_met;
  j["mission_infeasible"] = mission_infeasible;

  nlohmann::json lat = nlohmann::json::object();
  for (const auto& [type, set] : task_latency_us) {
    lat[type] = {{"count", set.count()},
                 {"p50_ms", set.percentile(50) / 1e3},
                 {"p90_ms", set.percentile(90) / 1e3},
                 {"p99_ms", set.percentile(99) / 1e3},
                 {"mean_ms", set.mean() / 1e3}};
  }
  j["task_latency"] = lat;
  j["pooled_p50_ms"] = pooled_latency_ms(50);
  j["pooled_p99_ms"] = pooled_latency_ms(99);

  nlohmann::json share = nlohmann::json::object();
  for (const auto& [type, set] : net_share) {
    share[type] = {{"median", set.percentile(50)}, {"mean", set.mean()}};
  }
  j["net_share"] = share;

  nlohmann::json battery = nlohmann::json::object();
  for (const auto& [id, trace] : battery_trace) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& tp : trace) points.push_back({to_sec(tp.t), tp.value});
    battery[std::to_string(id)] = std::move(points);
  }
  j["battery_trace"] = battery;
  j["mean_battery_drain_pct"] = mean_battery_drain();

  nlohmann::json links = nlohmann::json::object();
  for (const auto& [link, trace] : link_mbps) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& tp : trace) points.push_back({to_sec(tp.t), tp.value});
    links[link] = std::move(points);
  }
  j["link_mbps"] = links;
  j["peak_link_mbps"] = peak_link_mbps();

  j["counters"] = counters;
  return j;
}

}  // namespace hivesim::sim
