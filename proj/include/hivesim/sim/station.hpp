#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <string>

#include "hivesim/sim/simulator.hpp"
#include "hivesim/sim/time.hpp"

namespace hivesim::sim {

struct StationStats {
  std::uint64_t arrivals = 0;
  std::uint64_t completions = 0;
  double sum_wait_us = 0;      // time in queue before service
  double sum_sojourn_us = 0;   // queue + service
  double busy_core_us = 0;     // integral of busy servers over time
  double jobs_time_us = 0;     // integral of jobs-in-system over time
  SimTime opened_at = 0;

  double mean_jobs(SimTime now) const {
    const double t = static_cast<double>(now - opened_at);
    return t > 0 ? jobs_time_us / t : 0.0;
  }
  double arrival_rate_per_us(SimTime now) const {
    const double t = static_cast<double>(now - opened_at);
    return t > 0 ? static_cast<double>(arrivals) / t : 0.0;
  }
  double mean_sojourn_us() const {
    return completions > 0 ? sum_sojourn_us / static_cast<double>(completions) : 0.0;
  }
  double mean_wait_us() const {
    return completions > 0 ? sum_wait_us / static_cast<double>(completions) : 0.0;
  }
  double utilization(SimTime now, int servers) const {
    const double t = static_cast<double>(now - opened_at) * servers;
    return t > 0 ? busy_core_us / t : 0.0;
  }
};

// Multi-server FIFO queueing station. The caller supplies each job's service
// demand; the station accounts waiting, sojourn, busy time and the
// jobs-in-system time integral (for Little's-law checks).
class ServiceStation {
 public:
  using Done = std::function<void(SimTime wait_us, SimTime sojourn_us)>;

  ServiceStation(Simulator& sim, std::string id, int servers);

  void submit(SimTime service_us, Done done);
  // Utilization accounting invariant: busy-time <= elapsed * servers.
  bool accounting_ok() const;

  const std::string& id() const { return id_; }
  int servers() const { return servers_; }
  int busy() const { return busy_; }
  std::size_t queue_length() const { return queue_.size(); }
  std::size_t in_system() const { return queue_.size() + static_cast<std::size_t>(busy_); }
  const StationStats& stats() const { return stats_; }

 private:
  struct Pending {
    SimTime arrival;
    SimTime service;
    Done done;
  };

  Simulator& sim_;
  std::string id_;
  int servers_;
  int busy_ = 0;
  std::deque<Pending> queue_;
  StationStats stats_;
  SimTime last_change_ = 0;

  void integrate();
  void begin_service(Pending job);
};

}  // namespace hivesim::sim
