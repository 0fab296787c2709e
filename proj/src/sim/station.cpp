#include "hivesim/sim/station.hpp"

#include <cassert>
#include <utility>

namespace hivesim::sim {

ServiceStation::ServiceStation(Simulator& sim, std::string id, int servers)
    : sim_(sim), id_(std::move(id)), servers_(servers) {
  assert(servers_ >= 1);
  stats_.opened_at = sim_.now();
  last_change_ = sim_.now();
}

void ServiceStation::integrate() {
  const SimTime now = sim_.now();
  const double dt = static_cast<double>(now - last_change_);
  stats_.jobs_time_us += dt * static_cast<double>(in_system());
  stats_.busy_core_us += dt * static_cast<double>(busy_);
  last_change_ = now;
}

void ServiceStation::submit(SimTime service_us, Done done) {
  assert(service_us >= 0);
  integrate();
  ++stats_.arrivals;
  Pending job{sim_.now(), service_us, std::move(done)};
  if (busy_ < servers_) {
    begin_service(std::move(job));
  } else {
    queue_.push_back(std::move(job));
  }
}

void ServiceStation::begin_service(Pending job) {
  ++busy_;
  const SimTime start = sim_.now();
  const SimTime wait = start - job.arrival;
  sim_.schedule_in(job.service, id_, "service_done",
                   [this, job = std::move(job), wait]() mutable {
                     integrate();
                     --busy_;
                     ++stats_.completions;
                     const SimTime sojourn = sim_.now() - job.arrival;
                     stats_.sum_wait_us += static_cast<double>(wait);
                     stats_.sum_sojourn_us += static_cast<double>(sojourn);
                     if (!queue_.empty()) {
                       Pending next = std::move(queue_.front());
                       queue_.pop_front();
                       begin_service(std::move(next));
                     }
                     if (job.done) job.done(wait, sojourn);
                   });
}

bool ServiceStation::accounting_ok() const {
  const double elapsed = static_cast<double>(sim_.now() - stats_.opened_at);
  return stats_.busy_core_us <= elapsed * static_cast<double>(servers_) + 1e-6;
}

}  // namespace hivesim::sim
