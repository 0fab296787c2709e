#include "hivesim/sim/simulator.hpp"

#include <cassert>
#include <utility>

namespace hivesim::sim {

Simulator::Simulator(std::uint64_t seed, Options options)
    : seed_(seed), options_(options) {}

void Simulator::schedule_at(SimTime t, std::string component, std::string kind,
                            std::function<void()> fn) {
  assert(t >= now_ && "cannot schedule into the past");
  if (t < now_) t = now_;
  queue_.push(Event{t, next_seq_++, std::move(component), std::move(kind), std::move(fn)});
}

void Simulator::schedule_in(SimTime dt, std::string component, std::string kind,
                            std::function<void()> fn) {
  assert(dt >= 0);
  schedule_at(now_ + dt, std::move(component), std::move(kind), std::move(fn));
}

RngStream& Simulator::stream(std::string_view component) {
  auto it = streams_.find(component);
  if (it == streams_.end())
    it = streams_.emplace(std::string(component), RngStream(seed_, component)).first;
  return it->second;
}

void Simulator::absorb_into_hash(SimTime t, const std::string& component,
                                 const std::string& kind) {
  auto mix = [&](std::uint64_t v) {
    trace_hash_ ^= v;
    trace_hash_ *= 0x100000001b3ull;
  };
  mix(static_cast<std::uint64_t>(t));
  mix(fnv1a64(component));
  mix(fnv1a64(kind));
}

void Simulator::run(SimTime cap) {
  while (!queue_.empty() && !stopped_) {
    if (queue_.top().t > cap) break;
    // Move out before pop; handlers may push new events.
    Event ev = std::move(const_cast<Event&>(queue_.top()));
    queue_.pop();

    if (ev.t > now_) {
      now_ = ev.t;
      events_at_now_ = 0;
    }
    if (++events_at_now_ > options_.livelock_cap)
      throw LivelockError("event cap exceeded without clock progress at t=" +
                          std::to_string(now_) + "us");
    if (++events_processed_ > options_.max_events)
      throw SimulationError("simulation event cap exceeded");

    absorb_into_hash(ev.t, ev.component, ev.kind);
    if (trace_sink_) trace_sink_(ev.t, ev.component, ev.kind);
    ev.fn();
  }
  if (!stopped_ && now_ < cap) now_ = cap;
}

}  // namespace hivesim::sim
