#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hivesim/sim/rng.hpp"
#include "hivesim/sim/time.hpp"

namespace hivesim::sim {

struct LivelockError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SimulationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Discrete-event core. Strictly single-threaded; events are totally ordered by
// (timestamp, sequence) so runs with the same seed and configuration replay the
// same trace. Component RNG streams are keyed by name and derived from the
// seed alone, so the order in which components come up does not matter.
class Simulator {
 public:
  struct Options {
    std::uint64_t max_events = 400'000'000;    // hard cap per run
    std::uint64_t livelock_cap = 20'000'000;   // events at one timestamp
  };

  explicit Simulator(std::uint64_t seed) : Simulator(seed, Options()) {}
  Simulator(std::uint64_t seed, Options options);

  SimTime now() const { return now_; }
  std::uint64_t seed() const { return seed_; }

  void schedule_at(SimTime t, std::string component, std::string kind, std::function<void()> fn);
  void schedule_in(SimTime dt, std::string component, std::string kind, std::function<void()> fn);

  RngStream& stream(std::string_view component);

  // Processes events until the queue is empty, the clock would pass `cap`,
  // or stop() was called. The clock is advanced to min(cap, last event time).
  void run(SimTime cap);
  void stop() { stopped_ = true; }
  bool stopped() const { return stopped_; }

  std::uint64_t events_processed() const { return events_processed_; }
  std::uint64_t trace_hash() const { return trace_hash_; }

  // Optional event log sink (timestamp, component, kind).
  using TraceSink = std::function<void(SimTime, const std::string&, const std::string&)>;
  void set_trace_sink(TraceSink sink) { trace_sink_ = std::move(sink); }

 private:
  struct Event {
    SimTime t;
    std::uint64_t seq;
    std::string component;
    std::string kind;
    std::function<void()> fn;
  };
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.t != b.t) return a.t > b.t;
      return a.seq > b.seq;
    }
  };

  std::uint64_t seed_;
  Options options_;
  SimTime now_ = 0;
  std::uint64_t next_seq_ = 0;
  std::uint64_t events_processed_ = 0;
  std::uint64_t events_at_now_ = 0;
  bool stopped_ = false;
  std::uint64_t trace_hash_ = 0xcbf29ce484222325ull;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  std::map<std::string, RngStream, std::less<>> streams_;
  TraceSink trace_sink_;

  void absorb_into_hash(SimTime t, const std::string& component, const std::string& kind);
};

}  // namespace hivesim::sim
