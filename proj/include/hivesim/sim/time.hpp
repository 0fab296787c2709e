#pragma once

#include <cmath>
#include <cstdint>

namespace hivesim::sim {

// Simulated time in integer microseconds. Sub-microsecond effects are out of model.
using SimTime = std::int64_t;

inline constexpr SimTime kUsPerMs = 1'000;
inline constexpr SimTime kUsPerSec = 1'000'000;

inline SimTime from_ms(double ms) { return static_cast<SimTime>(std::llround(ms * 1e3)); }
inline SimTime from_sec(double s) { return static_cast<SimTime>(std::llround(s * 1e6)); }
inline double to_ms(SimTime t) { return static_cast<double>(t) / 1e3; }
inline double to_sec(SimTime t) { return static_cast<double>(t) / 1e6; }

}  // namespace hivesim::sim
