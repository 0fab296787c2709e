#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hivesim/sim/rng.hpp"
#include "hivesim/sim/time.hpp"

namespace hivesim::sim {

struct InvalidDistribution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Service / duration distribution. Samples are nonnegative durations in µs.
class DistSpec {
 public:
  enum class Kind { Deterministic, Exponential, Lognormal, Empirical };

  static DistSpec deterministic(SimTime value_us);
  static DistSpec exponential(SimTime mean_us);
  // Lognormal fitted so that the distribution's p50 and p99 quantiles hit the
  // given values.
  static DistSpec lognormal_p50_p99(SimTime p50_us, SimTime p99_us);
  static DistSpec lognormal_params(double mu, double sigma);
  // Uniform choice over a table of observed durations.
  static DistSpec empirical(std::vector<SimTime> table);

  SimTime sample(RngStream& stream) const;
  SimTime mean_estimate() const;  // analytic mean where defined
  Kind kind() const { return kind_; }

  // Scales every sample by a constant factor (slow nodes, edge/cloud ratios).
  DistSpec scaled(double factor) const;

  static DistSpec from_string(const std::string& text);  // e.g. "lognormal:150ms,900ms"
  std::string to_string() const;

  bool operator==(const DistSpec&) const = default;

 private:
  Kind kind_ = Kind::Deterministic;
  double a_ = 0.0;  // Deterministic/Exponential: µs; Lognormal: mu
  double b_ = 0.0;  // Lognormal: sigma
  std::vector<SimTime> table_;
};

}  // namespace hivesim::sim
