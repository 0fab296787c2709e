#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hivesim::sim {

// Deterministic random stream keyed by (seed, stream_id). Streams are mutually
// independent: draws on one never perturb another, so adding a component does
// not change the sequences the rest of the simulation sees.
//
// All sampling is implemented on the raw mt19937_64 output instead of
// std::*_distribution, whose results are implementation-defined. Identical
// (seed, stream_id, call sequence) yields identical values on any platform.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view stream_id);

  std::uint64_t next_u64();
  double uniform01();                       // [0, 1)
  double uniform(double a, double b);       // [a, b)
  std::uint64_t below(std::uint64_t n);     // [0, n), n > 0
  bool bernoulli(double p);
  double exponential(double mean);          // mean > 0
  double normal01();                        // standard normal
  double lognormal(double mu, double sigma);

 private:
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace hivesim::sim
