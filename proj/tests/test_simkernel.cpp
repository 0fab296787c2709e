#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "hivesim/sim/dist.hpp"
#include "hivesim/sim/metrics.hpp"
#include "hivesim/sim/rng.hpp"
#include "hivesim/sim/simulator.hpp"
#include "hivesim/sim/station.hpp"

using namespace hivesim::sim;

namespace {

// Open M/M/c feeder: Poisson arrivals into a station, exponential service.
// Returns mean sojourn in µs after discarding a warmup fraction.
double run_mmc(double lambda_per_s, double mu_per_s, int servers, std::uint64_t n_arrivals,
               std::uint64_t seed) {
  Simulator sim(seed);
  ServiceStation station(sim, "station", servers);
  auto& arrivals_rng = sim.stream("arrivals");
  auto& service_rng = sim.stream("service");

  const double mean_gap_us = 1e6 / lambda_per_s;
  const double mean_service_us = 1e6 / mu_per_s;
  const std::uint64_t warmup = n_arrivals / 10;

  std::vector<double> sojourns;
  sojourns.reserve(n_arrivals);

  std::uint64_t launched = 0;
  std::function<void()> arrive = [&]() {
    const SimTime service =
        static_cast<SimTime>(std::llround(service_rng.exponential(mean_service_us)));
    const std::uint64_t index = launched;
    station.submit(service, [&sojourns, index, warmup](SimTime, SimTime sojourn) {
      if (index >= warmup) sojourns.push_back(static_cast<double>(sojourn));
    });
    if (++launched < n_arrivals) {
      sim.schedule_in(
          static_cast<SimTime>(std::llround(arrivals_rng.exponential(mean_gap_us))),
          "arrivals", "arrival", arrive);
    }
  };
  sim.schedule_at(0, "arrivals", "arrival", arrive);
  sim.run(std::numeric_limits<SimTime>::max());

  REQUIRE(station.accounting_ok());
  double sum = 0;
  for (double s : sojourns) sum += s;
  return sum / static_cast<double>(sojourns.size());
}

}  // namespace

TEST_CASE("event ordering is by (timestamp, sequence)") {
  Simulator sim(1);
  std::vector<int> order;
  sim.schedule_at(10, "a", "x", [&] { order.push_back(1); });
  sim.schedule_at(5, "a", "x", [&] { order.push_back(0); });
  sim.schedule_at(10, "a", "y", [&] { order.push_back(2); });
  sim.run(100);
  CHECK(order == std::vector<int>{0, 1, 2});
  CHECK(sim.now() == 100);
}

TEST_CASE("clock never runs backwards and stop halts processing") {
  Simulator sim(1);
  SimTime last = -1;
  for (int i = 0; i < 100; ++i) {
    sim.schedule_at((i * 7) % 50, "c", "tick", [&, i] {
      CHECK(sim.now() >= last);
      last = sim.now();
      if (i == 42) sim.stop();
    });
  }
  sim.run(1000);
  CHECK(sim.stopped());
}

TEST_CASE("same seed gives identical trace hash, different seed differs") {
  auto run_once = [](std::uint64_t seed) {
    Simulator sim(seed);
    auto& rng = sim.stream("gen");
    std::function<void(int)> step = [&](int depth) {
      if (depth == 0) return;
      sim.schedule_in(static_cast<SimTime>(rng.below(1000) + 1), "gen",
                      "step" + std::to_string(depth), [&step, depth] { step(depth - 1); });
    };
    sim.schedule_at(0, "gen", "start", [&] { step(200); });
    sim.run(std::numeric_limits<SimTime>::max());
    return sim.trace_hash();
  };
  CHECK(run_once(42) == run_once(42));
  CHECK(run_once(42) != run_once(43));
}

TEST_CASE("livelock guard throws when clock cannot progress") {
  Simulator sim(1, Simulator::Options{.max_events = 1'000'000, .livelock_cap = 1000});
  std::function<void()> loop = [&] { sim.schedule_in(0, "l", "spin", loop); };
  sim.schedule_at(0, "l", "spin", loop);
  CHECK_THROWS_AS(sim.run(10), LivelockError);
}

TEST_CASE("rng streams are independent of other components' draws") {
  Simulator a(99);
  Simulator b(99);
  // Interleave draws from another stream in b only.
  std::vector<std::uint64_t> va, vb;
  for (int i = 0; i < 16; ++i) va.push_back(a.stream("x").next_u64());
  for (int i = 0; i < 16; ++i) {
    (void)b.stream("noise").next_u64();
    vb.push_back(b.stream("x").next_u64());
  }
  CHECK(va == vb);
}

TEST_CASE("deterministic distribution returns the constant") {
  Simulator sim(7);
  auto d = DistSpec::deterministic(from_ms(5));
  for (int i = 0; i < 10; ++i) CHECK(d.sample(sim.stream("d")) == 5000);
}

TEST_CASE("exponential sample mean within 1% at 1e6 draws") {
  Simulator sim(7);
  auto d = DistSpec::exponential(from_ms(10));
  auto& rng = sim.stream("exp");
  double sum = 0;
  const int n = 1'000'000;
  for (int i = 0; i < n; ++i) sum += static_cast<double>(d.sample(rng));
  const double mean = sum / n;
  CHECK(mean == doctest::Approx(10'000.0).epsilon(0.01));
}

TEST_CASE("lognormal p50/p99 parameterization hits target quantiles within 5%") {
  Simulator sim(7);
  auto d = DistSpec::lognormal_p50_p99(from_ms(100), from_sec(1));
  auto& rng = sim.stream("lognormal");
  const int n = 1'000'000;
  std::vector<double> draws(n);
  for (int i = 0; i < n; ++i) draws[i] = static_cast<double>(d.sample(rng));
  std::sort(draws.begin(), draws.end());
  const double p50 = draws[n / 2];
  const double p99 = draws[static_cast<int>(n * 0.99)];
  CHECK(p50 == doctest::Approx(100'000.0).epsilon(0.05));
  CHECK(p99 == doctest::Approx(1'000'000.0).epsilon(0.05));
}

TEST_CASE("invalid distribution parameters are rejected") {
  CHECK_THROWS_AS(DistSpec::exponential(0), InvalidDistribution);
  CHECK_THROWS_AS(DistSpec::lognormal_p50_p99(0, 100), InvalidDistribution);
  CHECK_THROWS_AS(DistSpec::lognormal_p50_p99(from_ms(10), from_ms(5)), InvalidDistribution);
  CHECK_THROWS_AS(DistSpec::empirical({}), InvalidDistribution);
}

TEST_CASE("dist spec round-trips through text form") {
  auto d = DistSpec::from_string("lognormal:150ms,900ms");
  CHECK(DistSpec::from_string(d.to_string()) == d);
  Simulator sim(1);
  CHECK(DistSpec::from_string("det:5ms").sample(sim.stream("t")) == 5000);
}

TEST_CASE("M/M/1 mean sojourn matches 1/(mu-lambda) within 5%") {
  // Same validation bound the simulator is held to elsewhere.
  struct Case {
    double lambda, mu;
    std::uint64_t n;
  };
  for (const Case& c : {Case{0.5, 1.0, 100'000}, Case{0.8, 1.0, 300'000}}) {
    const double analytic_us = 1e6 / (c.mu - c.lambda);
    const double measured = run_mmc(c.lambda, c.mu, 1, c.n, 1234);
    CHECK(measured == doctest::Approx(analytic_us).epsilon(0.05));
  }
}

TEST_CASE("station with zero arrivals reports empty stats") {
  Simulator sim(3);
  ServiceStation station(sim, "idle", 2);
  sim.run(from_sec(10));
  CHECK(station.stats().arrivals == 0);
  CHECK(station.stats().mean_jobs(sim.now()) == 0.0);
  CHECK(station.accounting_ok());
}

TEST_CASE("Little's law holds on a busy station within 10%") {
  Simulator sim(5);
  ServiceStation station(sim, "mm2", 2);
  auto& arr = sim.stream("arr");
  auto& svc = sim.stream("svc");
  const double lambda = 1.2, mu = 1.0;  // per second, 2 servers -> rho=0.6
  std::function<void()> arrive = [&]() {
    station.submit(static_cast<SimTime>(svc.exponential(1e6 / mu)), {});
    sim.schedule_in(static_cast<SimTime>(arr.exponential(1e6 / lambda)), "arr", "a", arrive);
  };
  sim.schedule_at(0, "arr", "a", arrive);
  sim.run(from_sec(50'000));
  const auto& st = station.stats();
  const double L = st.mean_jobs(sim.now());
  const double lam = st.arrival_rate_per_us(sim.now());
  const double W = st.mean_sojourn_us();
  CHECK(L == doctest::Approx(lam * W).epsilon(0.10));
}

TEST_CASE("sample set percentiles are exact below the cap and reservoir degrades gracefully") {
  Simulator sim(11);
  auto& rng = sim.stream("reservoir");
  SampleSet exact(1000, 100);
  for (int i = 1; i <= 999; ++i) exact.add(i, rng);
  CHECK(exact.percentile(50) == doctest::Approx(500.0).epsilon(0.01));
  CHECK(exact.count() == 999);

  SampleSet tiny(100, 50);
  for (int i = 1; i <= 10'000; ++i) tiny.add(i, rng);
  CHECK(tiny.count() == 10'000);
  CHECK(tiny.raw_values().size() == 50);
  // Uniform reservoir median should be near the stream median.
  CHECK(tiny.percentile(50) == doctest::Approx(5000.0).epsilon(0.35));
}
