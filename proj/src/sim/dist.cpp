#include "hivesim/sim/dist.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace hivesim::sim {

namespace {

constexpr double kZ99 = 2.3263478740408408;  // standard normal quantile at 0.99

SimTime parse_duration_us(const std::string& text) {
  size_t pos = 0;
  const double value = std::stod(text, &pos);
  const std::string unit = text.substr(pos);
  if (unit == "us") return static_cast<SimTime>(std::llround(value));
  if (unit == "ms") return from_ms(value);
  if (unit == "s") return from_sec(value);
  if (unit.empty()) return static_cast<SimTime>(std::llround(value));  // bare µs
  throw InvalidDistribution("unknown duration unit: " + text);
}

std::string format_duration_us(SimTime us) { return std::to_string(us) + "us"; }

}  // namespace

DistSpec DistSpec::deterministic(SimTime value_us) {
  if (value_us < 0) throw InvalidDistribution("deterministic value must be >= 0");
  DistSpec d;
  d.kind_ = Kind::Deterministic;
  d.a_ = static_cast<double>(value_us);
  return d;
}

DistSpec DistSpec::exponential(SimTime mean_us) {
  if (mean_us <= 0) throw InvalidDistribution("exponential mean must be > 0");
  DistSpec d;
  d.kind_ = Kind::Exponential;
  d.a_ = static_cast<double>(mean_us);
  return d;
}

DistSpec DistSpec::lognormal_p50_p99(SimTime p50_us, SimTime p99_us) {
  if (p50_us <= 0 || p99_us < p50_us)
    throw InvalidDistribution("lognormal requires 0 < p50 <= p99");
  DistSpec d;
  d.kind_ = Kind::Lognormal;
  d.a_ = std::log(static_cast<double>(p50_us));
  d.b_ = (std::log(static_cast<double>(p99_us)) - d.a_) / kZ99;
  return d;
}

DistSpec DistSpec::lognormal_params(double mu, double sigma) {
  if (sigma < 0) throw InvalidDistribution("lognormal sigma must be >= 0");
  DistSpec d;
  d.kind_ = Kind::Lognormal;
  d.a_ = mu;
  d.b_ = sigma;
  return d;
}

DistSpec DistSpec::empirical(std::vector<SimTime> table) {
  if (table.empty()) throw InvalidDistribution("empirical table must be nonempty");
  for (SimTime v : table)
    if (v < 0) throw InvalidDistribution("empirical values must be >= 0");
  DistSpec d;
  d.kind_ = Kind::Empirical;
  d.table_ = std::move(table);
  return d;
}

SimTime DistSpec::sample(RngStream& stream) const {
  switch (kind_) {
    case Kind::Deterministic:
      return static_cast<SimTime>(std::llround(a_));
    case Kind::Exponential:
      return static_cast<SimTime>(std::llround(stream.exponential(a_)));
    case Kind::Lognormal:
      return static_cast<SimTime>(std::llround(stream.lognormal(a_, b_)));
    case Kind::Empirical:
      return table_[stream.below(table_.size())];
  }
  return 0;
}

SimTime DistSpec::mean_estimate() const {
  switch (kind_) {
    case Kind::Deterministic:
    case Kind::Exponential:
      return static_cast<SimTime>(std::llround(a_));
    case Kind::Lognormal:
      return static_cast<SimTime>(std::llround(std::exp(a_ + b_ * b_ / 2.0)));
    case Kind::Empirical: {
      double sum = 0;
      for (SimTime v : table_) sum += static_cast<double>(v);
      return static_cast<SimTime>(std::llround(sum / static_cast<double>(table_.size())));
    }
  }
  return 0;
}

DistSpec DistSpec::scaled(double factor) const {
  if (factor <= 0) throw InvalidDistribution("scale factor must be > 0");
  DistSpec d = *this;
  switch (kind_) {
    case Kind::Deterministic:
    case Kind::Exponential:
      d.a_ *= factor;
      break;
    case Kind::Lognormal:
      d.a_ += std::log(factor);
      break;
    case Kind::Empirical:
      for (SimTime& v : d.table_)
        v = static_cast<SimTime>(std::llround(static_cast<double>(v) * factor));
      break;
  }
  return d;
}

DistSpec DistSpec::from_string(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidDistribution("bad dist spec: " + text);
  const std::string kind = text.substr(0, colon);
  std::vector<std::string> args;
  {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) args.push_back(item);
  }
  if (kind == "det" && args.size() == 1) return deterministic(parse_duration_us(args[0]));
  if (kind == "exp" && args.size() == 1) return exponential(parse_duration_us(args[0]));
  if (kind == "lognormal" && args.size() == 2)
    return lognormal_p50_p99(parse_duration_us(args[0]), parse_duration_us(args[1]));
  if (kind == "empirical" && !args.empty()) {
    std::vector<SimTime> table;
    table.reserve(args.size());
    for (const auto& a : args) table.push_back(parse_duration_us(a));
    return empirical(std::move(table));
  }
  throw InvalidDistribution("bad dist spec: " + text);
}

std::string DistSpec::to_string() const {
  switch (kind_) {
    case Kind::Deterministic:
      return "det:" + format_duration_us(static_cast<SimTime>(std::llround(a_)));
    case Kind::Exponential:
      return "exp:" + format_duration_us(static_cast<SimTime>(std::llround(a_)));
    case Kind::Lognormal: {
      const SimTime p50 = static_cast<SimTime>(std::llround(std::exp(a_)));
      const SimTime p99 = static_cast<SimTime>(std::llround(std::exp(a_ + b_ * kZ99)));
      return "lognormal:" + format_duration_us(p50) + "," + format_duration_us(p99);
    }
    case Kind::Empirical: {
      std::string out = "empirical:";
      for (size_t i = 0; i < table_.size(); ++i) {
        if (i) out += ",";
        out += format_duration_us(table_[i]);
      }
      return out;
    }
  }
  return "";
}

}  // namespace hivesim::sim
