#include "hivesim/synth/plan.hpp"

#include <sstream>

namespace hivesim::synth {

std::string to_string(DataPathKind k) {
  switch (k) {
    case DataPathKind::RpcCloudEdge: return "RpcCloudEdge";
    case DataPathKind::RpcAccelerated: return "RpcAccelerated";
    case DataPathKind::StoreExchange: return "StoreExchange";
    case DataPathKind::RemoteMemory: return "RemoteMemory";
    case DataPathKind::SameContainer: return "SameContainer";
    case DataPathKind::OnDeviceLocal: return "OnDeviceLocal";
  }
  return "";
}

DataPathKind data_path_from_string(const std::string& s) {
  if (s == "RpcCloudEdge") return DataPathKind::RpcCloudEdge;
  if (s == "RpcAccelerated") return DataPathKind::RpcAccelerated;
  if (s == "StoreExchange") return DataPathKind::StoreExchange;
  if (s == "RemoteMemory") return DataPathKind::RemoteMemory;
  if (s == "SameContainer") return DataPathKind::SameContainer;
  if (s == "OnDeviceLocal") return DataPathKind::OnDeviceLocal;
  throw std::invalid_argument("unknown data path kind: " + s);
}

AccelConfig AccelConfig::from_flag(const std::string& flag) {
  if (flag == "none") return {false, false};
  if (flag == "net") return {true, false};
  if (flag == "mem") return {false, true};
  if (flag == "all") return {true, true};
  throw std::invalid_argument("unknown accel flag: " + flag);
}

std::string AccelConfig::to_flag() const {
  if (network_accel && remote_mem) return "all";
  if (network_accel) return "net";
  if (remote_mem) return "mem";
  return "none";
}

nlohmann::json PlacementPlan::to_json() const {
  nlohmann::json assignment_json = nlohmann::json::object();
  for (const auto& [task, loc] : assignment) {
    assignment_json[task] =
        loc.is_edge() ? "Edge:" + loc.edge_scope : std::string("Cloud");
  }
  nlohmann::json paths_json = nlohmann::json::object();
  for (const auto& [edge, kind] : edge_paths) {
    paths_json[edge.first + "->" + edge.second] = to_string(kind);
  }
  return {{"plan_id", plan_id}, {"assignment", assignment_json}, {"edge_paths", paths_json}};
}

PlacementPlan PlacementPlan::from_json(const nlohmann::json& j) {
  PlacementPlan plan;
  plan.plan_id = j.at("plan_id").get<std::int64_t>();
  for (const auto& [task, value] : j.at("assignment").items()) {
    const std::string text = value.get<std::string>();
    if (text == "Cloud") {
      plan.assignment[task] = Location::cloud();
    } else if (text.rfind("Edge:", 0) == 0) {
      plan.assignment[task] = Location::edge(text.substr(5));
    } else {
      throw std::invalid_argument("bad location: " + text);
    }
  }
  if (j.contains("edge_paths")) {
    for (const auto& [key, value] : j.at("edge_paths").items()) {
      const auto arrow = key.find("->");
      if (arrow == std::string::npos) throw std::invalid_argument("bad edge key: " + key);
      plan.edge_paths[{key.substr(0, arrow), key.substr(arrow + 2)}] =
          data_path_from_string(value.get<std::string>());
    }
  }
  return plan;
}

nlohmann::json PlanEvaluation::to_json() const {
  return {{"plan_id", plan_id},
          {"p50_ms", predicted_p50_latency_ms},
          {"p99_ms", predicted_p99_latency_ms},
          {"battery_pct", mean_battery_drain_pct},
          {"peak_bandwidth_mbps", peak_bandwidth_mbps},
          {"cost_fn_s", cloud_cost_fn_seconds}};
}

std::string PlanEvaluation::csv_header() {
  return "plan_id,p50,p99,battery,bandwidth,cost";
}

std::string PlanEvaluation::csv_row() const {
  std::ostringstream out;
  out.precision(6);
  out << std::fixed << plan_id << ',' << predicted_p50_latency_ms << ','
      << predicted_p99_latency_ms << ',' << mean_battery_drain_pct << ','
      << peak_bandwidth_mbps << ',' << cloud_cost_fn_seconds;
  return out.str();
}

}  // namespace hivesim::synth
