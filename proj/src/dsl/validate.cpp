#include "hivesim/dsl/validate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hivesim::dsl {

namespace {

struct Checker {
  const TaskGraph& graph;
  std::vector<ValidationIssue> issues;
  std::map<std::string, const TaskDef*> by_name;

  explicit Checker(const TaskGraph& g) : graph(g) {
    for (const auto& t : graph.tasks) {
      if (!by_name.emplace(t.name, &t).second)
        add("duplicate-task", t.name, "task '" + t.name + "' declared more than once");
    }
  }

  void add(std::string rule, std::string subject, std::string message) {
    issues.push_back({std::move(rule), std::move(subject), std::move(message)});
  }

  bool known(const std::string& name) const { return by_name.count(name) > 0; }

  void check_references() {
    for (const auto& t : graph.tasks) {
      for (const auto& p : t.parents)
        if (!known(p))
          add("unknown-task", t.name, "parent '" + p + "' of '" + t.name + "' is not declared");
      for (const auto& c : t.children)
        if (!known(c))
          add("unknown-task", t.name, "child '" + c + "' of '" + t.name + "' is not declared");
    }
    for (const auto& o : graph.orderings) {
      if (!known(o.a))
        add("unknown-task", o.a, to_string(o.kind) + " references undeclared task '" + o.a + "'");
      if (o.kind != OrderKind::Synchronize && !known(o.b))
        add("unknown-task", o.b, to_string(o.kind) + " references undeclared task '" + o.b + "'");
    }
    for (const auto& d : graph.directives) {
      if (!known(d.subject))
        add("unknown-task", d.subject,
            to_string(d.kind) + " references undeclared task '" + d.subject + "'");
    }
  }

  void check_edge_consistency() {
    // Edges may come from either side; when both sides declare lists, they
    // must agree.
    for (const auto& t : graph.tasks) {
      for (const auto& c : t.children) {
        const auto it = by_name.find(c);
        if (it == by_name.end()) continue;
        const TaskDef& child = *it->second;
        if (child.parents_declared &&
            std::find(child.parents.begin(), child.parents.end(), t.name) ==
                child.parents.end())
          add("inconsistent-edge", t.name,
              "'" + t.name + "' lists child '" + c + "' but '" + c +
                  "' does not list it as parent");
      }
      for (const auto& p : t.parents) {
        const auto it = by_name.find(p);
        if (it == by_name.end()) continue;
        const TaskDef& parent = *it->second;
        if (parent.children_declared &&
            std::find(parent.children.begin(), parent.children.end(), t.name) ==
                parent.children.end())
          add("inconsistent-edge", t.name,
              "'" + t.name + "' lists parent '" + p + "' but '" + p +
                  "' does not list it as child");
      }
    }
  }

  void check_dag() {
    const auto edges = graph.edges();
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [p, c] : edges) adj[p].push_back(c);
    // Iterative DFS with colors; report the first back edge found.
    std::map<std::string, int> color;  // 0 white, 1 grey, 2 black
    for (const auto& t : graph.tasks) {
      if (color[t.name] != 0) continue;
      std::vector<std::pair<std::string, size_t>> stack{{t.name, 0}};
      color[t.name] = 1;
      while (!stack.empty()) {
        auto& [node, next] = stack.back();
        auto& children = adj[node];
        if (next < children.size()) {
          const std::string child = children[next++];
          if (!known(child)) continue;
          if (color[child] == 1) {
            add("cycle", child, "dependency cycle through task '" + child + "'");
            return;
          }
          if (color[child] == 0) {
            color[child] = 1;
            stack.push_back({child, 0});
          }
        } else {
          color[node] = 2;
          stack.pop_back();
        }
      }
    }
  }

  void check_data_kinds() {
    for (const auto& t : graph.tasks) {
      if (t.data_in.empty()) continue;
      std::vector<std::string> parents;
      for (const auto& [p, c] : graph.edges())
        if (c == t.name) parents.push_back(p);
      if (parents.empty()) continue;  // source with declared input kind
      bool matched = false;
      for (const auto& p : parents) {
        const auto it = by_name.find(p);
        if (it != by_name.end() && it->second->data_out == t.data_in) matched = true;
      }
      if (!matched)
        add("data-kind-mismatch", t.name,
            "no parent of '" + t.name + "' produces data kind '" + t.data_in + "'");
    }
  }

  void check_ordering_conflicts() {
    std::map<std::pair<std::string, std::string>, std::set<OrderKind>> pair_kinds;
    for (const auto& o : graph.orderings) {
      if (o.kind == OrderKind::Synchronize) continue;
      auto key = std::minmax(o.a, o.b);
      pair_kinds[{key.first, key.second}].insert(o.kind);
    }
    for (const auto& [pair, kinds] : pair_kinds) {
      if (kinds.size() > 1)
        add("conflicting-ordering", pair.first,
            "conflicting ordering directives for tasks '" + pair.first + "' and '" +
                pair.second + "'");
    }
  }

  void check_directives() {
    std::set<std::string> placed;
    for (const auto& d : graph.directives) {
      if (d.kind == DirectiveKind::Place) {
        if (!placed.insert(d.subject).second)
          add("duplicate-place", d.subject,
              "more than one Place directive for task '" + d.subject + "'");
        const auto loc = d.payload.find("location");
        const std::string location = loc == d.payload.end() ? "" : loc->second;
        const bool cloud = location == "Cloud";
        const bool edge = location.rfind("Edge:", 0) == 0 && location.size() > 5;
        if (!cloud && !edge) {
          add("bad-place-location", d.subject,
              "Place location must be 'Cloud' or 'Edge:<set>', got '" + location + "'");
          continue;
        }
        const auto it = by_name.find(d.subject);
        if (cloud && it != by_name.end()) {
          if (it->second->is_sensor_source())
            add("source-on-cloud", d.subject, "source task must run on edge");
          else if (it->second->is_actuation())
            add("actuation-on-cloud", d.subject, "actuation task must run on edge");
        }
      } else if (d.kind == DirectiveKind::Learn) {
        const auto scope = d.payload.find("scope");
        const std::string value = scope == d.payload.end() ? "" : scope->second;
        if (value != "Global" && value != "Local" && value != "Off")
          add("bad-learn-scope", d.subject,
              "Learn scope must be Global, Local or Off, got '" + value + "'");
      }
    }
  }

  void check_constraints() {
    for (const auto& c : graph.constraints) {
      if (!(c.bound > 0))
        add("bad-constraint", to_string(c.metric),
            "constraint '" + to_string(c.metric) + "' bound must be > 0");
    }
  }
};

}  // namespace

std::vector<ValidationIssue> validate(const TaskGraph& graph) {
  Checker checker(graph);
  checker.check_references();
  checker.check_edge_consistency();
  checker.check_dag();
  checker.check_data_kinds();
  checker.check_ordering_conflicts();
  checker.check_directives();
  checker.check_constraints();
  return std::move(checker.issues);
}

}  // namespace hivesim::dsl
