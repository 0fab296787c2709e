#include "hivesim/dsl/parser.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

#include "hivesim/dsl/lexer.hpp"

namespace hivesim::dsl {

std::string ParseError::format(const std::string& file) const {
  return file + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + message;
}

namespace {

struct Value {
  enum class Kind { None, Ident, Str, Num, List } kind = Kind::None;
  std::string text;               // scalar payload
  std::vector<std::pair<std::string, Value>> items;  // list items; first empty unless key=value
  int line = 1, col = 1;

  bool scalar() const { return kind != Kind::List; }
  std::string as_string() const { return kind == Kind::None ? std::string() : text; }
};

struct Argument {
  std::string key;  // empty for positional
  Value value;
};

struct Statement {
  std::string name;
  std::vector<Argument> args;
  int line = 1, col = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool parse_statements(std::vector<Statement>& out, ParseError& error) {
    while (!at(TokenKind::End)) {
      Statement st;
      if (!parse_statement(st, error)) return false;
      out.push_back(std::move(st));
    }
    return true;
  }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;

  const Token& cur() const { return tokens_[pos_]; }
  bool at(TokenKind k) const { return cur().kind == k; }
  void advance() {
    if (!at(TokenKind::End)) ++pos_;
  }
  ParseError err_here(std::string message) const {
    return ParseError{std::move(message), cur().line, cur().col};
  }

  bool parse_statement(Statement& st, ParseError& error) {
    if (!at(TokenKind::Identifier)) {
      error = err_here("expected statement name");
      return false;
    }
    st.name = cur().text;
    st.line = cur().line;
    st.col = cur().col;
    advance();
    if (!at(TokenKind::LParen)) {
      error = err_here("expected '(' after '" + st.name + "'");
      return false;
    }
    advance();
    if (at(TokenKind::RParen)) {
      advance();
      return true;
    }
    while (true) {
      Argument arg;
      if (!parse_argument(arg, error)) return false;
      st.args.push_back(std::move(arg));
      if (at(TokenKind::Comma)) {
        advance();
        continue;
      }
      if (at(TokenKind::RParen)) {
        advance();
        return true;
      }
      error = err_here("expected ',' or ')'");
      return false;
    }
  }

  bool parse_argument(Argument& arg, ParseError& error) {
    if (at(TokenKind::Identifier) && pos_ + 1 < tokens_.size() &&
        tokens_[pos_ + 1].kind == TokenKind::Equals) {
      arg.key = cur().text;
      advance();
      advance();
    }
    return parse_value(arg.value, error);
  }

  bool parse_value(Value& value, ParseError& error) {
    value.line = cur().line;
    value.col = cur().col;
    switch (cur().kind) {
      case TokenKind::Identifier:
        if (cur().text == "None") {
          value.kind = Value::Kind::None;
        } else {
          value.kind = Value::Kind::Ident;
          value.text = cur().text;
        }
        advance();
        return true;
      case TokenKind::String:
        value.kind = Value::Kind::Str;
        value.text = cur().text;
        advance();
        return true;
      case TokenKind::Number:
        value.kind = Value::Kind::Num;
        value.text = cur().text;
        advance();
        return true;
      case TokenKind::LBracket: {
        value.kind = Value::Kind::List;
        advance();
        if (at(TokenKind::RBracket)) {
          advance();
          return true;
        }
        while (true) {
          std::string key;
          if (at(TokenKind::Identifier) && pos_ + 1 < tokens_.size() &&
              tokens_[pos_ + 1].kind == TokenKind::Equals) {
            key = cur().text;
            advance();
            advance();
          }
          Value item;
          if (!parse_value(item, error)) return false;
          value.items.emplace_back(std::move(key), std::move(item));
          if (at(TokenKind::Comma)) {
            advance();
            continue;
          }
          if (at(TokenKind::RBracket)) {
            advance();
            return true;
          }
          error = err_here("expected ',' or ']'");
          return false;
        }
      }
      default:
        error = err_here("expected a value");
        return false;
    }
  }
};

bool parse_number_with_unit(const std::string& text, double& value, std::string& unit) {
  size_t pos = 0;
  try {
    value = std::stod(text, &pos);
  } catch (...) {
    return false;
  }
  unit = text.substr(pos);
  return true;
}

// Canonicalizes a constraint bound: times to µs, throughput to req/s.
bool canonical_bound(Metric metric, double raw, const std::string& unit, double& out) {
  switch (metric) {
    case Metric::ExecTime:
    case Metric::Latency:
      if (unit == "us") out = raw;
      else if (unit == "ms") out = raw * 1e3;
      else if (unit == "s") out = raw * 1e6;
      else return false;
      return true;
    case Metric::Throughput:
      if (unit == "req/s" || unit == "rps" || unit.empty()) out = raw;
      else return false;
      return true;
    case Metric::Cost:
      if (!unit.empty() && unit != "fs") return false;  // abstract function-seconds
      out = raw;
      return true;
  }
  return false;
}

class Builder {
 public:
  ParseResult build(const std::vector<Statement>& statements) {
    for (const auto& st : statements) {
      if (!dispatch(st)) return {std::nullopt, error_};
    }
    // Listing consistency: the TaskGraph statement and Task statements must
    // name the same set of tasks.
    if (!saw_taskgraph_ && !graph_.tasks.empty()) {
      return fail(1, 1, "missing TaskGraph statement");
    }
    for (const auto& name : listed_) {
      if (!defined_.count(name))
        return fail(taskgraph_line_, taskgraph_col_,
                    "task '" + name + "' listed in TaskGraph but never defined");
    }
    return {std::move(graph_), std::nullopt};
  }

 private:
  TaskGraph graph_;
  std::optional<ParseError> error_;
  bool saw_taskgraph_ = false;
  int taskgraph_line_ = 1, taskgraph_col_ = 1;
  std::vector<std::string> listed_order_;
  std::set<std::string> listed_;
  std::set<std::string> defined_;

  ParseResult fail(int line, int col, std::string message) {
    return {std::nullopt, ParseError{std::move(message), line, col}};
  }
  bool err(int line, int col, std::string message) {
    error_ = ParseError{std::move(message), line, col};
    return false;
  }
  bool err(const Statement& st, std::string message) {
    return err(st.line, st.col, std::move(message));
  }

  bool dispatch(const Statement& st) {
    if (st.name == "TaskGraph") return on_taskgraph(st);
    if (st.name == "Task") return on_task(st);
    if (st.name == "Parallel") return on_ordering(st, OrderKind::Parallel);
    if (st.name == "Overlap") return on_ordering(st, OrderKind::Overlap);
    if (st.name == "Serial") return on_ordering(st, OrderKind::Serial);
    if (st.name == "Synchronize") return on_synchronize(st);
    if (st.name == "Schedule") return on_management(st, DirectiveKind::Schedule);
    if (st.name == "Isolate") return on_management(st, DirectiveKind::Isolate);
    if (st.name == "Place") return on_place(st);
    if (st.name == "Restore") return on_management(st, DirectiveKind::Restore);
    if (st.name == "Learn") return on_learn(st);
    if (st.name == "Persist") return on_management(st, DirectiveKind::Persist);
    return err(st, "unknown statement '" + st.name + "'");
  }

  bool on_taskgraph(const Statement& st) {
    if (saw_taskgraph_) return err(st, "duplicate TaskGraph statement");
    saw_taskgraph_ = true;
    taskgraph_line_ = st.line;
    taskgraph_col_ = st.col;
    bool saw_list = false;
    for (const auto& arg : st.args) {
      if (arg.key == "list" || arg.key == "edgeList") {
        if (arg.value.kind != Value::Kind::List)
          return err(arg.value.line, arg.value.col, "TaskGraph list must be a list");
        saw_list = true;
        for (const auto& [key, item] : arg.value.items) {
          if (!key.empty() || !item.scalar() || item.kind == Value::Kind::None)
            return err(item.line, item.col, "TaskGraph list entries must be task names");
          if (!listed_.insert(item.text).second)
            return err(item.line, item.col, "task '" + item.text + "' listed twice");
          listed_order_.push_back(item.text);
        }
      } else if (arg.key == "constraint" || arg.key == "constraints") {
        if (arg.value.kind != Value::Kind::List)
          return err(arg.value.line, arg.value.col, "constraint must be a list");
        for (const auto& [key, item] : arg.value.items) {
          if (!on_constraint(key, item)) return false;
        }
      } else if (arg.key.empty()) {
        return err(arg.value.line, arg.value.col, "TaskGraph takes keyword arguments only");
      } else {
        return err(arg.value.line, arg.value.col,
                   "unknown TaskGraph argument '" + arg.key + "'");
      }
    }
    if (!saw_list) return err(st, "TaskGraph requires list=[...]");
    return true;
  }

  bool on_constraint(const std::string& key, const Value& item) {
    if (key.empty())
      return err(item.line, item.col, "constraint entries must be metric=value");
    Metric metric;
    bool upper = true;
    if (key == "execTime") metric = Metric::ExecTime;
    else if (key == "latency") metric = Metric::Latency;
    else if (key == "throughput") { metric = Metric::Throughput; upper = false; }
    else if (key == "cost") metric = Metric::Cost;
    else return err(item.line, item.col, "unknown constraint metric '" + key + "'");
    if (!item.scalar() || item.kind == Value::Kind::None)
      return err(item.line, item.col, "constraint value must be a number with unit");
    double raw = 0;
    std::string unit;
    if (!parse_number_with_unit(item.text, raw, unit))
      return err(item.line, item.col, "malformed constraint value '" + item.text + "'");
    double bound = 0;
    if (!canonical_bound(metric, raw, unit, bound))
      return err(item.line, item.col,
                 "bad unit '" + unit + "' for constraint '" + key + "'");
    graph_.constraints.push_back(PerfConstraint{metric, bound, item.text, upper});
    return true;
  }

  bool on_task(const Statement& st) {
    TaskDef task;
    std::vector<const Argument*> positional;
    for (const auto& arg : st.args) {
      if (arg.key.empty()) positional.push_back(&arg);
    }
    if (positional.size() != 4)
      return err(st, "Task requires positional name, dataIn, dataOut, code");
    const Value& name = positional[0]->value;
    if (name.kind != Value::Kind::Ident && name.kind != Value::Kind::Str)
      return err(name.line, name.col, "task name must be an identifier");
    task.name = name.text;
    for (int slot = 1; slot <= 2; ++slot) {
      const Value& v = positional[slot]->value;
      if (!v.scalar())
        return err(v.line, v.col, "dataIn/dataOut must be a data kind or None");
      (slot == 1 ? task.data_in : task.data_out) = v.as_string();
    }
    const Value& code = positional[3]->value;
    if (!code.scalar()) return err(code.line, code.col, "code ref must be a string");
    task.code_ref = code.as_string();

    for (const auto& arg : st.args) {
      if (arg.key.empty()) continue;
      if (arg.key == "parentTask" || arg.key == "childTask") {
        auto& dest = arg.key == "parentTask" ? task.parents : task.children;
        auto& flag = arg.key == "parentTask" ? task.parents_declared : task.children_declared;
        flag = true;
        if (arg.value.kind == Value::Kind::None) continue;
        if (arg.value.kind != Value::Kind::List)
          return err(arg.value.line, arg.value.col, arg.key + " must be None or a list");
        for (const auto& [key, item] : arg.value.items) {
          if (!key.empty() || !item.scalar() || item.kind == Value::Kind::None)
            return err(item.line, item.col, arg.key + " entries must be task names");
          dest.push_back(item.text);
        }
        continue;
      }
      if (arg.key == "sync") {
        if (!arg.value.scalar() || arg.value.kind == Value::Kind::None)
          return err(arg.value.line, arg.value.col, "sync must be a condition string");
        graph_.orderings.push_back(
            OrderingDirective{OrderKind::Synchronize, task.name, arg.value.text});
        continue;
      }
      if (arg.value.kind == Value::Kind::List)
        return err(arg.value.line, arg.value.col,
                   "unexpected list value for task argument '" + arg.key + "'");
      task.task_args[arg.key] = arg.value.as_string();
    }

    if (saw_taskgraph_ && listed_.count(task.name) == 0)
      return err(st, "task '" + task.name + "' is not listed in TaskGraph");
    if (!saw_taskgraph_)
      return err(st, "TaskGraph statement must precede Task '" + task.name + "'");
    defined_.insert(task.name);
    graph_.tasks.push_back(std::move(task));
    return true;
  }

  bool two_task_args(const Statement& st, std::string& a, std::string& b) {
    if (st.args.size() != 2 || !st.args[0].key.empty() || !st.args[1].key.empty())
      return err(st, st.name + " requires exactly two task names");
    for (const Argument* arg : {&st.args[0], &st.args[1]}) {
      if (!arg->value.scalar() || arg->value.kind == Value::Kind::None)
        return err(arg->value.line, arg->value.col, st.name + " arguments must be task names");
    }
    a = st.args[0].value.text;
    b = st.args[1].value.text;
    return true;
  }

  bool on_ordering(const Statement& st, OrderKind kind) {
    std::string a, b;
    if (!two_task_args(st, a, b)) return false;
    graph_.orderings.push_back(OrderingDirective{kind, std::move(a), std::move(b)});
    return true;
  }

  bool on_synchronize(const Statement& st) {
    std::string task, condition;
    if (!two_task_args(st, task, condition)) return false;
    graph_.orderings.push_back(
        OrderingDirective{OrderKind::Synchronize, std::move(task), std::move(condition)});
    return true;
  }

  bool subject_arg(const Statement& st, size_t index, std::string& out) {
    if (st.args.size() <= index || !st.args[index].key.empty() ||
        !st.args[index].value.scalar() || st.args[index].value.kind == Value::Kind::None)
      return err(st, st.name + " requires a task name");
    out = st.args[index].value.text;
    return true;
  }

  bool on_management(const Statement& st, DirectiveKind kind) {
    ManagementDirective d;
    d.kind = kind;
    if (!subject_arg(st, 0, d.subject)) return false;
    for (size_t i = 1; i < st.args.size(); ++i) {
      const auto& arg = st.args[i];
      if (arg.key.empty()) {
        if (!arg.value.scalar())
          return err(arg.value.line, arg.value.col, "bad directive argument");
        d.payload["policy"] = arg.value.as_string();
      } else {
        if (!arg.value.scalar())
          return err(arg.value.line, arg.value.col, "bad directive argument");
        d.payload[arg.key] = arg.value.as_string();
      }
    }
    graph_.directives.push_back(std::move(d));
    return true;
  }

  bool on_place(const Statement& st) {
    ManagementDirective d;
    d.kind = DirectiveKind::Place;
    if (!subject_arg(st, 0, d.subject)) return false;
    if (st.args.size() != 2 || !st.args[1].key.empty() || !st.args[1].value.scalar())
      return err(st, "Place requires a task name and a location");
    d.payload["location"] = st.args[1].value.as_string();
    graph_.directives.push_back(std::move(d));
    return true;
  }

  bool on_learn(const Statement& st) {
    ManagementDirective d;
    d.kind = DirectiveKind::Learn;
    if (!subject_arg(st, 0, d.subject)) return false;
    if (st.args.size() != 2 || !st.args[1].key.empty() || !st.args[1].value.scalar())
      return err(st, "Learn requires a task name and a scope");
    d.payload["scope"] = st.args[1].value.as_string();
    graph_.directives.push_back(std::move(d));
    return true;
  }
};

}  // namespace

ParseResult parse_program(std::string_view source) {
  std::vector<Token> tokens;
  LexError lex_error;
  if (!lex(source, tokens, lex_error)) {
    return {std::nullopt, ParseError{lex_error.message, lex_error.line, lex_error.col}};
  }
  Parser parser(std::move(tokens));
  std::vector<Statement> statements;
  ParseError error;
  if (!parser.parse_statements(statements, error)) {
    return {std::nullopt, error};
  }
  Builder builder;
  return builder.build(statements);
}

}  // namespace hivesim::dsl
