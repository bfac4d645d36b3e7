// Command-line front end. Talks to the library exclusively through the C
// interface in recurselab.h.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "recurselab.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
  std::string format = "plain";  // plain | json | csv
  bool deterministic = false;
  std::string fuel = "1000000";
  std::int64_t order = 16;
};

// An ordered flat record; formats to one line of plain/json/csv output.
struct Record {
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::string> quoted;  // fields that are strings in JSON

  void add(std::string key, std::string value, bool is_string = false) {
    if (is_string) quoted.push_back(key);
    fields.emplace_back(std::move(key), std::move(value));
  }

  bool is_quoted(const std::string& key) const {
    for (const auto& q : quoted)
      if (q == key) return true;
    return false;
  }
};

void print_record(const Record& r, const GlobalOpts& g) {
  if (g.format == "json") {
    json j = json::object();
    for (const auto& [k, v] : r.fields) {
      if (r.is_quoted(k)) {
        j[k] = v;
      } else {
        // Counters are exact decimal integers; keep them as strings so no
        // precision is lost, but emit booleans/small ints natively.
        if (v == "true" || v == "false")
          j[k] = (v == "true");
        else
          j[k] = v;
      }
    }
    std::cout << j.dump() << "\n";
  } else if (g.format == "csv") {
    std::ostringstream head, row;
    bool first = true;
    for (const auto& [k, v] : r.fields) {
      head << (first ? "" : ",") << k;
      std::string cell = v;
      bool need_quotes = cell.find_first_of(",\"\n") != std::string::npos;
      if (need_quotes) {
        std::string escaped = "\"";
        for (char c : cell) {
          if (c == '"') escaped += '"';
          escaped += c;
        }
        escaped += '"';
        cell = escaped;
      }
      row << (first ? "" : ",") << cell;
      first = false;
    }
    std::cout << head.str() << "\n" << row.str() << "\n";
  } else {
    bool first = true;
    for (const auto& [k, v] : r.fields) {
      std::cout << (first ? "" : " ") << k << "=" << v;
      first = false;
    }
    std::cout << "\n";
  }
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  std::string elapsed_ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(d).count();
    std::ostringstream s;
    s << (static_cast<double>(us) / 1000.0);
    return s.str();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void add_elapsed(Record& r, const Timer& t, const GlobalOpts& g) {
  if (!g.deterministic) r.add("elapsed_ms", t.elapsed_ms());
}

int api_fail(int code) {
  std::cerr << "error: " << rl_last_error() << "\n";
  switch (code) {
    case RL_ERR_USAGE:
    case RL_ERR_IO:
      return kExitUsage;
    default:
      return kExitCheckFailed;
  }
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  rl_string_free(s);
  return out;
}

std::vector<std::int64_t> parse_args_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    size_t pos = 0;
    std::int64_t v = std::stoll(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty argument list");
  return out;
}

std::string join_args(const std::vector<std::int64_t>& args) {
  std::ostringstream s;
  for (size_t i = 0; i < args.size(); ++i) s << (i ? "," : "") << args[i];
  return s.str();
}

const char* kind_name(int kind) {
  switch (kind) {
    case RL_VALUE:
      return "value";
    case RL_FUEL_EXHAUSTED:
      return "fuel-exhausted";
    case RL_CYCLE_DETECTED:
      return "cycle-detected";
  }
  return "?";
}

void add_outcome_fields(Record& r, const rl_outcome* o) {
  int kind = rl_outcome_kind(o);
  r.add("kind", kind_name(kind), true);
  if (kind == RL_VALUE) {
    std::int64_t value = 0;
    rl_outcome_value(o, &value);
    r.add("value", std::to_string(value));
  }
  r.add("else", take_string(rl_outcome_counter(o, "else")));
  r.add("total", take_string(rl_outcome_counter(o, "total")));
  r.add("fuel", take_string(rl_outcome_counter(o, "fuel")));
  size_t wn = rl_outcome_witness_size(o);
  if (wn > 0) {
    std::ostringstream w;
    for (size_t i = 0; i < wn; ++i)
      w << (i ? " -> " : "") << take_string(rl_outcome_witness_tuple(o, i));
    r.add("witness", w.str(), true);
  }
}

int cmd_eval(const GlobalOpts& g, const std::string& schema,
             const std::string& args_text, const std::string& strategy,
             bool compare) {
  std::vector<std::int64_t> args = parse_args_list(args_text);
  Timer timer;
  if (compare) {
    char* out = nullptr;
    int rc = rl_compare_strategies(schema.c_str(), args.data(), args.size(),
                                   g.fuel.c_str(), &out);
    if (rc != RL_OK) return api_fail(rc);
    json rows = json::parse(take_string(out));
    for (const auto& row : rows) {
      Record r;
      r.add("schema", schema, true);
      r.add("args", join_args(args), true);
      r.add("strategy", row["strategy"].get<std::string>(), true);
      r.add("kind", row["kind"].get<std::string>(), true);
      if (row.contains("value"))
        r.add("value", std::to_string(row["value"].get<std::int64_t>()));
      r.add("else", row["else"].get<std::string>());
      r.add("total", row["total"].get<std::string>());
      r.add("fuel", row["fuel"].get<std::string>());
      add_elapsed(r, timer, g);
      print_record(r, g);
    }
    return kExitOk;
  }
  rl_outcome* o = nullptr;
  int rc = rl_evaluate(schema.c_str(), args.data(), args.size(),
                       strategy.c_str(), g.fuel.c_str(), &o);
  if (rc != RL_OK) return api_fail(rc);
  Record r;
  r.add("schema", schema, true);
  r.add("args", join_args(args), true);
  r.add("strategy", strategy, true);
  add_outcome_fields(r, o);
  add_elapsed(r, timer, g);
  rl_outcome_free(o);
  print_record(r, g);
  return kExitOk;
}

int cmd_cost(const GlobalOpts& g, const std::string& args_text) {
  std::vector<std::int64_t> args = parse_args_list(args_text);
  Timer timer;
  char* out = nullptr;
  int rc = rl_cost(args.data(), args.size(), &out);
  if (rc != RL_OK) return api_fail(rc);
  json j = json::parse(take_string(out));
  Record r;
  r.add("args", join_args(args), true);
  for (auto& [key, value] : j.items()) r.add(key, value.get<std::string>());
  add_elapsed(r, timer, g);
  print_record(r, g);
  return kExitOk;
}

int cmd_sequence(const GlobalOpts& g, const std::string& name, std::int64_t max) {
  Timer timer;
  char* out = nullptr;
  int rc = rl_sequence(name.c_str(), max, &out);
  if (rc != RL_OK) return api_fail(rc);
  Record r;
  r.add("name", name, true);
  r.add("max", std::to_string(max));
  r.add("values", take_string(out), true);
  add_elapsed(r, timer, g);
  print_record(r, g);
  return kExitOk;
}

int cmd_series(const GlobalOpts& g, const std::string& name) {
  Timer timer;
  char* out = nullptr;
  int rc = rl_series(name.c_str(), g.order, &out);
  if (rc != RL_OK) return api_fail(rc);
  Record r;
  r.add("name", name, true);
  r.add("order", std::to_string(g.order));
  r.add("coefficients", take_string(out), true);
  add_elapsed(r, timer, g);
  print_record(r, g);
  return kExitOk;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite,
               const std::string& range_text) {
  int has_range = 0;
  std::int64_t lo = 0, hi = 0;
  if (!range_text.empty()) {
    auto dots = range_text.find("..");
    if (dots == std::string::npos)
      throw CLI::ValidationError("--range", "expected lo..hi");
    lo = std::stoll(range_text.substr(0, dots));
    hi = std::stoll(range_text.substr(dots + 2));
    has_range = 1;
  }
  Timer timer;
  char* out = nullptr;
  int rc = rl_verify(suite.c_str(), has_range, lo, hi, g.fuel.c_str(), g.order,
                     &out);
  if (rc != RL_OK) return api_fail(rc);
  json j = json::parse(take_string(out));
  Record r;
  r.add("suite", j["suite"].get<std::string>(), true);
  bool ok = j["ok"].get<bool>();
  r.add("ok", ok ? "true" : "false");
  r.add("checked", std::to_string(j["checked"].get<std::uint64_t>()));
  if (!ok) r.add("witness", j["witness"].get<std::string>(), true);
  add_elapsed(r, timer, g);
  print_record(r, g);
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_classify(const GlobalOpts& g, const std::string& path) {
  Timer timer;
  char* out = nullptr;
  int rc = rl_classify_hspec(path.c_str(), &out);
  if (rc != RL_OK) return api_fail(rc);
  Record r;
  r.add("hspec", path, true);
  r.add("verdict", take_string(out), true);
  add_elapsed(r, timer, g);
  print_record(r, g);
  return kExitOk;
}

int cmd_explore(const GlobalOpts& g, int problem, std::int64_t max_val,
                std::int64_t box, const std::string& args_text, bool raw) {
  Timer timer;
  if (problem == 3) {
    char* out = nullptr;
    int rc = rl_explore_op3(max_val, box, &out);
    if (rc != RL_OK) return api_fail(rc);
    json j = json::parse(take_string(out));
    for (const auto& e : j["entries"]) {
      Record r;
      r.add("h", e["h"].get<std::string>(), true);
      r.add("kind", e["kind"].get<std::string>(), true);
      r.add("detail", e["detail"].get<std::string>(), true);
      print_record(r, g);
    }
    Record summary;
    summary.add("consistent", std::to_string(j["consistent"].get<int>()));
    summary.add("inconsistent", std::to_string(j["inconsistent"].get<int>()));
    summary.add("inconclusive", std::to_string(j["inconclusive"].get<int>()));
    add_elapsed(summary, timer, g);
    print_record(summary, g);
    return j["inconsistent"].get<int>() == 0 ? kExitOk : kExitCheckFailed;
  }
  // problem 4: the full-expansion cost recurrence at one tuple.
  std::vector<std::int64_t> args = parse_args_list(args_text);
  rl_outcome* o = nullptr;
  int rc = rl_takm_cost(args.data(), args.size(), g.fuel.c_str(), raw ? 1 : 0, &o);
  if (rc != RL_OK) return api_fail(rc);
  Record r;
  r.add("args", join_args(args), true);
  r.add("mode", raw ? "raw" : "recurrence", true);
  add_outcome_fields(r, o);
  add_elapsed(r, timer, g);
  rl_outcome_free(o);
  print_record(r, g);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recurselab: instrumented evaluation of classic recursion schemes"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  GlobalOpts g;
  if (const char* env = std::getenv("RECURSELAB_FUEL")) g.fuel = env;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  app.add_flag("--deterministic", g.deterministic,
               "Suppress the elapsed-time field");
  app.add_option("--fuel", g.fuel, "Evaluation budget (decimal integer)")
      ->capture_default_str();
  app.add_option("--order", g.order, "Series truncation order")
      ->capture_default_str();

  std::string schema, args_text, strategy = "full", range_text, hspec_path,
              seq_name, series_name;
  std::int64_t seq_max = 9, max_val = 2, box = 3;
  bool compare = false, raw = false;
  int problem = 3;
  std::string suite;

  auto* eval = app.add_subcommand("eval", "Evaluate a schema at a tuple");
  eval->add_option("--schema", schema, "Schema name")->required();
  eval->add_option("--args", args_text, "Comma-separated integers")->required();
  eval->add_option("--strategy", strategy, "full | memo | lazy")
      ->capture_default_str();
  eval->add_flag("--compare", compare, "Run every applicable strategy");

  auto* cost = app.add_subcommand("cost", "Expansion-cost report at a point");
  cost->add_option("--args", args_text, "x (91 function) or x,y,z")->required();

  auto* seq = app.add_subcommand("sequence", "Emit the Vn / Tn tables");
  seq->add_option("--name", seq_name, "Vn or Tn")->required();
  seq->add_option("--max", seq_max, "Last index")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "Run a named verification suite");
  ver->add_option("suite", suite,
                  "lemma1|theorem1|theorem3|theorem4|lemma4|gf|bounds|kclosed|"
                  "vclosed")
      ->required();
  ver->add_option("--range", range_text, "Suite range override, lo..hi");

  auto* cls = app.add_subcommand("classify", "Totality verdict for an h table");
  cls->add_option("--hspec", hspec_path, "Path to an hspec JSON file")
      ->required();

  auto* ser = app.add_subcommand("series", "Emit truncated series coefficients");
  ser->add_option("--name", series_name,
                  "catalan|central|gf-residual|v-residual")
      ->required();

  auto* exp = app.add_subcommand("explore", "Open-problem explorers");
  exp->add_option("--problem", problem, "3 or 4")->check(CLI::IsMember({3, 4}));
  exp->add_option("--max-val", max_val, "Problem 3: bound on h values");
  exp->add_option("--box", box, "Problem 3: box size");
  exp->add_option("--args", args_text, "Problem 4: comma-separated tuple");
  exp->add_flag("--raw", raw, "Problem 4: genuinely nested expansion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(g, schema, args_text, strategy, compare);
    if (cost->parsed()) return cmd_cost(g, args_text);
    if (seq->parsed()) return cmd_sequence(g, seq_name, seq_max);
    if (ver->parsed()) return cmd_verify(g, suite, range_text);
    if (cls->parsed()) return cmd_classify(g, hspec_path);
    if (ser->parsed()) return cmd_series(g, series_name);
    if (exp->parsed()) {
      if (problem == 4 && args_text.empty()) {
        std::cerr << "error: explore --problem 4 requires --args\n";
        return kExitUsage;
      }
      return cmd_explore(g, problem, max_val, box, args_text, raw);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
