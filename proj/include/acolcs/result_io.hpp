#pragma once

// Result records: one JSON object per solve, one CSV row per benchmark run.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "acolcs/colony.hpp"
#include "acolcs/config.hpp"

namespace acolcs {

using ordered_json = nlohmann::ordered_json;

inline ordered_json config_to_json(const SolverConfig& cfg) {
  ordered_json j;
  j["ants"] = cfg.ants;
  j["iterations"] = cfg.iterations;
  j["alpha"] = cfg.alpha;
  j["beta"] = cfg.beta;
  j["q0"] = cfg.q0;
  j["rho"] = cfg.rho;
  j["tau0"] = cfg.tau0;
  j["tau_min"] = cfg.tau_min;
  j["mode"] = to_string(cfg.mode);
  j["lookahead"] = cfg.lookahead;
  j["weighted"] = cfg.weighted;
  j["update_rule"] = to_string(cfg.update);
  j["rank_width"] = cfg.rank_width;
  j["seed"] = cfg.seed;
  j["backward"] = cfg.backward;
  j["local_search"] = cfg.local_search;
  j["lb_window"] = cfg.lb_window;
  j["learning_rate"] = cfg.learning_rate;
  j["threads"] = cfg.threads;
  return j;
}

struct RunRecord {
  std::string instance_path;
  SolverConfig config;
  RunResult result;
  std::optional<std::size_t> oracle_length;
  std::int64_t wallclock_ms = 0;
};

// `threads` is left out of the embedded config: it never affects results,
// and leaving it out keeps records comparable across concurrency levels.
inline ordered_json to_json(const RunRecord& r) {
  ordered_json config = config_to_json(r.config);
  config.erase("threads");
  ordered_json j;
  j["instance_path"] = r.instance_path;
  j["mode"] = to_string(r.config.mode);
  j["config"] = std::move(config);
  j["best_length"] = r.result.best.length();
  j["best_string"] = r.result.best.chars;
  j["history"] = r.result.history;
  j["oracle_length"] = r.oracle_length ? ordered_json(*r.oracle_length) : ordered_json(nullptr);
  j["seed"] = r.config.seed;
  j["wallclock_ms"] = r.wallclock_ms;
  return j;
}

inline constexpr std::string_view kBenchCsvHeader = "instance,mode,update_rule,seed,best,oracle,gap,ms";

struct BenchRow {
  std::string instance;
  std::string mode;
  std::string update_rule;
  std::uint64_t seed = 0;
  std::size_t best = 0;
  std::optional<std::size_t> oracle;
  std::optional<std::int64_t> gap;  // distance to the oracle optimum, >= 0
  std::int64_t ms = 0;
};

inline std::optional<std::int64_t> oracle_gap(std::size_t best, std::optional<std::size_t> oracle, Mode mode) {
  if (!oracle) return std::nullopt;
  const auto b = static_cast<std::int64_t>(best);
  const auto o = static_cast<std::int64_t>(*oracle);
  return mode == Mode::FrontConsume ? b - o : o - b;
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string to_csv_line(const BenchRow& r) {
  std::string out = csv_field(r.instance) + ',' + r.mode + ',' + r.update_rule + ',' + std::to_string(r.seed) + ',' +
                    std::to_string(r.best) + ',';
  if (r.oracle) out += std::to_string(*r.oracle);
  out += ',';
  if (r.gap) out += std::to_string(*r.gap);
  out += ',' + std::to_string(r.ms);
  return out;
}

}  // namespace acolcs
