#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "acolcs/acolcs.hpp"

namespace acolcs::cli {
namespace {

constexpr std::uint64_t kLcsDpMaxCells = 100'000'000;

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - since).count();
}

struct ExactLcs {
  OracleResult result;
  std::string method;
};

ExactLcs exact_lcs(const Instance& inst) {
  if (inst.count() <= 2) {
    const std::string& x = inst.str(0);
    const std::string& y = inst.count() == 2 ? inst.str(1) : inst.str(0);
    if (static_cast<std::uint64_t>(x.size() + 1) * (y.size() + 1) > kLcsDpMaxCells)
      throw InstanceTooLarge("lcs_dp: table exceeds " + std::to_string(kLcsDpMaxCells) + " cells");
    return {lcs_dp(x, y), "dp"};
  }
  return {lcs_bruteforce(inst), "bruteforce"};
}

// Exact optimum for the mode's objective, or nullopt when the guards trip.
std::optional<std::size_t> try_oracle(const Instance& inst, Mode mode) {
  try {
    return mode == Mode::FrontConsume ? scs_exact(inst).length : exact_lcs(inst).result.length;
  } catch (const InstanceTooLarge&) {
    return std::nullopt;
  }
}

bool passes_checker(const std::string& chars, const Instance& inst, Mode mode) {
  return mode == Mode::FrontConsume ? is_common_supersequence(chars, inst) : is_common_subsequence(chars, inst);
}

// Loads an instance, reporting failures as input errors.
std::optional<Instance> load_or_report(const std::string& path, std::ostream& err) {
  try {
    return load_instance(path);
  } catch (const Error& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

// --- bench suite ------------------------------------------------------------

struct SuiteEntry {
  std::string label;  // instance path as written in the suite
  Instance instance;
  std::vector<Mode> modes;
  std::vector<UpdateRule> rules;
  std::vector<std::string> baselines;
  std::vector<std::uint64_t> seeds;
  SolverConfig base;
};

SolverConfig entry_config(const nlohmann::json& e) {
  SolverConfig cfg;
  cfg.ants = e.value("ants", cfg.ants);
  cfg.iterations = e.value("iterations", cfg.iterations);
  cfg.alpha = e.value("alpha", cfg.alpha);
  cfg.beta = e.value("beta", cfg.beta);
  cfg.q0 = e.value("q0", cfg.q0);
  cfg.rho = e.value("rho", cfg.rho);
  cfg.tau0 = e.value("tau0", cfg.tau0);
  cfg.tau_min = e.value("tau_min", cfg.tau_min);
  cfg.rank_width = e.value("rank_width", cfg.rank_width);
  cfg.lb_window = e.value("lb_window", cfg.lb_window);
  cfg.learning_rate = e.value("learning_rate", cfg.learning_rate);
  cfg.lookahead = e.value("lookahead", cfg.lookahead);
  cfg.weighted = e.value("weighted", cfg.weighted);
  cfg.backward = e.value("backward", cfg.backward);
  cfg.local_search = e.value("local_search", cfg.local_search);
  return cfg;
}

std::vector<SuiteEntry> load_suite(const std::string& suite_path, std::size_t runs) {
  const auto text = read_text_file(suite_path);
  nlohmann::json suite;
  try {
    suite = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("suite is not valid JSON: ") + e.what());
  }
  if (!suite.contains("entries") || !suite["entries"].is_array() || suite["entries"].empty())
    throw IoError("suite needs a nonempty 'entries' array");
  const auto base_dir = std::filesystem::path(suite_path).parent_path();

  std::vector<SuiteEntry> entries;
  try {
    for (const auto& e : suite["entries"]) {
      const std::string label = e.at("instance").get<std::string>();
      std::filesystem::path path(label);
      if (path.is_relative()) path = base_dir / path;
      std::vector<Mode> modes;
      for (const auto& m : e.value("modes", std::vector<std::string>{"front-consume"})) {
        const auto mode = parse_mode(m);
        if (!mode) throw IoError("unknown mode '" + m + "'");
        modes.push_back(*mode);
      }
      std::vector<UpdateRule> rules;
      for (const auto& r : e.value("update_rules", std::vector<std::string>{"rank"})) {
        const auto rule = parse_update_rule(r);
        if (!rule) throw IoError("unknown update rule '" + r + "'");
        rules.push_back(*rule);
      }
      std::vector<std::string> baselines = e.value("baselines", std::vector<std::string>{});
      for (const auto& b : baselines)
        if (b != "mm" && b != "lm") throw IoError("unknown baseline '" + b + "'");
      std::vector<std::uint64_t> seeds = e.value("seeds", std::vector<std::uint64_t>{});
      if (seeds.empty())
        for (std::size_t s = 1; s <= runs; ++s) seeds.push_back(s);
      SolverConfig base = entry_config(e);
      base.validate();
      entries.push_back({label, load_instance(path.string()), std::move(modes), std::move(rules),
                         std::move(baselines), std::move(seeds), base});
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed suite entry: ") + e.what());
  } catch (const InvalidConfig& e) {
    throw IoError(std::string("invalid suite entry config: ") + e.what());
  }
  return entries;
}

std::string format_summary(const std::string& label, const std::string& mode, const std::string& rule,
                           const std::vector<BenchRow>& rows) {
  double sum = 0.0;
  double gap_sum = 0.0;
  std::size_t gaps = 0;
  std::size_t lo = rows.front().best;
  std::size_t hi = rows.front().best;
  for (const auto& r : rows) {
    sum += static_cast<double>(r.best);
    lo = std::min(lo, r.best);
    hi = std::max(hi, r.best);
    if (r.gap) {
      gap_sum += static_cast<double>(*r.gap);
      ++gaps;
    }
  }
  const bool minimizing = mode == to_string(Mode::FrontConsume);
  char buf[512];
  std::snprintf(buf, sizeof buf, "%s %s %s runs=%zu mean=%.3f best=%zu worst=%zu", label.c_str(), mode.c_str(),
                rule.c_str(), rows.size(), sum / static_cast<double>(rows.size()), minimizing ? lo : hi,
                minimizing ? hi : lo);
  std::string line = buf;
  if (gaps > 0) {
    std::snprintf(buf, sizeof buf, " mean_gap=%.3f", gap_sum / static_cast<double>(gaps));
    line += buf;
  } else {
    line += " mean_gap=n/a";
  }
  return line;
}

}  // namespace

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err) {
  const auto kind = parse_generator_kind(opts.kind);
  if (!kind) {
    err << "error: unknown generator kind '" << opts.kind << "'\n";
    return kExitUsage;
  }
  const GeneratorSpec spec{*kind, opts.strings, opts.length, opts.alphabet, opts.mutation_rate, opts.seed};
  std::optional<Instance> inst;
  try {
    inst = generate(spec);
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    save_instance(opts.out_path, *inst);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  out << "wrote " << opts.out_path << " (" << inst->count() << " strings)\n";
  return kExitOk;
}

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  SolverConfig cfg = opts.config;
  const auto mode = parse_mode(opts.mode);
  const auto rule = parse_update_rule(opts.update);
  if (!mode || !rule) {
    err << "error: unknown " << (!mode ? "mode '" + opts.mode : "update rule '" + opts.update) << "'\n";
    return kExitUsage;
  }
  cfg.mode = *mode;
  cfg.update = *rule;
  try {
    cfg.validate();
  } catch (const InvalidConfig& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto inst = load_or_report(opts.instance_path, err);
  if (!inst) return kExitInput;

  const auto start = Clock::now();
  RunRecord record{opts.instance_path, cfg, run(*inst, cfg), std::nullopt, 0};
  record.wallclock_ms = elapsed_ms(start);
  if (!passes_checker(record.result.best.chars, *inst, cfg.mode)) {
    err << "internal error: best solution fails the " << to_string(cfg.mode) << " checker\n";
    return kExitInternal;
  }
  record.oracle_length = try_oracle(*inst, cfg.mode);
  out << to_json(record).dump() << '\n';
  return kExitOk;
}

int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.problem != "lcs" && opts.problem != "scs") {
    err << "error: problem must be lcs or scs\n";
    return kExitUsage;
  }
  const auto inst = load_or_report(opts.instance_path, err);
  if (!inst) return kExitInput;
  ordered_json j;
  j["problem"] = opts.problem;
  try {
    if (opts.problem == "scs") {
      const auto r = scs_exact(*inst);
      j["method"] = "position-vector-dp";
      j["length"] = r.length;
      j["witness"] = r.witness;
    } else {
      const auto r = exact_lcs(*inst);
      j["method"] = r.method;
      j["length"] = r.result.length;
      j["witness"] = r.result.witness;
    }
  } catch (const InstanceTooLarge& e) {
    err << "error: instance too large for the exact oracle: " << e.what() << '\n';
    return kExitGuard;
  }
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.runs < 1) {
    err << "error: --runs must be >= 1\n";
    return kExitUsage;
  }
  std::vector<SuiteEntry> entries;
  try {
    entries = load_suite(opts.suite_path, opts.runs);
  } catch (const Error& e) {
    err << "error: " << opts.suite_path << ": " << e.what() << '\n';
    return kExitInput;
  }

  std::string csv = std::string(kBenchCsvHeader) + '\n';
  std::vector<std::string> summary;
  for (const auto& entry : entries) {
    for (Mode mode : entry.modes) {
      const auto oracle = try_oracle(entry.instance, mode);
      for (UpdateRule rule : entry.rules) {
        std::vector<BenchRow> rows;
        for (std::uint64_t seed : entry.seeds) {
          SolverConfig cfg = entry.base;
          cfg.mode = mode;
          cfg.update = rule;
          cfg.seed = seed;
          const auto start = Clock::now();
          const RunResult result = run(entry.instance, cfg);
          const auto ms = elapsed_ms(start);
          if (!passes_checker(result.best.chars, entry.instance, mode)) {
            err << "internal error: " << entry.label << " seed " << seed << " fails the checker\n";
            return kExitInternal;
          }
          BenchRow row{entry.label, std::string(to_string(mode)), std::string(to_string(rule)), seed,
                       result.best.length(), oracle, oracle_gap(result.best.length(), oracle, mode), ms};
          csv += to_csv_line(row) + '\n';
          rows.push_back(std::move(row));
        }
        summary.push_back(format_summary(entry.label, std::string(to_string(mode)), std::string(to_string(rule)), rows));
      }
    }
    for (const auto& name : entry.baselines) {
      const auto start = Clock::now();
      const auto h = name == "mm" ? majority_merge(entry.instance) : l_majority_merge(entry.instance);
      const auto oracle = try_oracle(entry.instance, Mode::FrontConsume);
      BenchRow row{entry.label, std::string(to_string(Mode::FrontConsume)), name, 0, h.length(), oracle,
                   oracle_gap(h.length(), oracle, Mode::FrontConsume), elapsed_ms(start)};
      csv += to_csv_line(row) + '\n';
      summary.push_back(format_summary(entry.label, row.mode, name, {row}));
    }
  }

  try {
    write_text_file(opts.out_path, csv);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  for (const auto& line : summary) out << line << '\n';
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ant colony solver for common subsequence and supersequence problems", "acolcs"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a benchmark instance file");
  gen_cmd->add_option("--kind", gen.kind, "random | similar | hard-mm")->required();
  gen_cmd->add_option("--strings", gen.strings, "Number of strings")->required();
  gen_cmd->add_option("--len", gen.length, "Target string length")->required();
  gen_cmd->add_option("--alphabet", gen.alphabet, "Alphabet size")->required();
  gen_cmd->add_option("--mutation-rate", gen.mutation_rate, "Per-position resampling probability (similar)");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->required();
  gen_cmd->add_option("-o,--out", gen.out_path, "Output instance file")->required();

  SolveOptions solve;
  auto& cfg = solve.config;
  auto* solve_cmd = app.add_subcommand("solve", "Run the colony and print one JSON result");
  solve_cmd->add_option("--instance", solve.instance_path, "Instance file")->required();
  solve_cmd->add_option("--mode", solve.mode, "front-consume | match-advance")->required();
  solve_cmd->add_option("--ants", cfg.ants, "Ants per iteration")->capture_default_str();
  solve_cmd->add_option("--iters", cfg.iterations, "Iterations")->capture_default_str();
  solve_cmd->add_option("--alpha", cfg.alpha, "Trail exponent")->capture_default_str();
  solve_cmd->add_option("--beta", cfg.beta, "Look-ahead exponent")->capture_default_str();
  solve_cmd->add_option("--q0", cfg.q0, "Greedy-branch probability")->capture_default_str();
  solve_cmd->add_option("--rho", cfg.rho, "Evaporation rate")->capture_default_str();
  solve_cmd->add_option("--tau0", cfg.tau0, "Initial trail")->capture_default_str();
  solve_cmd->add_option("--tau-min", cfg.tau_min, "Trail floor")->capture_default_str();
  solve_cmd->add_option("--lookahead", cfg.lookahead, "Look-ahead depth, 0 or 1")->capture_default_str();
  solve_cmd->add_flag("--weighted", cfg.weighted, "Weight trails by remaining string length");
  solve_cmd->add_option("--update", solve.update, "rank | as | iteration-best | global-best | lb | sga | ce")
      ->capture_default_str();
  solve_cmd->add_option("--rank-width", cfg.rank_width, "Ranks that deposit")->capture_default_str();
  solve_cmd->add_option("--lb-window", cfg.lb_window, "Running-average span of the lb quality")
      ->capture_default_str();
  solve_cmd->add_option("--learning-rate", cfg.learning_rate, "Gradient-ascent step size")->capture_default_str();
  solve_cmd->add_flag("--backward", cfg.backward, "Split the budget between forward and backward colonies");
  solve_cmd->add_flag("--local-search", cfg.local_search, "Hill-climb every constructed solution");
  solve_cmd->add_option("--threads", cfg.threads, "Construction threads")->capture_default_str();
  solve_cmd->add_option("--seed", cfg.seed, "Seed")->required();

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum for small instances");
  oracle_cmd->add_option("--instance", oracle.instance_path, "Instance file")->required();
  oracle_cmd->add_option("--problem", oracle.problem, "lcs | scs")->required();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite over seeds");
  bench_cmd->add_option("--suite", bench.suite_path, "Suite JSON file")->required();
  bench_cmd->add_option("--out", bench.out_path, "CSV output file")->required();
  bench_cmd->add_option("--runs", bench.runs, "Seeds per entry when the entry lists none")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
  if (solve_cmd->parsed()) return cmd_solve(solve, out, err);
  if (oracle_cmd->parsed()) return cmd_oracle(oracle, out, err);
  return cmd_bench(bench, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"acolcs"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace acolcs::cli
