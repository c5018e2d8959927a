#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "acolcs/config.hpp"

namespace acolcs::cli {

// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitInput = 3,
  kExitGuard = 4,
};

struct GenOptions {
  std::string kind;
  std::size_t strings = 0;
  std::size_t length = 0;
  std::size_t alphabet = 0;
  double mutation_rate = 0.0;
  std::uint64_t seed = 0;
  std::string out_path;
};

struct SolveOptions {
  std::string instance_path;
  std::string mode;
  std::string update = "rank";
  SolverConfig config;
};

struct OracleOptions {
  std::string instance_path;
  std::string problem;
};

struct BenchOptions {
  std::string suite_path;
  std::string out_path;
  std::size_t runs = 20;
};

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);
int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and dispatches to a subcommand.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// Same, for arguments without the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acolcs::cli
