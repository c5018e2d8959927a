#pragma once

// Forward and backward colonies: the backward colony works on every string
// reversed, and its best solution is reversed back before comparison.

#include <algorithm>
#include <string>

#include "acolcs/colony.hpp"
#include "acolcs/construction.hpp"
#include "acolcs/instance.hpp"

namespace acolcs {

// Splits cfg.iterations between a forward run (the odd half, rounded up) and
// a backward run, and returns the better of the two solutions, oriented to
// the original instance. Ties go to the forward colony.
inline RunResult dual_solve(const Instance& inst, const SolverConfig& cfg) {
  cfg.validate();
  SolverConfig forward_cfg = cfg;
  forward_cfg.backward = false;
  forward_cfg.iterations = cfg.iterations - cfg.iterations / 2;
  SolverConfig backward_cfg = forward_cfg;
  backward_cfg.iterations = cfg.iterations / 2;
  backward_cfg.seed = splitmix64(cfg.seed ^ 0xb4c4a7d1e3f2ULL);

  RunResult result = run_forward(inst, forward_cfg);
  result.stats.forward_iterations = forward_cfg.iterations;
  if (backward_cfg.iterations == 0) return result;

  RunResult backward = run_forward(reverse_instance(inst), backward_cfg);
  const ConstructionGraph graph(inst);
  std::string chars(backward.best.chars.rbegin(), backward.best.chars.rend());
  // The reversed solution may contain characters the forward greedy replay
  // never matches; dropping them keeps it a common supersequence.
  if (cfg.mode == Mode::FrontConsume) chars = prune_unmatched(chars, graph);
  AntSolution reoriented = make_solution(std::move(chars), graph, cfg.mode);

  std::size_t running = result.best.length();
  for (std::size_t len : backward.history) {
    if (better_length(len, running, cfg.mode)) running = len;
    result.history.push_back(running);
  }
  if (better_length(reoriented.length(), result.best.length(), cfg.mode)) {
    result.best = std::move(reoriented);
    result.stats.best_iteration = forward_cfg.iterations + backward.stats.best_iteration;
    result.stats.from_backward = true;
  }
  if (better_length(result.best.length(), result.history.back(), cfg.mode))
    result.history.back() = result.best.length();
  result.stats.iterations = cfg.iterations;
  result.stats.constructions += backward.stats.constructions;
  result.stats.backward_iterations = backward_cfg.iterations;
  return result;
}

}  // namespace acolcs
