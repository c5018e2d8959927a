#pragma once

#include "acolcs/colony.hpp"
#include "acolcs/dual.hpp"

namespace acolcs {

// Full solve: the forward colony, or the forward/backward pair when
// cfg.backward is set. Identical (inst, cfg) always yields an identical
// result, whatever cfg.threads is.
inline RunResult run(const Instance& inst, const SolverConfig& cfg) {
  return cfg.backward ? dual_solve(inst, cfg) : run_forward(inst, cfg);
}

}  // namespace acolcs
