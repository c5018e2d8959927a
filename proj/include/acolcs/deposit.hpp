#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "acolcs/config.hpp"
#include "acolcs/construction.hpp"
#include "acolcs/errors.hpp"
#include "acolcs/pheromone.hpp"

namespace acolcs {

// Linear rank weight g(r) = max(0, (w - r + 1) / w).
inline double rank_weight(std::size_t rank, std::size_t width) noexcept {
  if (rank == 0 || rank > width) return 0.0;
  return static_cast<double>(width - rank + 1) / static_cast<double>(width);
}

// Total pheromone an ant of the given rank deposits.
// Minimizing: g(r) / |s|. Maximizing: g(r) * |s| / min_i |L_i|.
inline double rank_deposit_amount(std::size_t rank, std::size_t length, const SolverConfig& cfg,
                                  const Instance& inst) {
  if (rank < 1) throw InvalidConfig("rank must be >= 1");
  const double g = rank_weight(rank, cfg.rank_width);
  if (cfg.mode == Mode::FrontConsume) {
    if (length == 0) throw InvalidConfig("cannot deposit for an empty solution");
    return g / static_cast<double>(length);
  }
  return g * static_cast<double>(length) / static_cast<double>(inst.min_length());
}

struct Deposit {
  ComponentId component;
  double amount;
};

// Scaling factor of step h (1-based) in a solution of length n:
// 2 (n - h + 1) / (n^2 + n). Sums to 1 over h = 1..n and decreases in h.
inline double step_scale(std::size_t h, std::size_t n) noexcept {
  const double nd = static_cast<double>(n);
  return 2.0 * static_cast<double>(n - h + 1) / (nd * nd + nd);
}

// Rescans s from the start vector and spreads `amount` over the matched
// components of every step: step h gets amount * step_scale(h), split evenly
// over its matched set. Total deposited equals `amount`.
inline std::vector<Deposit> deposit_scan(const AntSolution& s, const ConstructionGraph& graph, double amount) {
  const auto trace = trace_solution(s.chars, graph, s.mode);
  const std::size_t n = s.chars.size();
  std::vector<Deposit> out;
  for (std::size_t h = 1; h <= n; ++h) {
    const auto& matched = trace[h - 1];
    const double share = amount / static_cast<double>(matched.size()) * step_scale(h, n);
    for (const auto& c : matched) out.push_back({c, share});
  }
  return out;
}

inline void apply_deposits(PheromoneMatrix& trails, const std::vector<Deposit>& deposits) {
  for (const auto& d : deposits) trails.add(d.component, d.amount);
}

}  // namespace acolcs
