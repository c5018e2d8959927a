#pragma once

// The iteration loop: construct, optionally improve, rank, evaporate and
// deposit, track the best-so-far solution.

#include <algorithm>
#include <exception>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "acolcs/config.hpp"
#include "acolcs/construction.hpp"
#include "acolcs/deposit.hpp"
#include "acolcs/local_search.hpp"
#include "acolcs/model_search.hpp"
#include "acolcs/pheromone.hpp"
#include "acolcs/rng.hpp"

namespace acolcs {

struct RunStats {
  std::size_t iterations = 0;
  std::size_t constructions = 0;
  std::size_t best_iteration = 0;  // 1-based iteration in which the best was first found
  std::size_t forward_iterations = 0;
  std::size_t backward_iterations = 0;
  bool from_backward = false;
};

struct RunResult {
  AntSolution best;
  std::vector<std::size_t> history;  // best-so-far length after each iteration
  RunStats stats;
};

namespace detail {

template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w)
    workers.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < count; k += threads) fn(k);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline QualityKind quality_kind_for(UpdateRule rule) noexcept {
  switch (rule) {
    case UpdateRule::AntSystem: return QualityKind::AntSystem;
    case UpdateRule::IterationBest: return QualityKind::IterationBest;
    case UpdateRule::GlobalBest: return QualityKind::GlobalBest;
    default: return QualityKind::LowerBound;
  }
}

}  // namespace detail

// Runs the colony on inst in the configured orientation only.
inline RunResult run_forward(const Instance& inst, const SolverConfig& cfg) {
  cfg.validate();
  const ConstructionGraph graph(inst);
  PheromoneMatrix trails(inst, cfg.tau0, cfg.tau_min);
  const QualitySpec spec{detail::quality_kind_for(cfg.update), default_lower_bound(cfg.mode, inst), cfg.lb_window,
                         cfg.tau0};
  CostWindow window(cfg.lb_window);
  Rng tie_rng(splitmix64(cfg.seed ^ 0x5bd1e995ULL));

  RunResult result;
  std::optional<AntSolution> best;
  std::vector<AntSolution> ants(cfg.ants);
  std::vector<std::size_t> order(cfg.ants);

  for (std::size_t it = 1; it <= cfg.iterations; ++it) {
    detail::parallel_for(cfg.ants, cfg.threads, [&](std::size_t k) {
      Rng rng = substream(cfg.seed, it, k);
      AntSolution s = construct_solution(graph, trails, cfg, rng);
      if (cfg.local_search)
        s = cfg.mode == Mode::MatchAdvance ? local_search_extend(s, graph) : local_search_shrink(s, graph);
      ants[k] = std::move(s);
    });
    result.stats.constructions += cfg.ants;

    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return better_length(ants[a].length(), ants[b].length(), cfg.mode);
    });
    for (std::size_t r = 0; r < order.size(); ++r) ants[order[r]].rank = r + 1;

    const AntSolution& iteration_best = ants[order.front()];
    if (!best || better_length(iteration_best.length(), best->length(), cfg.mode)) {
      best = iteration_best;
      result.stats.best_iteration = it;
    }

    std::vector<double> costs(ants.size());
    for (std::size_t k = 0; k < ants.size(); ++k) costs[k] = solution_cost(ants[k].length(), cfg.mode, inst);

    switch (cfg.update) {
      case UpdateRule::Rank: {
        trails.evaporate(cfg.rho);
        ComponentMap buffer(inst, 0.0);
        for (std::size_t k : order) {
          const double amount = rank_deposit_amount(ants[k].rank, ants[k].length(), cfg, inst);
          if (amount == 0.0) continue;
          for (const auto& d : deposit_scan(ants[k], graph, amount)) buffer[d.component] += d.amount;
        }
        buffer.for_each([&trails](ComponentId c, double d) {
          if (d != 0.0) trails.add(c, d);
        });
        break;
      }
      case UpdateRule::AntSystem: {
        std::vector<double> q(costs.size());
        for (std::size_t k = 0; k < q.size(); ++k) q[k] = quality(costs[k], spec, {});
        generic_update(trails, ants, q, graph, cfg.rho);
        break;
      }
      case UpdateRule::IterationBest: {
        const std::size_t k = select_iteration_best(ants, tie_rng);
        const double q = quality(costs[k], spec, {0.0, true});
        generic_update(trails, std::span(&ants[k], 1), std::span(&q, 1), graph, cfg.rho);
        break;
      }
      case UpdateRule::GlobalBest: {
        const double q = quality(solution_cost(best->length(), cfg.mode, inst), spec, {0.0, true});
        generic_update(trails, std::span(&*best, 1), std::span(&q, 1), graph, cfg.rho);
        break;
      }
      case UpdateRule::LowerBound:
      case UpdateRule::Sga:
      case UpdateRule::CrossEntropy: {
        for (double c : costs) window.push(c);
        const double mean = window.mean();
        std::vector<double> q(costs.size(), 0.0);
        double mass = 0.0;
        if (mean > spec.lower_bound)
          for (std::size_t k = 0; k < q.size(); ++k) {
            q[k] = quality(costs[k], spec, {mean, false});
            mass += q[k];
          }
        if (cfg.update == UpdateRule::LowerBound)
          generic_update(trails, ants, q, graph, cfg.rho);
        else if (mass > 0.0 && cfg.update == UpdateRule::Sga)
          sga_update(trails, ants, q, graph, cfg, cfg.learning_rate);
        else if (mass > 0.0)
          ce_update(trails, ants, q, graph, cfg.rho);
        break;
      }
    }

    result.history.push_back(best->length());
  }

  result.best = std::move(*best);
  result.stats.iterations = cfg.iterations;
  result.stats.forward_iterations = cfg.iterations;
  return result;
}

}  // namespace acolcs
