#pragma once

// Pheromone updates viewed as model-based search: the colony samples
// solutions from a distribution parameterized by the trails, and each rule
// below moves the trails toward better samples.
//
// The gradient and cross-entropy machinery assumes the fully stochastic
// policy (q0 = 0) without look-ahead, so that P_T(s) is a smooth product of
// the sampling-branch probabilities.

#include <cmath>
#include <cstdint>
#include <deque>
#include <numeric>
#include <span>
#include <string_view>
#include <vector>

#include "acolcs/config.hpp"
#include "acolcs/construction.hpp"
#include "acolcs/errors.hpp"
#include "acolcs/pheromone.hpp"
#include "acolcs/rng.hpp"

namespace acolcs {

enum class QualityKind { AntSystem, IterationBest, GlobalBest, LowerBound };

struct QualitySpec {
  QualityKind kind = QualityKind::AntSystem;
  double lower_bound = 0.0;  // LB, used by kind == LowerBound
  std::size_t window = 10;   // running-average span, used by kind == LowerBound
  double tau0 = 1.0;
};

struct QualityState {
  double recent_mean = 0.0;  // mean cost of the last `window` solutions
  bool designated = false;   // member of the iteration-best / global-best reference set
};

// Cost f(s) seen by the quality functions. Minimizing: |s|. Maximizing: the
// mirrored cost min_i |L_i| - |s|, shifted by one so that 1/f stays finite.
inline double solution_cost(std::size_t length, Mode mode, const Instance& inst) noexcept {
  if (mode == Mode::FrontConsume) return static_cast<double>(length);
  return static_cast<double>(inst.min_length()) - static_cast<double>(length) + 1.0;
}

// max_i |L_i| bounds any common supersequence from below; for the shifted
// mirrored cost the bound is 1 (|s| = min_i |L_i|).
inline double default_lower_bound(Mode mode, const Instance& inst) noexcept {
  return mode == Mode::FrontConsume ? static_cast<double>(inst.max_length()) : 1.0;
}

// tau0 (mean - f) / (mean - LB), clamped at 0.
inline double lower_bound_quality(double cost, double mean, double lower_bound, double tau0) {
  if (!(mean > lower_bound)) throw DegenerateAverage("running mean cost does not exceed the lower bound");
  return std::max(0.0, tau0 * (mean - cost) / (mean - lower_bound));
}

inline double quality(double cost, const QualitySpec& spec, const QualityState& state) {
  switch (spec.kind) {
    case QualityKind::AntSystem: return 1.0 / cost;
    case QualityKind::IterationBest:
    case QualityKind::GlobalBest: return state.designated ? 1.0 / cost : 0.0;
    case QualityKind::LowerBound: return lower_bound_quality(cost, state.recent_mean, spec.lower_bound, spec.tau0);
  }
  return 0.0;
}

// Mean of the last `span` costs pushed.
class CostWindow {
 public:
  explicit CostWindow(std::size_t span) : span_(span) {}

  void push(double cost) {
    costs_.push_back(cost);
    sum_ += cost;
    if (costs_.size() > span_) {
      sum_ -= costs_.front();
      costs_.pop_front();
    }
  }

  double mean() const noexcept { return costs_.empty() ? 0.0 : sum_ / static_cast<double>(costs_.size()); }
  std::size_t size() const noexcept { return costs_.size(); }

 private:
  std::size_t span_;
  std::deque<double> costs_;
  double sum_ = 0.0;
};

// Index of an iteration-best sample; ties are broken uniformly at random.
inline std::size_t select_iteration_best(std::span<const AntSolution> samples, Rng& rng) {
  std::vector<std::size_t> best{0};
  for (std::size_t k = 1; k < samples.size(); ++k) {
    if (better_length(samples[k].length(), samples[best[0]].length(), samples[k].mode))
      best.assign(1, k);
    else if (samples[k].length() == samples[best[0]].length())
      best.push_back(k);
  }
  return best.size() == 1 ? best[0] : best[rng.below(best.size())];
}

// Evaporate by (1 - rho), then add each reference solution's quality to
// every component on its deposit trace.
inline void generic_update(PheromoneMatrix& trails, std::span<const AntSolution> reference,
                           std::span<const double> qualities, const ConstructionGraph& graph, double rho) {
  trails.evaporate(rho);
  for (std::size_t k = 0; k < reference.size(); ++k) {
    if (qualities[k] == 0.0) continue;
    for (const auto& step : trace_solution(reference[k].chars, graph, reference[k].mode))
      for (const auto& c : step) trails.add(c, qualities[k]);
  }
}

// The policy the gradient and cross-entropy analyses are carried out under.
inline SolverConfig stochastic_policy(SolverConfig cfg) {
  cfg.q0 = 0.0;
  cfg.lookahead = 0;
  return cfg;
}

namespace detail {

template <typename StepFn>
void replay_policy(std::string_view chars, const ConstructionGraph& graph, const PheromoneMatrix& trails,
                   const SolverConfig& cfg, StepFn&& on_step) {
  const SolverConfig policy = stochastic_policy(cfg);
  auto v = IndicatorVector::start(graph.instance());
  for (std::size_t h = 0; h < chars.size(); ++h) {
    const auto cands = candidates(v, graph, trails, policy);
    std::size_t chosen = cands.size();
    for (std::size_t k = 0; k < cands.size(); ++k)
      if (cands[k].symbol == chars[h]) chosen = k;
    if (chosen == cands.size())
      throw InfeasibleTrace("step " + std::to_string(h + 1) + " ('" + chars[h] + "') is not a feasible choice");
    const auto p = choice_probabilities(cands, policy.alpha, policy.beta);
    on_step(v, cands, p, chosen);
    v = advance(v, chars[h], graph, policy.mode);
  }
}

}  // namespace detail

// ln P_T(s) = sum_k ln P_T(c_{k+1} | pref_k(s)).
inline double log_prob(std::string_view chars, const ConstructionGraph& graph, const PheromoneMatrix& trails,
                       const SolverConfig& cfg) {
  double sum = 0.0;
  detail::replay_policy(chars, graph, trails, cfg,
                        [&sum](const IndicatorVector&, const std::vector<Candidate>&, const std::vector<double>& p,
                               std::size_t chosen) { sum += std::log(p[chosen]); });
  return sum;
}

using GradientVector = ComponentMap;

// d ln P_T(s) / d tau_c for every component.
//
// A candidate y at a step has trail value V_y = sum_c w_c tau_c over its
// matched components, and F(V) = V^alpha, so G = F'/F = alpha / V. Each
// matched component of the chosen character gets (1 - P(y)) alpha w_c / V_y,
// each matched component of another candidate gets -P(y) alpha w_c / V_y,
// and components never pointed at get 0.
inline GradientVector log_prob_gradient(std::string_view chars, const ConstructionGraph& graph,
                                        const PheromoneMatrix& trails, const SolverConfig& cfg) {
  GradientVector grad(graph.instance(), 0.0);
  const Instance& inst = graph.instance();
  detail::replay_policy(
      chars, graph, trails, cfg,
      [&](const IndicatorVector& v, const std::vector<Candidate>& cands, const std::vector<double>& p,
          std::size_t chosen) {
        for (std::size_t k = 0; k < cands.size(); ++k) {
          const double indicator = k == chosen ? 1.0 : 0.0;
          const double g = cfg.alpha / cands[k].tau;
          for (const auto& c : matched_components(v, cands[k].symbol, graph, cfg.mode)) {
            const double w = cfg.weighted ? static_cast<double>(inst.length(c.string) - v[c.string] + 1) : 1.0;
            grad[c] += (indicator - p[k]) * g * w;
          }
        }
      });
  return grad;
}

// tau <- tau + rate * sum_s Q(s) grad ln P_T(s): used connections are
// reinforced and every considered connection is evaporated in proportion to
// its choice probability. Gradients are taken at the pre-update trails, and
// the floor tau_min is applied afterwards.
inline void sga_update(PheromoneMatrix& trails, std::span<const AntSolution> samples,
                       std::span<const double> qualities, const ConstructionGraph& graph, const SolverConfig& cfg,
                       double rate) {
  ComponentMap delta(graph.instance(), 0.0);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (qualities[k] == 0.0) continue;
    const auto grad = log_prob_gradient(samples[k].chars, graph, trails, cfg);
    grad.for_each([&](ComponentId c, double g) { delta[c] += rate * qualities[k] * g; });
  }
  delta.for_each([&trails](ComponentId c, double d) {
    if (d != 0.0) trails.add(c, d);
  });
}

// --- cross-entropy ---------------------------------------------------------

struct BitSample {
  std::vector<std::uint8_t> bits;
  double quality = 0.0;
};

// Independent bits with P(s_i = 1) = p_i.
class ToyBitModel {
 public:
  explicit ToyBitModel(std::vector<double> p) : p_(std::move(p)) {
    for (double x : p_)
      if (!(x >= 0.0 && x <= 1.0)) throw InvalidConfig("bit probabilities must lie in [0, 1]");
  }

  std::size_t size() const noexcept { return p_.size(); }
  const std::vector<double>& probabilities() const noexcept { return p_; }
  std::vector<double>& probabilities() noexcept { return p_; }

  double probability(std::span<const std::uint8_t> bits) const {
    double prob = 1.0;
    for (std::size_t i = 0; i < p_.size(); ++i) prob *= bits[i] ? p_[i] : 1.0 - p_[i];
    return prob;
  }

  std::vector<std::uint8_t> sample(Rng& rng) const {
    std::vector<std::uint8_t> bits(p_.size());
    for (std::size_t i = 0; i < p_.size(); ++i) bits[i] = rng.bernoulli(p_[i]) ? 1 : 0;
    return bits;
  }

 private:
  std::vector<double> p_;
};

// Maximizer of sum_s Q(s) ln P(s) on the independent-bit model:
// p_i = sum_s Q(s) s_i / sum_s Q(s).
inline std::vector<double> ce_closed_form(std::span<const BitSample> samples) {
  if (samples.empty()) throw ZeroMass("no samples");
  const std::size_t n = samples.front().bits.size();
  std::vector<double> weighted(n, 0.0);
  double mass = 0.0;
  for (const auto& s : samples) {
    mass += s.quality;
    for (std::size_t i = 0; i < n; ++i)
      if (s.bits[i]) weighted[i] += s.quality;
  }
  if (!(mass > 0.0)) throw ZeroMass("sample qualities sum to zero");
  for (double& w : weighted) w /= mass;
  return weighted;
}

// p <- (1 - rho) p + rho ce_closed_form(samples).
inline void ce_update(ToyBitModel& model, std::span<const BitSample> samples, double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw InvalidConfig("rho must be in [0, 1]");
  const auto target = ce_closed_form(samples);
  auto& p = model.probabilities();
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = (1.0 - rho) * p[i] + rho * target[i];
}

// Same convex combination on the string model, where the bit of component c
// in solution s is whether c lies on s's deposit trace. This is only an
// approximation of the cross-entropy solution for the string model.
inline void ce_update(PheromoneMatrix& trails, std::span<const AntSolution> samples,
                      std::span<const double> qualities, const ConstructionGraph& graph, double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw InvalidConfig("rho must be in [0, 1]");
  ComponentMap target(graph.instance(), 0.0);
  double mass = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    mass += qualities[k];
    if (qualities[k] == 0.0) continue;
    for (const auto& step : trace_solution(samples[k].chars, graph, samples[k].mode))
      for (const auto& c : step) target[c] += qualities[k];
  }
  if (!(mass > 0.0)) throw ZeroMass("sample qualities sum to zero");
  target.for_each([&](ComponentId c, double t) { trails.set(c, (1.0 - rho) * trails[c] + rho * t / mass); });
}

}  // namespace acolcs
