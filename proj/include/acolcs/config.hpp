#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "acolcs/errors.hpp"

namespace acolcs {

// How an ant turns a chosen character into progress through the strings.
//
// FrontConsume removes the character from every string whose front it is;
// the finished sequence is a common supersequence and shorter is better.
// MatchAdvance jumps every string past its next occurrence of the character;
// the finished sequence is a common subsequence and longer is better.
enum class Mode { FrontConsume, MatchAdvance };

enum class UpdateRule { Rank, AntSystem, IterationBest, GlobalBest, LowerBound, Sga, CrossEntropy };

inline std::string_view to_string(Mode m) noexcept {
  return m == Mode::FrontConsume ? "front-consume" : "match-advance";
}

inline std::optional<Mode> parse_mode(std::string_view s) noexcept {
  if (s == "front-consume") return Mode::FrontConsume;
  if (s == "match-advance") return Mode::MatchAdvance;
  return std::nullopt;
}

inline std::string_view to_string(UpdateRule r) noexcept {
  switch (r) {
    case UpdateRule::Rank: return "rank";
    case UpdateRule::AntSystem: return "as";
    case UpdateRule::IterationBest: return "iteration-best";
    case UpdateRule::GlobalBest: return "global-best";
    case UpdateRule::LowerBound: return "lb";
    case UpdateRule::Sga: return "sga";
    case UpdateRule::CrossEntropy: return "ce";
  }
  return "rank";
}

inline std::optional<UpdateRule> parse_update_rule(std::string_view s) noexcept {
  for (auto r : {UpdateRule::Rank, UpdateRule::AntSystem, UpdateRule::IterationBest, UpdateRule::GlobalBest,
                 UpdateRule::LowerBound, UpdateRule::Sga, UpdateRule::CrossEntropy})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

struct SolverConfig {
  std::size_t ants = 10;
  std::size_t iterations = 200;
  double alpha = 1.0;  // exponent on the trail value in the sampling branch
  double beta = 2.0;   // exponent on the look-ahead value
  double q0 = 0.9;     // probability of the greedy branch
  double rho = 0.1;    // evaporation rate
  double tau0 = 1.0;
  double tau_min = 1e-4;
  Mode mode = Mode::FrontConsume;
  int lookahead = 1;      // 0 disables the look-ahead heuristic (eta = 1)
  bool weighted = false;  // weight trails by the remaining length |L_i| - v_i + 1
  UpdateRule update = UpdateRule::Rank;
  std::size_t rank_width = 6;  // w in the linear rank weight g(r) = max(0, (w - r + 1) / w)
  std::uint64_t seed = 0;
  bool backward = false;
  bool local_search = false;
  std::size_t lb_window = 10;  // running-average span for the lower-bound quality
  double learning_rate = 0.01; // step size of the gradient-ascent update
  std::size_t threads = 1;     // construction workers; never changes results

  void validate() const {
    auto fail = [](const std::string& what) { throw InvalidConfig(what); };
    if (ants < 1) fail("ants must be >= 1");
    if (iterations < 1) fail("iterations must be >= 1");
    if (!(std::isfinite(alpha) && alpha >= 0)) fail("alpha must be a nonnegative real");
    if (!(std::isfinite(beta) && beta >= 0)) fail("beta must be a nonnegative real");
    if (!(q0 >= 0 && q0 <= 1)) fail("q0 must be in [0, 1]");
    if (!(rho > 0 && rho <= 1)) fail("rho must be in (0, 1]");
    if (!(std::isfinite(tau0) && tau0 > 0)) fail("tau0 must be positive");
    if (!(std::isfinite(tau_min) && tau_min > 0)) fail("tau_min must be positive");
    if (tau_min > tau0) fail("tau_min must not exceed tau0");
    if (lookahead != 0 && lookahead != 1) fail("lookahead depth must be 0 or 1");
    if (rank_width < 1) fail("rank width must be >= 1");
    if (lb_window < 1) fail("lb window must be >= 1");
    if (!(std::isfinite(learning_rate) && learning_rate > 0)) fail("learning rate must be positive");
    if (threads < 1) fail("threads must be >= 1");
  }
};

}  // namespace acolcs
