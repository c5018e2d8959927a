#pragma once

// One ant's walk through the construction graph: the feasible characters at
// an indicator vector, the pseudorandom proportional choice among them, and
// the indicator advance that follows.

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acolcs/config.hpp"
#include "acolcs/errors.hpp"
#include "acolcs/instance.hpp"
#include "acolcs/pheromone.hpp"
#include "acolcs/rng.hpp"

namespace acolcs {

// An instance plus a next-occurrence table for match-advance stepping.
class ConstructionGraph {
 public:
  explicit ConstructionGraph(Instance inst) : inst_(std::move(inst)) {
    const std::size_t sigma = inst_.alphabet().size();
    next_.resize(inst_.count());
    for (std::size_t i = 0; i < inst_.count(); ++i) {
      const std::size_t n = inst_.length(i);
      auto& table = next_[i];
      table.assign((n + 1) * sigma, 0);
      for (std::size_t from = n; from-- > 0;) {
        // row `from` covers 1-based position from+1
        std::copy_n(table.begin() + static_cast<std::ptrdiff_t>((from + 1) * sigma), sigma,
                    table.begin() + static_cast<std::ptrdiff_t>(from * sigma));
        table[from * sigma + inst_.alphabet().rank(inst_.at(i, from + 1))] = static_cast<std::uint32_t>(from + 1);
      }
    }
  }

  const Instance& instance() const noexcept { return inst_; }

  // First 1-based position >= from holding the symbol of rank r in string i,
  // or 0 if there is none. from may be |L_i|+1.
  std::size_t next_occurrence(std::size_t i, std::size_t from, std::size_t r) const {
    return next_[i][(from - 1) * inst_.alphabet().size() + r];
  }

 private:
  Instance inst_;
  std::vector<std::vector<std::uint32_t>> next_;
};

// Per-string front pointers v_i in 1..|L_i|+1.
class IndicatorVector {
 public:
  explicit IndicatorVector(std::vector<std::size_t> positions) : pos_(std::move(positions)) {}

  static IndicatorVector start(const Instance& inst) { return IndicatorVector(std::vector<std::size_t>(inst.count(), 1)); }

  std::size_t operator[](std::size_t i) const { return pos_[i]; }
  std::size_t size() const noexcept { return pos_.size(); }
  const std::vector<std::size_t>& positions() const noexcept { return pos_; }

  bool valid_for(const Instance& inst) const noexcept {
    if (pos_.size() != inst.count()) return false;
    for (std::size_t i = 0; i < pos_.size(); ++i)
      if (pos_[i] < 1 || pos_[i] > inst.length(i) + 1) return false;
    return true;
  }

  bool exhausted(const Instance& inst) const noexcept {
    for (std::size_t i = 0; i < pos_.size(); ++i)
      if (pos_[i] <= inst.length(i)) return false;
    return true;
  }

  friend bool operator==(const IndicatorVector&, const IndicatorVector&) = default;

 private:
  std::vector<std::size_t> pos_;
};

// Components matched when x is appended at v: the strings whose front is x
// (front-consume), or every string's next occurrence of x (match-advance).
// Empty when x is not feasible.
inline std::vector<ComponentId> matched_components(const IndicatorVector& v, char x, const ConstructionGraph& graph,
                                                   Mode mode) {
  const Instance& inst = graph.instance();
  std::vector<ComponentId> out;
  if (mode == Mode::FrontConsume) {
    for (std::size_t i = 0; i < inst.count(); ++i)
      if (v[i] <= inst.length(i) && inst.at(i, v[i]) == x) out.push_back({i, v[i]});
    return out;
  }
  const std::size_t r = inst.alphabet().rank(x);
  if (r == Alphabet::npos) return out;
  out.reserve(inst.count());
  for (std::size_t i = 0; i < inst.count(); ++i) {
    const std::size_t p = graph.next_occurrence(i, v[i], r);
    if (p == 0) return {};
    out.push_back({i, p});
  }
  return out;
}

// Feasible neighborhood at v, in alphabet order. Empty ends the construction.
inline std::string feasible_chars(const IndicatorVector& v, const ConstructionGraph& graph, Mode mode) {
  const Instance& inst = graph.instance();
  const Alphabet& alphabet = inst.alphabet();
  std::string out;
  if (mode == Mode::FrontConsume) {
    std::vector<bool> present(alphabet.size(), false);
    for (std::size_t i = 0; i < inst.count(); ++i)
      if (v[i] <= inst.length(i)) present[alphabet.rank(inst.at(i, v[i]))] = true;
    for (std::size_t r = 0; r < alphabet.size(); ++r)
      if (present[r]) out.push_back(alphabet.symbol(r));
    return out;
  }
  for (std::size_t r = 0; r < alphabet.size(); ++r) {
    bool everywhere = true;
    for (std::size_t i = 0; i < inst.count() && everywhere; ++i) everywhere = graph.next_occurrence(i, v[i], r) != 0;
    if (everywhere) out.push_back(alphabet.symbol(r));
  }
  return out;
}

inline IndicatorVector advance(const IndicatorVector& v, char x, const ConstructionGraph& graph, Mode mode) {
  const auto matched = matched_components(v, x, graph, mode);
  if (matched.empty()) throw InfeasibleChar(std::string("character '") + x + "' is not feasible here");
  std::vector<std::size_t> next = v.positions();
  for (const auto& c : matched) next[c.string] = c.position + 1;
  return IndicatorVector(std::move(next));
}

// Trail value of character x at v: the sum of the trails of all matched
// components, optionally weighted by how much of each string remains.
inline double char_pheromone(char x, const IndicatorVector& v, const ConstructionGraph& graph,
                             const PheromoneMatrix& trails, Mode mode, bool weighted) {
  const Instance& inst = graph.instance();
  double sum = 0.0;
  for (const auto& c : matched_components(v, x, graph, mode)) {
    const double w = weighted ? static_cast<double>(inst.length(c.string) - v[c.string] + 1) : 1.0;
    sum += w * trails[c];
  }
  return sum;
}

// One-step look-ahead: tentatively append x and return the largest trail
// among the components the advanced vector points at (tau_min if none).
inline double lookahead_eta(char x, const IndicatorVector& v, const ConstructionGraph& graph,
                            const PheromoneMatrix& trails, Mode mode) {
  const Instance& inst = graph.instance();
  const IndicatorVector ahead = advance(v, x, graph, mode);
  double best = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < inst.count(); ++i)
    if (ahead[i] <= inst.length(i)) {
      best = any ? std::max(best, trails[{i, ahead[i]}]) : trails[{i, ahead[i]}];
      any = true;
    }
  return any ? best : trails.tau_min();
}

struct Candidate {
  char symbol;
  double tau;
  double eta;
};

// Candidates at v in alphabet order. With lookahead disabled eta is 1.
inline std::vector<Candidate> candidates(const IndicatorVector& v, const ConstructionGraph& graph,
                                         const PheromoneMatrix& trails, const SolverConfig& cfg) {
  std::vector<Candidate> out;
  for (char x : feasible_chars(v, graph, cfg.mode)) {
    const double tau = char_pheromone(x, v, graph, trails, cfg.mode, cfg.weighted);
    const double eta = cfg.lookahead > 0 ? lookahead_eta(x, v, graph, trails, cfg.mode) : 1.0;
    out.push_back({x, tau, eta});
  }
  return out;
}

// Sampling-branch distribution: p(x) proportional to tau^alpha * eta^beta.
inline std::vector<double> choice_probabilities(const std::vector<Candidate>& cands, double alpha, double beta) {
  std::vector<double> p(cands.size());
  double total = 0.0;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    p[k] = std::pow(cands[k].tau, alpha) * std::pow(cands[k].eta, beta);
    total += p[k];
  }
  for (double& x : p) x /= total;
  return p;
}

// Pseudorandom proportional rule. Draws q; if q <= q0 returns the argmax of
// tau * eta^beta (first in alphabet order on ties), otherwise draws a second
// uniform and samples from choice_probabilities. Exactly one or two draws.
inline char choose_char(const std::vector<Candidate>& cands, const SolverConfig& cfg, Rng& rng) {
  if (cands.empty()) throw EmptyCandidates("no candidate characters");
  const double q = rng.uniform();
  if (q <= cfg.q0) {
    std::size_t best = 0;
    double best_value = cands[0].tau * std::pow(cands[0].eta, cfg.beta);
    for (std::size_t k = 1; k < cands.size(); ++k) {
      const double value = cands[k].tau * std::pow(cands[k].eta, cfg.beta);
      if (value > best_value) {
        best = k;
        best_value = value;
      }
    }
    return cands[best].symbol;
  }
  const auto p = choice_probabilities(cands, cfg.alpha, cfg.beta);
  const double u = rng.uniform();
  double cumulative = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    cumulative += p[k];
    if (u < cumulative) return cands[k].symbol;
  }
  return cands.back().symbol;
}

struct AntSolution {
  std::string chars;
  std::vector<std::vector<ComponentId>> trace;  // matched components per step
  Mode mode = Mode::FrontConsume;
  double quality = 0.0;  // |s| when maximizing, -|s| when minimizing
  std::size_t rank = 0;

  std::size_t length() const noexcept { return chars.size(); }
};

inline double length_quality(std::size_t length, Mode mode) noexcept {
  return mode == Mode::MatchAdvance ? static_cast<double>(length) : -static_cast<double>(length);
}

// True if a is strictly better than b under the mode's objective.
inline bool better_length(std::size_t a, std::size_t b, Mode mode) noexcept {
  return mode == Mode::MatchAdvance ? a > b : a < b;
}

// Replays chars from the start vector and records the matched components of
// every step. Throws InconsistentTrace if some step matches nothing.
inline std::vector<std::vector<ComponentId>> trace_solution(std::string_view chars, const ConstructionGraph& graph,
                                                            Mode mode) {
  std::vector<std::vector<ComponentId>> trace;
  trace.reserve(chars.size());
  auto v = IndicatorVector::start(graph.instance());
  for (std::size_t h = 0; h < chars.size(); ++h) {
    auto matched = matched_components(v, chars[h], graph, mode);
    if (matched.empty())
      throw InconsistentTrace("step " + std::to_string(h + 1) + " ('" + chars[h] + "') matches no component");
    std::vector<std::size_t> next = v.positions();
    for (const auto& c : matched) next[c.string] = c.position + 1;
    v = IndicatorVector(std::move(next));
    trace.push_back(std::move(matched));
  }
  return trace;
}

inline AntSolution make_solution(std::string chars, const ConstructionGraph& graph, Mode mode) {
  AntSolution s;
  s.trace = trace_solution(chars, graph, mode);
  s.chars = std::move(chars);
  s.mode = mode;
  s.quality = length_quality(s.chars.size(), mode);
  return s;
}

// Drops characters that the greedy front-consume replay never matches. The
// result is still a common supersequence whenever the input was one.
inline std::string prune_unmatched(std::string_view chars, const ConstructionGraph& graph) {
  std::string out;
  auto v = IndicatorVector::start(graph.instance());
  for (char x : chars) {
    const auto matched = matched_components(v, x, graph, Mode::FrontConsume);
    if (matched.empty()) continue;
    std::vector<std::size_t> next = v.positions();
    for (const auto& c : matched) next[c.string] = c.position + 1;
    v = IndicatorVector(std::move(next));
    out.push_back(x);
  }
  return out;
}

// Builds one solution: feasible set, trail and look-ahead values, choice,
// advance, until the feasible set is empty.
inline AntSolution construct_solution(const ConstructionGraph& graph, const PheromoneMatrix& trails,
                                      const SolverConfig& cfg, Rng& rng) {
  AntSolution s;
  s.mode = cfg.mode;
  auto v = IndicatorVector::start(graph.instance());
  for (;;) {
    const auto cands = candidates(v, graph, trails, cfg);
    if (cands.empty()) break;
    const char x = choose_char(cands, cfg, rng);
    auto matched = matched_components(v, x, graph, cfg.mode);
    std::vector<std::size_t> next = v.positions();
    for (const auto& c : matched) next[c.string] = c.position + 1;
    v = IndicatorVector(std::move(next));
    s.chars.push_back(x);
    s.trace.push_back(std::move(matched));
  }
  s.quality = length_quality(s.chars.size(), cfg.mode);
  return s;
}

}  // namespace acolcs
