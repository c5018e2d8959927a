#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acolcs/acolcs.hpp"

namespace acolcs::testing {

inline Instance four_strings() {
  return Instance(Alphabet("abc"), {"bbbaaa", "bbaaab", "cbaab", "cbaaa"});
}

inline Instance clrs_pair() { return Instance(Alphabet("ABCD"), {"ABCBDAB", "BDCABA"}); }

// l strings with lengths drawn from [min_len, max_len] over the first sigma symbols.
inline Instance random_instance(Rng& rng, std::size_t l, std::size_t min_len, std::size_t max_len,
                                std::size_t sigma) {
  Alphabet alphabet = Alphabet::first(sigma);
  std::vector<std::string> strings(l);
  for (auto& s : strings) {
    const std::size_t n = min_len + rng.below(max_len - min_len + 1);
    for (std::size_t j = 0; j < n; ++j) s.push_back(alphabet.symbol(rng.below(sigma)));
  }
  return Instance(std::move(alphabet), std::move(strings));
}

// A uniformly random walk of the construction graph, for property checks.
inline AntSolution random_walk(const ConstructionGraph& graph, Mode mode, Rng& rng) {
  std::string chars;
  auto v = IndicatorVector::start(graph.instance());
  for (;;) {
    const std::string feasible = feasible_chars(v, graph, mode);
    if (feasible.empty()) break;
    const char x = feasible[rng.below(feasible.size())];
    v = advance(v, x, graph, mode);
    chars.push_back(x);
  }
  return make_solution(std::move(chars), graph, mode);
}

inline PheromoneMatrix random_trails(const Instance& inst, Rng& rng, double lo = 0.1, double hi = 3.0) {
  PheromoneMatrix trails(inst, 1.0, 1e-4);
  ComponentMap shape(inst, 0.0);
  shape.for_each([&](ComponentId c, double) { trails.set(c, lo + (hi - lo) * rng.uniform()); });
  return trails;
}

}  // namespace acolcs::testing
