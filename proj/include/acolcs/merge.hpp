#pragma once

// Greedy front-majority baselines for common supersequences.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "acolcs/instance.hpp"

namespace acolcs {

struct HeuristicResult {
  std::string chars;
  std::vector<std::size_t> front_counts;  // fronts consumed at each step

  std::size_t length() const noexcept { return chars.size(); }
};

namespace detail {

// Repeatedly appends the symbol with the largest total front weight (first in
// alphabet order on ties) and consumes it from every front it occupies.
template <typename WeightFn>
HeuristicResult front_majority(const Instance& inst, WeightFn&& weight_of) {
  const Alphabet& alphabet = inst.alphabet();
  std::vector<std::size_t> front(inst.count(), 0);  // 0-based consumed counts
  std::vector<double> score(alphabet.size());
  HeuristicResult out;
  for (;;) {
    std::fill(score.begin(), score.end(), 0.0);
    bool any = false;
    for (std::size_t i = 0; i < inst.count(); ++i)
      if (front[i] < inst.length(i)) {
        score[alphabet.rank(inst.str(i)[front[i]])] += weight_of(i);
        any = true;
      }
    if (!any) break;
    std::size_t best = 0;
    for (std::size_t r = 1; r < score.size(); ++r)
      if (score[r] > score[best]) best = r;
    const char x = alphabet.symbol(best);
    std::size_t consumed = 0;
    for (std::size_t i = 0; i < inst.count(); ++i)
      if (front[i] < inst.length(i) && inst.str(i)[front[i]] == x) {
        ++front[i];
        ++consumed;
      }
    out.chars.push_back(x);
    out.front_counts.push_back(consumed);
  }
  return out;
}

}  // namespace detail

// Majority merge (MM): each front occurrence counts 1.
inline HeuristicResult majority_merge(const Instance& inst) {
  return detail::front_majority(inst, [](std::size_t) { return 1.0; });
}

// L-majority merge (LM): each front occurrence counts the string's original length.
inline HeuristicResult l_majority_merge(const Instance& inst) {
  return detail::front_majority(inst, [&inst](std::size_t i) { return static_cast<double>(inst.length(i)); });
}

}  // namespace acolcs
