#pragma once

// Hill climbing to a 1-move local optimum: single insertions for common
// subsequences, single deletions for common supersequences. The first
// improving move found in scan order is applied and the scan restarts.

#include <cstddef>
#include <string>

#include "acolcs/checks.hpp"
#include "acolcs/construction.hpp"
#include "acolcs/errors.hpp"

namespace acolcs {

struct LocalSearchStats {
  std::size_t checks = 0;  // checker calls
  std::size_t moves = 0;   // improving moves applied
  std::size_t passes = 0;  // scans, including the final one that finds nothing
};

inline AntSolution local_search_extend(const AntSolution& s, const ConstructionGraph& graph,
                                       LocalSearchStats* stats = nullptr) {
  if (s.mode != Mode::MatchAdvance) throw InvalidConfig("local_search_extend needs a match-advance solution");
  const Instance& inst = graph.instance();
  const std::string& symbols = inst.alphabet().symbols();
  LocalSearchStats local;
  std::string chars = s.chars;
  std::string candidate;
  for (bool improved = true; improved;) {
    improved = false;
    ++local.passes;
    for (std::size_t gap = 0; gap <= chars.size() && !improved; ++gap)
      for (char x : symbols) {
        candidate = chars;
        candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(gap), x);
        ++local.checks;
        if (is_common_subsequence(candidate, inst)) {
          chars = std::move(candidate);
          ++local.moves;
          improved = true;
          break;
        }
      }
  }
  if (stats) *stats = local;
  if (local.moves == 0) return s;
  AntSolution out = make_solution(std::move(chars), graph, Mode::MatchAdvance);
  out.rank = s.rank;
  return out;
}

inline AntSolution local_search_shrink(const AntSolution& s, const ConstructionGraph& graph,
                                       LocalSearchStats* stats = nullptr) {
  if (s.mode != Mode::FrontConsume) throw InvalidConfig("local_search_shrink needs a front-consume solution");
  const Instance& inst = graph.instance();
  LocalSearchStats local;
  std::string chars = s.chars;
  std::string candidate;
  for (bool improved = true; improved;) {
    improved = false;
    ++local.passes;
    for (std::size_t pos = 0; pos < chars.size(); ++pos) {
      candidate = chars;
      candidate.erase(pos, 1);
      ++local.checks;
      if (is_common_supersequence(candidate, inst)) {
        chars = std::move(candidate);
        ++local.moves;
        improved = true;
        break;
      }
    }
  }
  if (stats) *stats = local;
  if (local.moves == 0) return s;
  // A deletion-minimal supersequence has no character the greedy replay skips.
  AntSolution out = make_solution(std::move(chars), graph, Mode::FrontConsume);
  out.rank = s.rank;
  return out;
}

}  // namespace acolcs
