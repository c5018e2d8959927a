#pragma once

// Exact reference solvers. Every heuristic in the library is checked against
// these on instances small enough for them to run.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "acolcs/checks.hpp"
#include "acolcs/errors.hpp"
#include "acolcs/instance.hpp"

namespace acolcs {

struct OracleResult {
  std::size_t length = 0;
  std::string witness;
};

inline constexpr std::size_t kBruteForceMaxLength = 20;
inline constexpr std::uint64_t kScsMaxStates = 10'000'000;

// Classic O(|x||y|) table. Traceback prefers the diagonal move, then the move
// that decrements the index into x.
inline OracleResult lcs_dp(std::string_view x, std::string_view y) {
  const std::size_t m = x.size();
  const std::size_t n = y.size();
  const std::size_t width = n + 1;
  std::vector<std::uint32_t> c((m + 1) * width, 0);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      c[i * width + j] = x[i - 1] == y[j - 1] ? c[(i - 1) * width + j - 1] + 1
                                              : std::max(c[(i - 1) * width + j], c[i * width + j - 1]);

  OracleResult out;
  out.length = c[m * width + n];
  out.witness.reserve(out.length);
  std::size_t i = m;
  std::size_t j = n;
  while (i > 0 && j > 0) {
    if (x[i - 1] == y[j - 1]) {
      out.witness.push_back(x[i - 1]);
      --i;
      --j;
    } else if (c[(i - 1) * width + j] >= c[i * width + j - 1]) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(out.witness.begin(), out.witness.end());
  return out;
}

// Enumerates subsets of the shortest string's positions, largest first.
// Among maximum-length common subsequences the lexicographically smallest
// (alphabet order) is returned.
inline OracleResult lcs_bruteforce(const Instance& inst) {
  std::size_t shortest = 0;
  for (std::size_t i = 1; i < inst.count(); ++i)
    if (inst.length(i) < inst.length(shortest)) shortest = i;
  const std::string& s = inst.str(shortest);
  if (s.size() > kBruteForceMaxLength)
    throw InstanceTooLarge("lcs_bruteforce: shortest string has length " + std::to_string(s.size()) +
                           " > " + std::to_string(kBruteForceMaxLength));

  const auto n = static_cast<unsigned>(s.size());
  std::string candidate;
  for (unsigned k = n + 1; k-- > 0;) {
    bool found = false;
    OracleResult best{k, {}};
    if (k == 0) return best;
    // Gosper's hack: all n-bit masks with popcount k in increasing order.
    std::uint32_t mask = (1u << k) - 1u;
    const std::uint32_t limit = 1u << n;
    while (mask < limit) {
      candidate.clear();
      for (unsigned b = 0; b < n; ++b)
        if (mask & (1u << b)) candidate.push_back(s[b]);
      if ((!found || inst.alphabet().lex_less(candidate, best.witness)) &&
          is_common_subsequence(candidate, inst)) {
        best.witness = candidate;
        found = true;
      }
      const std::uint32_t lowest = mask & (~mask + 1u);
      const std::uint32_t ripple = mask + lowest;
      mask = (((ripple ^ mask) >> 2) / lowest) | ripple;
    }
    if (found) return best;
  }
  return {};
}

// Shortest common supersequence by dynamic programming over position vectors
// (v_1..v_l). An edge appends a symbol and advances every string whose front
// equals it. The witness is the lexicographically smallest shortest one.
inline OracleResult scs_exact(const Instance& inst) {
  const std::size_t l = inst.count();
  std::vector<std::uint64_t> stride(l);
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < l; ++i) {
    stride[i] = states;
    const std::uint64_t radix = inst.length(i) + 1;
    if (states > kScsMaxStates / radix)
      throw InstanceTooLarge("scs_exact: state space exceeds " + std::to_string(kScsMaxStates));
    states *= radix;
  }

  const Alphabet& alphabet = inst.alphabet();
  const std::size_t sigma = alphabet.size();
  std::vector<std::uint32_t> dist(states, 0);
  std::vector<std::size_t> pos(l);
  std::vector<std::uint64_t> step(sigma);

  // Every transition strictly increases the state code, so a descending sweep
  // visits successors first.
  for (std::uint64_t code = states; code-- > 0;) {
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < l; ++i) {
      pos[i] = static_cast<std::size_t>(rest % (inst.length(i) + 1));
      rest /= inst.length(i) + 1;
    }
    std::fill(step.begin(), step.end(), 0);
    for (std::size_t i = 0; i < l; ++i)
      if (pos[i] < inst.length(i)) step[alphabet.rank(inst.str(i)[pos[i]])] += stride[i];
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    bool any = false;
    for (std::size_t r = 0; r < sigma; ++r)
      if (step[r] != 0) {
        any = true;
        best = std::min(best, dist[code + step[r]]);
      }
    dist[code] = any ? best + 1 : 0;
  }

  OracleResult out;
  out.length = dist[0];
  std::uint64_t code = 0;
  std::fill(pos.begin(), pos.end(), 0);
  while (dist[code] > 0) {
    for (std::size_t r = 0; r < sigma; ++r) {
      const char x = alphabet.symbol(r);
      std::uint64_t delta = 0;
      for (std::size_t i = 0; i < l; ++i)
        if (pos[i] < inst.length(i) && inst.str(i)[pos[i]] == x) delta += stride[i];
      if (delta != 0 && dist[code + delta] + 1 == dist[code]) {
        for (std::size_t i = 0; i < l; ++i)
          if (pos[i] < inst.length(i) && inst.str(i)[pos[i]] == x) ++pos[i];
        code += delta;
        out.witness.push_back(x);
        break;
      }
    }
  }
  return out;
}

}  // namespace acolcs
