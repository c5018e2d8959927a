#pragma once

#include <algorithm>
#include <string_view>

#include "acolcs/instance.hpp"

namespace acolcs {

// Greedy left-to-right embedding test: is z a subsequence of x?
inline bool is_subsequence(std::string_view z, std::string_view x) noexcept {
  if (z.size() > x.size()) return false;
  std::size_t k = 0;
  for (std::size_t j = 0; j < x.size() && k < z.size(); ++j)
    if (x[j] == z[k]) ++k;
  return k == z.size();
}

inline bool is_common_subsequence(std::string_view z, const Instance& inst) noexcept {
  return std::all_of(inst.strings().begin(), inst.strings().end(),
                     [z](const std::string& s) { return is_subsequence(z, s); });
}

inline bool is_common_supersequence(std::string_view z, const Instance& inst) noexcept {
  return std::all_of(inst.strings().begin(), inst.strings().end(),
                     [z](const std::string& s) { return is_subsequence(s, z); });
}

}  // namespace acolcs
