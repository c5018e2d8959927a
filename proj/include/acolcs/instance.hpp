#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acolcs/errors.hpp"

namespace acolcs {

// Ordered set of single-character symbols. The order is the tie-break order
// used everywhere an optimum is not unique.
class Alphabet {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    rank_.fill(-1);
    if (symbols_.empty()) throw InvalidInstance("alphabet is empty");
    for (std::size_t r = 0; r < symbols_.size(); ++r) {
      const auto c = static_cast<unsigned char>(symbols_[r]);
      if (c <= ' ' || c == '#' || c >= 0x7f)
        throw InvalidInstance("alphabet symbol must be a printable, non-blank ASCII character other than '#'");
      if (rank_[c] >= 0) throw InvalidInstance(std::string("duplicate alphabet symbol '") + symbols_[r] + "'");
      rank_[c] = static_cast<std::int16_t>(r);
    }
  }

  // The first `count` symbols of a-z, A-Z, 0-9.
  static Alphabet first(std::size_t count) {
    static constexpr std::string_view pool =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    if (count == 0 || count > pool.size())
      throw InvalidInstance("alphabet size must be in 1.." + std::to_string(pool.size()));
    return Alphabet(std::string(pool.substr(0, count)));
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbols() const noexcept { return symbols_; }
  char symbol(std::size_t rank) const { return symbols_.at(rank); }

  bool contains(char c) const noexcept { return rank_[static_cast<unsigned char>(c)] >= 0; }

  std::size_t rank(char c) const noexcept {
    const auto r = rank_[static_cast<unsigned char>(c)];
    return r < 0 ? npos : static_cast<std::size_t>(r);
  }

  // Lexicographic order of symbol sequences under the alphabet order.
  bool lex_less(std::string_view x, std::string_view y) const noexcept {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [this](char a, char b) { return rank(a) < rank(b); });
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept { return a.symbols_ == b.symbols_; }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> rank_{};
};

// The set L of strings over an alphabet.
//
// Strings are indexed from 0 in containers, but character positions inside a
// string are 1-based everywhere in this library: position j of string i is
// `at(i, j)`, and position |L_i|+1 means "past the end".
class Instance {
 public:
  Instance(Alphabet alphabet, std::vector<std::string> strings)
      : alphabet_(std::move(alphabet)), strings_(std::move(strings)) {
    if (strings_.empty()) throw InvalidInstance("instance has no strings");
    for (std::size_t i = 0; i < strings_.size(); ++i) {
      if (strings_[i].empty()) throw InvalidInstance("string " + std::to_string(i + 1) + " is empty");
      for (char c : strings_[i])
        if (!alphabet_.contains(c))
          throw InvalidInstance(std::string("symbol '") + c + "' of string " + std::to_string(i + 1) +
                                " is not in the alphabet");
    }
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& strings() const noexcept { return strings_; }
  const std::string& str(std::size_t i) const { return strings_.at(i); }
  std::size_t count() const noexcept { return strings_.size(); }
  std::size_t length(std::size_t i) const { return strings_.at(i).size(); }

  // 1-based character access.
  char at(std::size_t i, std::size_t position) const { return strings_[i][position - 1]; }

  std::size_t min_length() const noexcept {
    std::size_t m = std::numeric_limits<std::size_t>::max();
    for (const auto& s : strings_) m = std::min(m, s.size());
    return m;
  }
  std::size_t max_length() const noexcept {
    std::size_t m = 0;
    for (const auto& s : strings_) m = std::max(m, s.size());
    return m;
  }
  std::size_t total_length() const noexcept {
    return std::accumulate(strings_.begin(), strings_.end(), std::size_t{0},
                           [](std::size_t acc, const std::string& s) { return acc + s.size(); });
  }

  friend bool operator==(const Instance& a, const Instance& b) noexcept {
    return a.alphabet_ == b.alphabet_ && a.strings_ == b.strings_;
  }

 private:
  Alphabet alphabet_;
  std::vector<std::string> strings_;
};

// Every string reversed character-wise. Involution.
inline Instance reverse_instance(const Instance& inst) {
  std::vector<std::string> reversed = inst.strings();
  for (auto& s : reversed) std::reverse(s.begin(), s.end());
  return Instance(inst.alphabet(), std::move(reversed));
}

}  // namespace acolcs
