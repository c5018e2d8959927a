#pragma once

// Seeded instance generators for three benchmark classes: uniform random
// strings, mutated copies of one base string, and a family on which the
// majority-merge heuristic is provably suboptimal.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acolcs/errors.hpp"
#include "acolcs/instance.hpp"
#include "acolcs/rng.hpp"

namespace acolcs {

enum class GeneratorKind { Random, Similar, HardMm };

inline std::string_view to_string(GeneratorKind k) noexcept {
  switch (k) {
    case GeneratorKind::Random: return "random";
    case GeneratorKind::Similar: return "similar";
    case GeneratorKind::HardMm: return "hard-mm";
  }
  return "random";
}

inline std::optional<GeneratorKind> parse_generator_kind(std::string_view s) noexcept {
  for (auto k : {GeneratorKind::Random, GeneratorKind::Similar, GeneratorKind::HardMm})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Random;
  std::size_t strings = 1;  // l
  std::size_t length = 1;   // n
  std::size_t sigma = 1;    // alphabet size
  double mutation_rate = 0.0;
  std::uint64_t seed = 0;

  void validate() const {
    if (strings < 1) throw InvalidSpec("need at least one string");
    if (length < 1) throw InvalidSpec("string length must be >= 1");
    if (sigma < 1) throw InvalidSpec("alphabet size must be >= 1");
    if (sigma > 62) throw InvalidSpec("alphabet size must be <= 62");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) throw InvalidSpec("mutation rate must be in [0, 1]");
    if (kind != GeneratorKind::Similar && mutation_rate != 0.0)
      throw InvalidSpec("mutation rate only applies to the similar generator");
    if (kind == GeneratorKind::HardMm && sigma < 2) throw InvalidSpec("hard-mm needs an alphabet of at least 2");
    if (kind == GeneratorKind::HardMm && strings < 2) throw InvalidSpec("hard-mm needs at least 2 strings");
  }
};

// l strings of length n, symbols i.i.d. uniform over the first sigma symbols.
inline Instance gen_random(const GeneratorSpec& spec) {
  spec.validate();
  if (spec.kind != GeneratorKind::Random) throw InvalidSpec("gen_random needs kind random");
  Alphabet alphabet = Alphabet::first(spec.sigma);
  Rng rng(spec.seed);
  std::vector<std::string> strings(spec.strings);
  for (auto& s : strings)
    for (std::size_t j = 0; j < spec.length; ++j) s.push_back(alphabet.symbol(rng.below(spec.sigma)));
  return Instance(std::move(alphabet), std::move(strings));
}

// One random base string; each instance string resamples every base
// position independently with probability mutation_rate.
inline Instance gen_similar(const GeneratorSpec& spec) {
  spec.validate();
  if (spec.kind != GeneratorKind::Similar) throw InvalidSpec("gen_similar needs kind similar");
  Alphabet alphabet = Alphabet::first(spec.sigma);
  Rng rng(spec.seed);
  std::string base;
  for (std::size_t j = 0; j < spec.length; ++j) base.push_back(alphabet.symbol(rng.below(spec.sigma)));
  std::vector<std::string> strings(spec.strings, base);
  for (auto& s : strings)
    for (char& c : s)
      if (rng.bernoulli(spec.mutation_rate)) c = alphabet.symbol(rng.below(spec.sigma));
  return Instance(std::move(alphabet), std::move(strings));
}

// Block family over {a, b} plus decoy separators. Block k is
//   P_k = a b^t d   and   Q_k = b a b^t d
// with t drawn from {1, 2, 3} and the decoy d drawn from the symbols after
// a and b (omitted when sigma = 2). ceil(l/2) strings are P = P_1 P_2 ...
// and the rest are Q = Q_1 Q_2 ...; blocks are added until |Q| >= n.
//
// Front majority (ties to a) takes the a of P_k first, which leaves Q's
// leading b unmatched and costs one extra character per block, while an
// optimal merge emits Q_k and embeds P_k inside it.
inline Instance gen_hard_mm(const GeneratorSpec& spec) {
  spec.validate();
  if (spec.kind != GeneratorKind::HardMm) throw InvalidSpec("gen_hard_mm needs kind hard-mm");
  Alphabet alphabet = Alphabet::first(spec.sigma);
  Rng rng(spec.seed);
  const char a = alphabet.symbol(0);
  const char b = alphabet.symbol(1);
  std::string p;
  std::string q;
  while (q.size() < spec.length) {
    const std::size_t t = 1 + rng.below(3);
    const std::string tail = std::string(t, b);
    std::string decoy;
    if (spec.sigma > 2) decoy.push_back(alphabet.symbol(2 + rng.below(spec.sigma - 2)));
    p += a + tail + decoy;
    q += std::string{b, a} + tail + decoy;
  }
  const std::size_t majority = (spec.strings + 1) / 2;
  std::vector<std::string> strings;
  for (std::size_t i = 0; i < spec.strings; ++i) strings.push_back(i < majority ? p : q);
  return Instance(std::move(alphabet), std::move(strings));
}

inline Instance generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::Random: return gen_random(spec);
    case GeneratorKind::Similar: return gen_similar(spec);
    case GeneratorKind::HardMm: return gen_hard_mm(spec);
  }
  throw InvalidSpec("unknown generator kind");
}

}  // namespace acolcs
