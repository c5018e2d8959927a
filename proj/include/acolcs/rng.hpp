#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace acolcs {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seedable generator with a bit-exact output sequence on every platform.
// std::mt19937_64 is fully specified by the standard; the standard
// distributions are not, so conversions to reals and ranges are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), rejection sampled. n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

// Independent stream for (iteration, ant) so construction results do not
// depend on the order or thread in which ants run.
inline Rng substream(std::uint64_t seed, std::uint64_t iteration, std::uint64_t ant) {
  return Rng(seed ^ splitmix64(splitmix64(iteration) ^ (ant + 0x632be59bd9b4e019ULL)));
}

}  // namespace acolcs
