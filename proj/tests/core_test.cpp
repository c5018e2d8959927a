#include <gtest/gtest.h>

#include <set>
#include <string>

#include "acolcs/acolcs.hpp"
#include "test_util.hpp"

namespace acolcs {
namespace {

using testing::clrs_pair;
using testing::four_strings;
using testing::random_instance;

// Shortest common supersequence by enumerating every string in length order.
std::size_t scs_by_enumeration(const Instance& inst) {
  const std::string& symbols = inst.alphabet().symbols();
  for (std::size_t len = inst.max_length();; ++len) {
    std::vector<std::size_t> digits(len, 0);
    for (;;) {
      std::string z;
      for (std::size_t d : digits) z.push_back(symbols[d]);
      if (is_common_supersequence(z, inst)) return len;
      std::size_t k = 0;
      while (k < len && ++digits[k] == symbols.size()) digits[k++] = 0;
      if (k == len) break;
    }
  }
}

TEST(Alphabet, RankAndOrder) {
  Alphabet a("cab");
  EXPECT_EQ(a.rank('c'), 0u);
  EXPECT_EQ(a.rank('b'), 2u);
  EXPECT_EQ(a.rank('z'), Alphabet::npos);
  EXPECT_TRUE(a.lex_less("ca", "ab"));
  EXPECT_TRUE(a.lex_less("c", "cc"));
  EXPECT_FALSE(a.lex_less("ab", "ab"));
}

TEST(Alphabet, RejectsBadSymbols) {
  EXPECT_THROW(Alphabet(""), InvalidInstance);
  EXPECT_THROW(Alphabet("aba"), InvalidInstance);
  EXPECT_THROW(Alphabet("a b"), InvalidInstance);
  EXPECT_THROW(Alphabet("a#"), InvalidInstance);
  EXPECT_THROW(Alphabet::first(63), InvalidInstance);
  EXPECT_EQ(Alphabet::first(28).symbols(), "abcdefghijklmnopqrstuvwxyzAB");
}

TEST(Instance, Invariants) {
  EXPECT_THROW(Instance(Alphabet("ab"), {}), InvalidInstance);
  EXPECT_THROW(Instance(Alphabet("ab"), {"ab", ""}), InvalidInstance);
  EXPECT_THROW(Instance(Alphabet("ab"), {"abc"}), InvalidInstance);
  const Instance inst = four_strings();
  EXPECT_EQ(inst.count(), 4u);
  EXPECT_EQ(inst.min_length(), 5u);
  EXPECT_EQ(inst.max_length(), 6u);
  EXPECT_EQ(inst.total_length(), 22u);
  EXPECT_EQ(inst.at(2, 1), 'c');
  EXPECT_EQ(inst.at(1, 6), 'b');
}

TEST(Instance, ReverseIsAnInvolution) {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const Instance inst = random_instance(rng, 1 + rng.below(4), 1, 9, 1 + rng.below(5));
    EXPECT_EQ(reverse_instance(reverse_instance(inst)), inst);
  }
  EXPECT_EQ(reverse_instance(four_strings()).str(0), "aaabbb");
}

TEST(Checks, Subsequence) {
  EXPECT_TRUE(is_subsequence("", "abc"));
  EXPECT_TRUE(is_subsequence("ac", "abc"));
  EXPECT_FALSE(is_subsequence("ca", "abc"));
  EXPECT_FALSE(is_subsequence("abcd", "abc"));
  EXPECT_TRUE(is_common_subsequence("baa", four_strings()));
  EXPECT_FALSE(is_common_subsequence("bab", four_strings()));
  EXPECT_TRUE(is_common_supersequence("cbbbaaab", four_strings()));
  EXPECT_FALSE(is_common_supersequence("bbbaaab", four_strings()));
}

TEST(LcsDp, TextbookPair) {
  const auto r = lcs_dp("ABCBDAB", "BDCABA");
  EXPECT_EQ(r.length, 4u);
  EXPECT_EQ(r.witness, "BCBA");
  EXPECT_TRUE(is_common_subsequence(r.witness, clrs_pair()));
  EXPECT_TRUE(is_common_subsequence("BCBA", clrs_pair()));
  EXPECT_TRUE(is_common_subsequence("BDAB", clrs_pair()));
}

TEST(LcsDp, EdgeCases) {
  EXPECT_EQ(lcs_dp("", "abc").length, 0u);
  EXPECT_EQ(lcs_dp("abc", "def").length, 0u);
  EXPECT_EQ(lcs_dp("abc", "abc").witness, "abc");
}

TEST(LcsBruteforce, ExamplesAndGuard) {
  const auto clrs = lcs_bruteforce(clrs_pair());
  EXPECT_EQ(clrs.length, 4u);
  EXPECT_EQ(clrs.witness, "BCAB");
  const auto four = lcs_bruteforce(four_strings());
  EXPECT_EQ(four.length, 3u);
  EXPECT_EQ(four.witness, "baa");
  const Instance large(Alphabet("ab"), {std::string(21, 'a'), std::string(22, 'a')});
  EXPECT_THROW(lcs_bruteforce(large), InstanceTooLarge);
}

TEST(LcsBruteforce, AgreesWithDpOnRandomPairs) {
  Rng rng(2024);
  for (int k = 0; k < 200; ++k) {
    const Instance inst = random_instance(rng, 2, 1, 12, 2 + rng.below(3));
    const auto dp = lcs_dp(inst.str(0), inst.str(1));
    const auto bf = lcs_bruteforce(inst);
    ASSERT_EQ(dp.length, bf.length) << inst.str(0) << " " << inst.str(1);
    EXPECT_TRUE(is_common_subsequence(dp.witness, inst));
    EXPECT_TRUE(is_common_subsequence(bf.witness, inst));
  }
}

TEST(LcsBruteforce, WitnessIsLexSmallest) {
  Rng rng(7);
  for (int k = 0; k < 40; ++k) {
    const Instance inst = random_instance(rng, 3, 1, 7, 3);
    const auto r = lcs_bruteforce(inst);
    // Every common subsequence of the optimal length is a subsequence of the
    // shortest string, so enumerate those.
    std::string shortest = inst.str(0);
    for (const auto& s : inst.strings())
      if (s.size() < shortest.size()) shortest = s;
    std::set<std::string> optimal;
    for (std::uint32_t mask = 0; mask < (1u << shortest.size()); ++mask) {
      std::string z;
      for (std::size_t j = 0; j < shortest.size(); ++j)
        if (mask & (1u << j)) z.push_back(shortest[j]);
      if (z.size() == r.length && is_common_subsequence(z, inst)) optimal.insert(z);
      EXPECT_FALSE(z.size() > r.length && is_common_subsequence(z, inst));
    }
    ASSERT_FALSE(optimal.empty());
    for (const auto& z : optimal) EXPECT_FALSE(inst.alphabet().lex_less(z, r.witness));
  }
}

TEST(ScsExact, Examples) {
  const auto four = scs_exact(four_strings());
  EXPECT_EQ(four.length, 8u);
  EXPECT_EQ(four.witness, "bbcbaaab");
  EXPECT_TRUE(is_common_supersequence(four.witness, four_strings()));
  const auto small = scs_exact(Instance(Alphabet("ab"), {"ab", "ba"}));
  EXPECT_EQ(small.length, 3u);
  EXPECT_EQ(small.witness, "aba");
}

TEST(ScsExact, AgreesWithEnumeration) {
  Rng rng(99);
  for (int k = 0; k < 40; ++k) {
    const Instance inst = random_instance(rng, 2 + rng.below(2), 1, 4, 2);
    const auto r = scs_exact(inst);
    EXPECT_EQ(r.length, scs_by_enumeration(inst));
    EXPECT_TRUE(is_common_supersequence(r.witness, inst));
  }
}

TEST(ScsExact, PairMatchesLcsIdentity) {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const Instance inst = random_instance(rng, 2, 1, 10, 3);
    const auto scs = scs_exact(inst);
    EXPECT_EQ(scs.length, inst.total_length() - lcs_dp(inst.str(0), inst.str(1)).length);
  }
}

TEST(ScsExact, Guard) {
  const Instance big(Alphabet("ab"), std::vector<std::string>(7, std::string(12, 'a')));
  EXPECT_THROW(scs_exact(big), InstanceTooLarge);
}

TEST(Rng, DeterministicAndInRange) {
  Rng a(42);
  Rng b(42);
  for (int k = 0; k < 1000; ++k) {
    const double u = a.uniform();
    EXPECT_EQ(u, b.uniform());
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(a.below(7), 7u);
    b.below(7);
  }
  EXPECT_NE(substream(1, 1, 0).next(), substream(1, 1, 1).next());
  EXPECT_EQ(substream(1, 3, 2).next(), substream(1, 3, 2).next());
}

TEST(Config, ParseAndValidate) {
  EXPECT_EQ(parse_mode("match-advance"), Mode::MatchAdvance);
  EXPECT_EQ(parse_mode("bogus"), std::nullopt);
  for (auto r : {UpdateRule::Rank, UpdateRule::AntSystem, UpdateRule::IterationBest, UpdateRule::GlobalBest,
                 UpdateRule::LowerBound, UpdateRule::Sga, UpdateRule::CrossEntropy})
    EXPECT_EQ(parse_update_rule(to_string(r)), r);
  SolverConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  auto broken = [](auto edit) {
    SolverConfig c;
    edit(c);
    return c;
  };
  EXPECT_THROW(broken([](SolverConfig& c) { c.ants = 0; }).validate(), InvalidConfig);
  EXPECT_THROW(broken([](SolverConfig& c) { c.q0 = 1.5; }).validate(), InvalidConfig);
  EXPECT_THROW(broken([](SolverConfig& c) { c.rho = 0.0; }).validate(), InvalidConfig);
  EXPECT_THROW(broken([](SolverConfig& c) { c.tau_min = 2.0; }).validate(), InvalidConfig);
  EXPECT_THROW(broken([](SolverConfig& c) { c.lookahead = 2; }).validate(), InvalidConfig);
}

}  // namespace
}  // namespace acolcs
