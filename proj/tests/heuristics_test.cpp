#include <gtest/gtest.h>

#include "acolcs/acolcs.hpp"
#include "test_util.hpp"

namespace acolcs {
namespace {

using testing::four_strings;
using testing::random_instance;

TEST(MajorityMerge, FourStrings) {
  const auto mm = majority_merge(four_strings());
  EXPECT_EQ(mm.chars, "bbcbaaab");
  EXPECT_EQ(mm.front_counts, (std::vector<std::size_t>{2, 2, 2, 3, 4, 4, 3, 2}));
  EXPECT_EQ(l_majority_merge(four_strings()).chars, "bbcbaaab");
}

TEST(MajorityMerge, LengthWeightingChangesTheChoice) {
  const Instance inst(Alphabet("ab"), {"ab", "ab", "bbbbba"});
  EXPECT_EQ(majority_merge(inst).chars, "abbbbba");
  EXPECT_EQ(l_majority_merge(inst).chars, "bbbbbab");
}

TEST(MajorityMerge, AlwaysASupersequence) {
  Rng gen(60);
  for (int k = 0; k < 300; ++k) {
    const Instance inst = random_instance(gen, 1 + gen.below(6), 1, 15, 1 + gen.below(6));
    for (const auto& h : {majority_merge(inst), l_majority_merge(inst)}) {
      ASSERT_TRUE(is_common_supersequence(h.chars, inst));
      ASSERT_LE(h.length(), inst.total_length());
      std::size_t consumed = 0;
      for (std::size_t c : h.front_counts) consumed += c;
      ASSERT_EQ(consumed, inst.total_length());
    }
  }
}

TEST(HardMm, MajorityMergeIsSuboptimal) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const GeneratorSpec spec{GeneratorKind::HardMm, 2 + seed % 3, 6 + seed % 7, 2 + seed % 3, 0.0, seed};
    const Instance inst = gen_hard_mm(spec);
    const auto exact = scs_exact(inst);
    EXPECT_GT(majority_merge(inst).length(), exact.length) << serialize_instance(inst);
  }
}

TEST(LocalSearch, ExtendReachesAOneInsertionOptimum) {
  Rng gen(70);
  for (int k = 0; k < 200; ++k) {
    const Instance inst = random_instance(gen, 2 + gen.below(2), 3, 12, 2 + gen.below(3));
    const ConstructionGraph graph(inst);
    // Start from a random prefix of some common subsequence so there is room to grow.
    AntSolution walk = testing::random_walk(graph, Mode::MatchAdvance, gen);
    walk.chars.resize(gen.below(walk.length() + 1));
    const AntSolution start = make_solution(walk.chars, graph, Mode::MatchAdvance);
    LocalSearchStats stats;
    const AntSolution out = local_search_extend(start, graph, &stats);
    ASSERT_TRUE(is_common_subsequence(out.chars, inst));
    ASSERT_GE(out.length(), start.length());
    ASSERT_LE(out.length(), lcs_bruteforce(inst).length);
    ASSERT_EQ(out.length(), start.length() + stats.moves);
    ASSERT_EQ(stats.passes, stats.moves + 1);
    ASSERT_LE(stats.checks, inst.alphabet().size() * (out.length() + 1) * stats.passes);
    for (std::size_t gap = 0; gap <= out.length(); ++gap)
      for (char x : inst.alphabet().symbols()) {
        std::string z = out.chars;
        z.insert(z.begin() + static_cast<std::ptrdiff_t>(gap), x);
        ASSERT_FALSE(is_common_subsequence(z, inst));
      }
  }
}

TEST(LocalSearch, ShrinkReachesAOneDeletionOptimum) {
  Rng gen(71);
  for (int k = 0; k < 200; ++k) {
    const Instance inst = random_instance(gen, 2 + gen.below(2), 2, 6, 2 + gen.below(2));
    const ConstructionGraph graph(inst);
    const AntSolution start = testing::random_walk(graph, Mode::FrontConsume, gen);
    LocalSearchStats stats;
    const AntSolution out = local_search_shrink(start, graph, &stats);
    ASSERT_TRUE(is_common_supersequence(out.chars, inst));
    ASSERT_LE(out.length(), start.length());
    ASSERT_GE(out.length(), scs_exact(inst).length);
    ASSERT_LE(stats.checks, start.length() * stats.passes);
    for (std::size_t pos = 0; pos < out.length(); ++pos) {
      std::string z = out.chars;
      z.erase(pos, 1);
      ASSERT_FALSE(is_common_supersequence(z, inst));
    }
  }
}

TEST(LocalSearch, ModeMismatch) {
  const ConstructionGraph graph(four_strings());
  const AntSolution fc = make_solution("cbbbaaab", graph, Mode::FrontConsume);
  const AntSolution ma = make_solution("baa", graph, Mode::MatchAdvance);
  EXPECT_THROW(local_search_extend(fc, graph), InvalidConfig);
  EXPECT_THROW(local_search_shrink(ma, graph), InvalidConfig);
  EXPECT_EQ(local_search_extend(ma, graph).chars, "baa");
}

TEST(Colony, HistoryIsMonotoneAndSolutionsValid) {
  Rng gen(80);
  for (int k = 0; k < 6; ++k) {
    const Instance inst = random_instance(gen, 3, 5, 9, 3);
    for (UpdateRule rule : {UpdateRule::Rank, UpdateRule::AntSystem, UpdateRule::IterationBest,
                            UpdateRule::GlobalBest, UpdateRule::LowerBound, UpdateRule::Sga,
                            UpdateRule::CrossEntropy}) {
      for (Mode mode : {Mode::FrontConsume, Mode::MatchAdvance}) {
        SolverConfig cfg;
        cfg.mode = mode;
        cfg.update = rule;
        cfg.iterations = 30;
        cfg.seed = static_cast<std::uint64_t>(k);
        cfg.local_search = k % 2 == 1;
        const RunResult r = run(inst, cfg);
        ASSERT_EQ(r.history.size(), 30u);
        for (std::size_t i = 1; i < r.history.size(); ++i)
          ASSERT_FALSE(better_length(r.history[i - 1], r.history[i], mode));
        ASSERT_EQ(r.history.back(), r.best.length());
        ASSERT_EQ(r.stats.constructions, 300u);
        if (mode == Mode::FrontConsume) {
          ASSERT_TRUE(is_common_supersequence(r.best.chars, inst));
          ASSERT_GE(r.best.length(), inst.max_length());
        } else {
          ASSERT_TRUE(is_common_subsequence(r.best.chars, inst));
        }
      }
    }
  }
}

TEST(Colony, IndependentOfThreadCount) {
  const Instance inst = gen_random({GeneratorKind::Random, 4, 12, 4, 0.0, 3});
  for (Mode mode : {Mode::FrontConsume, Mode::MatchAdvance}) {
    SolverConfig cfg;
    cfg.mode = mode;
    cfg.iterations = 40;
    cfg.seed = 17;
    const RunResult one = run(inst, cfg);
    cfg.threads = 4;
    const RunResult four = run(inst, cfg);
    EXPECT_EQ(one.best.chars, four.best.chars);
    EXPECT_EQ(one.history, four.history);
  }
}

TEST(DualSolve, SplitsTheBudget) {
  const Instance inst = four_strings();
  SolverConfig cfg;
  cfg.iterations = 41;
  cfg.seed = 2;
  const RunResult r = dual_solve(inst, cfg);
  EXPECT_EQ(r.stats.forward_iterations, 21u);
  EXPECT_EQ(r.stats.backward_iterations, 20u);
  EXPECT_EQ(r.history.size(), 41u);
  EXPECT_EQ(r.stats.constructions, 410u);
  EXPECT_TRUE(is_common_supersequence(r.best.chars, inst));
  EXPECT_EQ(r.history.back(), r.best.length());

  cfg.backward = true;
  const RunResult via_run = run(inst, cfg);
  EXPECT_EQ(via_run.best.chars, r.best.chars);
  EXPECT_EQ(via_run.history, r.history);
}

TEST(DualSolve, ValidInBothModes) {
  Rng gen(90);
  for (int k = 0; k < 20; ++k) {
    const Instance inst = random_instance(gen, 3, 4, 10, 3);
    for (Mode mode : {Mode::FrontConsume, Mode::MatchAdvance}) {
      SolverConfig cfg;
      cfg.mode = mode;
      cfg.iterations = 20;
      cfg.seed = static_cast<std::uint64_t>(k);
      cfg.backward = true;
      const RunResult r = run(inst, cfg);
      if (mode == Mode::FrontConsume)
        ASSERT_TRUE(is_common_supersequence(r.best.chars, inst));
      else
        ASSERT_TRUE(is_common_subsequence(r.best.chars, inst));
      for (std::size_t i = 1; i < r.history.size(); ++i)
        ASSERT_FALSE(better_length(r.history[i - 1], r.history[i], mode));
    }
  }
}

}  // namespace
}  // namespace acolcs
