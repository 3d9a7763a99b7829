/*
 * Copyright (C) 2026 The Pattern Lock Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cmath>

#include "patternlock/enumeration.h"
#include "patternlock/guessing.h"
#include "patternlock/random.h"
#include "patternlock/reachability.h"

using namespace patternlock;

namespace {

std::vector<Pattern> repeat(const char* digits, int times) {
    return std::vector<Pattern>(static_cast<size_t>(times), patternFromDigits(digits));
}

}  // namespace

TEST(Markov, BigramCounts) {
    const std::vector<Pattern> train = {patternFromDigits("1234")};
    const auto m = fitMarkov(train, 2, 1.0);
    const std::vector<int> one = {1}, two = {2}, three = {3};
    EXPECT_EQ(m.startCount(one), 1U);
    EXPECT_EQ(m.startCount(two), 0U);
    EXPECT_EQ(m.transitionCount(one, 2), 1U);
    EXPECT_EQ(m.transitionCount(two, 3), 1U);
    EXPECT_EQ(m.transitionCount(three, 4), 1U);
    EXPECT_EQ(m.transitionCount(one, 3), 0U);
    EXPECT_EQ(m.outCount(one), 1U);
}

TEST(Markov, TrigramCounts) {
    const std::vector<Pattern> train = {patternFromDigits("1234"), patternFromDigits("1235")};
    const auto m = fitMarkov(train, 3, 1.0);
    const std::vector<int> p12 = {1, 2}, p23 = {2, 3};
    EXPECT_EQ(m.startCount(p12), 2U);
    EXPECT_EQ(m.transitionCount(p12, 3), 2U);
    EXPECT_EQ(m.transitionCount(p23, 4), 1U);
    EXPECT_EQ(m.transitionCount(p23, 5), 1U);
    EXPECT_EQ(m.outCount(p23), 2U);
}

TEST(Markov, EmptyTrainingIsPureSmoothing) {
    const auto m = fitMarkov(std::vector<Pattern>{}, 2, 1.0);
    const std::vector<int> one = {1};
    EXPECT_EQ(m.startCount(one), 0U);
    EXPECT_NEAR(m.probability(patternFromDigits("1234")), (1.0 / 9) * std::pow(1.0 / 8, 3), 1e-15);
}

TEST(Markov, CountSubstitution) {
    const auto train = repeat("1234", 10);
    const auto m = fitMarkov(train, 2, 1.0);
    const double expected = (11.0 / 19.0) * std::pow(11.0 / 18.0, 3);
    EXPECT_NEAR(m.probability(patternFromDigits("1234")), expected, 1e-14);
    EXPECT_NEAR(m.logProbability(patternFromDigits("1234")), std::log(expected), 1e-12);
}

TEST(Markov, RejectsBadOptions) {
    EXPECT_THROW(MarkovModel(MarkovOptions{4, 1.0, false}), std::invalid_argument);
    EXPECT_THROW(MarkovModel(MarkovOptions{2, 0.0, false}), std::invalid_argument);
    EXPECT_THROW(MarkovModel(MarkovOptions{2, -1.0, false}), std::invalid_argument);
}

TEST(Markov, EndSymbolVariantNormalizesOverTenOutcomes) {
    const auto m = fitMarkov(std::vector<Pattern>{}, MarkovOptions{2, 1.0, true});
    // 1/9 start, then three moves and an end, each 1/9.
    EXPECT_NEAR(m.probability(patternFromDigits("1234")), std::pow(1.0 / 9, 5), 1e-15);
}

TEST(Ranking, EmptyTrainingPrefersShortPatterns) {
    const auto m = fitMarkov(std::vector<Pattern>{}, 2, 1.0);
    const auto top = topGuesses(m, 5);
    ASSERT_EQ(top.size(), 5U);
    EXPECT_EQ(top.front().pattern.size(), 4);
}

TEST(Ranking, FullListIsAPermutationInNonIncreasingOrder) {
    const std::vector<Pattern> train = {patternFromDigits("1236"), patternFromDigits("15963"),
                                        patternFromDigits("7415963")};
    const auto ranked = rankAll(fitMarkov(train, 2, 1.0));
    ASSERT_EQ(ranked.size(), kPatternSpaceSize);
    for (size_t i = 1; i < ranked.size(); ++i) {
        ASSERT_GE(ranked[i - 1].logProbability, ranked[i].logProbability);
        if (ranked[i - 1].logProbability == ranked[i].logProbability) {
            ASSERT_LT(ranked[i - 1].pattern, ranked[i].pattern);
        }
    }
    std::vector<Pattern> sorted;
    for (const auto& g : ranked) sorted.push_back(g.pattern);
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, patternSpace());
}

TEST(Ranking, TopGuessesIsPrefixOfFullRanking) {
    const std::vector<Pattern> train = {patternFromDigits("1236"), patternFromDigits("2589")};
    const auto m = fitMarkov(train, 3, 0.5);
    const auto all = rankAll(m);
    const auto top = topGuesses(m, 50);
    ASSERT_EQ(top.size(), 50U);
    for (size_t i = 0; i < top.size(); ++i) EXPECT_EQ(top[i].pattern, all[i].pattern);
}

TEST(Ranking, RankImprovesWithTrainingMultiplicity) {
    const Pattern q = patternFromDigits("7415963");
    std::vector<Pattern> base = {patternFromDigits("1236"), patternFromDigits("3214"), patternFromDigits("9874")};
    size_t previous = SIZE_MAX;
    size_t first = 0;
    for (int mult : {1, 10, 100}) {
        std::vector<Pattern> train = base;
        for (int i = 0; i < mult; ++i) train.push_back(q);
        const size_t rank = rankOf(rankAll(fitMarkov(train, 2, 1.0)), q);
        ASSERT_GT(rank, 0U);
        EXPECT_LE(rank, previous);
        if (mult == 1) first = rank;
        previous = rank;
    }
    EXPECT_LT(previous, first);
}

TEST(Attack, BudgetEdgeCases) {
    const auto m = fitMarkov(repeat("1236", 3), 2, 1.0);
    const auto ranked = rankAll(m);
    const std::vector<Pattern> test = {ranked.front().pattern, patternFromDigits("9874")};
    const auto one = simulateAttack(ranked, test, 1);
    EXPECT_EQ(one.crackedCount, 1U);
    EXPECT_DOUBLE_EQ(one.crackedFraction, 0.5);
    EXPECT_DOUBLE_EQ(simulateAttack(ranked, test, kPatternSpaceSize).crackedFraction, 1.0);
    EXPECT_THROW(simulateAttack(ranked, test, 0), std::invalid_argument);
}

TEST(Folds, PartitionCoversEveryIndexOnce) {
    Rng rng(7);
    const auto folds = partitionFolds(23, 10, rng);
    ASSERT_EQ(folds.size(), 10U);
    std::vector<int> seen(23, 0);
    for (size_t f = 0; f < folds.size(); ++f) {
        EXPECT_EQ(folds[f].size(), f < 3 ? 3U : 2U);
        for (size_t i : folds[f]) seen[i]++;
    }
    for (int s : seen) EXPECT_EQ(s, 1);
    EXPECT_THROW(partitionFolds(5, 10, rng), std::invalid_argument);
}

TEST(CrossValidation, SinglePatternDataIsAlwaysCracked) {
    CrossValidationConfig cfg;
    cfg.repeats = 1;
    const auto r = crossValidate(repeat("2589", 10), cfg);
    EXPECT_DOUBLE_EQ(r.meanCrackedFraction, 1.0);
    EXPECT_EQ(r.foldFractions.size(), 10U);
}

TEST(CrossValidation, FoldsExceedDataSize) {
    CrossValidationConfig cfg;
    EXPECT_THROW(crossValidate(repeat("2589", 5), cfg), std::invalid_argument);
}

TEST(CrossValidation, SeededRunsAreIdentical) {
    std::vector<Pattern> data;
    Rng pick(11);
    const auto& space = patternSpace();
    for (int i = 0; i < 30; ++i) data.push_back(space[pick.uniformBelow(space.size())]);
    for (int i = 0; i < 10; ++i) data.push_back(patternFromDigits("1236"));
    CrossValidationConfig cfg;
    cfg.repeats = 2;
    cfg.seed = 99;
    const auto a = crossValidate(data, cfg);
    const auto b = crossValidate(data, cfg);
    EXPECT_EQ(a.foldFractions, b.foldFractions);
    EXPECT_EQ(a.meanCrackedFraction, b.meanCrackedFraction);
}

TEST(RandomSource, DeterministicAndBounded) {
    Rng a(5), b(5);
    for (int i = 0; i < 100; ++i) {
        const auto x = a.uniformBelow(9);
        EXPECT_EQ(x, b.uniformBelow(9));
        EXPECT_LT(x, 9U);
    }
    EXPECT_NE(deriveSeed(1, 0), deriveSeed(1, 1));
    EXPECT_EQ(deriveSeed(1, 2), deriveSeed(1, 2));
}
