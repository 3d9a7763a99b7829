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

#include <algorithm>
#include <set>
#include <sstream>

#include "oracles.h"
#include "patternlock/enumeration.h"
#include "patternlock/reachability.h"

using namespace patternlock;

TEST(Enumeration, CountsAndLengthExtremes) {
    const auto& all = patternSpace();
    ASSERT_EQ(all.size(), kPatternSpaceSize);
    EXPECT_EQ(std::count_if(all.begin(), all.end(), [](const Pattern& p) { return p.size() == 4; }), 1624);
    EXPECT_EQ(std::count_if(all.begin(), all.end(), [](const Pattern& p) { return p.size() == 9; }), 140704);
}

TEST(Enumeration, LexicographicAndDistinct) {
    const auto& all = patternSpace();
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
}

TEST(Enumeration, EqualsBruteForceSpace) {
    std::set<std::string> expected;
    for (const auto& labels : oracle::allPatterns()) {
        std::string s;
        for (int l : labels) s += static_cast<char>('0' + l);
        expected.insert(s);
    }
    ASSERT_EQ(expected.size(), kPatternSpaceSize);
    auto it = expected.begin();
    for (const Pattern& p : patternSpace()) {
        ASSERT_EQ(p.digits(), *it);
        ++it;
    }
}

TEST(Enumeration, ThreadedMatchesSequential) {
    EXPECT_EQ(enumerateAll(4), patternSpace());
}

TEST(Enumeration, EveryPatternRevalidates) {
    for (const Pattern& p : patternSpace()) {
        const auto r = validatePattern(p.dots());
        ASSERT_TRUE(std::holds_alternative<Pattern>(r)) << p.digits();
    }
}

TEST(Theory, HistogramTotals) {
    for (Feature f : kAllFeatures) {
        if (f == Feature::StrokeLength) {
            EXPECT_THROW(theoryDistribution(f), std::invalid_argument);
            continue;
        }
        EXPECT_EQ(theoryDistribution(f).total(), kPatternSpaceSize) << toString(f);
    }
}

TEST(Theory, SearchSpaceWithoutLongMoves) {
    // Patterns made only of simple moves, and patterns without overlaps.
    const auto nonSimple = theoryDistribution(Feature::KnightMoves, {IntersectionRule::Strict, KnightRule::NonSimple});
    EXPECT_EQ(nonSimple.count(0), 10096U);
    EXPECT_EQ(theoryDistribution(Feature::Overlaps).count(0), 139880U);
    size_t simpleOnly = 0;
    for (const Pattern& p : patternSpace()) {
        const auto f = oracle::features(oracle::digitsToLabels(p.digits()));
        if (f.knightMoves == 0 && f.overlaps == 0) ++simpleOnly;
    }
    EXPECT_EQ(simpleOnly, 10096U);
}

TEST(Theory, ExtremalWitnesses) {
    const auto overlap5 = extremalWitness(Feature::Overlaps, 5);
    ASSERT_TRUE(overlap5.has_value());
    EXPECT_EQ(oracle::features(oracle::digitsToLabels(overlap5->digits())).overlaps, 5);
    EXPECT_EQ(oracle::features(oracle::digitsToLabels("528463971")).overlaps, 5);

    const auto knight7 = extremalWitness(Feature::KnightMoves, 7);
    ASSERT_TRUE(knight7.has_value());
    EXPECT_EQ(oracle::features(oracle::digitsToLabels(knight7->digits())).knightMoves, 7);
    EXPECT_EQ(oracle::features(oracle::digitsToLabels("294381675")).knightMoves, 7);

    EXPECT_FALSE(extremalWitness(Feature::KnightMoves, 8).has_value());
    EXPECT_FALSE(extremalWitness(Feature::KnightMoves, 8, {IntersectionRule::Strict, KnightRule::NonSimple}));
}

TEST(Theory, CsvFormat) {
    TheoryHistogram h;
    h.feature = Feature::Overlaps;
    h.bins = {{0, 3}, {1, 1}};
    std::ostringstream out;
    writeHistogramCsv(out, h);
    EXPECT_EQ(out.str(), "value,count,percentage\n0,3,75.00\n1,1,25.00\n");
}
