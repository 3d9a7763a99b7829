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

#include <sstream>

#include <json.hpp>

#include "oracles.h"
#include "patternlock/reachability.h"

using namespace patternlock;

namespace {

DotSet reach(int current, std::initializer_list<int> connected) {
    return reachable({Dot(current), DotSet(connected)});
}

}  // namespace

TEST(Reachable, WorkedStates) {
    EXPECT_EQ(reach(3, {3}), (DotSet{2, 4, 5, 6, 8}));
    EXPECT_EQ(reach(1, {1}), (DotSet{2, 4, 5, 6, 8}));
    EXPECT_EQ(reach(3, {1, 5, 3}), (DotSet{2, 4, 6, 7, 8}));
    EXPECT_EQ(reach(1, {3, 8, 5, 1}), (DotSet{2, 4, 6, 9}));
    EXPECT_EQ(reach(5, {5}), (DotSet{1, 2, 3, 4, 6, 7, 8, 9}));
    EXPECT_EQ(reach(7, {1, 5, 3, 7}), (DotSet{2, 4, 6, 8}));
}

TEST(Reachable, TinPalDrawingSteps) {
    EXPECT_EQ(reach(8, {3, 8}), (DotSet{1, 4, 5, 6, 7, 9}));
    EXPECT_FALSE(reach(3, {3}).contains(Dot(1)));
}

TEST(Reachable, AllConnectedGivesEmptySet) {
    EXPECT_TRUE(reachable({Dot(5), DotSet::all()}).empty());
}

TEST(Reachable, RejectsCurrentOutsideConnected) {
    EXPECT_THROW(reach(3, {1}), std::invalid_argument);
}

TEST(Reachable, MatchesOracleOnEveryState) {
    for (int c = 1; c <= 9; ++c) {
        for (uint16_t mask = 0; mask < 512; ++mask) {
            if (!(mask & (1U << (c - 1)))) continue;
            const DotSet got = reachable({Dot(c), DotSet(mask)});
            EXPECT_EQ(got.mask(), oracle::reachable(c, mask)) << "current " << c << " mask " << mask;
            EXPECT_EQ((got & DotSet(mask)).mask(), 0);
        }
    }
}

TEST(Validate, AcceptsValidPatterns) {
    for (const std::vector<int>& v : {std::vector<int>{1, 5, 3, 7}, std::vector<int>{3, 8, 5, 1, 9, 6, 4, 2, 7}}) {
        const auto r = validatePattern(std::span<const int>(v));
        ASSERT_TRUE(std::holds_alternative<Pattern>(r));
        EXPECT_EQ(std::get<Pattern>(r).size(), static_cast<int>(v.size()));
    }
}

TEST(Validate, TooShort) {
    const std::vector<int> v = {1, 2, 3};
    const auto r = validatePattern(std::span<const int>(v));
    ASSERT_TRUE(std::holds_alternative<ValidationError>(r));
    EXPECT_EQ(std::get<ValidationError>(r).rule, Rule::TooShort);
    EXPECT_EQ(std::get<ValidationError>(r).message, "Connect at least 4 dots. Try again");
}

TEST(Validate, IllegalJumpNamesTheSegment) {
    const std::vector<int> v = {1, 3, 4, 5};
    const auto r = validatePattern(std::span<const int>(v));
    ASSERT_TRUE(std::holds_alternative<ValidationError>(r));
    EXPECT_EQ(std::get<ValidationError>(r).rule, Rule::IllegalJump);
    EXPECT_EQ(std::get<ValidationError>(r).position, 1);
}

TEST(Validate, RepeatedDot) {
    const std::vector<int> v = {1, 2, 3, 2};
    const auto r = validatePattern(std::span<const int>(v));
    ASSERT_TRUE(std::holds_alternative<ValidationError>(r));
    EXPECT_EQ(std::get<ValidationError>(r).rule, Rule::RepeatedDot);
}

TEST(Validate, JumpOverConnectedDotIsLegal) {
    EXPECT_NO_THROW(patternFromDigits("2135"));
    EXPECT_THROW(patternFromDigits("1352"), std::invalid_argument);
}

TEST(Validate, ParseRejectsNonDigits) {
    EXPECT_FALSE(parsePattern("12a4").has_value());
    EXPECT_FALSE(parsePattern("1204").has_value());
    const auto empty = parsePattern("");
    ASSERT_TRUE(empty.has_value());
    EXPECT_EQ(std::get<ValidationError>(*empty).rule, Rule::TooShort);
    ASSERT_TRUE(parsePattern("1236").has_value());
}

TEST(Validate, AgreesWithOracleOnAllShortSequences) {
    std::vector<int> seq(4);
    for (int a = 1; a <= 9; ++a)
        for (int b = 1; b <= 9; ++b)
            for (int c = 1; c <= 9; ++c)
                for (int d = 1; d <= 9; ++d) {
                    seq = {a, b, c, d};
                    const auto r = validatePattern(std::span<const int>(seq));
                    EXPECT_EQ(std::holds_alternative<Pattern>(r), oracle::isValidPattern(seq));
                }
}

TEST(TransitionTable, SizeOrderAndEntries) {
    const auto table = exportTransitionTable();
    ASSERT_EQ(table.size(), 2304U);
    ASSERT_EQ(kTransitionTableSize, 2304);
    for (const auto& e : table) {
        EXPECT_TRUE(e.state.connected.contains(e.state.current));
        EXPECT_EQ(e.reachable.mask(), oracle::reachable(e.state.current.label(), e.state.connected.mask()));
    }
    for (size_t i = 1; i < table.size(); ++i) {
        const auto& p = table[i - 1].state;
        const auto& q = table[i].state;
        EXPECT_TRUE(p.current < q.current || (p.current == q.current && p.connected.mask() < q.connected.mask()));
    }
}

TEST(TransitionTable, JsonRecords) {
    const auto table = exportTransitionTable();
    std::ostringstream out;
    writeTransitionTable(out, table);
    const auto parsed = nlohmann::json::parse(out.str());
    ASSERT_TRUE(parsed.is_array());
    ASSERT_EQ(parsed.size(), 2304U);
    bool found = false;
    for (const auto& rec : parsed) {
        if (rec["current"] == 3 && rec["connected"] == nlohmann::json::array({3})) {
            EXPECT_EQ(rec["reachable"], nlohmann::json::array({2, 4, 5, 6, 8}));
            found = true;
        }
        if (rec["current"] == 5 && rec["connected"].size() == 9) EXPECT_TRUE(rec["reachable"].empty());
    }
    EXPECT_TRUE(found);
}
