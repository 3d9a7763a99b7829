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

#include "oracles.h"
#include "patternlock/enumeration.h"
#include "patternlock/features.h"
#include "patternlock/reachability.h"

using namespace patternlock;

namespace {

PatternFeatures of(const char* digits, IntersectionRule rule = IntersectionRule::Strict) {
    return computeFeatures(patternFromDigits(digits), rule);
}

}  // namespace

TEST(Features, StrokeLengthExamples) {
    EXPECT_DOUBLE_EQ(of("12365").strokeLength(), 4.0);
    const auto f = of("16729");
    EXPECT_EQ(f.stroke.sqrt5Coefficient(), 4);
    EXPECT_EQ(f.stroke.units(), 0);
    EXPECT_EQ(f.stroke.sqrt2Coefficient(), 0);
    EXPECT_NEAR(f.strokeLength(), 4.0 * std::sqrt(5.0), 1e-12);
    EXPECT_EQ(f.knightMoves, 4);
}

TEST(Features, DirectionChanges) {
    EXPECT_EQ(of("321456987").directionChanges, 0);
    EXPECT_EQ(of("12365").directionChanges, 0);
    EXPECT_EQ(countDirectionChanges(patternFromDigits("1235")), 1);
}

TEST(Features, IntersectionExamples) {
    EXPECT_EQ(of("6895124").intersections, 2);
    EXPECT_EQ(of("1234").intersections, 0);
}

TEST(Features, HandTracedFeatureVector) {
    // 5-2, 2-1, 1-3 (over 2), 3-8 (knight), 8-4, 4-7
    const auto f = of("5213847");
    EXPECT_EQ(f.length, 7);
    EXPECT_EQ(f.stroke.units(), 5);
    EXPECT_EQ(f.stroke.sqrt2Coefficient(), 1);
    EXPECT_EQ(f.stroke.sqrt5Coefficient(), 1);
    EXPECT_EQ(f.simpleMoves, 4);
    EXPECT_EQ(f.knightMoves, 1);
    EXPECT_EQ(f.overlaps, 1);
    EXPECT_EQ(f.directionChanges, 4);
    EXPECT_EQ(f.intersections, 0);
    // 5-2 ends on the interior of 1-3.
    EXPECT_EQ(of("5213847", IntersectionRule::CountTouches).intersections, 1);
    EXPECT_EQ(of("5213847", IntersectionRule::CountCollinear).intersections, 0);
}

TEST(Features, KnightRules) {
    const auto f = of("5213847");
    EXPECT_EQ(featureValue(f, Feature::KnightMoves), 1.0);
    EXPECT_EQ(featureValue(f, Feature::KnightMoves, KnightRule::NonSimple), 2.0);
    EXPECT_EQ(knightRuleFromString("non-simple"), KnightRule::NonSimple);
    EXPECT_EQ(knightRuleFromString(toString(KnightRule::SqrtFive)), KnightRule::SqrtFive);
    EXPECT_FALSE(knightRuleFromString("bishop").has_value());
}

TEST(Features, SegmentContactKinds) {
    EXPECT_EQ(segmentContact({0, 0}, {2, 2}, {0, 2}, {2, 0}), Contact::Proper);
    EXPECT_EQ(segmentContact({1, 1}, {0, 1}, {0, 0}, {0, 2}), Contact::Touch);
    EXPECT_EQ(segmentContact({0, 0}, {0, 2}, {0, 1}, {0, 2}), Contact::Collinear);
    EXPECT_EQ(segmentContact({0, 0}, {0, 1}, {0, 1}, {0, 2}), Contact::Touch);
    EXPECT_EQ(segmentContact({0, 0}, {0, 1}, {1, 0}, {1, 1}), Contact::None);
    EXPECT_EQ(segmentContact({0, 0}, {0, 1}, {0, 2}, {1, 2}), Contact::None);
}

TEST(Features, StrokeLengthExactEquality) {
    StrokeLength a, b;
    a.addSegment(4);
    b.addSegment(1);
    b.addSegment(1);
    EXPECT_EQ(a, b);
    EXPECT_THROW(a.addSegment(3), std::invalid_argument);
}

TEST(Features, NamesRoundTrip) {
    for (Feature f : kAllFeatures) EXPECT_EQ(featureFromString(toString(f)), f);
    EXPECT_EQ(featureFromString("knight"), Feature::KnightMoves);
    EXPECT_EQ(featureFromString("direction-changes"), Feature::DirectionChanges);
    EXPECT_FALSE(featureFromString("colour").has_value());
    for (auto r : {IntersectionRule::Strict, IntersectionRule::CountTouches, IntersectionRule::CountCollinear}) {
        EXPECT_EQ(intersectionRuleFromString(toString(r)), r);
    }
}

TEST(Features, AgreeWithOracleOnWholeSpace) {
    size_t checked = 0;
    for (const Pattern& p : patternSpace()) {
        const auto labels = oracle::digitsToLabels(p.digits());
        const auto expected = oracle::features(labels);
        const auto got = computeFeatures(p);
        ASSERT_EQ(got.length, expected.length) << p.digits();
        ASSERT_NEAR(got.strokeLength(), expected.stroke, 1e-9) << p.digits();
        ASSERT_EQ(got.knightMoves, expected.knightMoves) << p.digits();
        ASSERT_EQ(got.overlaps, expected.overlaps) << p.digits();
        ASSERT_EQ(got.directionChanges, expected.directionChanges) << p.digits();
        ASSERT_EQ(got.intersections, expected.properCrossings) << p.digits();
        ASSERT_EQ(got.simpleMoves + got.knightMoves + got.overlaps, got.length - 1);
        ++checked;
    }
    EXPECT_EQ(checked, kPatternSpaceSize);
}
