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

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "patternlock/grid.h"
#include "patternlock/pattern.h"

namespace patternlock {

/*
 * Exact stroke length. Segment lengths are sqrt of {1, 2, 4, 5, 8}, i.e.
 * 1, sqrt2, 2, sqrt5, 2*sqrt2, so every stroke is a + b*sqrt2 + c*sqrt5 with
 * integer a, b, c. The per-length segment tally is kept as well.
 */
class StrokeLength {
  public:
    void addSegment(int squaredLength);

    int units() const { return units_; }
    int sqrt2Coefficient() const { return sqrt2_; }
    int sqrt5Coefficient() const { return sqrt5_; }
    // Number of segments whose squared length is kSquaredLengths[i].
    const std::array<int, 5>& segmentCounts() const { return counts_; }

    double value() const;

    // Equality of the algebraic values (sqrt2 and sqrt5 are independent over Q).
    bool operator==(const StrokeLength& o) const {
        return units_ == o.units_ && sqrt2_ == o.sqrt2_ && sqrt5_ == o.sqrt5_;
    }

  private:
    int units_ = 0;
    int sqrt2_ = 0;
    int sqrt5_ = 0;
    std::array<int, 5> counts_{};
};

/*
 * How degenerate contacts between two non-consecutive segments are counted.
 * Strict: a single shared point strictly inside both segments.
 * CountTouches: Strict plus T-contacts (an endpoint of one segment lying inside
 *   the other, which happens when a segment passes over a visited dot).
 * CountCollinear: Strict plus collinear segments sharing more than a point.
 */
enum class IntersectionRule { Strict, CountTouches, CountCollinear };

std::string_view toString(IntersectionRule rule);
std::optional<IntersectionRule> intersectionRuleFromString(std::string_view name);

/*
 * Knight-move counting.
 * SqrtFive:  segments of length sqrt(5) only.
 * NonSimple: every segment that is not a simple move (lengths 2, sqrt(5) and
 *   2*sqrt(2)). The published full-space knight-move histogram and its mean
 *   are reproduced by this convention, not by SqrtFive.
 */
enum class KnightRule { SqrtFive, NonSimple };

std::string_view toString(KnightRule rule);
// "sqrt5" or "non-simple".
std::optional<KnightRule> knightRuleFromString(std::string_view name);

struct FeatureRules {
    IntersectionRule intersections = IntersectionRule::Strict;
    KnightRule knights = KnightRule::SqrtFive;
};

enum class Contact { None, Proper, Touch, Collinear };

// Exact integer orientation tests on lattice coordinates.
Contact segmentContact(Coord a, Coord b, Coord c, Coord d);

struct PatternFeatures {
    int length = 0;
    StrokeLength stroke;
    int simpleMoves = 0;
    int knightMoves = 0;
    int overlaps = 0;
    int directionChanges = 0;
    int intersections = 0;

    double strokeLength() const { return stroke.value(); }
};

// Consecutive segments whose Euclidean lengths differ.
int countDirectionChanges(const Pattern& p);
int countIntersections(const Pattern& p, IntersectionRule rule = IntersectionRule::Strict);
PatternFeatures computeFeatures(const Pattern& p, IntersectionRule rule = IntersectionRule::Strict);

enum class Feature { PatternLength, StrokeLength, KnightMoves, Overlaps, DirectionChanges, Intersections };

inline constexpr std::array<Feature, 6> kAllFeatures = {
        Feature::PatternLength, Feature::StrokeLength, Feature::KnightMoves,
        Feature::Overlaps,      Feature::DirectionChanges, Feature::Intersections};

std::string_view toString(Feature f);
// Accepts the display name or a kebab/lower-case form ("knight-moves").
std::optional<Feature> featureFromString(std::string_view name);
// KnightMoves honours `knights`; PatternFeatures::knightMoves is always the
// sqrt(5) count.
double featureValue(const PatternFeatures& f, Feature feature, KnightRule knights = KnightRule::SqrtFive);

}  // namespace patternlock
