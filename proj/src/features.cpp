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

#include "patternlock/features.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace patternlock {

namespace {

int orientation(Coord a, Coord b, Coord p) {
    const int v = (b.row - a.row) * (p.col - a.col) - (b.col - a.col) * (p.row - a.row);
    return (v > 0) - (v < 0);
}

// p is collinear with a-b; true if it lies on the closed segment.
bool withinBox(Coord a, Coord b, Coord p) {
    return std::min(a.row, b.row) <= p.row && p.row <= std::max(a.row, b.row) &&
           std::min(a.col, b.col) <= p.col && p.col <= std::max(a.col, b.col);
}

std::string normalizeName(std::string_view name) {
    std::string out;
    for (char c : name) {
        if (c == '-' || c == '_' || c == ' ') continue;
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

}  // namespace

void StrokeLength::addSegment(int squaredLength) {
    switch (squaredLength) {
        case 1: units_ += 1; counts_[0]++; break;
        case 2: sqrt2_ += 1; counts_[1]++; break;
        case 4: units_ += 2; counts_[2]++; break;
        case 5: sqrt5_ += 1; counts_[3]++; break;
        case 8: sqrt2_ += 2; counts_[4]++; break;
        default: throw std::invalid_argument("squared length does not occur on the 3x3 grid");
    }
}

double StrokeLength::value() const {
    return units_ + sqrt2_ * std::sqrt(2.0) + sqrt5_ * std::sqrt(5.0);
}

std::string_view toString(IntersectionRule rule) {
    switch (rule) {
        case IntersectionRule::Strict: return "strict";
        case IntersectionRule::CountTouches: return "touch";
        case IntersectionRule::CountCollinear: return "collinear";
    }
    return "?";
}

std::optional<IntersectionRule> intersectionRuleFromString(std::string_view name) {
    const std::string n = normalizeName(name);
    if (n == "strict") return IntersectionRule::Strict;
    if (n == "touch" || n == "counttouches") return IntersectionRule::CountTouches;
    if (n == "collinear" || n == "countcollinear") return IntersectionRule::CountCollinear;
    return std::nullopt;
}

Contact segmentContact(Coord a, Coord b, Coord c, Coord d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);

    if (o1 == 0 && o2 == 0) {
        // Same supporting line: compare the parameter intervals on one axis.
        const bool useRow = a.row != b.row;
        auto key = [useRow](Coord p) { return useRow ? p.row : p.col; };
        const int lo = std::max(std::min(key(a), key(b)), std::min(key(c), key(d)));
        const int hi = std::min(std::max(key(a), key(b)), std::max(key(c), key(d)));
        if (lo < hi) return Contact::Collinear;
        if (lo == hi) return Contact::Touch;
        return Contact::None;
    }
    if (o1 * o2 < 0 && o3 * o4 < 0) return Contact::Proper;
    if ((o1 == 0 && withinBox(a, b, c)) || (o2 == 0 && withinBox(a, b, d)) ||
        (o3 == 0 && withinBox(c, d, a)) || (o4 == 0 && withinBox(c, d, b))) {
        return Contact::Touch;
    }
    return Contact::None;
}

int countDirectionChanges(const Pattern& p) {
    int changes = 0;
    for (int i = 0; i + 2 < p.size(); ++i) {
        if (squaredDistance(p[i], p[i + 1]) != squaredDistance(p[i + 1], p[i + 2])) ++changes;
    }
    return changes;
}

int countIntersections(const Pattern& p, IntersectionRule rule) {
    int count = 0;
    const int segments = p.size() - 1;
    for (int i = 0; i < segments; ++i) {
        const Coord a = coordOf(p[i]);
        const Coord b = coordOf(p[i + 1]);
        for (int j = i + 2; j < segments; ++j) {
            switch (segmentContact(a, b, coordOf(p[j]), coordOf(p[j + 1]))) {
                case Contact::Proper:
                    ++count;
                    break;
                case Contact::Touch:
                    if (rule == IntersectionRule::CountTouches) ++count;
                    break;
                case Contact::Collinear:
                    if (rule == IntersectionRule::CountCollinear) ++count;
                    break;
                case Contact::None:
                    break;
            }
        }
    }
    return count;
}

PatternFeatures computeFeatures(const Pattern& p, IntersectionRule rule) {
    PatternFeatures f;
    f.length = p.size();
    for (int i = 0; i + 1 < p.size(); ++i) {
        const int sq = squaredDistance(p[i], p[i + 1]);
        f.stroke.addSegment(sq);
        switch (classOfSquaredLength(sq)) {
            case SegmentClass::Simple: ++f.simpleMoves; break;
            case SegmentClass::Knight: ++f.knightMoves; break;
            case SegmentClass::Overlap: ++f.overlaps; break;
        }
    }
    f.directionChanges = countDirectionChanges(p);
    f.intersections = countIntersections(p, rule);
    return f;
}

std::string_view toString(Feature f) {
    switch (f) {
        case Feature::PatternLength: return "Pattern Length";
        case Feature::StrokeLength: return "Stroke Length";
        case Feature::KnightMoves: return "Knight Moves";
        case Feature::Overlaps: return "Overlaps";
        case Feature::DirectionChanges: return "Direction Changes";
        case Feature::Intersections: return "Intersections";
    }
    return "?";
}

std::optional<Feature> featureFromString(std::string_view name) {
    const std::string n = normalizeName(name);
    for (Feature f : kAllFeatures) {
        if (normalizeName(toString(f)) == n) return f;
    }
    if (n == "length") return Feature::PatternLength;
    if (n == "stroke") return Feature::StrokeLength;
    if (n == "knight") return Feature::KnightMoves;
    if (n == "overlap") return Feature::Overlaps;
    return std::nullopt;
}

std::string_view toString(KnightRule rule) {
    return rule == KnightRule::SqrtFive ? "sqrt5" : "non-simple";
}

std::optional<KnightRule> knightRuleFromString(std::string_view name) {
    const std::string n = normalizeName(name);
    if (n == "sqrt5" || n == "sqrtfive") return KnightRule::SqrtFive;
    if (n == "nonsimple") return KnightRule::NonSimple;
    return std::nullopt;
}

double featureValue(const PatternFeatures& f, Feature feature, KnightRule knights) {
    switch (feature) {
        case Feature::PatternLength: return f.length;
        case Feature::StrokeLength: return f.strokeLength();
        case Feature::KnightMoves:
            return knights == KnightRule::SqrtFive ? f.knightMoves : f.knightMoves + f.overlaps;
        case Feature::Overlaps: return f.overlaps;
        case Feature::DirectionChanges: return f.directionChanges;
        case Feature::Intersections: return f.intersections;
    }
    return 0.0;
}

}  // namespace patternlock
