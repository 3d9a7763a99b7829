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

#include "patternlock/enumeration.h"

#include <cstdio>
#include <future>
#include <ostream>
#include <stdexcept>

namespace patternlock {

namespace {

int integerFeature(const Pattern& p, Feature feature, const FeatureRules& rules) {
    switch (feature) {
        case Feature::PatternLength:
            return p.size();
        case Feature::DirectionChanges:
            return countDirectionChanges(p);
        case Feature::Intersections:
            return countIntersections(p, rules.intersections);
        case Feature::KnightMoves:
        case Feature::Overlaps: {
            int n = 0;
            for (int i = 0; i + 1 < p.size(); ++i) {
                const SegmentClass c = classifySegment(p[i], p[i + 1]);
                if (feature == Feature::Overlaps) {
                    n += c == SegmentClass::Overlap;
                } else if (rules.knights == KnightRule::SqrtFive) {
                    n += c == SegmentClass::Knight;
                } else {
                    n += c != SegmentClass::Simple;
                }
            }
            return n;
        }
        case Feature::StrokeLength:
            break;
    }
    throw std::invalid_argument("stroke length is not an integer-valued feature");
}

std::vector<Pattern> enumerateFrom(Dot start) {
    std::vector<Pattern> out;
    forEachPatternFrom(start, [&out](const Pattern& p) { out.push_back(p); });
    return out;
}

}  // namespace

std::vector<Pattern> enumerateAll(int threads) {
    std::vector<Pattern> all;
    all.reserve(kPatternSpaceSize);
    if (threads <= 1) {
        forEachPattern([&all](const Pattern& p) { all.push_back(p); });
        return all;
    }
    std::vector<std::future<std::vector<Pattern>>> parts;
    for (int label = 1; label <= kDotCount; ++label) {
        parts.push_back(std::async(std::launch::async, enumerateFrom, Dot::fromTrustedLabel(label)));
    }
    for (auto& part : parts) {
        const auto chunk = part.get();
        all.insert(all.end(), chunk.begin(), chunk.end());
    }
    return all;
}

const std::vector<Pattern>& patternSpace() {
    static const std::vector<Pattern> space = enumerateAll();
    return space;
}

uint64_t TheoryHistogram::total() const {
    uint64_t sum = 0;
    for (const auto& [value, count] : bins) sum += count;
    return sum;
}

uint64_t TheoryHistogram::count(int value) const {
    const auto it = bins.find(value);
    return it == bins.end() ? 0 : it->second;
}

TheoryHistogram theoryDistribution(Feature feature, const FeatureRules& rules) {
    if (feature == Feature::StrokeLength) {
        throw std::invalid_argument("stroke length is not an integer-valued feature");
    }
    TheoryHistogram h;
    h.feature = feature;
    for (const Pattern& p : patternSpace()) h.bins[integerFeature(p, feature, rules)]++;
    return h;
}

std::optional<Pattern> extremalWitness(Feature feature, int value, const FeatureRules& rules) {
    if (feature == Feature::StrokeLength) {
        throw std::invalid_argument("stroke length is not an integer-valued feature");
    }
    for (const Pattern& p : patternSpace()) {
        if (integerFeature(p, feature, rules) == value) return p;
    }
    return std::nullopt;
}

void writeHistogramCsv(std::ostream& out, const TheoryHistogram& h) {
    const double total = static_cast<double>(h.total());
    out << "value,count,percentage\n";
    for (const auto& [value, count] : h.bins) {
        char pct[32];
        std::snprintf(pct, sizeof pct, "%.2f", 100.0 * static_cast<double>(count) / total);
        out << value << ',' << count << ',' << pct << '\n';
    }
}

}  // namespace patternlock
