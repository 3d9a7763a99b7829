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
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "patternlock/features.h"
#include "patternlock/pattern.h"
#include "patternlock/stats.h"

namespace patternlock {

inline constexpr int kOrderedSegmentCount = kDotCount * (kDotCount - 1);

// Index of the ordered segment from->to in [0, 72): row-major over (from, to)
// with the diagonal removed.
int segmentIndex(Dot from, Dot to);

struct DatasetAggregate {
    size_t patternCount = 0;
    std::array<uint64_t, kDotCount> dotFreq{};
    std::array<uint64_t, kOrderedSegmentCount> segmentFreq{};
    std::array<uint64_t, kDotCount> startDist{};
    std::array<uint64_t, kDotCount> endDist{};
    int uniqueSegments = 0;
    std::map<Feature, SummaryStats> featureStats;

    uint64_t segmentCount(Dot from, Dot to) const { return segmentFreq[segmentIndex(from, to)]; }
};

struct AggregateOptions {
    StdConvention stdConvention = StdConvention::Sample;
    FeatureRules rules;
};

// Throws std::invalid_argument on an empty list.
DatasetAggregate aggregate(std::span<const Pattern> patterns, const AggregateOptions& options = {});

// Per-pattern normalized time: elapsed / stroke length.
double normalizedTime(double elapsedMs, const Pattern& p);
// Ratio of means: mean(values) / mean(strokes). Both spans non-empty.
double ratioOfMeans(std::span<const double> values, std::span<const double> strokes);

// 3x3 grid of dot counts with percentages, and the 9x9 from/to segment grid.
void writeDotGrid(std::ostream& out, const std::array<uint64_t, kDotCount>& counts);
void writeSegmentGrid(std::ostream& out, const DatasetAggregate& agg);

}  // namespace patternlock
