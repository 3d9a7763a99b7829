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

#include "patternlock/aggregate.h"

#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace patternlock {

namespace {

std::string percent(uint64_t count, uint64_t total) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", total == 0 ? 0.0 : 100.0 * count / static_cast<double>(total));
    return buf;
}

}  // namespace

int segmentIndex(Dot from, Dot to) {
    if (from == to) throw std::invalid_argument("segment endpoints must be distinct dots");
    const int col = to.index() < from.index() ? to.index() : to.index() - 1;
    return from.index() * (kDotCount - 1) + col;
}

DatasetAggregate aggregate(std::span<const Pattern> patterns, const AggregateOptions& options) {
    if (patterns.empty()) throw std::invalid_argument("cannot aggregate an empty pattern list");
    DatasetAggregate agg;
    agg.patternCount = patterns.size();

    std::map<Feature, std::vector<double>> columns;
    for (const Pattern& p : patterns) {
        agg.startDist[p.front().index()]++;
        agg.endDist[p.back().index()]++;
        for (int i = 0; i < p.size(); ++i) {
            agg.dotFreq[p[i].index()]++;
            if (i + 1 < p.size()) agg.segmentFreq[segmentIndex(p[i], p[i + 1])]++;
        }
        const PatternFeatures f = computeFeatures(p, options.rules.intersections);
        for (Feature feature : kAllFeatures) columns[feature].push_back(featureValue(f, feature, options.rules.knights));
    }
    for (uint64_t c : agg.segmentFreq) {
        if (c > 0) ++agg.uniqueSegments;
    }
    for (const auto& [feature, values] : columns) {
        agg.featureStats[feature] = summarize(values, options.stdConvention);
    }
    return agg;
}

double normalizedTime(double elapsedMs, const Pattern& p) {
    return elapsedMs / computeFeatures(p).strokeLength();
}

double ratioOfMeans(std::span<const double> values, std::span<const double> strokes) {
    if (values.empty() || strokes.empty()) throw std::invalid_argument("ratio of means needs data");
    const double mv = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    const double ms = std::accumulate(strokes.begin(), strokes.end(), 0.0) / static_cast<double>(strokes.size());
    return mv / ms;
}

void writeDotGrid(std::ostream& out, const std::array<uint64_t, kDotCount>& counts) {
    const uint64_t total = std::accumulate(counts.begin(), counts.end(), uint64_t{0});
    out << "row,col0,col1,col2\n";
    for (int r = 0; r < 3; ++r) {
        out << r;
        for (int c = 0; c < 3; ++c) {
            const uint64_t n = counts[3 * r + c];
            out << ',' << n << " (" << percent(n, total) << "%)";
        }
        out << '\n';
    }
}

void writeSegmentGrid(std::ostream& out, const DatasetAggregate& agg) {
    const uint64_t total = std::accumulate(agg.segmentFreq.begin(), agg.segmentFreq.end(), uint64_t{0});
    out << "from\\to";
    for (int to = 1; to <= kDotCount; ++to) out << ',' << to;
    out << '\n';
    for (int from = 1; from <= kDotCount; ++from) {
        out << from;
        for (int to = 1; to <= kDotCount; ++to) {
            out << ',';
            if (from == to) {
                out << '-';
                continue;
            }
            const uint64_t n = agg.segmentCount(Dot(from), Dot(to));
            out << n << " (" << percent(n, total) << "%)";
        }
        out << '\n';
    }
}

}  // namespace patternlock
