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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "patternlock/features.h"
#include "patternlock/pattern.h"
#include "patternlock/reachability.h"

namespace patternlock {

inline constexpr uint64_t kPatternSpaceSize = 389112;

/*
 * Depth-first walk over reachable() extensions starting from `start`, calling
 * visit(prefix) for every prefix of length >= 4. Children are visited in
 * ascending dot order, so patterns arrive in lexicographic order.
 */
template <typename Visitor>
void forEachPatternFrom(Dot start, Visitor&& visit) {
    std::array<Dot, kMaxPatternLength> seq = {start, start, start, start, start,
                                              start, start, start, start};
    // Explicit stack of remaining candidates per depth.
    std::array<uint16_t, kMaxPatternLength> pending{};
    std::array<DotSet, kMaxPatternLength> connected{};

    int depth = 0;
    connected[0] = DotSet{};
    connected[0].insert(start);
    pending[0] = reachable({start, connected[0]}).mask();
    while (depth >= 0) {
        if (pending[depth] == 0) {
            --depth;
            continue;
        }
        const int bit = std::countr_zero(pending[depth]);
        pending[depth] &= static_cast<uint16_t>(pending[depth] - 1);
        const Dot next = Dot::fromTrustedLabel(bit + 1);
        const int len = depth + 2;
        seq[len - 1] = next;
        DotSet conn = connected[depth];
        conn.insert(next);
        if (len >= kMinPatternLength) {
            visit(Pattern::fromTrustedDots(std::span<const Dot>(seq.data(), len)));
        }
        if (len < kMaxPatternLength) {
            ++depth;
            connected[depth] = conn;
            pending[depth] = reachable({next, conn}).mask();
        }
    }
}

template <typename Visitor>
void forEachPattern(Visitor&& visit) {
    for (int label = 1; label <= kDotCount; ++label) {
        forEachPatternFrom(Dot::fromTrustedLabel(label), visit);
    }
}

// Every valid pattern in lexicographic order. `threads` > 1 splits the work by
// starting dot and concatenates the per-dot results in order.
std::vector<Pattern> enumerateAll(int threads = 1);

// Process-wide cached copy of enumerateAll(); built once, thread-safe.
const std::vector<Pattern>& patternSpace();

struct TheoryHistogram {
    Feature feature = Feature::PatternLength;
    std::map<int, uint64_t> bins;

    uint64_t total() const;
    uint64_t count(int value) const;
};

// Histogram of an integer-valued feature over the full pattern space. Throws
// std::invalid_argument for Feature::StrokeLength.
TheoryHistogram theoryDistribution(Feature feature, const FeatureRules& rules = {});

// First pattern (lexicographically) whose feature equals `value`, if any.
std::optional<Pattern> extremalWitness(Feature feature, int value, const FeatureRules& rules = {});

// Columns: value,count,percentage (percentage of the total, two decimals).
void writeHistogramCsv(std::ostream& out, const TheoryHistogram& h);

}  // namespace patternlock
