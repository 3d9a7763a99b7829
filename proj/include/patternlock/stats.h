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
#include <span>
#include <string_view>
#include <vector>

namespace patternlock {

enum class StdConvention { Sample, Population };

struct SummaryStats {
    size_t n = 0;
    double mean = 0.0;
    double stddev = 0.0;
    // Even-sized samples use the mean of the two central order statistics.
    double median = 0.0;
};

// Throws std::invalid_argument on an empty sample. A single-element sample has
// stddev 0 under either convention.
SummaryStats summarize(std::span<const double> values, StdConvention convention = StdConvention::Sample);

struct Distribution {
    std::vector<double> probabilities;

    // Normalizes non-negative counts; throws if they sum to zero.
    static Distribution fromCounts(std::span<const uint64_t> counts);
};

// Shannon entropy in bits; zero-probability terms contribute nothing. Throws
// std::invalid_argument if any p is negative or non-finite, or if the
// probabilities do not sum to 1 within 1e-12.
double entropyBits(const Distribution& d);

struct WmwResult {
    // Mann-Whitney U of the first sample, with midranks for ties.
    double u = 0.0;
    double pValue = 1.0;
    bool exact = false;
};

inline constexpr size_t kWmwExactLimit = 12;

/*
 * Two-tailed Wilcoxon-Mann-Whitney test. When the pooled size is at most 12 the
 * p-value comes from the exact permutation distribution of the (midranked) rank
 * sum; otherwise from the normal approximation with tie correction and a 0.5
 * continuity correction.
 */
WmwResult wmwTest(std::span<const double> a, std::span<const double> b);

using Table2x2 = std::array<std::array<uint64_t, 2>, 2>;

// Two-tailed Fisher exact test: sums the hypergeometric probabilities of all
// tables with the observed margins that are no more likely than the observed
// one (relative slack 1e-7). Throws on an all-zero table.
double fisherExact2x2(const Table2x2& table);

inline constexpr double kAlphaInterest = 0.01;
inline constexpr int kPairwiseComparisons = 10;
// Bonferroni-corrected threshold: 0.01 / 10.
inline constexpr double kAlphaSignificant = kAlphaInterest / kPairwiseComparisons;

// "**" if p < 0.001, "*" if p < 0.01, otherwise "".
std::string_view significanceLabel(double p);

}  // namespace patternlock
