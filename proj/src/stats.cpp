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

#include "patternlock/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace patternlock {

namespace {

double logChoose(uint64_t n, uint64_t k) {
    return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
           std::lgamma(static_cast<double>(n - k) + 1);
}

// Ranks doubled so that midranks stay integral.
std::vector<int64_t> doubledMidranks(const std::vector<double>& pooled, std::vector<int64_t>* tieSizes) {
    const size_t n = pooled.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return pooled[x] < pooled[y]; });
    std::vector<int64_t> ranks(n);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
        // Ranks i+1..j+1 share (i+1 + j+1) / 2; doubled: i + j + 2.
        for (size_t k = i; k <= j; ++k) ranks[order[k]] = static_cast<int64_t>(i + j + 2);
        if (tieSizes) tieSizes->push_back(static_cast<int64_t>(j - i + 1));
        i = j + 1;
    }
    return ranks;
}

}  // namespace

SummaryStats summarize(std::span<const double> values, StdConvention convention) {
    if (values.empty()) throw std::invalid_argument("cannot summarize an empty sample");
    SummaryStats s;
    s.n = values.size();

    // Two-pass mean/variance keeps the result independent of input scale.
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(s.n);
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    const double denom = convention == StdConvention::Sample ? static_cast<double>(s.n) - 1.0
                                                             : static_cast<double>(s.n);
    s.stddev = s.n > 1 ? std::sqrt(ss / denom) : 0.0;

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const size_t mid = s.n / 2;
    s.median = s.n % 2 == 1 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2.0;
    return s;
}

Distribution Distribution::fromCounts(std::span<const uint64_t> counts) {
    const uint64_t total = std::accumulate(counts.begin(), counts.end(), uint64_t{0});
    if (total == 0) throw std::invalid_argument("counts sum to zero");
    Distribution d;
    d.probabilities.reserve(counts.size());
    for (uint64_t c : counts) d.probabilities.push_back(static_cast<double>(c) / static_cast<double>(total));
    return d;
}

double entropyBits(const Distribution& d) {
    double sum = 0.0;
    for (double p : d.probabilities) {
        if (!std::isfinite(p) || p < 0.0) throw std::invalid_argument("probabilities must be finite and >= 0");
        sum += p;
    }
    if (d.probabilities.empty() || std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("probabilities must sum to 1");
    }
    double h = 0.0;
    for (double p : d.probabilities) {
        if (p > 0.0) h += p * std::log2(1.0 / p);
    }
    return h;
}

WmwResult wmwTest(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("WMW test needs two non-empty samples");
    const size_t n1 = a.size();
    const size_t n2 = b.size();
    const size_t n = n1 + n2;

    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    std::vector<int64_t> ties;
    const std::vector<int64_t> ranks = doubledMidranks(pooled, &ties);

    int64_t rankSum2 = 0;
    for (size_t i = 0; i < n1; ++i) rankSum2 += ranks[i];

    WmwResult result;
    result.u = static_cast<double>(rankSum2) / 2.0 - static_cast<double>(n1 * (n1 + 1)) / 2.0;

    // Doubled rank sums are symmetric about n1 * (n + 1).
    const int64_t centre = static_cast<int64_t>(n1 * (n + 1));
    const int64_t observedDev = std::abs(rankSum2 - centre);

    if (n <= kWmwExactLimit) {
        // ways[k][s]: number of k-subsets of the pooled ranks with doubled sum s.
        const int64_t maxSum = std::accumulate(ranks.begin(), ranks.end(), int64_t{0});
        std::vector<std::vector<double>> ways(n1 + 1, std::vector<double>(maxSum + 1, 0.0));
        ways[0][0] = 1.0;
        for (size_t item = 0; item < n; ++item) {
            const int64_t r = ranks[item];
            for (size_t k = std::min(item + 1, n1); k >= 1; --k) {
                for (int64_t s = maxSum; s >= r; --s) ways[k][s] += ways[k - 1][s - r];
            }
        }
        double extreme = 0.0;
        double total = 0.0;
        for (int64_t s = 0; s <= maxSum; ++s) {
            total += ways[n1][s];
            if (std::abs(s - centre) >= observedDev) extreme += ways[n1][s];
        }
        result.exact = true;
        result.pValue = std::min(1.0, extreme / total);
        return result;
    }

    const double dn1 = static_cast<double>(n1);
    const double dn2 = static_cast<double>(n2);
    const double dn = static_cast<double>(n);
    double tieTerm = 0.0;
    for (int64_t t : ties) tieTerm += static_cast<double>(t * t * t - t);
    const double variance = dn1 * dn2 / 12.0 * ((dn + 1.0) - tieTerm / (dn * (dn - 1.0)));
    if (variance <= 0.0) {
        result.pValue = 1.0;
        return result;
    }
    const double dev = std::abs(result.u - dn1 * dn2 / 2.0);
    const double z = std::max(0.0, dev - 0.5) / std::sqrt(variance);
    result.pValue = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    return result;
}

double fisherExact2x2(const Table2x2& t) {
    const uint64_t row1 = t[0][0] + t[0][1];
    const uint64_t col1 = t[0][0] + t[1][0];
    const uint64_t total = row1 + t[1][0] + t[1][1];
    if (total == 0) throw std::invalid_argument("Fisher test needs a non-empty table");

    const uint64_t lo = row1 + col1 > total ? row1 + col1 - total : 0;
    const uint64_t hi = std::min(row1, col1);
    const double logDenom = logChoose(total, col1);
    auto logProb = [&](uint64_t x) {
        return logChoose(row1, x) + logChoose(total - row1, col1 - x) - logDenom;
    };

    const double observed = logProb(t[0][0]);
    double p = 0.0;
    for (uint64_t x = lo; x <= hi; ++x) {
        const double lp = logProb(x);
        if (lp <= observed + 1e-7) p += std::exp(lp);
    }
    return std::min(1.0, p);
}

std::string_view significanceLabel(double p) {
    if (p < kAlphaSignificant) return "**";
    if (p < kAlphaInterest) return "*";
    return "";
}

}  // namespace patternlock
