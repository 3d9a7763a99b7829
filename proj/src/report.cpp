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

#include "patternlock/report.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "patternlock/enumeration.h"
#include "patternlock/reachability.h"

namespace patternlock {

namespace {

std::string fixed2(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string pValue(double p) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4g", p);
    return buf;
}

bool isPlainList(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw LogFormatError(LogFormatError::Kind::Io, 0, "cannot open " + path.string());
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        return line[first] >= '1' && line[first] <= '9';
    }
    return true;
}

std::vector<double> column(const std::vector<Pattern>& patterns, Feature feature, const FeatureRules& rules) {
    std::vector<double> out;
    out.reserve(patterns.size());
    for (const Pattern& p : patterns) out.push_back(featureValue(computeFeatures(p, rules.intersections), feature, rules.knights));
    return out;
}

const DatasetAggregate& theoryAggregate(const AggregateOptions& options) {
    static std::mutex mutex;
    static std::map<std::tuple<StdConvention, IntersectionRule, KnightRule>, DatasetAggregate> cache;
    const auto key = std::make_tuple(options.stdConvention, options.rules.intersections, options.rules.knights);
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, aggregate(patternSpace(), options)).first;
    return it->second;
}

std::optional<int64_t> recallTime(const SessionRecord& r) {
    for (const auto& a : r.recallAttempts) {
        if (a.success) return a.elapsedMs;
    }
    return std::nullopt;
}

double medianOf(std::vector<double> v) {
    return summarize(v).median;
}

}  // namespace

std::vector<PatternGroup> loadPatternGroups(const std::filesystem::path& path, std::optional<Policy> only) {
    std::vector<PatternGroup> groups;
    if (isPlainList(path)) {
        if (only) throw std::invalid_argument("a plain pattern list has no groups to select from");
        std::ifstream in(path);
        PatternGroup all{"all", {}, {}};
        std::string line;
        size_t lineNumber = 0;
        while (std::getline(in, line)) {
            ++lineNumber;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            const auto last = line.find_last_not_of(" \t");
            const std::string digits = line.substr(first, last - first + 1);
            auto parsed = parsePattern(digits);
            if (!parsed || !std::holds_alternative<Pattern>(*parsed)) {
                throw LogFormatError(LogFormatError::Kind::Malformed, lineNumber,
                                     "'" + digits + "' is not a valid pattern");
            }
            all.patterns.push_back(std::get<Pattern>(*parsed));
        }
        groups.push_back(std::move(all));
        return groups;
    }

    const auto records = ingest(path);
    for (Policy policy : kAllPolicies) {
        if (only && *only != policy) continue;
        PatternGroup g{std::string(toString(policy)), {}, {}};
        for (const auto& r : records) {
            if (r.group != policy) continue;
            g.patterns.push_back(r.finalPattern);
            g.records.push_back(r);
        }
        if (!g.patterns.empty()) groups.push_back(std::move(g));
    }
    return groups;
}

void writeFeatureTable(std::ostream& out, const std::vector<PatternGroup>& groups, const ReportOptions& options) {
    std::vector<DatasetAggregate> aggs;
    for (const auto& g : groups) aggs.push_back(aggregate(g.patterns, options.aggregate));
    if (options.includeTheory) aggs.push_back(theoryAggregate(options.aggregate));

    out << "feature,statistic";
    for (const auto& g : groups) out << ',' << g.name;
    if (options.includeTheory) out << ",Theory";
    out << '\n';

    for (Feature f : kAllFeatures) {
        const char* names[] = {"Mean", "Standard deviation", "Median"};
        for (int s = 0; s < 3; ++s) {
            out << toString(f) << ',' << names[s];
            for (const auto& agg : aggs) {
                const SummaryStats& st = agg.featureStats.at(f);
                out << ',' << fixed2(s == 0 ? st.mean : s == 1 ? st.stddev : st.median);
            }
            out << '\n';
        }
    }
    out << "#Bigrams (Segments),count";
    for (const auto& agg : aggs) out << ',' << agg.uniqueSegments;
    out << "\n#Patterns,count";
    for (const auto& agg : aggs) out << ',' << agg.patternCount;
    out << '\n';
}

void writePairwiseTests(std::ostream& out, const std::vector<PatternGroup>& groups, const ReportOptions& options) {
    out << "feature,group_a,group_b,p_value,significance\n";
    for (Feature f : kAllFeatures) {
        std::vector<std::vector<double>> cols;
        for (const auto& g : groups) cols.push_back(column(g.patterns, f, options.aggregate.rules));
        for (size_t i = 0; i < groups.size(); ++i) {
            for (size_t j = i + 1; j < groups.size(); ++j) {
                const double p = wmwTest(cols[i], cols[j]).pValue;
                out << toString(f) << ',' << groups[i].name << ',' << groups[j].name << ',' << pValue(p) << ','
                    << significanceLabel(p) << '\n';
            }
        }
    }
}

void writeStartEndReport(std::ostream& out, const std::vector<PatternGroup>& groups) {
    std::vector<DatasetAggregate> aggs;
    for (const auto& g : groups) aggs.push_back(aggregate(g.patterns));

    out << "group,start_entropy_bits,end_entropy_bits,dot_entropy_bits,start_upper_left_pct,end_lower_right_pct\n";
    for (size_t i = 0; i < groups.size(); ++i) {
        const auto& a = aggs[i];
        const double n = static_cast<double>(a.patternCount);
        out << groups[i].name << ',' << fixed2(entropyBits(Distribution::fromCounts(a.startDist))) << ','
            << fixed2(entropyBits(Distribution::fromCounts(a.endDist))) << ','
            << fixed2(entropyBits(Distribution::fromCounts(a.dotFreq))) << ',' << fixed2(100.0 * a.startDist[0] / n)
            << ',' << fixed2(100.0 * a.endDist[8] / n) << '\n';
    }

    out << "\ncomparison,group_a,group_b,p_value,significance\n";
    for (size_t i = 0; i < groups.size(); ++i) {
        for (size_t j = i + 1; j < groups.size(); ++j) {
            const auto& a = aggs[i];
            const auto& b = aggs[j];
            const Table2x2 start = {{{a.startDist[0], a.patternCount - a.startDist[0]},
                                     {b.startDist[0], b.patternCount - b.startDist[0]}}};
            const Table2x2 end = {{{a.endDist[8], a.patternCount - a.endDist[8]},
                                   {b.endDist[8], b.patternCount - b.endDist[8]}}};
            const double ps = fisherExact2x2(start);
            const double pe = fisherExact2x2(end);
            out << "starts at dot 1," << groups[i].name << ',' << groups[j].name << ',' << pValue(ps) << ','
                << significanceLabel(ps) << '\n';
            out << "ends at dot 9," << groups[i].name << ',' << groups[j].name << ',' << pValue(pe) << ','
                << significanceLabel(pe) << '\n';
        }
    }
}

void writeTimingReport(std::ostream& out, const std::vector<PatternGroup>& groups, const ReportOptions& options) {
    out << "group,median_creation_ms,median_redraw_ms,median_recall_ms,recalled_pct,normalized_creation,"
           "normalized_stroke\n";
    for (const auto& g : groups) {
        if (g.records.empty()) continue;
        std::vector<double> creation, redraw, recall, strokes, lengths, perPattern;
        size_t recalled = 0;
        for (const auto& r : g.records) {
            creation.push_back(static_cast<double>(r.creationTimeMs));
            redraw.push_back(static_cast<double>(r.redrawTimeMs));
            if (auto t = recallTime(r)) {
                recall.push_back(static_cast<double>(*t));
                ++recalled;
            }
            const PatternFeatures f = computeFeatures(r.finalPattern);
            strokes.push_back(f.strokeLength());
            lengths.push_back(f.length);
            perPattern.push_back(normalizedTime(static_cast<double>(r.creationTimeMs), r.finalPattern));
        }
        const double normCreation = options.normalization == TimeNormalization::PerPattern
                                            ? medianOf(perPattern)
                                            : ratioOfMeans(creation, strokes);
        out << g.name << ',' << fixed2(medianOf(creation)) << ',' << fixed2(medianOf(redraw)) << ','
            << (recall.empty() ? std::string("NA") : fixed2(medianOf(recall))) << ','
            << fixed2(100.0 * static_cast<double>(recalled) / static_cast<double>(g.records.size())) << ','
            << fixed2(normCreation) << ',' << fixed2(ratioOfMeans(strokes, lengths)) << '\n';
    }
}

void writeDatasetReport(std::ostream& out, const std::vector<PatternGroup>& groups, const ReportOptions& options) {
    if (groups.empty()) throw std::invalid_argument("no patterns to report on");
    out << "# Pattern characteristics\n";
    writeFeatureTable(out, groups, options);
    if (groups.size() > 1) {
        out << "\n# Pairwise WMW tests\n";
        writePairwiseTests(out, groups, options);
    }
    out << "\n# Start and end points\n";
    writeStartEndReport(out, groups);
    const bool timed = std::any_of(groups.begin(), groups.end(), [](const PatternGroup& g) { return !g.records.empty(); });
    if (timed) {
        out << "\n# Timing\n";
        writeTimingReport(out, groups, options);
    }
    for (const auto& g : groups) {
        const DatasetAggregate a = aggregate(g.patterns, options.aggregate);
        out << "\n# Dot frequencies: " << g.name << '\n';
        writeDotGrid(out, a.dotFreq);
        out << "\n# Segment frequencies: " << g.name << '\n';
        writeSegmentGrid(out, a);
    }
}

void writeGuessTable(std::ostream& out, const std::vector<GuessRow>& rows) {
    if (rows.empty()) return;
    out << "dataset";
    for (const auto& [name, pct] : rows.front().crackedPercent) out << ',' << name;
    out << '\n';
    for (const auto& row : rows) {
        out << row.dataset;
        for (const auto& [name, pct] : row.crackedPercent) out << ',' << fixed2(pct);
        out << '\n';
    }
}

}  // namespace patternlock
