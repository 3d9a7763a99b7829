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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "patternlock/aggregate.h"
#include "patternlock/guessing.h"
#include "patternlock/session_log.h"

namespace patternlock {

// A named set of patterns, e.g. one study group.
struct PatternGroup {
    std::string name;
    std::vector<Pattern> patterns;
    // Present when the patterns came from session records.
    std::vector<SessionRecord> records;
};

/*
 * Loads patterns from either a plain list (one digit string per line, blank
 * lines and '#' comments ignored) or a session log. Session logs are split by
 * group in study order; a plain list becomes a single group named "all".
 * `only` keeps just that group.
 */
std::vector<PatternGroup> loadPatternGroups(const std::filesystem::path& path,
                                            std::optional<Policy> only = std::nullopt);

enum class TimeNormalization { PerPattern, RatioOfMeans };

struct ReportOptions {
    AggregateOptions aggregate;
    TimeNormalization normalization = TimeNormalization::PerPattern;
    bool includeTheory = true;
};

// Feature x group table: mean, standard deviation and median per feature, then
// unique segment and pattern counts. Adds a Theory column on request.
void writeFeatureTable(std::ostream& out, const std::vector<PatternGroup>& groups, const ReportOptions& options);

// Pairwise two-tailed WMW p-values per feature, labelled ** / *.
void writePairwiseTests(std::ostream& out, const std::vector<PatternGroup>& groups, const ReportOptions& options);

// Start/end point entropy per group and pairwise Fisher tests on "starts at
// the upper-left dot" and "ends at the lower-right dot".
void writeStartEndReport(std::ostream& out, const std::vector<PatternGroup>& groups);

// Creation, redraw and recall times (median) plus normalized creation time and
// the normalized stroke length. Groups without session records are skipped.
void writeTimingReport(std::ostream& out, const std::vector<PatternGroup>& groups, const ReportOptions& options);

// All of the above plus 3x3 dot and 9x9 segment frequency grids per group.
void writeDatasetReport(std::ostream& out, const std::vector<PatternGroup>& groups, const ReportOptions& options);

struct GuessRow {
    std::string dataset;
    std::vector<std::pair<std::string, double>> crackedPercent;
};

// dataset,<group>,<group>,... with cracked percentages to two decimals.
void writeGuessTable(std::ostream& out, const std::vector<GuessRow>& rows);

}  // namespace patternlock
