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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "patternlock/pattern.h"
#include "patternlock/policy.h"

namespace patternlock {

inline constexpr int kSchemaVersion = 1;
inline constexpr size_t kMaxRecallAttempts = 5;

struct RecallAttempt {
    // Digits as drawn; not necessarily a valid pattern.
    std::string drawn;
    int64_t elapsedMs = 0;
    bool success = false;

    bool operator==(const RecallAttempt&) const = default;
};

/*
 * One participant's session. Creation is timed per attempt (the timer restarts
 * whenever an attempt is rejected or the confirmation mismatches);
 * creationTimeMs is the accepted attempt and cumulativeCreationTimeMs the sum
 * of all attempts.
 */
struct SessionRecord {
    std::string sessionId;
    Policy group = Policy::Original;
    SysPalAssignment assignment;
    int trainingAttempts = 0;
    int creationAttempts = 0;
    Pattern finalPattern = Pattern::fromTrustedDots(std::vector<Dot>{});
    int64_t creationTimeMs = 0;
    int64_t cumulativeCreationTimeMs = 0;
    std::vector<int64_t> creationAttemptTimesMs;
    int64_t redrawTimeMs = 0;
    std::vector<RecallAttempt> recallAttempts;
    std::map<std::string, std::string> survey;

    bool operator==(const SessionRecord& o) const;
    bool recalled() const;
};

class LogFormatError : public std::runtime_error {
  public:
    enum class Kind { Malformed, SchemaVersion, Io };

    LogFormatError(Kind kind, size_t line, const std::string& what);

    Kind kind() const { return kind_; }
    // 1-based line number in the input; 0 when not tied to a line.
    size_t line() const { return line_; }

  private:
    Kind kind_;
    size_t line_;
};

// Throws std::invalid_argument describing the first broken invariant.
void checkRecord(const SessionRecord& r);

std::string toJsonLine(const SessionRecord& r);
SessionRecord fromJsonLine(const std::string& line, size_t lineNumber = 0);

/*
 * Reads a session log. Accepts the line-delimited JSON log and the CSV written
 * by exportCsv() (recognised by its header row). Blank lines are skipped; a
 * missing file is an Io error.
 */
std::vector<SessionRecord> ingest(const std::filesystem::path& path);
std::vector<SessionRecord> ingestStream(std::istream& in);

void exportCsv(const std::vector<SessionRecord>& records, const std::filesystem::path& path);
void writeCsv(std::ostream& out, const std::vector<SessionRecord>& records);

// Appends one JSON line with a single write(2) on an O_APPEND descriptor.
void appendRecord(const SessionRecord& record, const std::filesystem::path& path);

}  // namespace patternlock
