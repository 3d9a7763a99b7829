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

#include "patternlock/session_log.h"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "patternlock/reachability.h"

namespace patternlock {

namespace {

using nlohmann::json;

const char* const kCsvHeader =
        "schemaVersion,sessionId,group,mandatedDots,seed,trainingAttempts,creationAttempts,finalPattern,"
        "creationTimeMs,cumulativeCreationTimeMs,creationAttemptTimesMs,redrawTimeMs,recallAttempts,survey";
constexpr size_t kCsvColumns = 14;

std::string dotDigits(DotSet s) {
    std::string out;
    for (Dot d : s.dots()) out += d.digit();
    return out;
}

DotSet parseDotDigits(const std::string& digits) {
    DotSet s;
    for (char c : digits) {
        auto d = Dot::fromChar(c);
        if (!d || s.contains(*d)) throw std::invalid_argument("bad mandated dot list '" + digits + "'");
        s.insert(*d);
    }
    return s;
}

Pattern parseFinalPattern(const std::string& digits) {
    auto parsed = parsePattern(digits);
    if (!parsed || !std::holds_alternative<Pattern>(*parsed)) {
        throw std::invalid_argument("finalPattern '" + digits + "' is not a valid pattern");
    }
    return std::get<Pattern>(*parsed);
}

Policy parsePolicy(const std::string& name) {
    auto p = policyFromString(name);
    if (!p) throw std::invalid_argument("unknown group '" + name + "'");
    return *p;
}

std::string csvQuote(const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::vector<std::string> splitCsvLine(const std::string& line) {
    std::vector<std::string> cells(1);
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cells.back() += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cells.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.emplace_back();
        } else {
            cells.back() += c;
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quoted cell");
    return cells;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int64_t parseInt(const std::string& s) {
    size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

uint64_t parseUnsigned(const std::string& s) {
    size_t used = 0;
    if (s.empty() || s[0] == '-') throw std::invalid_argument("not an unsigned integer: '" + s + "'");
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument("not an unsigned integer: '" + s + "'");
    return v;
}

void requireSchema(int version, size_t lineNumber) {
    if (version != kSchemaVersion) {
        throw LogFormatError(LogFormatError::Kind::SchemaVersion, lineNumber,
                             "schema version " + std::to_string(version) + " (expected " +
                                     std::to_string(kSchemaVersion) + ")");
    }
}

SessionRecord fromCsvCells(const std::vector<std::string>& c, size_t lineNumber) {
    if (c.size() != kCsvColumns) throw std::invalid_argument("expected 14 columns");
    requireSchema(static_cast<int>(parseInt(c[0])), lineNumber);
    SessionRecord r;
    r.sessionId = c[1];
    r.group = parsePolicy(c[2]);
    r.assignment = {r.group, parseDotDigits(c[3]), parseUnsigned(c[4])};
    r.trainingAttempts = static_cast<int>(parseInt(c[5]));
    r.creationAttempts = static_cast<int>(parseInt(c[6]));
    r.finalPattern = parseFinalPattern(c[7]);
    r.creationTimeMs = parseInt(c[8]);
    r.cumulativeCreationTimeMs = parseInt(c[9]);
    for (const auto& t : split(c[10], ';')) r.creationAttemptTimesMs.push_back(parseInt(t));
    r.redrawTimeMs = parseInt(c[11]);
    for (const auto& a : split(c[12], ';')) {
        const auto parts = split(a, ':');
        if (parts.size() != 3) throw std::invalid_argument("bad recall attempt '" + a + "'");
        r.recallAttempts.push_back({parts[0], parseInt(parts[1]), parts[2] == "1"});
    }
    const json survey = json::parse(c[13]);
    for (const auto& [k, v] : survey.items()) r.survey[k] = v.get<std::string>();
    return r;
}

}  // namespace

LogFormatError::LogFormatError(Kind kind, size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), kind_(kind), line_(line) {}

bool SessionRecord::operator==(const SessionRecord& o) const {
    return sessionId == o.sessionId && group == o.group && assignment == o.assignment &&
           trainingAttempts == o.trainingAttempts && creationAttempts == o.creationAttempts &&
           finalPattern == o.finalPattern && creationTimeMs == o.creationTimeMs &&
           cumulativeCreationTimeMs == o.cumulativeCreationTimeMs &&
           creationAttemptTimesMs == o.creationAttemptTimesMs && redrawTimeMs == o.redrawTimeMs &&
           recallAttempts == o.recallAttempts && survey == o.survey;
}

bool SessionRecord::recalled() const {
    return !recallAttempts.empty() && recallAttempts.back().success;
}

void checkRecord(const SessionRecord& r) {
    if (r.sessionId.empty()) throw std::invalid_argument("empty sessionId");
    if (r.assignment.policy != r.group) throw std::invalid_argument("assignment policy differs from group");
    checkAssignment(r.assignment);
    if (r.finalPattern.size() < kMinPatternLength) throw std::invalid_argument("missing finalPattern");
    if (!std::holds_alternative<Pattern>(validatePattern(r.finalPattern.dots()))) {
        throw std::invalid_argument("finalPattern breaks the drawing rules");
    }
    if (validateSubmission(r.finalPattern, r.assignment)) {
        throw std::invalid_argument("finalPattern does not contain every mandated dot");
    }
    if (r.recallAttempts.size() > kMaxRecallAttempts) {
        throw std::invalid_argument("more than 5 recall attempts");
    }
    if (r.trainingAttempts < 0 || r.creationAttempts < 0) throw std::invalid_argument("negative attempt count");
    if (r.creationTimeMs < 0 || r.cumulativeCreationTimeMs < 0 || r.redrawTimeMs < 0) {
        throw std::invalid_argument("negative timing");
    }
    for (int64_t t : r.creationAttemptTimesMs) {
        if (t < 0) throw std::invalid_argument("negative timing");
    }
    for (const auto& a : r.recallAttempts) {
        if (a.elapsedMs < 0) throw std::invalid_argument("negative timing");
        for (char c : a.drawn) {
            if (c < '1' || c > '9') throw std::invalid_argument("recall attempt is not a digit string");
        }
    }
}

std::string toJsonLine(const SessionRecord& r) {
    nlohmann::ordered_json j;
    j["schemaVersion"] = kSchemaVersion;
    j["sessionId"] = r.sessionId;
    j["group"] = toString(r.group);
    j["mandatedDots"] = r.assignment.mandatedDots.labels();
    j["seed"] = r.assignment.seed;
    j["trainingAttempts"] = r.trainingAttempts;
    j["creationAttempts"] = r.creationAttempts;
    j["finalPattern"] = r.finalPattern.digits();
    j["creationTimeMs"] = r.creationTimeMs;
    j["cumulativeCreationTimeMs"] = r.cumulativeCreationTimeMs;
    j["creationAttemptTimesMs"] = r.creationAttemptTimesMs;
    j["redrawTimeMs"] = r.redrawTimeMs;
    j["recallAttempts"] = nlohmann::ordered_json::array();
    for (const auto& a : r.recallAttempts) {
        j["recallAttempts"].push_back({{"pattern", a.drawn}, {"elapsedMs", a.elapsedMs}, {"success", a.success}});
    }
    j["survey"] = r.survey;
    return j.dump();
}

SessionRecord fromJsonLine(const std::string& line, size_t lineNumber) {
    try {
        const json j = json::parse(line);
        requireSchema(j.at("schemaVersion").get<int>(), lineNumber);
        SessionRecord r;
        r.sessionId = j.at("sessionId").get<std::string>();
        r.group = parsePolicy(j.at("group").get<std::string>());
        DotSet mandated;
        for (int label : j.at("mandatedDots").get<std::vector<int>>()) {
            const Dot d(label);
            if (mandated.contains(d)) throw std::invalid_argument("repeated mandated dot");
            mandated.insert(d);
        }
        r.assignment = {r.group, mandated, j.at("seed").get<uint64_t>()};
        r.trainingAttempts = j.at("trainingAttempts").get<int>();
        r.creationAttempts = j.at("creationAttempts").get<int>();
        r.finalPattern = parseFinalPattern(j.at("finalPattern").get<std::string>());
        r.creationTimeMs = j.at("creationTimeMs").get<int64_t>();
        r.cumulativeCreationTimeMs = j.at("cumulativeCreationTimeMs").get<int64_t>();
        r.creationAttemptTimesMs = j.at("creationAttemptTimesMs").get<std::vector<int64_t>>();
        r.redrawTimeMs = j.at("redrawTimeMs").get<int64_t>();
        for (const auto& a : j.at("recallAttempts")) {
            r.recallAttempts.push_back({a.at("pattern").get<std::string>(), a.at("elapsedMs").get<int64_t>(),
                                        a.at("success").get<bool>()});
        }
        r.survey = j.at("survey").get<std::map<std::string, std::string>>();
        checkRecord(r);
        return r;
    } catch (const LogFormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw LogFormatError(LogFormatError::Kind::Malformed, lineNumber, e.what());
    }
}

std::vector<SessionRecord> ingestStream(std::istream& in) {
    std::vector<SessionRecord> records;
    std::string line;
    size_t lineNumber = 0;
    bool csv = false;
    bool sawContent = false;
    while (std::getline(in, line)) {
        ++lineNumber;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (!sawContent) {
            sawContent = true;
            if (line == kCsvHeader) {
                csv = true;
                continue;
            }
        }
        if (!csv) {
            records.push_back(fromJsonLine(line, lineNumber));
            continue;
        }
        try {
            SessionRecord r = fromCsvCells(splitCsvLine(line), lineNumber);
            checkRecord(r);
            records.push_back(std::move(r));
        } catch (const LogFormatError&) {
            throw;
        } catch (const std::exception& e) {
            throw LogFormatError(LogFormatError::Kind::Malformed, lineNumber, e.what());
        }
    }
    return records;
}

std::vector<SessionRecord> ingest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw LogFormatError(LogFormatError::Kind::Io, 0, "cannot open " + path.string());
    return ingestStream(in);
}

void writeCsv(std::ostream& out, const std::vector<SessionRecord>& records) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        std::string times;
        for (size_t i = 0; i < r.creationAttemptTimesMs.size(); ++i) {
            if (i) times += ';';
            times += std::to_string(r.creationAttemptTimesMs[i]);
        }
        std::string recalls;
        for (size_t i = 0; i < r.recallAttempts.size(); ++i) {
            const auto& a = r.recallAttempts[i];
            if (i) recalls += ';';
            recalls += a.drawn + ':' + std::to_string(a.elapsedMs) + ':' + (a.success ? "1" : "0");
        }
        const std::vector<std::string> cells = {std::to_string(kSchemaVersion),
                                                r.sessionId,
                                                std::string(toString(r.group)),
                                                dotDigits(r.assignment.mandatedDots),
                                                std::to_string(r.assignment.seed),
                                                std::to_string(r.trainingAttempts),
                                                std::to_string(r.creationAttempts),
                                                r.finalPattern.digits(),
                                                std::to_string(r.creationTimeMs),
                                                std::to_string(r.cumulativeCreationTimeMs),
                                                times,
                                                std::to_string(r.redrawTimeMs),
                                                recalls,
                                                json(r.survey).dump()};
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << csvQuote(cells[i]);
        }
        out << '\n';
    }
}

void exportCsv(const std::vector<SessionRecord>& records, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw LogFormatError(LogFormatError::Kind::Io, 0, "cannot write " + path.string());
    writeCsv(out, records);
    if (!out) throw LogFormatError(LogFormatError::Kind::Io, 0, "write failed for " + path.string());
}

void appendRecord(const SessionRecord& record, const std::filesystem::path& path) {
    checkRecord(record);
    const std::string line = toJsonLine(record) + '\n';
    const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd < 0) {
        throw LogFormatError(LogFormatError::Kind::Io, 0, "cannot open " + path.string() + ": " + std::strerror(errno));
    }
    const ssize_t written = ::write(fd, line.data(), line.size());
    const int err = errno;
    ::close(fd);
    if (written != static_cast<ssize_t>(line.size())) {
        throw LogFormatError(LogFormatError::Kind::Io, 0, "short write to " + path.string() + ": " + std::strerror(err));
    }
}

}  // namespace patternlock
