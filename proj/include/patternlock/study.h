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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "patternlock/policy.h"
#include "patternlock/reachability.h"
#include "patternlock/session_log.h"

namespace patternlock {

// Default length of the distraction placeholder between creation and recall.
inline constexpr std::chrono::minutes kDefaultDistractionDuration{4};

enum class Phase { Training, Create, Confirm, Recall };

std::string_view toString(Phase p);
std::optional<Phase> phaseFromString(std::string_view name);

enum class Stage { Training, Confirm, Recall, Complete };

std::string_view toString(Stage s);

/*
 * Verdict for one submitted drawing.
 *   Accepted      the drawing was taken; `stage` is where the session is now.
 *   RuleError     the drawing breaks a drawing rule (`rule`, `position`).
 *   PolicyError   mandated dots are missing (`missing`).
 *   Mismatch      confirmation differs from the created pattern; back to creation.
 *   RecallResult  `success` and `attemptsLeft` after a recall attempt.
 */
struct EventOutcome {
    enum class Kind { Accepted, RuleError, PolicyError, Mismatch, RecallResult };

    Kind kind = Kind::Accepted;
    Stage stage = Stage::Training;
    std::optional<Rule> rule;
    int position = 0;
    DotSet missing;
    bool success = false;
    int attemptsLeft = 0;
    std::string message;
};

std::string_view toString(EventOutcome::Kind k);

// Caller errors that the service maps to 4xx responses.
class SessionError : public std::runtime_error {
  public:
    enum class Kind { UnknownSession, WrongPhase, BadRequest };

    SessionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

struct CreatedSession {
    std::string sessionId;
    SysPalAssignment assignment;
};

/*
 * Server side of the study flow. Sessions move
 *   training -> (create accepted) confirm -> (confirm matches) recall -> complete
 * and are appended to the log once recall finishes (success, or five failed
 * attempts). Mandated dots are fixed at creation and returned unchanged by
 * every reset. All members are safe to call from several threads; appends to
 * the log are serialized.
 */
class SessionManager {
  public:
    SessionManager(uint64_t masterSeed, std::filesystem::path logPath);

    CreatedSession createSession(Policy group);
    SysPalAssignment reset(const std::string& sessionId);
    EventOutcome submit(const std::string& sessionId, Phase phase, std::string_view digits, int64_t elapsedMs);
    void setSurvey(const std::string& sessionId, const std::map<std::string, std::string>& answers);

    Stage stage(const std::string& sessionId) const;
    SysPalAssignment assignment(const std::string& sessionId) const;

    // Raw contents of the log file (JSON lines); empty if nothing was written.
    std::string exportLog() const;
    const std::filesystem::path& logPath() const { return logPath_; }

  private:
    struct Session {
        SessionRecord record;
        Stage stage = Stage::Training;
        std::optional<Pattern> pending;
        int resets = 0;
    };

    Session& find(const std::string& sessionId);
    const Session& find(const std::string& sessionId) const;
    EventOutcome checkDrawing(const Session& s, std::string_view digits, std::optional<Pattern>& out) const;
    void finish(Session& s);

    const uint64_t masterSeed_;
    const std::filesystem::path logPath_;
    uint64_t counter_ = 0;
    std::map<std::string, Session> sessions_;
    mutable std::mutex mutex_;
    mutable std::mutex logMutex_;
};

}  // namespace patternlock
