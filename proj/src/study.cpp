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

#include "patternlock/study.h"

#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "patternlock/random.h"

namespace patternlock {

std::string_view toString(Phase p) {
    switch (p) {
        case Phase::Training: return "training";
        case Phase::Create: return "create";
        case Phase::Confirm: return "confirm";
        case Phase::Recall: return "recall";
    }
    return "?";
}

std::optional<Phase> phaseFromString(std::string_view name) {
    for (Phase p : {Phase::Training, Phase::Create, Phase::Confirm, Phase::Recall}) {
        if (toString(p) == name) return p;
    }
    return std::nullopt;
}

std::string_view toString(Stage s) {
    switch (s) {
        case Stage::Training: return "training";
        case Stage::Confirm: return "confirm";
        case Stage::Recall: return "recall";
        case Stage::Complete: return "complete";
    }
    return "?";
}

std::string_view toString(EventOutcome::Kind k) {
    switch (k) {
        case EventOutcome::Kind::Accepted: return "accepted";
        case EventOutcome::Kind::RuleError: return "ruleError";
        case EventOutcome::Kind::PolicyError: return "policyError";
        case EventOutcome::Kind::Mismatch: return "mismatch";
        case EventOutcome::Kind::RecallResult: return "recallResult";
    }
    return "?";
}

SessionManager::SessionManager(uint64_t masterSeed, std::filesystem::path logPath)
    : masterSeed_(masterSeed), logPath_(std::move(logPath)) {}

CreatedSession SessionManager::createSession(Policy group) {
    std::lock_guard lock(mutex_);
    const uint64_t seed = deriveSeed(masterSeed_, counter_);
    char id[40];
    std::snprintf(id, sizeof id, "s%06llu-%016llx", static_cast<unsigned long long>(counter_),
                  static_cast<unsigned long long>(deriveSeed(seed, 0)));
    ++counter_;

    Session s;
    s.record.sessionId = id;
    s.record.group = group;
    s.record.assignment = assignMandatedDots(group, seed);
    sessions_.emplace(s.record.sessionId, s);
    return {s.record.sessionId, s.record.assignment};
}

SessionManager::Session& SessionManager::find(const std::string& sessionId) {
    auto it = sessions_.find(sessionId);
    if (it == sessions_.end()) throw SessionError(SessionError::Kind::UnknownSession, "unknown session " + sessionId);
    return it->second;
}

const SessionManager::Session& SessionManager::find(const std::string& sessionId) const {
    auto it = sessions_.find(sessionId);
    if (it == sessions_.end()) throw SessionError(SessionError::Kind::UnknownSession, "unknown session " + sessionId);
    return it->second;
}

SysPalAssignment SessionManager::reset(const std::string& sessionId) {
    std::lock_guard lock(mutex_);
    Session& s = find(sessionId);
    ++s.resets;
    return s.record.assignment;
}

Stage SessionManager::stage(const std::string& sessionId) const {
    std::lock_guard lock(mutex_);
    return find(sessionId).stage;
}

SysPalAssignment SessionManager::assignment(const std::string& sessionId) const {
    std::lock_guard lock(mutex_);
    return find(sessionId).record.assignment;
}

void SessionManager::setSurvey(const std::string& sessionId, const std::map<std::string, std::string>& answers) {
    std::lock_guard lock(mutex_);
    Session& s = find(sessionId);
    if (s.stage == Stage::Complete) {
        throw SessionError(SessionError::Kind::WrongPhase, "session already complete");
    }
    for (const auto& [k, v] : answers) s.record.survey[k] = v;
}

EventOutcome SessionManager::checkDrawing(const Session& s, std::string_view digits,
                                          std::optional<Pattern>& out) const {
    EventOutcome outcome;
    outcome.stage = s.stage;
    auto parsed = parsePattern(digits);
    if (!parsed) throw SessionError(SessionError::Kind::BadRequest, "pattern must be a string of digits 1-9");
    if (auto* err = std::get_if<ValidationError>(&*parsed)) {
        outcome.kind = EventOutcome::Kind::RuleError;
        outcome.rule = err->rule;
        outcome.position = err->position;
        outcome.message = err->message;
        return outcome;
    }
    const Pattern p = std::get<Pattern>(*parsed);
    if (auto missing = validateSubmission(p, s.record.assignment)) {
        outcome.kind = EventOutcome::Kind::PolicyError;
        outcome.missing = missing->missing;
        outcome.message = "pattern must include the system-assigned dots " + toString(missing->missing);
        return outcome;
    }
    out = p;
    return outcome;
}

EventOutcome SessionManager::submit(const std::string& sessionId, Phase phase, std::string_view digits,
                                    int64_t elapsedMs) {
    if (elapsedMs < 0) throw SessionError(SessionError::Kind::BadRequest, "elapsedMs must be >= 0");
    std::lock_guard lock(mutex_);
    Session& s = find(sessionId);
    auto wrongPhase = [&] {
        return SessionError(SessionError::Kind::WrongPhase, std::string(toString(phase)) +
                                                                    " event not allowed in stage " +
                                                                    std::string(toString(s.stage)));
    };
    std::optional<Pattern> drawn;

    switch (phase) {
        case Phase::Training: {
            if (s.stage != Stage::Training) throw wrongPhase();
            ++s.record.trainingAttempts;
            return checkDrawing(s, digits, drawn);
        }
        case Phase::Create: {
            if (s.stage != Stage::Training) throw wrongPhase();
            ++s.record.creationAttempts;
            s.record.creationAttemptTimesMs.push_back(elapsedMs);
            EventOutcome out = checkDrawing(s, digits, drawn);
            if (drawn) {
                s.pending = drawn;
                s.record.creationTimeMs = elapsedMs;
                s.stage = Stage::Confirm;
                out.stage = s.stage;
            }
            return out;
        }
        case Phase::Confirm: {
            if (s.stage != Stage::Confirm) throw wrongPhase();
            EventOutcome out;
            if (digits != s.pending->digits()) {
                // Start over: the next create attempt is timed afresh.
                s.pending.reset();
                s.stage = Stage::Training;
                out.kind = EventOutcome::Kind::Mismatch;
                out.stage = s.stage;
                out.message = "patterns do not match; create the pattern again";
                return out;
            }
            s.record.finalPattern = *s.pending;
            s.record.redrawTimeMs = elapsedMs;
            s.record.cumulativeCreationTimeMs = std::accumulate(
                    s.record.creationAttemptTimesMs.begin(), s.record.creationAttemptTimesMs.end(), int64_t{0});
            s.stage = Stage::Recall;
            out.stage = s.stage;
            out.attemptsLeft = static_cast<int>(kMaxRecallAttempts);
            return out;
        }
        case Phase::Recall: {
            if (s.stage != Stage::Recall) throw wrongPhase();
            for (char c : digits) {
                if (c < '1' || c > '9') {
                    throw SessionError(SessionError::Kind::BadRequest, "pattern must be a string of digits 1-9");
                }
            }
            const bool success = digits == s.record.finalPattern.digits();
            s.record.recallAttempts.push_back({std::string(digits), elapsedMs, success});
            EventOutcome out;
            out.kind = EventOutcome::Kind::RecallResult;
            out.success = success;
            out.attemptsLeft = static_cast<int>(kMaxRecallAttempts - s.record.recallAttempts.size());
            if (success || out.attemptsLeft == 0) {
                s.stage = Stage::Complete;
                out.attemptsLeft = success ? out.attemptsLeft : 0;
                finish(s);
            }
            out.stage = s.stage;
            return out;
        }
    }
    throw SessionError(SessionError::Kind::BadRequest, "unknown phase");
}

void SessionManager::finish(Session& s) {
    std::lock_guard lock(logMutex_);
    appendRecord(s.record, logPath_);
}

std::string SessionManager::exportLog() const {
    std::lock_guard lock(logMutex_);
    std::ifstream in(logPath_);
    if (!in) return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace patternlock
