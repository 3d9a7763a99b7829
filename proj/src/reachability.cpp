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

#include "patternlock/reachability.h"

#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace patternlock {

DotSet reachable(const ReachabilityState& state) {
    if (!state.connected.contains(state.current)) {
        throw std::invalid_argument("current dot must be a member of the connected set");
    }
    DotSet result = state.connected.complement();
    const auto& row = kNeighbourTable[state.current.index()];
    for (int dir = 0; dir < kDirectionCount; ++dir) {
        const uint8_t e = row[dir];
        if (e == 0) continue;
        const Dot near = Dot::fromTrustedLabel(e);
        if (state.connected.contains(near)) continue;
        // Removing an empty cell or an already-absent dot is a no-op.
        const uint8_t beyond = kNeighbourTable[near.index()][dir];
        if (beyond != 0) result.erase(Dot::fromTrustedLabel(beyond));
    }
    return result;
}

std::string_view toString(Rule rule) {
    switch (rule) {
        case Rule::TooShort: return "TooShort";
        case Rule::RepeatedDot: return "RepeatedDot";
        case Rule::IllegalJump: return "IllegalJump";
    }
    return "?";
}

ValidationResult validatePattern(std::span<const Dot> seq) {
    if (seq.size() < static_cast<size_t>(kMinPatternLength)) {
        return ValidationError{Rule::TooShort, static_cast<int>(seq.size()),
                               "Connect at least 4 dots. Try again"};
    }
    DotSet connected;
    for (size_t i = 0; i < seq.size(); ++i) {
        const Dot d = seq[i];
        if (connected.contains(d)) {
            return ValidationError{Rule::RepeatedDot, static_cast<int>(i),
                                   std::string("dot ") + d.digit() + " used more than once at position " +
                                           std::to_string(i)};
        }
        if (i > 0) {
            const Dot prev = seq[i - 1];
            const auto mid = middleDot(prev, d);
            if (mid && !connected.contains(*mid)) {
                return ValidationError{Rule::IllegalJump, static_cast<int>(i),
                                       std::string("segment ") + prev.digit() + "->" + d.digit() +
                                               " jumps over unvisited dot " + mid->digit()};
            }
        }
        connected.insert(d);
    }
    return Pattern::fromTrustedDots(seq);
}

ValidationResult validatePattern(std::span<const int> labels) {
    std::vector<Dot> dots;
    dots.reserve(labels.size());
    for (int l : labels) dots.emplace_back(l);
    return validatePattern(std::span<const Dot>(dots));
}

std::optional<ValidationResult> parsePattern(std::string_view digits) {
    std::vector<Dot> dots;
    dots.reserve(digits.size());
    for (char c : digits) {
        auto d = Dot::fromChar(c);
        if (!d) return std::nullopt;
        dots.push_back(*d);
    }
    return validatePattern(std::span<const Dot>(dots));
}

Pattern patternFromDigits(std::string_view digits) {
    auto parsed = parsePattern(digits);
    if (!parsed) throw std::invalid_argument("not a digit string: " + std::string(digits));
    if (auto* err = std::get_if<ValidationError>(&*parsed)) {
        throw std::invalid_argument("invalid pattern " + std::string(digits) + ": " + err->message);
    }
    return std::get<Pattern>(*parsed);
}

std::vector<TransitionEntry> exportTransitionTable() {
    std::vector<TransitionEntry> table;
    table.reserve(kTransitionTableSize);
    for (int label = 1; label <= kDotCount; ++label) {
        const Dot current = Dot::fromTrustedLabel(label);
        for (uint16_t mask = 0; mask < (1U << kDotCount); ++mask) {
            const DotSet connected(mask);
            if (!connected.contains(current)) continue;
            const ReachabilityState state{current, connected};
            table.push_back({state, reachable(state)});
        }
    }
    return table;
}

std::string transitionRecordJson(const TransitionEntry& entry) {
    nlohmann::ordered_json record;
    record["current"] = entry.state.current.label();
    record["connected"] = entry.state.connected.labels();
    record["reachable"] = entry.reachable.labels();
    return record.dump();
}

void writeTransitionTable(std::ostream& out, const std::vector<TransitionEntry>& table) {
    out << "[\n";
    for (size_t i = 0; i < table.size(); ++i) {
        out << transitionRecordJson(table[i]) << (i + 1 < table.size() ? ",\n" : "\n");
    }
    out << "]\n";
}

}  // namespace patternlock
