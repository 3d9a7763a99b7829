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

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "patternlock/grid.h"
#include "patternlock/pattern.h"

namespace patternlock {

// The dot the finger is on and everything connected so far (including it).
struct ReachabilityState {
    Dot current;
    DotSet connected;

    bool operator==(const ReachabilityState&) const = default;
};

/*
 * Elimination algorithm: starts from every unconnected dot and, for each
 * direction in which the current dot has an unconnected neighbour e, removes
 * the dot one step beyond e in that direction. What remains is exactly the
 * set of dots that may legally follow `current`.
 *
 * Throws std::invalid_argument if state.current is not in state.connected.
 */
DotSet reachable(const ReachabilityState& state);

enum class Rule { TooShort, RepeatedDot, IllegalJump };

std::string_view toString(Rule rule);

struct ValidationError {
    Rule rule;
    // Index into the input sequence of the offending dot (for IllegalJump, the
    // destination of the illegal segment). For TooShort, the sequence length.
    int position = 0;
    std::string message;
};

using ValidationResult = std::variant<Pattern, ValidationError>;

/*
 * Checks length >= 4, no repeated dot and no jump over an unvisited dot.
 * Segments between dots are straight by construction. Length is checked
 * first; otherwise the first violation in sequence order is reported.
 * Sequences longer than nine dots necessarily repeat a dot and fail with
 * RepeatedDot.
 */
ValidationResult validatePattern(std::span<const Dot> seq);
ValidationResult validatePattern(std::span<const int> labels);

// Parses the digit-string wire format ("1537") and validates it. Characters
// outside '1'..'9' produce std::nullopt.
std::optional<ValidationResult> parsePattern(std::string_view digits);

// Convenience for trusted constants; throws std::invalid_argument on failure.
Pattern patternFromDigits(std::string_view digits);

struct TransitionEntry {
    ReachabilityState state;
    DotSet reachable;
};

inline constexpr int kTransitionTableSize = kDotCount * (1 << (kDotCount - 1));

// All 2304 valid states, ordered by current dot then connected-set bitmask.
std::vector<TransitionEntry> exportTransitionTable();

// Writes the table as a JSON array, one record per line:
// {"current":3,"connected":[3],"reachable":[2,4,5,6,8]}
void writeTransitionTable(std::ostream& out, const std::vector<TransitionEntry>& table);
std::string transitionRecordJson(const TransitionEntry& entry);

}  // namespace patternlock
