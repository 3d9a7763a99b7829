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
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "patternlock/grid.h"
#include "patternlock/pattern.h"

namespace patternlock {

// Study group. OneDot..ThreeDot mandate that many system-assigned dots.
enum class Policy { Original, TinPal, OneDot, TwoDot, ThreeDot };

inline constexpr std::array<Policy, 5> kAllPolicies = {Policy::Original, Policy::TinPal, Policy::OneDot,
                                                       Policy::TwoDot, Policy::ThreeDot};

std::string_view toString(Policy p);
// Accepts "Original", "TinPal", "OneDot", "1-dot", "1dot" and similar.
std::optional<Policy> policyFromString(std::string_view name);
int mandatedDotCount(Policy p);

struct SysPalAssignment {
    Policy policy = Policy::Original;
    DotSet mandatedDots;
    uint64_t seed = 0;

    bool operator==(const SysPalAssignment&) const = default;
};

// Draws mandatedDotCount(policy) distinct dots uniformly without replacement.
// The same (policy, seed) always yields the same dots.
SysPalAssignment assignMandatedDots(Policy policy, uint64_t seed);

// Throws std::invalid_argument if the dot count does not match the policy.
void checkAssignment(const SysPalAssignment& a);

struct PolicyError {
    DotSet missing;
};

// std::nullopt when every mandated dot appears in p.
std::optional<PolicyError> validateSubmission(const Pattern& p, const SysPalAssignment& a);

struct AdjacentPair {
    Dot first;
    Dot second;
    SegmentClass segmentClass;
};

struct AdjacencyReport {
    // Mandated pairs connected directly by one segment of the pattern,
    // in pattern order.
    std::vector<AdjacentPair> pairsAdjacent;
    // With k >= 2 mandated dots: they occupy k consecutive positions of the
    // pattern (k - 1 adjacent pairs). Always false for k < 2.
    bool allMandatedAdjacent = false;
    bool mandatedAtFirstPosition = false;
};

AdjacencyReport adjacencyAnalysis(const Pattern& p, const SysPalAssignment& a);

}  // namespace patternlock
