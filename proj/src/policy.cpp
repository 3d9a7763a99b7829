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

#include "patternlock/policy.h"

#include <cctype>
#include <stdexcept>
#include <string>

#include "patternlock/random.h"

namespace patternlock {

std::string_view toString(Policy p) {
    switch (p) {
        case Policy::Original: return "Original";
        case Policy::TinPal: return "TinPal";
        case Policy::OneDot: return "OneDot";
        case Policy::TwoDot: return "TwoDot";
        case Policy::ThreeDot: return "ThreeDot";
    }
    return "?";
}

std::optional<Policy> policyFromString(std::string_view name) {
    std::string n;
    for (char c : name) {
        if (c == '-' || c == '_' || c == ' ') continue;
        n += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (n == "original") return Policy::Original;
    if (n == "tinpal") return Policy::TinPal;
    if (n == "onedot" || n == "1dot") return Policy::OneDot;
    if (n == "twodot" || n == "2dot") return Policy::TwoDot;
    if (n == "threedot" || n == "3dot") return Policy::ThreeDot;
    return std::nullopt;
}

int mandatedDotCount(Policy p) {
    switch (p) {
        case Policy::OneDot: return 1;
        case Policy::TwoDot: return 2;
        case Policy::ThreeDot: return 3;
        case Policy::Original:
        case Policy::TinPal: return 0;
    }
    return 0;
}

SysPalAssignment assignMandatedDots(Policy policy, uint64_t seed) {
    SysPalAssignment a{policy, DotSet{}, seed};
    Rng rng(seed);
    std::array<int, kDotCount> labels = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    // Partial Fisher-Yates: the first k slots become the sample.
    const int k = mandatedDotCount(policy);
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(rng.uniformBelow(kDotCount - i));
        std::swap(labels[i], labels[j]);
        a.mandatedDots.insert(Dot::fromTrustedLabel(labels[i]));
    }
    return a;
}

void checkAssignment(const SysPalAssignment& a) {
    if (a.mandatedDots.size() != mandatedDotCount(a.policy)) {
        throw std::invalid_argument(std::string("policy ") + std::string(toString(a.policy)) + " requires " +
                                    std::to_string(mandatedDotCount(a.policy)) + " mandated dots");
    }
}

std::optional<PolicyError> validateSubmission(const Pattern& p, const SysPalAssignment& a) {
    const DotSet missing = a.mandatedDots & p.dotSet().complement();
    if (missing.empty()) return std::nullopt;
    return PolicyError{missing};
}

AdjacencyReport adjacencyAnalysis(const Pattern& p, const SysPalAssignment& a) {
    AdjacencyReport report;
    const DotSet& mandated = a.mandatedDots;
    report.mandatedAtFirstPosition = mandated.contains(p.front());
    for (int i = 0; i + 1 < p.size(); ++i) {
        if (mandated.contains(p[i]) && mandated.contains(p[i + 1])) {
            report.pairsAdjacent.push_back({p[i], p[i + 1], classifySegment(p[i], p[i + 1])});
        }
    }
    const int k = mandated.size();
    // Distinct dots: k - 1 adjacent mandated pairs can only come from one contiguous run.
    report.allMandatedAdjacent = k >= 2 && static_cast<int>(report.pairsAdjacent.size()) == k - 1;
    return report;
}

}  // namespace patternlock
