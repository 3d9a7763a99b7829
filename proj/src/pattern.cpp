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

#include "patternlock/pattern.h"

#include <stdexcept>

namespace patternlock {

std::vector<Dot> DotSet::dots() const {
    std::vector<Dot> out;
    out.reserve(size());
    for (int label = 1; label <= kDotCount; ++label) {
        if ((mask_ >> (label - 1)) & 1U) out.push_back(Dot::fromTrustedLabel(label));
    }
    return out;
}

std::vector<int> DotSet::labels() const {
    std::vector<int> out;
    out.reserve(size());
    for (Dot d : dots()) out.push_back(d.label());
    return out;
}

std::string toString(DotSet s) {
    std::string out = "{";
    for (Dot d : s.dots()) {
        if (out.size() > 1) out += ',';
        out += d.digit();
    }
    return out + "}";
}

Pattern Pattern::fromTrustedDots(std::span<const Dot> dots) {
    if (dots.size() > static_cast<size_t>(kMaxPatternLength)) {
        throw std::length_error("pattern longer than nine dots");
    }
    Pattern p;
    for (size_t i = 0; i < dots.size(); ++i) p.dots_[i] = dots[i];
    p.size_ = static_cast<uint8_t>(dots.size());
    return p;
}

DotSet Pattern::dotSet() const {
    DotSet s;
    for (Dot d : dots()) s.insert(d);
    return s;
}

std::string Pattern::digits() const {
    std::string out;
    out.reserve(size_);
    for (Dot d : dots()) out += d.digit();
    return out;
}

uint32_t Pattern::code() const {
    uint32_t value = 0;
    for (Dot d : dots()) value = value * 10 + static_cast<uint32_t>(d.label());
    return value;
}

bool Pattern::operator==(const Pattern& o) const {
    if (size_ != o.size_) return false;
    for (int i = 0; i < size_; ++i) {
        if (dots_[i] != o.dots_[i]) return false;
    }
    return true;
}

std::strong_ordering Pattern::operator<=>(const Pattern& o) const {
    const int n = std::min(size_, o.size_);
    for (int i = 0; i < n; ++i) {
        if (auto c = dots_[i] <=> o.dots_[i]; c != 0) return c;
    }
    return size_ <=> o.size_;
}

}  // namespace patternlock
