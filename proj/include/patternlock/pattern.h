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
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "patternlock/grid.h"

namespace patternlock {

inline constexpr int kMinPatternLength = 4;
inline constexpr int kMaxPatternLength = 9;

// A set of dots stored as a 9-bit mask (bit 0 = dot 1).
class DotSet {
  public:
    constexpr DotSet() = default;
    constexpr explicit DotSet(uint16_t mask) : mask_(mask & kFull) {}
    DotSet(std::initializer_list<int> labels) {
        for (int l : labels) insert(Dot(l));
    }

    static constexpr DotSet all() { return DotSet(kFull); }

    constexpr uint16_t mask() const { return mask_; }
    constexpr bool contains(Dot d) const { return (mask_ >> d.index()) & 1U; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }

    constexpr void insert(Dot d) { mask_ |= bit(d); }
    constexpr void erase(Dot d) { mask_ &= static_cast<uint16_t>(~bit(d)); }

    constexpr DotSet complement() const { return DotSet(static_cast<uint16_t>(~mask_ & kFull)); }
    constexpr DotSet operator|(DotSet o) const { return DotSet(mask_ | o.mask_); }
    constexpr DotSet operator&(DotSet o) const { return DotSet(mask_ & o.mask_); }
    constexpr bool isSubsetOf(DotSet o) const { return (mask_ & ~o.mask_) == 0; }

    // Members in ascending label order.
    std::vector<Dot> dots() const;
    std::vector<int> labels() const;

    constexpr bool operator==(const DotSet&) const = default;

  private:
    static constexpr uint16_t kFull = 0x1FF;
    static constexpr uint16_t bit(Dot d) { return static_cast<uint16_t>(1U << d.index()); }

    uint16_t mask_ = 0;
};

std::string toString(DotSet s);

/*
 * An ordered sequence of 4..9 distinct dots obeying the pattern-lock rules.
 * Instances are only produced by validatePattern() or by code that extends
 * sequences through reachable(), so holders may assume validity.
 */
class Pattern {
  public:
    static Pattern fromTrustedDots(std::span<const Dot> dots);

    int size() const { return size_; }
    Dot operator[](int i) const { return dots_[i]; }
    Dot front() const { return dots_[0]; }
    Dot back() const { return dots_[size_ - 1]; }
    std::span<const Dot> dots() const { return {dots_.data(), static_cast<size_t>(size_)}; }
    DotSet dotSet() const;

    // "385196427"
    std::string digits() const;
    // Decimal value of digits(); unique per pattern and fits in 30 bits.
    uint32_t code() const;

    bool operator==(const Pattern& o) const;
    // Lexicographic on the dot sequence (a proper prefix sorts first).
    std::strong_ordering operator<=>(const Pattern& o) const;

  private:
    Pattern() = default;

    std::array<Dot, kMaxPatternLength> dots_ = {
            Dot(1), Dot(1), Dot(1), Dot(1), Dot(1), Dot(1), Dot(1), Dot(1), Dot(1)};
    uint8_t size_ = 0;
};

struct PatternHash {
    size_t operator()(const Pattern& p) const { return std::hash<uint32_t>{}(p.code()); }
};

}  // namespace patternlock
