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
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace patternlock {

inline constexpr int kDotCount = 9;
inline constexpr int kDirectionCount = 8;

/*
 * One of the nine contact points of the 3x3 grid, labelled 1..9 in row-major
 * order (upper-left = 1, lower-right = 9). Construction from an out-of-range
 * label throws std::out_of_range.
 */
class Dot {
  public:
    constexpr explicit Dot(int label) : label_(static_cast<uint8_t>(checked(label))) {}

    // Bypasses the range check. Callers guarantee 1 <= label <= 9.
    static constexpr Dot fromTrustedLabel(int label) {
        Dot d;
        d.label_ = static_cast<uint8_t>(label);
        return d;
    }

    static std::optional<Dot> fromChar(char c) {
        if (c < '1' || c > '9') return std::nullopt;
        return fromTrustedLabel(c - '0');
    }

    constexpr int label() const { return label_; }
    constexpr int index() const { return label_ - 1; }
    constexpr char digit() const { return static_cast<char>('0' + label_); }

    constexpr auto operator<=>(const Dot&) const = default;

  private:
    constexpr Dot() = default;
    static constexpr int checked(int label);

    uint8_t label_ = 1;
};

struct Coord {
    int row = 0;
    int col = 0;

    constexpr bool operator==(const Coord&) const = default;
};

enum class SegmentClass : uint8_t { Simple, Knight, Overlap };

// Column order of the neighbourhood table. Do not reorder.
enum class Direction : uint8_t { N, NE, E, SE, S, SW, W, NW };

inline constexpr std::array<Direction, kDirectionCount> kAllDirections = {
        Direction::N, Direction::NE, Direction::E, Direction::SE,
        Direction::S, Direction::SW, Direction::W, Direction::NW};

// Squared lengths that occur between two distinct dots.
inline constexpr std::array<int, 5> kSquaredLengths = {1, 2, 4, 5, 8};

Coord coordOf(Dot d);
Dot dotAt(Coord c);

// Throws std::invalid_argument when i == j.
int squaredDistance(Dot i, Dot j);
SegmentClass classifySegment(Dot i, Dot j);
std::optional<Dot> middleDot(Dot i, Dot j);

SegmentClass classOfSquaredLength(int squaredLength);

std::optional<Dot> neighbour(Dot d, Direction dir);
Direction opposite(Direction dir);
Coord offsetOf(Direction dir);

std::string_view toString(SegmentClass c);
std::string_view toString(Direction d);

/*
 * Table of neighbours indexed [dot - 1][direction]; 0 marks an empty cell.
 * Hard-coded from the published neighbourhood table and cross-checked against
 * the grid geometry in grid_test.
 */
inline constexpr std::array<std::array<uint8_t, kDirectionCount>, kDotCount> kNeighbourTable = {{
        //  N  NE  E  SE  S  SW  W  NW
        {{0, 0, 2, 5, 4, 0, 0, 0}},
        {{0, 0, 3, 6, 5, 4, 1, 0}},
        {{0, 0, 0, 0, 6, 5, 2, 0}},
        {{1, 2, 5, 8, 7, 0, 0, 0}},
        {{2, 3, 6, 9, 8, 7, 4, 1}},
        {{3, 0, 0, 0, 9, 8, 5, 2}},
        {{4, 5, 8, 0, 0, 0, 0, 0}},
        {{5, 6, 9, 0, 0, 0, 7, 4}},
        {{6, 0, 0, 0, 0, 0, 8, 5}},
}};

constexpr int Dot::checked(int label) {
    if (label < 1 || label > kDotCount) {
        throw std::out_of_range("dot label must be in 1..9");
    }
    return label;
}

}  // namespace patternlock
