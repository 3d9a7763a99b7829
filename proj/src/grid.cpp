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

#include "patternlock/grid.h"

namespace patternlock {

namespace {

void requireDistinct(Dot i, Dot j) {
    if (i == j) throw std::invalid_argument("segment endpoints must be distinct dots");
}

}  // namespace

Coord coordOf(Dot d) {
    return Coord{d.index() / 3, d.index() % 3};
}

Dot dotAt(Coord c) {
    if (c.row < 0 || c.row > 2 || c.col < 0 || c.col > 2) {
        throw std::out_of_range("coordinate outside the 3x3 grid");
    }
    return Dot::fromTrustedLabel(3 * c.row + c.col + 1);
}

int squaredDistance(Dot i, Dot j) {
    requireDistinct(i, j);
    const Coord a = coordOf(i);
    const Coord b = coordOf(j);
    const int dr = a.row - b.row;
    const int dc = a.col - b.col;
    return dr * dr + dc * dc;
}

SegmentClass classOfSquaredLength(int squaredLength) {
    switch (squaredLength) {
        case 1:
        case 2:
            return SegmentClass::Simple;
        case 5:
            return SegmentClass::Knight;
        case 4:
        case 8:
            return SegmentClass::Overlap;
        default:
            throw std::invalid_argument("squared length does not occur on the 3x3 grid");
    }
}

SegmentClass classifySegment(Dot i, Dot j) {
    return classOfSquaredLength(squaredDistance(i, j));
}

std::optional<Dot> middleDot(Dot i, Dot j) {
    requireDistinct(i, j);
    const Coord a = coordOf(i);
    const Coord b = coordOf(j);
    // Only overlap segments (both deltas even, one of them 2) have a lattice midpoint.
    if ((a.row + b.row) % 2 != 0 || (a.col + b.col) % 2 != 0) return std::nullopt;
    return dotAt(Coord{(a.row + b.row) / 2, (a.col + b.col) / 2});
}

std::optional<Dot> neighbour(Dot d, Direction dir) {
    const uint8_t cell = kNeighbourTable[d.index()][static_cast<int>(dir)];
    if (cell == 0) return std::nullopt;
    return Dot::fromTrustedLabel(cell);
}

Direction opposite(Direction dir) {
    return static_cast<Direction>((static_cast<int>(dir) + 4) % kDirectionCount);
}

Coord offsetOf(Direction dir) {
    switch (dir) {
        case Direction::N: return {-1, 0};
        case Direction::NE: return {-1, 1};
        case Direction::E: return {0, 1};
        case Direction::SE: return {1, 1};
        case Direction::S: return {1, 0};
        case Direction::SW: return {1, -1};
        case Direction::W: return {0, -1};
        case Direction::NW: return {-1, -1};
    }
    return {0, 0};
}

std::string_view toString(SegmentClass c) {
    switch (c) {
        case SegmentClass::Simple: return "Simple";
        case SegmentClass::Knight: return "Knight";
        case SegmentClass::Overlap: return "Overlap";
    }
    return "?";
}

std::string_view toString(Direction d) {
    static constexpr std::array<std::string_view, kDirectionCount> kNames = {
            "N", "NE", "E", "SE", "S", "SW", "W", "NW"};
    return kNames[static_cast<int>(d)];
}

}  // namespace patternlock
