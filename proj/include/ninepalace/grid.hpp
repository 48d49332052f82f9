#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ninepalace {

/// Classification of the eleven positions of the extended grid.
enum class PointClass { Corner, Midpoint, Center, Zero, Ten };

// One of the eleven positions of the extended nine-palace grid, in keypad
// order: 0 is the extension point left of 1, 10 the extension point right
// of 9, and 1..9 are the cells (index = 1 + col + 3*row).
struct Position {
    int index = 0;

    // Grid coordinates. Position 0 sits at (row 0, col -1), position 10 at
    // (row 2, col 3); both lie on the digit line but outside the 3x3 block.
    int row() const;
    int col() const;

    static Position from_row_col(int row, int col);

    bool operator==(const Position&) const = default;
};

PointClass classify(Position p);
bool is_corner(int digit);
bool is_midpoint(int digit);

// An integer encoded as (family, position): value = 10*family + position.
// Canonical form keeps position in 0..9; position 10 belongs to the next
// family as its position 0.
struct GridNumber {
    long long family = 0;
    int position = 0;

    static GridNumber of_value(long long v);
    long long value() const { return 10 * family + position; }

    bool operator==(const GridNumber&) const = default;
};

struct NegativeReading {
    GridNumber magnitude; // nonnegative-family reading
    int sign;             // always -1
};

// Positive-magnitude reading of a negative-family point:
// (k, n) == -(-k-1, 10-n) for k < 0 and n in 1..9.
NegativeReading negative_reading(GridNumber g);

/// Digit permutation induced by j clockwise quarter turns of the grid:
/// one turn maps d to 3*d mod 10.
int rotate(int digit, int quarter_turns);

// A rotation frame; quarter_turns counts clockwise 90-degree turns.
struct Orientation {
    int quarter_turns = 0;

    int apply(int digit) const { return rotate(digit, quarter_turns); }
    Orientation then(Orientation o) const { return {(quarter_turns + o.quarter_turns) % 4}; }
    // "facing up/right/down/left": the direction the frame reads as front.
    std::string facing_name() const;

    bool operator==(const Orientation&) const = default;
};

/// 10 - d for d in 1..9. Rejects 0: its complement is the Ten extension
/// point, not a digit.
int complement(int digit);

// One marked point of a long-number path. Position may be 10 only for the
// zero digit of a negative number, which is drawn at the Ten point of the
// -1 family; canonically that point is (family+1, 0).
struct PathPoint {
    long long family = 0;
    int position = 0; // 0..10

    GridNumber canonical() const;
    bool operator==(const PathPoint&) const = default;
};

// A long number as a path of digit points, most significant digit first.
struct NumberPath {
    int sign = 1;
    std::vector<PathPoint> points;

    bool operator==(const NumberPath&) const = default;
};

NumberPath encode_path(long long v);
long long decode_path(const NumberPath& p);

} // namespace ninepalace
