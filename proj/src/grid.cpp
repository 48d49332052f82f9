#include "ninepalace/grid.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ninepalace {

namespace {

void check_digit(int d, const char* what) {
    if (d < 0 || d > 9) throw std::invalid_argument(std::string(what) + ": digit out of 0..9");
}

} // namespace

int Position::row() const {
    if (index == 0) return 0;
    if (index == 10) return 2;
    return (index - 1) / 3;
}

int Position::col() const {
    if (index == 0) return -1;
    if (index == 10) return 3;
    return (index - 1) % 3;
}

Position Position::from_row_col(int row, int col) {
    if (row == 0 && col == -1) return {0};
    if (row == 2 && col == 3) return {10};
    if (row < 0 || row > 2 || col < 0 || col > 2)
        throw std::invalid_argument("Position: no cell at these coordinates");
    return {1 + col + 3 * row};
}

PointClass classify(Position p) {
    switch (p.index) {
    case 0: return PointClass::Zero;
    case 10: return PointClass::Ten;
    case 5: return PointClass::Center;
    case 1: case 3: case 7: case 9: return PointClass::Corner;
    case 2: case 4: case 6: case 8: return PointClass::Midpoint;
    default: throw std::invalid_argument("Position: index out of 0..10");
    }
}

bool is_corner(int digit) { return digit == 1 || digit == 3 || digit == 7 || digit == 9; }
bool is_midpoint(int digit) { return digit == 2 || digit == 4 || digit == 6 || digit == 8; }

GridNumber GridNumber::of_value(long long v) {
    // Euclidean split: position stays in 0..9 for negative values too.
    long long family = v / 10;
    long long pos = v % 10;
    if (pos < 0) {
        pos += 10;
        family -= 1;
    }
    return {family, static_cast<int>(pos)};
}

NegativeReading negative_reading(GridNumber g) {
    if (g.family >= 0) throw std::invalid_argument("negative_reading: family must be negative");
    if (g.position < 1 || g.position > 9)
        throw std::invalid_argument("negative_reading: position 0 has no complement form");
    return {GridNumber{-g.family - 1, 10 - g.position}, -1};
}

int rotate(int digit, int quarter_turns) {
    check_digit(digit, "rotate");
    if (quarter_turns < 0 || quarter_turns > 3)
        throw std::invalid_argument("rotate: quarter turns out of 0..3");
    int d = digit;
    for (int i = 0; i < quarter_turns; ++i) d = (3 * d) % 10;
    return d;
}

std::string Orientation::facing_name() const {
    switch (((quarter_turns % 4) + 4) % 4) {
    case 0: return "up";
    case 1: return "right";
    case 2: return "down";
    default: return "left";
    }
}

int complement(int digit) {
    if (digit < 1 || digit > 9) throw std::invalid_argument("complement: digit out of 1..9");
    return 10 - digit;
}

GridNumber PathPoint::canonical() const {
    if (position == 10) return {family + 1, 0};
    return {family, position};
}

NumberPath encode_path(long long v) {
    NumberPath path;
    path.sign = v < 0 ? -1 : 1;
    unsigned long long mag = v < 0 ? -static_cast<unsigned long long>(v)
                                   : static_cast<unsigned long long>(v);
    std::vector<int> digits;
    do {
        digits.push_back(static_cast<int>(mag % 10));
        mag /= 10;
    } while (mag != 0);

    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        int d = *it;
        if (path.sign >= 0)
            path.points.push_back({0, d});
        else
            // Digit d reads as -d at position 10-d of the -1 family; the
            // zero digit lands on that family's Ten point.
            path.points.push_back({-1, 10 - d});
    }
    return path;
}

long long decode_path(const NumberPath& p) {
    long long mag = 0;
    for (const PathPoint& pt : p.points) {
        int d = p.sign >= 0 ? pt.position : 10 - pt.position;
        if (d < 0 || d > 9) throw std::invalid_argument("decode_path: point out of range");
        mag = mag * 10 + d;
    }
    return p.sign >= 0 ? mag : -mag;
}

} // namespace ninepalace
