#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ninepalace {

// A base-10 digit string with a sign, most significant digit first.
// Sequences produced by from_value/parse and returned as results are
// canonical (no leading zero except "0" itself); the padded working forms
// used by the engines (units and carry sequences) keep their leading zero.
struct DigitSequence {
    int sign = 1;
    std::vector<std::uint8_t> digits;

    static DigitSequence from_value(long long v);
    static DigitSequence parse(std::string_view text); // throws std::invalid_argument

    static DigitSequence from_digits(std::vector<std::uint8_t> digits, int sign = 1);

    bool is_zero() const;
    bool is_canonical() const;
    DigitSequence canonical() const;

    std::size_t size() const { return digits.size(); }
    int digit(std::size_t i) const { return digits[i]; }

    long long value() const; // throws std::overflow_error past int64 range
    std::string str() const;

    bool operator==(const DigitSequence&) const = default;
};

// Magnitude comparison, ignoring signs: -1, 0, +1.
int compare_magnitude(const DigitSequence& a, const DigitSequence& b);

} // namespace ninepalace
