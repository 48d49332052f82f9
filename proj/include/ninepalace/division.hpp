#pragma once

#include <stdexcept>

#include "ninepalace/sequence.hpp"
#include "ninepalace/trace.hpp"

namespace ninepalace {

// Raised by div_exact_low_to_high when the dividend is not an exact
// multiple; bit_index is the sequence position where the contradiction
// surfaced (0-based from the most significant, padded digit).
struct NotDivisibleError : std::runtime_error {
    int bit_index;

    NotDivisibleError(const std::string& what, int bit_index)
        : std::runtime_error(what), bit_index(bit_index) {}
};

struct ExactDivResult {
    DigitSequence quotient;
    StepTrace trace;
};

// Low-to-high units recovery: peel the units sequence of q*b off the
// dividend bit by bit (difference of bit product and back carry, borrowing
// where needed), then read the quotient by reverse counting. Only odd
// divisors coprime to 10 admit this route; the counting map of an even
// divisor or 5 sends different multiples to the same point.
ExactDivResult div_exact_low_to_high(const DigitSequence& p, int b);

struct GeneralDivResult {
    DigitSequence quotient;
    int remainder = 0;
    StepTrace trace;
};

// High-to-low divisor-oriented counting: at each position pick the
// quotient point whose backward-step count matches the temporary
// remainder, as far along as the next dividend digit allows, falling back
// to one fewer backward step plus ten when required. Works for any digit
// divisor 1..9 and any nonnegative dividend.
GeneralDivResult div_general(const DigitSequence& p, int b);

} // namespace ninepalace
