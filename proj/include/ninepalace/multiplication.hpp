#pragma once

#include <array>
#include <string>

#include "ninepalace/sequence.hpp"
#include "ninepalace/trace.hpp"

namespace ninepalace {

// The simplified carry diagram of a multiplier: the units values visited
// while counting k = 1..9 that fall below the multiplier, with the visit
// multiplicity. Total multiplicity is always multiplier - 1.
struct CarryDiagram {
    int multiplier = 0;
    std::array<int, 10> carry_points{}; // multiplicity per units value

    int total() const;
};

/// Units digit of k*b, realized by counting in the orientation of b.
int units_of_multiple(int b, int k);

/// Carry digit of k*b: the number of carry points met while counting to k.
int carry_of_multiple(int b, int k);

CarryDiagram carry_diagram(int b);

// True iff counting step k of multiplier b lands on a carry point,
// i.e. (k*b) mod 10 < b.
bool is_carry_step(int b, int k);

// The counting path for k*b: one step per count 1..k through the units
// values, marking every carry point met along the way.
StepTrace counting_trace(int b, int k);

// Padded digit-serial factor sequences of a nonnegative multiplicand a and
// digit multiplier b: units_sequence = 0,g_1..g_n with g_i = (a_i*b) mod 10,
// carry_sequence = J_1..J_n,0 with J_i = floor(a_i*b/10). Their sum is a*b.
DigitSequence units_sequence(const DigitSequence& a, int b);
DigitSequence carry_sequence(const DigitSequence& a, int b);

struct MulResult {
    DigitSequence product;
    StepTrace trace; // counted units sequence, carry sequence, sum walk
};

/// Long-by-digit product via the counting method: read both sequences off
/// the grid, then sum them with ordinary column walks (which also resolves
/// the secondary carries).
MulResult mul_long_by_digit(const DigitSequence& a, int b);

} // namespace ninepalace
