#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ninepalace/grid.hpp"
#include "ninepalace/sequence.hpp"
#include "ninepalace/trace.hpp"

namespace ninepalace {

struct SignedDigit {
    int magnitude = 0; // 0..9
    int sign = 1;      // +1 / -1

    long long value() const { return sign * static_cast<long long>(magnitude); }
    bool operator==(const SignedDigit&) const = default;
};

enum class StepDirection { Forward, Backward, Stay };

// One addition/subtraction move on the grid. A backward step under + is a
// carry, a backward step under - (position going up) is a borrow;
// family_delta is +1 exactly on carry and -1 exactly on borrow.
struct StepRecord {
    GridNumber start;
    SignedDigit delta;
    GridNumber end;
    StepDirection direction = StepDirection::Stay;
    int family_delta = 0;
    std::string annotation;
};

std::pair<GridNumber, StepRecord> step_add(GridNumber state, SignedDigit d);

TraceStep to_trace_step(const StepRecord& r, std::string kind = "walk");

struct WalkResult {
    GridNumber end;
    std::vector<StepRecord> records;
    StepTrace trace;
};

/// Successive addition and subtraction: walks the grid one signed digit at
/// a time, marking the running family as in the worked diagrams.
WalkResult eval_walk(long long start, std::span<const SignedDigit> deltas);

struct RotationAdd {
    int units = 0;
    bool carried = false;
    Orientation reframe; // frame in which the addend reads as 1 or 2
};

// Single-digit addition by the reframing rule: adding a corner is adding 1
// in the frame where that corner reads 1; adding a midpoint is adding 2 in
// the frame facing it; 0 and 5 use the identity frame.
RotationAdd add_by_rotation(int a, int b);

struct RotationSum {
    long long total = 0;
    int carries = 0; // number of backward steps in the running sum
    StepTrace trace;
};

RotationSum sum_by_rotation(std::span<const int> values);

struct SymmetrizedSum {
    long long total = 0;
    int center_x2 = 0; // twice the symmetry center, so 6.5 is representable
    std::vector<SignedDigit> corrections;
    StepTrace trace;
};

// Summation by symmetrizing the dot lattice: moves as few points as
// possible to the center cell so that the remaining lattice is mirror
// symmetric, then total = n * center + sum of the correction arrows.
SymmetrizedSum symmetrized_sum(std::span<const int> values);

struct PatternResult {
    std::string pattern_name;
    int units = 0;
    int carry = 0;
};

// Fast-path lookup over the fixed dot-matrix patterns (opposite pairs,
// corner/midpoint chains, edge triples, permutation triples and sextets,
// the 1234-type quadruples, the border octet). Digits must be 1..9.
std::optional<PatternResult> match_dot_pattern(std::span<const int> values);

// Digit-serial sums of long numbers, one column walk per digit; these are
// the "sum of the two sequences" steps the multiplication engine reads off
// the primitive diagram. add_sequences takes nonnegative inputs;
// sub_sequences requires |a| >= |b|.
struct SequenceSum {
    DigitSequence result;
    StepTrace trace;
};

SequenceSum add_sequences(const DigitSequence& a, const DigitSequence& b);
SequenceSum sub_sequences(const DigitSequence& a, const DigitSequence& b);

} // namespace ninepalace
