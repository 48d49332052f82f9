#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ninepalace/sequence.hpp"
#include "ninepalace/trace.hpp"

namespace ninepalace {

// Malformed expression; position is the byte offset of the offending
// character.
struct ParseError : std::runtime_error {
    std::size_t position;

    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position(position) {}
};

// Computation failure inside a well-formed expression (only inexact
// division can occur).
struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EvalOutcome {
    DigitSequence value; // signed
    StepTrace trace;
};

// Evaluates integers joined by + - and the multiplicative ops (ASCII * /
// accepted as aliases), left associative, multiplicative over additive.
// Everything runs through the grid engines: digit walks for sums, the
// counting method for products and quotients. Division inside an
// expression must be exact.
EvalOutcome eval_expression(std::string_view expr);

// Long-by-long product by repeated long-by-digit rows; the composition the
// CLI offers on top of the single-digit engine.
DigitSequence mul_compose(const DigitSequence& a, const DigitSequence& b);

} // namespace ninepalace
