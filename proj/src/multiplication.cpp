#include "ninepalace/multiplication.hpp"

#include <numeric>
#include <stdexcept>

#include "ninepalace/addition.hpp"
#include "ninepalace/grid.hpp"

namespace ninepalace {

namespace {

void check_digit(int d, const char* what) {
    if (d < 0 || d > 9) throw std::invalid_argument(std::string(what) + ": digit out of 0..9");
}

Orientation counting_frame(int b) {
    int base = is_corner(b) ? 1 : is_midpoint(b) ? 2 : 0;
    if (base != 0)
        for (int j = 0; j < 4; ++j)
            if (rotate(base, j) == b) return Orientation{j};
    return Orientation{0};
}

// Annotation for the kth count of multiplier b: the counting frame for a
// corner, the slanted midpoint square with its lap for a midpoint.
void annotate_count(TraceStep& s, int b, int k) {
    if (k == 0) return;
    if (is_corner(b)) {
        s.events.push_back({"annotation", "count " + std::to_string(k) + " facing " +
                                              counting_frame(b).facing_name()});
    } else if (is_midpoint(b)) {
        if (k == 5)
            s.events.push_back({"annotation", "count 5 lands on zero"});
        else
            s.events.push_back({"lap", k < 5 ? "1" : "2"});
    } else if (b == 5) {
        s.events.push_back({"annotation",
                            is_midpoint(k) ? "even count returns to zero" : "odd count reads 5"});
    }
}

} // namespace

int CarryDiagram::total() const {
    return std::accumulate(carry_points.begin(), carry_points.end(), 0);
}

int units_of_multiple(int b, int k) {
    check_digit(b, "units_of_multiple");
    check_digit(k, "units_of_multiple");
    return (k * b) % 10;
}

int carry_of_multiple(int b, int k) {
    check_digit(b, "carry_of_multiple");
    check_digit(k, "carry_of_multiple");
    return (k * b) / 10;
}

bool is_carry_step(int b, int k) { return (k * b) % 10 < b; }

CarryDiagram carry_diagram(int b) {
    if (b < 1 || b > 9) throw std::invalid_argument("carry_diagram: multiplier out of 1..9");
    CarryDiagram d;
    d.multiplier = b;
    for (int k = 1; k <= 9; ++k)
        if (is_carry_step(b, k)) ++d.carry_points[units_of_multiple(b, k)];
    return d;
}

StepTrace counting_trace(int b, int k) {
    check_digit(b, "counting_trace");
    check_digit(k, "counting_trace");
    StepTrace t;
    int met = 0;
    for (int j = 1; j <= k; ++j) {
        TraceStep s = make_step("count", {0, units_of_multiple(b, j - 1)},
                                {0, units_of_multiple(b, j)});
        annotate_count(s, b, j);
        if (is_carry_step(b, j)) {
            ++met;
            s.events.push_back({"annotation", "carry point, " + std::to_string(met) + " met"});
        }
        t.append(std::move(s));
    }
    return t;
}

DigitSequence units_sequence(const DigitSequence& a, int b) {
    if (b < 1 || b > 9) throw std::invalid_argument("units_sequence: multiplier out of 1..9");
    if (a.sign < 0) throw std::invalid_argument("units_sequence: multiplicand must be nonnegative");
    std::vector<std::uint8_t> digits;
    digits.push_back(0);
    for (auto d : a.digits) digits.push_back(static_cast<std::uint8_t>(units_of_multiple(b, d)));
    return DigitSequence::from_digits(std::move(digits));
}

DigitSequence carry_sequence(const DigitSequence& a, int b) {
    if (b < 1 || b > 9) throw std::invalid_argument("carry_sequence: multiplier out of 1..9");
    if (a.sign < 0) throw std::invalid_argument("carry_sequence: multiplicand must be nonnegative");
    std::vector<std::uint8_t> digits;
    for (auto d : a.digits) digits.push_back(static_cast<std::uint8_t>(carry_of_multiple(b, d)));
    digits.push_back(0);
    return DigitSequence::from_digits(std::move(digits));
}

MulResult mul_long_by_digit(const DigitSequence& a, int b) {
    check_digit(b, "mul_long_by_digit");
    if (a.sign < 0)
        throw std::invalid_argument("mul_long_by_digit: multiplicand must be nonnegative");
    MulResult out;
    if (b == 0 || a.is_zero()) {
        out.product = DigitSequence::from_value(0);
        TraceStep s = make_step("units", {0, 0}, {0, 0});
        s.events.push_back({"annotation", "product is zero"});
        out.trace.append(std::move(s));
        return out;
    }

    DigitSequence units = units_sequence(a, b);
    DigitSequence carries = carry_sequence(a, b);

    // For a one-digit multiplicand show the whole counting path with its
    // carry points; for long numbers that inner story is per digit.
    if (a.canonical().size() == 1) out.trace.append(counting_trace(b, a.canonical().digit(0)));

    // Units sequence read off by counting: one arrow per multiplicand digit.
    CellRef prev{0, units.digit(0)};
    for (std::size_t i = 1; i < units.size(); ++i) {
        CellRef cur{0, units.digit(i)};
        TraceStep s = make_step("units", prev, cur);
        annotate_count(s, b, a.digit(i - 1));
        out.trace.append(std::move(s));
        prev = cur;
    }
    // Carry sequence: cumulative backward steps at each count.
    prev = {0, carries.digit(0)};
    for (std::size_t i = 1; i < carries.size(); ++i) {
        CellRef cur{0, carries.digit(i)};
        TraceStep s = make_step("carries", prev, cur);
        if (i < carries.size() - 1)
            s.events.push_back({"annotation", "carry of " + std::to_string(a.digit(i)) + "*" +
                                                  std::to_string(b)});
        out.trace.append(std::move(s));
        prev = cur;
    }

    SequenceSum sum = add_sequences(units, carries);
    for (TraceStep s : sum.trace.steps) {
        s.kind = "sum";
        out.trace.append(std::move(s));
    }
    out.product = sum.result.canonical();
    return out;
}

} // namespace ninepalace
