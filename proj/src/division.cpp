#include "ninepalace/division.hpp"

#include <array>

#include "ninepalace/multiplication.hpp"

namespace ninepalace {

namespace {

// Inverse of the counting map d -> units(d*b) for b coprime to 10.
std::array<int, 10> inverse_counting_map(int b) {
    std::array<int, 10> inv{};
    for (int d = 0; d <= 9; ++d) inv[(d * b) % 10] = d;
    return inv;
}

void check_dividend(const DigitSequence& p, const char* what) {
    if (p.sign < 0) throw std::invalid_argument(std::string(what) + ": dividend must be nonnegative");
}

int frame_of_corner(int b) {
    for (int j = 0; j < 4; ++j)
        if (rotate(1, j) == b) return j;
    return 0;
}

} // namespace

ExactDivResult div_exact_low_to_high(const DigitSequence& p, int b) {
    check_dividend(p, "div_exact_low_to_high");
    if (b != 1 && b != 3 && b != 7 && b != 9)
        throw std::invalid_argument(
            "div_exact_low_to_high: divisor must be 1, 3, 7 or 9 (counting toward a midpoint or "
            "the center repeats points)");

    ExactDivResult out;
    const auto inv = inverse_counting_map(b);

    // Padded bit products p_0..p_n, p_0 = 0; entries may dip below zero
    // while borrows cascade.
    std::vector<int> bits;
    bits.push_back(0);
    for (auto d : p.canonical().digits) bits.push_back(d);
    const int n = static_cast<int>(bits.size()) - 1;

    for (const auto d : p.canonical().digits) {
        TraceStep s = make_step("mark", {0, d}, {0, d});
        s.events.push_back({"annotation", "dividend digit " + std::to_string(d)});
        out.trace.append(std::move(s));
    }

    std::vector<std::uint8_t> units(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::uint8_t> quotient(static_cast<std::size_t>(n), 0);
    int back_carry = 0; // J_{i+1} while handling bit i
    for (int i = n; i >= 1; --i) {
        int g = bits[i] - back_carry;
        bool borrowed = false;
        if (g < 0) {
            g += 10;
            bits[i - 1] -= 1;
            borrowed = true;
        }
        int q = inv[g];
        int j = (q * b) / 10;
        TraceStep s = make_step("recover", {0, bits[i] < 0 ? bits[i] + 10 : bits[i]}, {0, g});
        s.events.push_back({"annotation",
                            "bit " + std::to_string(i) + ": units " + std::to_string(g) +
                                " = bit product - back carry " + std::to_string(back_carry) +
                                (borrowed ? " (borrow 1)" : "") + ", counts to " +
                                std::to_string(q) + ", carry " + std::to_string(j)});
        out.trace.append(std::move(s));
        units[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(g);
        quotient[static_cast<std::size_t>(i) - 1] = static_cast<std::uint8_t>(q);
        back_carry = j;
    }
    if (bits[0] - back_carry != 0)
        throw NotDivisibleError("not divisible by " + std::to_string(b) +
                                    ": leading units digit is " +
                                    std::to_string(bits[0] - back_carry) + ", not 0",
                                0);

    DigitSequence raw = DigitSequence::from_digits(std::move(quotient));
    TraceStep readout = make_step("mark", {0, raw.digit(0)}, {0, raw.digit(0)});
    readout.events.push_back({"annotation", "read units sequence facing " +
                                                Orientation{frame_of_corner(b)}.facing_name() +
                                                ": quotient " + raw.str()});
    out.trace.append(std::move(readout));
    out.quotient = raw.canonical();
    return out;
}

GeneralDivResult div_general(const DigitSequence& p, int b) {
    check_dividend(p, "div_general");
    if (b < 1 || b > 9) throw std::invalid_argument("div_general: divisor must be a digit 1..9");

    GeneralDivResult out;
    DigitSequence dividend = p.canonical();

    // Step (1): a leading digit not below the divisor needs a zero prefix.
    std::vector<int> digits;
    if (dividend.digit(0) >= b) digits.push_back(0);
    for (auto d : dividend.digits) digits.push_back(d);

    std::vector<std::uint8_t> quotient;
    int x = digits[0]; // temporary remainder
    for (std::size_t i = 1; i < digits.size(); ++i) {
        int y = digits[i];
        int q = (10 * x + y) / b;
        int back_steps = (q * b) / 10;
        int point = (q * b) % 10;
        bool plus_ten = back_steps != x; // step (3): one fewer backward step
        int temp = plus_ten ? y - point + 10 : y - point;

        TraceStep s = make_step("quotient", {0, x}, {0, q});
        s.events.push_back(
            {"annotation", "X=" + std::to_string(x) + " Y=" + std::to_string(y) +
                               ": quotient point " + std::to_string(point) + " after " +
                               std::to_string(back_steps) + " backward steps" +
                               (plus_ten ? ", +10" : "") + ", temporary remainder " +
                               std::to_string(temp)});
        out.trace.append(std::move(s));
        quotient.push_back(static_cast<std::uint8_t>(q));
        x = temp;
    }
    out.remainder = x;

    DigitSequence raw = DigitSequence::from_digits(std::move(quotient));
    TraceStep readout = make_step("mark", {0, raw.digit(0)}, {0, raw.digit(0)});
    readout.events.push_back({"annotation", "divisor-oriented read-out: quotient " + raw.str() +
                                                ", remainder " + std::to_string(x)});
    out.trace.append(std::move(readout));
    out.quotient = raw.canonical();
    return out;
}

} // namespace ninepalace
