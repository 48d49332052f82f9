#include "ninepalace/sequence.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace ninepalace {

DigitSequence DigitSequence::from_value(long long v) {
    DigitSequence s;
    s.sign = v < 0 ? -1 : 1;
    unsigned long long mag = v < 0 ? -static_cast<unsigned long long>(v)
                                   : static_cast<unsigned long long>(v);
    std::vector<std::uint8_t> rev;
    do {
        rev.push_back(static_cast<std::uint8_t>(mag % 10));
        mag /= 10;
    } while (mag != 0);
    s.digits.assign(rev.rbegin(), rev.rend());
    return s;
}

DigitSequence DigitSequence::parse(std::string_view text) {
    DigitSequence s;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        s.sign = text[i] == '-' ? -1 : 1;
        ++i;
    }
    if (i == text.size()) throw std::invalid_argument("DigitSequence: empty number");
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("DigitSequence: not a digit");
        s.digits.push_back(static_cast<std::uint8_t>(text[i] - '0'));
    }
    s = s.canonical();
    return s;
}

DigitSequence DigitSequence::from_digits(std::vector<std::uint8_t> digits, int sign) {
    DigitSequence s;
    s.sign = sign;
    s.digits = std::move(digits);
    if (s.digits.empty()) s.digits.push_back(0);
    return s;
}

bool DigitSequence::is_zero() const {
    for (auto d : digits)
        if (d != 0) return false;
    return true;
}

bool DigitSequence::is_canonical() const {
    if (digits.empty()) return false;
    if (digits.size() > 1 && digits.front() == 0) return false;
    if (is_zero() && sign < 0) return false;
    return true;
}

DigitSequence DigitSequence::canonical() const {
    DigitSequence s = *this;
    std::size_t first = 0;
    while (first + 1 < s.digits.size() && s.digits[first] == 0) ++first;
    s.digits.erase(s.digits.begin(), s.digits.begin() + static_cast<long>(first));
    if (s.digits.empty()) s.digits.push_back(0);
    if (s.is_zero()) s.sign = 1;
    return s;
}

long long DigitSequence::value() const {
    constexpr long long limit = std::numeric_limits<long long>::max();
    long long mag = 0;
    for (auto d : digits) {
        if (mag > (limit - d) / 10) throw std::overflow_error("DigitSequence: value too large");
        mag = mag * 10 + d;
    }
    return sign < 0 ? -mag : mag;
}

std::string DigitSequence::str() const {
    std::string out;
    if (sign < 0 && !is_zero()) out.push_back('-');
    for (auto d : digits) out.push_back(static_cast<char>('0' + d));
    return out;
}

int compare_magnitude(const DigitSequence& a, const DigitSequence& b) {
    const auto ca = a.canonical(), cb = b.canonical();
    if (ca.digits.size() != cb.digits.size())
        return ca.digits.size() < cb.digits.size() ? -1 : 1;
    for (std::size_t i = 0; i < ca.digits.size(); ++i)
        if (ca.digits[i] != cb.digits[i]) return ca.digits[i] < cb.digits[i] ? -1 : 1;
    return 0;
}

} // namespace ninepalace
