#include "ninepalace/barycenter.hpp"

#include <numeric>
#include <stdexcept>

namespace ninepalace {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(num * o.den, den * o.num);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

WeightedDigits WeightedDigits::of(std::span<const int> digits) {
    WeightedDigits w;
    for (int d : digits) w.add(d);
    return w;
}

std::uint64_t WeightedDigits::count() const {
    return std::accumulate(freq.begin(), freq.end(), std::uint64_t{0});
}

void WeightedDigits::add(int digit, std::uint64_t times) {
    if (digit < 0 || digit > 9) throw std::invalid_argument("WeightedDigits: digit out of 0..9");
    freq[static_cast<std::size_t>(digit)] += times;
}

int digit_col(int d) { return d == 0 ? -1 : (d - 1) % 3; }
int digit_row(int d) { return d == 0 ? 0 : (d - 1) / 3; }

Rational RefinedBarycenter::mean_value() const {
    return Rational(1) + mean_col + Rational(3) * mean_row;
}

RefinedBarycenter barycenter(const WeightedDigits& w) {
    const long long n = static_cast<long long>(w.count());
    if (n == 0) throw std::invalid_argument("barycenter: empty multiset");
    long long col_sum = 0, row_sum = 0;
    for (int d = 0; d <= 9; ++d) {
        const long long f = static_cast<long long>(w.freq[static_cast<std::size_t>(d)]);
        col_sum += f * digit_col(d);
        row_sum += f * digit_row(d);
    }
    return {Rational(col_sum, n), Rational(row_sum, n), static_cast<std::uint64_t>(n)};
}

long long sum_by_barycenter(const WeightedDigits& w) {
    RefinedBarycenter c = barycenter(w);
    Rational total = Rational(static_cast<long long>(c.count)) * c.mean_value();
    if (!total.is_integer()) throw std::logic_error("sum_by_barycenter: non-integer total");
    return total.num;
}

long long sum_of_products(std::span<const std::pair<int, int>> pairs) {
    WeightedDigits w;
    for (auto [a, b] : pairs) {
        if (a < 0 || a > 9 || b < 0 || b > 9)
            throw std::invalid_argument("sum_of_products: digit out of 0..9");
        w.add(b, static_cast<std::uint64_t>(a));
    }
    if (w.count() == 0) return 0;
    return sum_by_barycenter(w);
}

Rational refine_value(long long col_steps, long long row_steps, long long n, int anchor) {
    if (n < 1) throw std::invalid_argument("refine_value: refinement must be positive");
    if (anchor < 0 || anchor > 9) throw std::invalid_argument("refine_value: anchor out of 0..9");
    return Rational(anchor) + Rational(col_steps, n) + Rational(3) * Rational(row_steps, n);
}

StepTrace barycenter_trace(const WeightedDigits& w) {
    StepTrace t;
    const auto& f = w.freq;
    auto col_count = [&](int c) {
        std::uint64_t s = 0;
        for (int d = 1; d <= 9; ++d)
            if (digit_col(d) == c) s += f[static_cast<std::size_t>(d)];
        return s;
    };
    auto row_count = [&](int r) {
        std::uint64_t s = 0;
        for (int d = 1; d <= 9; ++d)
            if (digit_row(d) == r) s += f[static_cast<std::size_t>(d)];
        return s;
    };
    for (int d = 0; d <= 9; ++d) {
        if (f[static_cast<std::size_t>(d)] == 0) continue;
        TraceStep s = make_step("mark", {0, d}, {0, d});
        s.events.push_back(
            {"annotation", std::to_string(f[static_cast<std::size_t>(d)]) + " x point " +
                               std::to_string(d)});
        t.append(std::move(s));
    }
    RefinedBarycenter c = barycenter(w);
    TraceStep cols = make_step("mark", {0, 4}, {0, 4});
    cols.events.push_back({"annotation", "columns left/middle/right: " +
                                             std::to_string(col_count(0)) + "/" +
                                             std::to_string(col_count(1)) + "/" +
                                             std::to_string(col_count(2)) +
                                             ", horizontal center " + c.mean_col.str()});
    t.append(std::move(cols));
    TraceStep rows = make_step("mark", {0, 2}, {0, 2});
    rows.events.push_back({"annotation", "rows up/middle/down: " + std::to_string(row_count(0)) +
                                             "/" + std::to_string(row_count(1)) + "/" +
                                             std::to_string(row_count(2)) + ", vertical center " +
                                             c.mean_row.str()});
    t.append(std::move(rows));
    TraceStep mean = make_step("mark", {0, 5}, {0, 5});
    mean.events.push_back({"annotation", "center of mass reads " + c.mean_value().str() + ", " +
                                             std::to_string(c.count) + " points"});
    t.append(std::move(mean));
    return t;
}

} // namespace ninepalace
