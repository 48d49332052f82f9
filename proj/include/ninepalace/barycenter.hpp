#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include "ninepalace/trace.hpp"

namespace ninepalace {

// Minimal exact rational on int64, always normalized with positive
// denominator. The magnitudes here stay tiny (digit sums over counted
// multisets), so no wide arithmetic is needed.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool is_integer() const { return den == 1; }
    std::string str() const;

    bool operator==(const Rational&) const = default;
};

// A digit multiset as multiplicities, the frequency-table form used for
// mass-point summation.
struct WeightedDigits {
    std::array<std::uint64_t, 10> freq{};

    static WeightedDigits of(std::span<const int> digits);

    std::uint64_t count() const;
    void add(int digit, std::uint64_t times = 1);
};

// Grid coordinates of a digit as a mass point; 0 sits one column left of 1
// so that value = 1 + col + 3*row holds for all of 0..9.
int digit_col(int d);
int digit_row(int d);

struct RefinedBarycenter {
    Rational mean_col;
    Rational mean_row;
    std::uint64_t count = 0;

    Rational mean_value() const; // 1 + mean_col + 3*mean_row
};

/// Exact center of mass of a digit multiset, split into the horizontal and
/// vertical components.
RefinedBarycenter barycenter(const WeightedDigits& w);

/// count * mean value; always the exact integer sum of the multiset.
long long sum_by_barycenter(const WeightedDigits& w);

/// Sum of products a*b by placing a copies of the point b.
long long sum_of_products(std::span<const std::pair<int, int>> pairs);

// Value of a point of the n-refined grid: each small step right adds 1/n,
// each small step down adds 3/n.
Rational refine_value(long long col_steps, long long row_steps, long long n, int anchor);

// Concentration narrative (column counts, row counts, center of mass) as
// annotation-only trace steps.
StepTrace barycenter_trace(const WeightedDigits& w);

} // namespace ninepalace
