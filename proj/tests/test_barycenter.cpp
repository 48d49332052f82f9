#include <doctest.h>

#include <stdexcept>

#include <random>

#include "ninepalace/barycenter.hpp"

using namespace ninepalace;

TEST_CASE("rational basics") {
    CHECK(Rational(4, 10) == Rational(2, 5));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(3) * Rational(3, 10) == Rational(9, 10));
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(6, 3).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("centers of mass") {
    std::vector<int> ten{1, 4, 4, 7, 7, 7, 2, 5, 8, 8};
    RefinedBarycenter c = barycenter(WeightedDigits::of(ten));
    CHECK(c.mean_col == Rational(4, 10));
    CHECK(c.mean_row == Rational(13, 10));
    CHECK(c.mean_value() == Rational(53, 10));
    CHECK(c.count == 10);

    std::vector<int> fives{5, 5};
    RefinedBarycenter m = barycenter(WeightedDigits::of(fives));
    CHECK(m.mean_col == Rational(1));
    CHECK(m.mean_row == Rational(1));

    std::vector<int> two{6, 7};
    CHECK(barycenter(WeightedDigits::of(two)).mean_value() == Rational(13, 2));

    CHECK_THROWS_AS(barycenter(WeightedDigits{}), std::invalid_argument);
}

TEST_CASE("sums by barycenter") {
    std::vector<int> two{6, 7};
    CHECK(sum_by_barycenter(WeightedDigits::of(two)) == 13);
    std::vector<int> four{4, 7, 8, 9};
    CHECK(sum_by_barycenter(WeightedDigits::of(four)) == 28);
    std::vector<int> ten{1, 4, 4, 7, 7, 7, 2, 5, 8, 8};
    CHECK(sum_by_barycenter(WeightedDigits::of(ten)) == 53);

    // digit 0 carries no mass but is still counted
    std::vector<int> zeros{0, 0, 7};
    CHECK(sum_by_barycenter(WeightedDigits::of(zeros)) == 7);
}

TEST_CASE("sums of products") {
    std::vector<std::pair<int, int>> pairs{{2, 6}, {4, 9}, {3, 8}, {4, 3}, {7, 5}};
    CHECK(sum_of_products(pairs) == 119);

    for (int d = 0; d <= 9; ++d) {
        std::vector<std::pair<int, int>> single{{1, d}};
        CHECK(sum_of_products(single) == d);
    }
    std::vector<std::pair<int, int>> threes{{3, 3}, {3, 7}};
    CHECK(sum_of_products(threes) == 30);

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> len(1, 20), digit(0, 9);
    for (int i = 0; i < 2000; ++i) {
        std::vector<std::pair<int, int>> ps(static_cast<std::size_t>(len(rng)));
        long long expected = 0;
        for (auto& p : ps) {
            p = {digit(rng), digit(rng)};
            expected += static_cast<long long>(p.first) * p.second;
        }
        CHECK(sum_of_products(ps) == expected);
    }
}

TEST_CASE("refined grid values") {
    CHECK(refine_value(1, 0, 3, 3) == Rational(10, 3)); // 3 + 1/3
    for (int d = 0; d <= 9; ++d) CHECK(refine_value(0, 0, 4, d) == Rational(d));
    CHECK(refine_value(2, 1, 4, 1) == Rational(9, 4)); // 1 + 2/4 + 3/4
    CHECK(refine_value(-1, -1, 4, 8) == Rational(7));  // the four-point example's center
    CHECK_THROWS_AS(refine_value(1, 1, 0, 3), std::invalid_argument);

    // one cell right equals n small steps, one row down equals 3
    for (int n = 1; n <= 6; ++n)
        for (int d : {1, 2, 4, 5})
            CHECK(refine_value(n, n, n, d) == Rational(d + 4));
}

TEST_CASE("every multiset of up to three digits sums exactly") {
    for (int a = 0; a <= 9; ++a) {
        std::vector<int> one{a};
        CHECK(sum_by_barycenter(WeightedDigits::of(one)) == a);
        for (int b = 0; b <= 9; ++b) {
            std::vector<int> two{a, b};
            CHECK(sum_by_barycenter(WeightedDigits::of(two)) == a + b);
            for (int c = 0; c <= 9; ++c) {
                std::vector<int> three{a, b, c};
                CHECK(sum_by_barycenter(WeightedDigits::of(three)) == a + b + c);
            }
        }
    }
}

TEST_CASE("mean decomposition identity") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> len(1, 10), digit(0, 9);
    for (int i = 0; i < 5000; ++i) {
        std::vector<int> values(static_cast<std::size_t>(len(rng)));
        long long sum = 0;
        for (auto& v : values) sum += (v = digit(rng));
        WeightedDigits w = WeightedDigits::of(values);
        RefinedBarycenter c = barycenter(w);
        CHECK(c.mean_value() == Rational(1) + c.mean_col + Rational(3) * c.mean_row);
        CHECK(sum_by_barycenter(w) == sum);
    }
}

TEST_CASE("advance-retreat rewrites preserve the barycenter") {
    // 7,7,8,9,9,9,9,9 concentrates to 8,8,8,8,8,9,9,9: same mass moments
    WeightedDigits a;
    a.add(7, 2);
    a.add(8, 1);
    a.add(9, 5);
    WeightedDigits b;
    b.add(8, 5);
    b.add(9, 3);
    RefinedBarycenter ca = barycenter(a), cb = barycenter(b);
    CHECK(ca.mean_col == cb.mean_col);
    CHECK(ca.mean_row == cb.mean_row);
    CHECK(ca.mean_col == Rational(1) + Rational(3, 8)); // point 8 moved 3/8 rightwards
    CHECK(sum_by_barycenter(a) == sum_by_barycenter(b));

    // three 7s and five 8s balance at the point 8 moved 3/8 leftwards
    WeightedDigits c;
    c.add(7, 3);
    c.add(8, 5);
    CHECK(barycenter(c).mean_col == Rational(1) - Rational(3, 8));
}

TEST_CASE("concentration narrative trace") {
    std::vector<int> ten{1, 4, 4, 7, 7, 7, 2, 5, 8, 8};
    StepTrace t = barycenter_trace(WeightedDigits::of(ten));
    CHECK(replay(t));
    bool saw_columns = false, saw_rows = false;
    for (const TraceStep& s : t.steps)
        for (const TraceEvent& e : s.events) {
            if (e.text.find("columns left/middle/right: 6/4/0") != std::string::npos)
                saw_columns = true;
            if (e.text.find("rows up/middle/down: 2/3/5") != std::string::npos) saw_rows = true;
        }
    CHECK(saw_columns);
    CHECK(saw_rows);
}
