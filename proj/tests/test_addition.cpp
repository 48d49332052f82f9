#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <random>

#include "ninepalace/addition.hpp"

using namespace ninepalace;

namespace {

std::vector<SignedDigit> deltas_of(std::initializer_list<int> values) {
    std::vector<SignedDigit> ds;
    for (int v : values) ds.push_back({v < 0 ? -v : v, v < 0 ? -1 : 1});
    return ds;
}

} // namespace

TEST_CASE("single steps") {
    auto [end1, rec1] = step_add(GridNumber{0, 7}, SignedDigit{1, 1});
    CHECK(end1 == GridNumber{0, 8});
    CHECK(rec1.direction == StepDirection::Forward);
    CHECK(rec1.family_delta == 0);

    auto [end2, rec2] = step_add(GridNumber{0, 3}, SignedDigit{1, 1});
    CHECK(end2 == GridNumber{0, 4});
    CHECK(rec2.direction == StepDirection::Forward);

    auto [end3, rec3] = step_add(GridNumber{0, 8}, SignedDigit{9, 1});
    CHECK(end3 == GridNumber{1, 7});
    CHECK(rec3.direction == StepDirection::Backward);
    CHECK(rec3.family_delta == 1);

    auto [end4, rec4] = step_add(GridNumber{0, 1}, SignedDigit{2, -1});
    CHECK(end4 == GridNumber{-1, 9});
    CHECK(rec4.direction == StepDirection::Backward);
    CHECK(rec4.family_delta == -1);

    auto [end5, rec5] = step_add(GridNumber{0, 5}, SignedDigit{0, 1});
    CHECK(end5 == GridNumber{0, 5});
    CHECK(rec5.direction == StepDirection::Stay);
}

TEST_CASE("triangle rule: two steps end where one combined step ends") {
    for (int a = 0; a <= 9; ++a)
        for (int m = -9; m <= 9; ++m)
            for (int n = -9; n <= 9; ++n) {
                SignedDigit dm{m < 0 ? -m : m, m < 0 ? -1 : 1};
                SignedDigit dn{n < 0 ? -n : n, n < 0 ? -1 : 1};
                GridNumber start{0, a};
                auto [mid, r1] = step_add(start, dm);
                auto [end, r2] = step_add(mid, dn);
                CHECK(end.value() == a + m + n);
            }
}

TEST_CASE("complement equivalence: carry then subtract the complement") {
    for (long long a = -30; a <= 30; ++a)
        for (int d = 1; d <= 9; ++d) {
            auto direct = step_add(GridNumber::of_value(a), SignedDigit{d, 1});
            auto via = step_add(GridNumber::of_value(a + 10), SignedDigit{complement(d), -1});
            CHECK(direct.first.value() == via.first.value());
        }
}

TEST_CASE("the mixed walk example") {
    WalkResult w = eval_walk(0, deltas_of({1, -2, -9, -8, -7, -6, 8, -3, 5, -6}));
    CHECK(w.end == GridNumber{-3, 3});
    CHECK(w.end.value() == -27);

    // positions and running family marks along the walk
    const int positions[] = {1, 9, 0, 2, 5, 9, 7, 4, 9, 3};
    const long long families[] = {0, -1, -1, -2, -3, -4, -3, -3, -3, -3};
    REQUIRE(w.records.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(w.records[i].end.position == positions[i]);
        CHECK(w.records[i].end.family == families[i]);
    }
    CHECK(replay(w.trace));
}

TEST_CASE("walk edge cases") {
    CHECK(eval_walk(0, {}).end == GridNumber{0, 0});
    WalkResult w = eval_walk(0, deltas_of({9, 9, 9}));
    CHECK(w.end == GridNumber{2, 7});

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> len(0, 40), digit(0, 9), sign(0, 1);
    std::uniform_int_distribution<long long> start(-100000, 100000);
    for (int i = 0; i < 2000; ++i) {
        std::vector<SignedDigit> ds(static_cast<std::size_t>(len(rng)));
        long long expected = start(rng);
        long long s0 = expected;
        for (auto& d : ds) {
            d = {digit(rng), sign(rng) ? 1 : -1};
            expected += d.value();
        }
        CHECK(eval_walk(s0, ds).end.value() == expected);
    }
}

TEST_CASE("adding by rotation") {
    RotationAdd r = add_by_rotation(6, 3);
    CHECK(r.units == 9);
    CHECK_FALSE(r.carried);
    CHECK(r.reframe == Orientation{1}); // facing right

    for (int a = 0; a <= 9; ++a) {
        RotationAdd zero = add_by_rotation(a, 0);
        CHECK(zero.units == a);
        CHECK_FALSE(zero.carried);
        CHECK(zero.reframe == Orientation{0});
    }

    RotationAdd c = add_by_rotation(8, 9);
    CHECK(c.units == 7);
    CHECK(c.carried);

    // the reframe really reads the addend as 1 (corner) or 2 (midpoint)
    for (int b = 0; b <= 9; ++b) {
        RotationAdd x = add_by_rotation(0, b);
        if (is_corner(b)) CHECK(x.reframe.apply(1) == b);
        if (is_midpoint(b)) CHECK(x.reframe.apply(2) == b);
    }
}

TEST_CASE("rotation sums count backward steps") {
    std::vector<int> vals{5, 3, 9, 4, 8};
    RotationSum r = sum_by_rotation(vals);
    CHECK(r.total == 29);
    CHECK(r.carries == 2);

    std::vector<int> one{5};
    CHECK(sum_by_rotation(one).total == 5);
    CHECK(sum_by_rotation(one).carries == 0);

    std::vector<int> nines{9, 9, 9, 9};
    RotationSum n = sum_by_rotation(nines);
    CHECK(n.total == 36);
    CHECK(n.carries == 3);

    // 3+6 forward, +7 backward, +8 backward, +2 forward: carry 2
    std::vector<int> mixed{3, 6, 7, 8, 2};
    RotationSum m = sum_by_rotation(mixed);
    CHECK(m.total == 26);
    CHECK(m.carries == 2);

    CHECK_THROWS_AS(sum_by_rotation({}), std::invalid_argument);

    // carries = decade crossings from a zero start
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> len(1, 40), digit(0, 9);
    for (int i = 0; i < 2000; ++i) {
        std::vector<int> values(static_cast<std::size_t>(len(rng)));
        for (auto& v : values) v = digit(rng);
        RotationSum s = sum_by_rotation(values);
        long long total = std::accumulate(values.begin(), values.end(), 0LL);
        CHECK(s.total == total);
        CHECK(s.carries == total / 10);
        CHECK(s.total == 10LL * s.carries + (total % 10));
    }
}

TEST_CASE("symmetrized sums") {
    std::vector<int> vals{8, 3, 4, 4, 9, 6, 8, 7, 9, 1};
    SymmetrizedSum s = symmetrized_sum(vals);
    CHECK(s.total == 59);
    CHECK(s.center_x2 == 13);
    long long corr = 0;
    for (const SignedDigit& d : s.corrections) corr += d.value();
    CHECK(corr == -6);
    REQUIRE(s.corrections.size() == 2); // the two points moved to the center
    CHECK(replay(s.trace));

    std::vector<int> pair{5, 5};
    SymmetrizedSum p = symmetrized_sum(pair);
    CHECK(p.total == 10);
    CHECK(p.center_x2 == 10);
    CHECK(p.corrections.empty());

    std::vector<int> other{1, 9, 2, 8, 3};
    CHECK(symmetrized_sum(other).total == 23);

    CHECK_THROWS_AS(symmetrized_sum({}), std::invalid_argument);

    // exactness and the center decomposition on random multisets
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> len(1, 25), digit(0, 9);
    for (int i = 0; i < 2000; ++i) {
        std::vector<int> values(static_cast<std::size_t>(len(rng)));
        long long total = 0;
        for (auto& v : values) total += (v = digit(rng));
        SymmetrizedSum r = symmetrized_sum(values);
        CHECK(r.total == total);
        long long c = 0;
        for (const SignedDigit& d : r.corrections) c += d.value();
        long long n = static_cast<long long>(values.size());
        CHECK(n * r.center_x2 % 2 == 0);
        CHECK(total == n * r.center_x2 / 2 + c);
    }
}

TEST_CASE("dot-matrix pattern matches") {
    auto check = [](std::initializer_list<int> vals, const char* name, int units, int carry) {
        std::vector<int> v(vals);
        auto m = match_dot_pattern(v);
        REQUIRE(m.has_value());
        CHECK(m->pattern_name == name);
        CHECK(m->units == units);
        CHECK(m->carry == carry);
    };

    check({2, 3}, "midpoint_plus_corner", 5, 0);
    check({6, 9}, "midpoint_plus_corner", 5, 1);
    check({1, 2}, "corner_plus_midpoint", 3, 0);
    check({9, 8}, "corner_plus_midpoint", 7, 1);
    check({4, 2}, "consecutive_midpoints", 6, 0);
    check({6, 8}, "consecutive_midpoints", 4, 1);
    check({3, 7}, "opposite_pair", 0, 1);
    check({5, 5}, "opposite_pair", 0, 1);
    check({1, 2, 3}, "edge_triple", 6, 0);
    check({7, 8, 9}, "edge_triple", 4, 2);
    check({1, 5, 9}, "permutation_triple", 5, 1);
    check({2, 6, 7}, "permutation_triple", 5, 1);
    check({4, 1, 2, 3}, "quad_1234", 0, 1);
    check({6, 9, 8, 7}, "quad_1234", 0, 3);
    check({1, 3, 5, 6, 7, 8}, "permutation_sextet", 0, 3);
    check({1, 2, 3, 4, 6, 7, 8, 9}, "border_octet", 0, 4);

    // non-instances are a normal miss
    CHECK_FALSE(match_dot_pattern(std::vector<int>{1, 2, 4}).has_value());
    CHECK_FALSE(match_dot_pattern(std::vector<int>{2, 2}).has_value());
    CHECK_FALSE(match_dot_pattern(std::vector<int>{9, 9}).has_value());
    CHECK_FALSE(match_dot_pattern(std::vector<int>{1, 2, 3, 4, 5}).has_value());
    CHECK_FALSE(match_dot_pattern(std::vector<int>{1, 2, 3, 4, 6, 7, 8, 8}).has_value());
    CHECK_THROWS_AS(match_dot_pattern(std::vector<int>{0, 5}), std::invalid_argument);
}

TEST_CASE("sequence sums and differences") {
    auto s = add_sequences(DigitSequence::parse("999"), DigitSequence::parse("1"));
    CHECK(s.result.str() == "1000");
    CHECK(replay(s.trace));

    auto d = sub_sequences(DigitSequence::parse("1000"), DigitSequence::parse("1"));
    CHECK(d.result.str() == "999");
    CHECK(replay(d.trace));

    CHECK(add_sequences(DigitSequence::parse("0"), DigitSequence::parse("0")).result.str() == "0");
    CHECK_THROWS_AS(sub_sequences(DigitSequence::parse("5"), DigitSequence::parse("6")),
                    std::invalid_argument);

    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long long> dist(0, 999999999999LL);
    for (int i = 0; i < 2000; ++i) {
        long long a = dist(rng), b = dist(rng);
        CHECK(add_sequences(DigitSequence::from_value(a), DigitSequence::from_value(b))
                  .result.value() == a + b);
        if (a < b) std::swap(a, b);
        CHECK(sub_sequences(DigitSequence::from_value(a), DigitSequence::from_value(b))
                  .result.value() == a - b);
    }
}
