#include "ninepalace/verify.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "ninepalace/barycenter.hpp"
#include "ninepalace/division.hpp"
#include "ninepalace/grid.hpp"
#include "ninepalace/multiplication.hpp"

namespace ninepalace {

namespace oracle {

long long eval_walk(long long start, std::span<const SignedDigit> deltas) {
    long long v = start;
    for (const SignedDigit& d : deltas) v += d.value();
    return v;
}

long long sum(std::span<const int> values) {
    long long s = 0;
    for (int v : values) s += v;
    return s;
}

long long mul(long long a, long long b) { return a * b; }

long long div_quot(long long a, long long b) { return a / b; }

long long div_rem(long long a, long long b) { return a % b; }

} // namespace oracle

namespace {

struct Claim {
    ConformanceReport report;

    explicit Claim(std::string id) { report.claim_id = std::move(id); }

    void expect(long long expected, long long actual, const std::string& inputs) {
        ++report.total_cases;
        if (expected != actual)
            report.failures.push_back(
                {inputs, std::to_string(expected), std::to_string(actual)});
    }

    void expect_str(const std::string& expected, const std::string& actual,
                    const std::string& inputs) {
        ++report.total_cases;
        if (expected != actual) report.failures.push_back({inputs, expected, actual});
    }
};

std::mt19937_64 rng_for(std::uint64_t seed, std::string_view claim) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : claim) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return std::mt19937_64(seed ^ h);
}

std::string fmt_pair(long long a, long long b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

std::string fmt_list(std::span<const int> values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(values[i]);
    }
    return s + "]";
}

} // namespace

std::vector<ConformanceReport> verify_rotation_invariance() {
    Claim add("rotation_invariance/addition");
    Claim sub("rotation_invariance/subtraction");
    Claim mul("rotation_invariance/multiples");
    for (int a = 0; a <= 9; ++a)
        for (int b = 0; b <= 9; ++b)
            for (int j = 0; j <= 3; ++j) {
                std::string in = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                 " j=" + std::to_string(j);
                add.expect(rotate((a + b) % 10, j), (rotate(a, j) + rotate(b, j)) % 10, in);
                sub.expect(rotate(((a - b) % 10 + 10) % 10, j),
                           ((rotate(a, j) - rotate(b, j)) % 10 + 10) % 10, in);
                // b plays the multiplier k here.
                mul.expect(rotate((b * a) % 10, j), (b * rotate(a, j)) % 10, in);
            }
    return {add.report, sub.report, mul.report};
}

std::vector<ConformanceReport> verify_carry_theorem() {
    Claim equiv("carry_points/equivalence");
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= 9; ++k) {
            int met = 0;
            for (int j = 1; j <= k; ++j)
                if ((j * n) % 10 < n) ++met;
            equiv.expect((k * n) / 10, met, fmt_pair(n, k));
            equiv.expect(met, carry_of_multiple(n, k), fmt_pair(n, k) + " engine");
            --equiv.report.total_cases; // the two checks form one (n,k) case
        }
    Claim totals("carry_points/totals");
    for (int n = 1; n <= 9; ++n)
        totals.expect(n - 1, carry_diagram(n).total(), "n=" + std::to_string(n));
    return {equiv.report, totals.report};
}

namespace {

// One enumerated lemma instance: the multiset plus the units and carry the
// lemma's own rule states for it, to be checked against the integer sum.
struct LemmaInstance {
    std::vector<int> values;
    int units;
    int carry;
};

} // namespace

std::vector<ConformanceReport> verify_dot_matrix_lemmas() {
    std::vector<ConformanceReport> out;

    auto check_instances = [&](const std::string& claim_id, const char* pattern_name,
                               const std::vector<LemmaInstance>& instances) {
        Claim c(claim_id);
        for (const LemmaInstance& inst : instances) {
            long long want = oracle::sum(inst.values);
            auto res = match_dot_pattern(inst.values);
            bool ok = res && res->pattern_name == pattern_name && res->units == inst.units &&
                      res->carry == inst.carry && 10LL * inst.carry + inst.units == want;
            ++c.report.total_cases;
            if (!ok)
                c.report.failures.push_back(
                    {fmt_list(inst.values) + " as " + pattern_name,
                     std::to_string(want) + " = 10*" + std::to_string(inst.carry) + "+" +
                         std::to_string(inst.units),
                     res ? res->pattern_name + " 10*" + std::to_string(res->carry) + "+" +
                               std::to_string(res->units)
                         : std::string("no match")});
        }
        out.push_back(c.report);
    };

    // Opposite pairs (and the doubled center): units back to zero, carry 1.
    std::vector<LemmaInstance> opposite;
    for (auto v : {std::vector<int>{1, 9}, {2, 8}, {3, 7}, {4, 6}, {5, 5}})
        opposite.push_back({v, 0, 1});
    check_instances("dot_matrix/opposite_pairs", "opposite_pair", opposite);

    // The two-point and three-point border rules, generated by rotation.
    // Carries follow the direction rule: backward lands below the anchor.
    std::vector<LemmaInstance> corner_mid, mid_corner, consec_mid, edges, quads;
    const std::array<std::pair<int, int>, 4> quad_carry{{{1, 1}, {3, 2}, {9, 3}, {7, 2}}};
    for (int j = 0; j <= 3; ++j) {
        int c = rotate(1, j), m = rotate(2, j);
        corner_mid.push_back({{c, (2 * c) % 10}, rotate(c, 1), rotate(c, 1) < c ? 1 : 0});
        mid_corner.push_back({{m, rotate(3, j)}, 5, 5 < m ? 1 : 0});
        consec_mid.push_back({{m, rotate(m, 1)}, rotate(m, 2), rotate(m, 2) < m ? 1 : 0});
        edges.push_back({{rotate(1, j), m, rotate(3, j)}, rotate(m, 1), 3 * m / 10});
        int turning = rotate(1, j);
        int carry = 0;
        for (auto [corner, cv] : quad_carry)
            if (corner == turning) carry = cv;
        quads.push_back({{rotate(4, j), turning, rotate(2, j), rotate(3, j)}, 0, carry});
    }
    check_instances("dot_matrix/corner_plus_midpoint", "corner_plus_midpoint", corner_mid);
    check_instances("dot_matrix/midpoint_plus_corner", "midpoint_plus_corner", mid_corner);
    check_instances("dot_matrix/consecutive_midpoints", "consecutive_midpoints", consec_mid);
    check_instances("dot_matrix/edge_triples", "edge_triple", edges);

    // Every triple with pairwise distinct rows and columns sums to 15; the
    // complementary six points sum to 30.
    std::vector<LemmaInstance> triples, sextets;
    for (int a = 1; a <= 9; ++a)
        for (int b = a + 1; b <= 9; ++b)
            for (int c = b + 1; c <= 9; ++c) {
                std::array<int, 3> rows{(a - 1) / 3, (b - 1) / 3, (c - 1) / 3};
                std::array<int, 3> cols{(a - 1) % 3, (b - 1) % 3, (c - 1) % 3};
                std::sort(rows.begin(), rows.end());
                std::sort(cols.begin(), cols.end());
                if (rows == std::array<int, 3>{0, 1, 2} && cols == std::array<int, 3>{0, 1, 2}) {
                    triples.push_back({{a, b, c}, 5, 1});
                    std::vector<int> rest;
                    for (int d = 1; d <= 9; ++d)
                        if (d != a && d != b && d != c) rest.push_back(d);
                    sextets.push_back({rest, 0, 3});
                }
            }
    check_instances("dot_matrix/permutation_triples", "permutation_triple", triples);
    check_instances("dot_matrix/permutation_sextets", "permutation_sextet", sextets);

    check_instances("dot_matrix/quad_1234", "quad_1234", quads);

    // The carry law 1223 over the turning corners, read in corner order.
    Claim law("dot_matrix/quad_carry_law");
    for (int j = 0; j <= 3; ++j) {
        auto res = match_dot_pattern(quads[static_cast<std::size_t>(j)].values);
        law.expect(quads[static_cast<std::size_t>(j)].carry, res ? res->carry : -1,
                   "turning corner " + std::to_string(rotate(1, j)));
    }
    out.push_back(law.report);

    check_instances("dot_matrix/border_octet", "border_octet",
                    {LemmaInstance{{1, 2, 3, 4, 6, 7, 8, 9}, 0, 4}});
    return out;
}

std::vector<ConformanceReport> verify_luoshu_fixtures() {
    Claim c("luoshu/fixtures");
    const int sq[3][3] = {{4, 9, 2}, {3, 5, 7}, {8, 1, 6}};
    long long det = 0;
    det += static_cast<long long>(sq[0][0]) * (sq[1][1] * sq[2][2] - sq[1][2] * sq[2][1]);
    det -= static_cast<long long>(sq[0][1]) * (sq[1][0] * sq[2][2] - sq[1][2] * sq[2][0]);
    det += static_cast<long long>(sq[0][2]) * (sq[1][0] * sq[2][1] - sq[1][1] * sq[2][0]);
    c.expect(360, det, "det");
    for (int r = 0; r < 3; ++r)
        c.expect(15, sq[r][0] + sq[r][1] + sq[r][2], "row " + std::to_string(r));
    for (int k = 0; k < 3; ++k)
        c.expect(15, sq[0][k] + sq[1][k] + sq[2][k], "col " + std::to_string(k));
    c.expect(15, sq[0][0] + sq[1][1] + sq[2][2], "diagonal");
    c.expect(15, sq[0][2] + sq[1][1] + sq[2][0], "antidiagonal");
    // Two crossing lines share 9; the complement of 9 closes the count.
    c.expect(21, 4 + 9 + 2 + 5 + 1, "crossing lines");
    return {c.report};
}

std::vector<ConformanceReport> verify_engine_equivalence(std::uint64_t seed,
                                                         long long samples_per_op) {
    std::vector<ConformanceReport> out;

    {
        Claim c("equivalence/walk_sums");
        auto rng = rng_for(seed, c.report.claim_id);
        std::uniform_int_distribution<int> len(1, 30), digit(0, 9), sign(0, 1),
            start(-1000, 1000);
        for (long long i = 0; i < samples_per_op; ++i) {
            std::vector<SignedDigit> deltas(static_cast<std::size_t>(len(rng)));
            for (auto& d : deltas) d = {digit(rng), sign(rng) ? 1 : -1};
            long long s = start(rng);
            c.expect(oracle::eval_walk(s, deltas), eval_walk(s, deltas).end.value(),
                     "case " + std::to_string(i));
        }
        out.push_back(c.report);
    }
    {
        Claim c("equivalence/rotation_sums");
        auto rng = rng_for(seed, c.report.claim_id);
        std::uniform_int_distribution<int> len(1, 30), digit(0, 9);
        for (long long i = 0; i < samples_per_op; ++i) {
            std::vector<int> values(static_cast<std::size_t>(len(rng)));
            for (auto& v : values) v = digit(rng);
            RotationSum rs = sum_by_rotation(values);
            long long want = oracle::sum(values);
            c.expect(want, rs.total, "case " + std::to_string(i));
            if (rs.carries != want / 10) // decade crossings from a zero start
                c.report.failures.push_back({"case " + std::to_string(i) + " carries",
                                             std::to_string(want / 10),
                                             std::to_string(rs.carries)});
        }
        out.push_back(c.report);
    }
    {
        Claim c("equivalence/barycenter_sums");
        auto rng = rng_for(seed, c.report.claim_id);
        std::uniform_int_distribution<int> len(1, 40), digit(0, 9);
        for (long long i = 0; i < samples_per_op; ++i) {
            std::vector<int> values(static_cast<std::size_t>(len(rng)));
            for (auto& v : values) v = digit(rng);
            c.expect(oracle::sum(values), sum_by_barycenter(WeightedDigits::of(values)),
                     "case " + std::to_string(i));
        }
        out.push_back(c.report);
    }
    {
        Claim c("equivalence/symmetrized_sums");
        auto rng = rng_for(seed, c.report.claim_id);
        std::uniform_int_distribution<int> len(1, 30), digit(0, 9);
        for (long long i = 0; i < samples_per_op; ++i) {
            std::vector<int> values(static_cast<std::size_t>(len(rng)));
            for (auto& v : values) v = digit(rng);
            SymmetrizedSum ss = symmetrized_sum(values);
            long long want = oracle::sum(values);
            c.expect(want, ss.total, "case " + std::to_string(i));
            long long corr = 0;
            for (const SignedDigit& d : ss.corrections) corr += d.value();
            long long n = static_cast<long long>(values.size());
            if (n * ss.center_x2 % 2 != 0 || want != n * ss.center_x2 / 2 + corr)
                c.report.failures.push_back(
                    {"case " + std::to_string(i) + " decomposition", std::to_string(want),
                     std::to_string(n) + "*" + std::to_string(ss.center_x2) + "/2 + " +
                         std::to_string(corr)});
        }
        out.push_back(c.report);
    }
    {
        Claim c("equivalence/mul_long_by_digit");
        auto rng = rng_for(seed, c.report.claim_id);
        std::uniform_int_distribution<long long> a(0, 999999999999LL);
        std::uniform_int_distribution<int> b(0, 9);
        for (long long i = 0; i < samples_per_op; ++i) {
            long long av = a(rng);
            int bv = b(rng);
            MulResult m = mul_long_by_digit(DigitSequence::from_value(av), bv);
            c.expect(oracle::mul(av, bv), m.product.value(), fmt_pair(av, bv));
        }
        out.push_back(c.report);
    }
    {
        Claim c("equivalence/div_general");
        auto rng = rng_for(seed, c.report.claim_id);
        std::uniform_int_distribution<long long> p(0, 999999999999LL);
        std::uniform_int_distribution<int> b(1, 9);
        for (long long i = 0; i < samples_per_op; ++i) {
            long long pv = p(rng);
            int bv = b(rng);
            GeneralDivResult d = div_general(DigitSequence::from_value(pv), bv);
            c.expect(oracle::div_quot(pv, bv), d.quotient.value(), fmt_pair(pv, bv));
            if (d.remainder != oracle::div_rem(pv, bv))
                c.report.failures.push_back({fmt_pair(pv, bv) + " remainder",
                                             std::to_string(oracle::div_rem(pv, bv)),
                                             std::to_string(d.remainder)});
        }
        out.push_back(c.report);
    }
    {
        Claim c("equivalence/div_exact");
        auto rng = rng_for(seed, c.report.claim_id);
        std::uniform_int_distribution<long long> q(0, 999999999LL);
        const std::array<int, 4> divisors{1, 3, 7, 9};
        std::uniform_int_distribution<std::size_t> pick(0, 3);
        for (long long i = 0; i < samples_per_op; ++i) {
            long long qv = q(rng);
            int bv = divisors[pick(rng)];
            ExactDivResult d =
                div_exact_low_to_high(DigitSequence::from_value(qv * bv), bv);
            c.expect(qv, d.quotient.value(), fmt_pair(qv * bv, bv));
        }
        out.push_back(c.report);
    }
    {
        // All digit pairs, every summation strategy against a + b.
        Claim c("equivalence/digit_pairs");
        for (int a = 0; a <= 9; ++a)
            for (int b = 0; b <= 9; ++b) {
                std::vector<int> pair{a, b};
                long long want = a + b;
                bool ok = eval_walk(a, std::vector<SignedDigit>{{b, 1}}).end.value() == want &&
                          sum_by_rotation(pair).total == want &&
                          sum_by_barycenter(WeightedDigits::of(pair)) == want &&
                          symmetrized_sum(pair).total == want;
                RotationAdd ra = add_by_rotation(a, b);
                ok = ok && ra.units == want % 10 && ra.carried == (want >= 10);
                if (a >= 1 && b >= 1) {
                    auto m = match_dot_pattern(pair);
                    if (m && 10LL * m->carry + m->units != want) ok = false;
                }
                ++c.report.total_cases;
                if (!ok)
                    c.report.failures.push_back(
                        {fmt_pair(a, b), std::to_string(want), "strategy disagreement"});
            }
        out.push_back(c.report);
    }
    {
        // Exhaustive small dividends, both division routes.
        Claim c("equivalence/div_small_exhaustive");
        for (long long p = 0; p < 10000; ++p)
            for (int b = 1; b <= 9; ++b) {
                GeneralDivResult d = div_general(DigitSequence::from_value(p), b);
                bool ok = d.quotient.value() == p / b && d.remainder == p % b;
                if ((b == 1 || b == 3 || b == 7 || b == 9) && p % b == 0) {
                    ExactDivResult e = div_exact_low_to_high(DigitSequence::from_value(p), b);
                    ok = ok && e.quotient.value() == p / b;
                }
                ++c.report.total_cases;
                if (!ok)
                    c.report.failures.push_back(
                        {fmt_pair(p, b), fmt_pair(p / b, p % b), "division mismatch"});
            }
        out.push_back(c.report);
    }
    return out;
}

std::vector<ConformanceReport> verify_round_trips(std::uint64_t seed) {
    std::vector<ConformanceReport> out;
    {
        Claim c("round_trip/encode_decode");
        auto rng = rng_for(seed, c.report.claim_id);
        std::uniform_int_distribution<long long> v(-1000000000000LL, 1000000000000LL);
        for (int i = 0; i < 10000; ++i) {
            long long x = v(rng);
            c.expect(x, decode_path(encode_path(x)), std::to_string(x));
        }
        out.push_back(c.report);
    }
    {
        Claim c("round_trip/mul_div_exact");
        auto rng = rng_for(seed, c.report.claim_id);
        std::uniform_int_distribution<long long> q(0, 999999999LL);
        const std::array<int, 4> divisors{1, 3, 7, 9};
        std::uniform_int_distribution<std::size_t> pick(0, 3);
        for (int i = 0; i < 10000; ++i) {
            long long qv = q(rng);
            int b = divisors[pick(rng)];
            MulResult m = mul_long_by_digit(DigitSequence::from_value(qv), b);
            ExactDivResult d = div_exact_low_to_high(m.product, b);
            c.expect(qv, d.quotient.value(), fmt_pair(qv, b));
        }
        out.push_back(c.report);
    }
    return out;
}

namespace {

struct ClaimGroup {
    std::string prefix;
    std::vector<ConformanceReport> (*run)(std::uint64_t seed, long long samples);
};

const ClaimGroup kGroups[] = {
    {"rotation_invariance/",
     [](std::uint64_t, long long) { return verify_rotation_invariance(); }},
    {"carry_points/", [](std::uint64_t, long long) { return verify_carry_theorem(); }},
    {"dot_matrix/", [](std::uint64_t, long long) { return verify_dot_matrix_lemmas(); }},
    {"luoshu/", [](std::uint64_t, long long) { return verify_luoshu_fixtures(); }},
    {"equivalence/",
     [](std::uint64_t seed, long long samples) { return verify_engine_equivalence(seed, samples); }},
    {"round_trip/", [](std::uint64_t seed, long long) { return verify_round_trips(seed); }},
};

} // namespace

std::vector<ConformanceReport> verify_all(std::uint64_t seed, long long samples_per_op) {
    return verify_claim("", seed, samples_per_op);
}

std::vector<ConformanceReport> verify_claim(const std::string& prefix, std::uint64_t seed,
                                            long long samples_per_op) {
    std::vector<ConformanceReport> out;
    for (const ClaimGroup& g : kGroups) {
        bool overlap = g.prefix.rfind(prefix, 0) == 0 || prefix.rfind(g.prefix, 0) == 0;
        if (!overlap) continue;
        for (ConformanceReport& r : g.run(seed, samples_per_op))
            if (r.claim_id.rfind(prefix, 0) == 0) out.push_back(std::move(r));
    }
    return out;
}

std::string format_report(const ConformanceReport& r, std::size_t max_failures) {
    std::ostringstream os;
    os << (r.ok() ? "PASS " : "FAIL ") << r.claim_id << ": " << r.total_cases << " cases, "
       << r.failures.size() << " failures";
    for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i) {
        const CaseFailure& f = r.failures[i];
        os << "\n  " << f.inputs << ": expected " << f.expected << ", got " << f.actual;
    }
    return os.str();
}

} // namespace ninepalace
