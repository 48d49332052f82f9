#include "ninepalace/addition.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace ninepalace {

namespace {

void check_digit_list(std::span<const int> values, int lo, const char* what) {
    for (int v : values)
        if (v < lo || v > 9) throw std::invalid_argument(std::string(what) + ": digit out of range");
}

std::string signed_digit_text(const SignedDigit& d) {
    return (d.sign < 0 ? "subtract " : "add ") + std::to_string(d.magnitude);
}

} // namespace

std::pair<GridNumber, StepRecord> step_add(GridNumber state, SignedDigit d) {
    if (d.magnitude < 0 || d.magnitude > 9)
        throw std::invalid_argument("step_add: magnitude out of 0..9");
    StepRecord r;
    r.start = state;
    r.delta = d;
    r.end = GridNumber::of_value(state.value() + d.value());
    r.family_delta = static_cast<int>(r.end.family - r.start.family);
    if (d.magnitude == 0)
        r.direction = StepDirection::Stay;
    else if (d.sign > 0)
        r.direction = r.end.position < r.start.position ? StepDirection::Backward
                                                        : StepDirection::Forward;
    else
        r.direction = r.end.position > r.start.position ? StepDirection::Backward
                                                        : StepDirection::Forward;
    r.annotation = signed_digit_text(d);
    if (r.family_delta > 0)
        r.annotation = "add " + std::to_string(d.magnitude) + " = add 10, back " +
                       std::to_string(10 - d.magnitude);
    else if (r.family_delta < 0)
        r.annotation = "subtract " + std::to_string(d.magnitude) + " = subtract 10, forward " +
                       std::to_string(10 - d.magnitude);
    return {r.end, r};
}

TraceStep to_trace_step(const StepRecord& r, std::string kind) {
    TraceStep s = make_step(std::move(kind), {r.start.family, r.start.position},
                            {r.end.family, r.end.position});
    if (!r.annotation.empty()) s.events.push_back({"annotation", r.annotation});
    return s;
}

WalkResult eval_walk(long long start, std::span<const SignedDigit> deltas) {
    WalkResult w;
    w.end = GridNumber::of_value(start);
    for (const SignedDigit& d : deltas) {
        auto [next, record] = step_add(w.end, d);
        w.end = next;
        w.trace.append(to_trace_step(record));
        w.records.push_back(std::move(record));
    }
    return w;
}

RotationAdd add_by_rotation(int a, int b) {
    if (a < 0 || a > 9 || b < 0 || b > 9)
        throw std::invalid_argument("add_by_rotation: digit out of 0..9");
    RotationAdd res;
    res.units = (a + b) % 10;
    res.carried = a + b >= 10;
    res.reframe = Orientation{0};
    int base = is_corner(b) ? 1 : is_midpoint(b) ? 2 : 0;
    if (base != 0)
        for (int j = 0; j < 4; ++j)
            if (rotate(base, j) == b) res.reframe = Orientation{j};
    return res;
}

RotationSum sum_by_rotation(std::span<const int> values) {
    if (values.empty()) throw std::invalid_argument("sum_by_rotation: empty list");
    check_digit_list(values, 0, "sum_by_rotation");
    RotationSum out;
    GridNumber state{0, 0};
    for (int v : values) {
        RotationAdd ra = add_by_rotation(state.position, v);
        auto [next, record] = step_add(state, SignedDigit{v, 1});
        if (is_corner(v))
            record.annotation = "add " + std::to_string(v) + ": like adding 1 facing " +
                                ra.reframe.facing_name();
        else if (is_midpoint(v))
            record.annotation = "add " + std::to_string(v) + ": like adding 2 facing " +
                                ra.reframe.facing_name();
        if (record.direction == StepDirection::Backward) ++out.carries;
        state = next;
        out.trace.append(to_trace_step(record));
    }
    out.total = state.value();
    return out;
}

namespace {

// Feasibility of center 2c = t: minimal number of points to move to the
// center cell so the lattice becomes mirror symmetric about c. Points
// whose mirror leaves the digit line must all move; unequal mirror pairs
// move their surplus; the pair {5, t-5} absorbs the moved points.
struct SymmetryPlan {
    bool feasible = false;
    std::array<int, 10> moved{};
    int total = 0;
};

SymmetryPlan plan_for_center(const std::array<int, 10>& freq, int t) {
    SymmetryPlan plan;
    int partner = t - 5; // mirror of the center cell
    for (int x = 0; x <= 9; ++x) {
        if (x == 5 || x == partner) continue;
        int mirror = t - x;
        if (mirror < 0 || mirror > 9) {
            plan.moved[x] = freq[x];
        } else if (x < mirror) {
            int surplus = freq[x] - freq[mirror];
            if (surplus > 0)
                plan.moved[x] = surplus;
            else
                plan.moved[mirror] = -surplus;
        }
    }
    int base = std::accumulate(plan.moved.begin(), plan.moved.end(), 0);
    if (partner >= 0 && partner <= 9 && partner != 5) {
        // freq[5] - m5 + total must equal freq[partner] - m_partner.
        int need = freq[partner] - freq[5] - base;
        if (need < 0 || need % 2 != 0) return plan;
        int mp = need / 2;
        if (mp > freq[partner]) return plan;
        plan.moved[partner] += mp;
        base += mp;
    } else if (partner != 5) {
        // Mirror of the center cell is off the line: nothing may sit or
        // land there.
        if (freq[5] != 0 || base != 0) return plan;
    }
    plan.total = base;
    plan.feasible = true;
    return plan;
}

} // namespace

SymmetrizedSum symmetrized_sum(std::span<const int> values) {
    if (values.empty()) throw std::invalid_argument("symmetrized_sum: empty list");
    check_digit_list(values, 0, "symmetrized_sum");

    SymmetrizedSum out;
    std::array<int, 10> freq{};
    long long total = 0;
    for (int v : values) {
        ++freq[v];
        total += v;
    }
    out.total = total;
    const long long n = static_cast<long long>(values.size());

    int best_t = -1;
    SymmetryPlan best;
    for (int t = 0; t <= 36; ++t) {
        SymmetryPlan plan = plan_for_center(freq, t);
        if (!plan.feasible) continue;
        if (best_t < 0 || plan.total < best.total ||
            (plan.total == best.total &&
             std::llabs(t * n - 2 * total) < std::llabs(best_t * n - 2 * total))) {
            best_t = t;
            best = plan;
        }
    }
    out.center_x2 = best_t;

    for (int v : values) {
        TraceStep s = make_step("mark", {0, v}, {0, v});
        s.events.push_back({"annotation", "point " + std::to_string(v)});
        out.trace.append(std::move(s));
    }
    for (int x = 0; x <= 9; ++x) {
        for (int i = 0; i < best.moved[x]; ++i) {
            int diff = x - 5;
            out.corrections.push_back(
                SignedDigit{std::abs(diff), diff < 0 ? -1 : 1});
            TraceStep s = make_step("move", {0, 5}, {0, x});
            s.events.push_back({"annotation", "moved " + std::to_string(x) +
                                                  " to center, correction " +
                                                  std::to_string(diff)});
            out.trace.append(std::move(s));
        }
    }
    long long corr = 0;
    for (const SignedDigit& c : out.corrections) corr += c.value();
    TraceStep summary = make_step("mark", {0, 5}, {0, 5});
    summary.events.push_back(
        {"annotation", "symmetry center " + std::to_string(best_t) + "/2, " +
                           std::to_string(n) + " points, corrections " + std::to_string(corr)});
    out.trace.append(std::move(summary));
    return out;
}

namespace {

int corner_after_midpoint(int m) {
    // Clockwise border neighbour: 2->3, 6->9, 8->7, 4->1.
    for (int j = 0; j < 4; ++j)
        if (rotate(2, j) == m) return rotate(3, j);
    throw std::invalid_argument("not a midpoint");
}

bool distinct_rows_and_cols(const std::vector<int>& v) {
    std::array<int, 3> rows{}, cols{};
    for (int d : v) {
        ++rows[(d - 1) / 3];
        ++cols[(d - 1) % 3];
    }
    int per = static_cast<int>(v.size()) / 3;
    return std::all_of(rows.begin(), rows.end(), [&](int c) { return c == per; }) &&
           std::all_of(cols.begin(), cols.end(), [&](int c) { return c == per; });
}

} // namespace

std::optional<PatternResult> match_dot_pattern(std::span<const int> values) {
    check_digit_list(values, 1, "match_dot_pattern");
    std::vector<int> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    long long sum = std::accumulate(v.begin(), v.end(), 0LL);
    auto result = [&](const char* name) {
        return PatternResult{name, static_cast<int>(sum % 10), static_cast<int>(sum / 10)};
    };

    if (v.size() == 2) {
        int x = v[0], y = v[1];
        if (x + y == 10) return result("opposite_pair");
        for (int c : {1, 3, 7, 9})
            if ((x == c || y == c) && x + y == c + (2 * c) % 10)
                return result("corner_plus_midpoint");
        for (int m : {2, 4, 6, 8})
            if ((x == m || y == m) && x + y == m + corner_after_midpoint(m))
                return result("midpoint_plus_corner");
        for (int m : {2, 4, 6, 8})
            if ((x == m || y == m) && x + y == m + rotate(m, 1) && x != y)
                return result("consecutive_midpoints");
        return std::nullopt;
    }
    if (v.size() == 3) {
        for (int m : {2, 4, 6, 8}) {
            int step = (m == 2 || m == 8) ? 1 : 3;
            std::vector<int> edge{m - step, m, m + step};
            std::sort(edge.begin(), edge.end());
            if (v == edge) return result("edge_triple");
        }
        if (v[0] != v[1] && v[1] != v[2] && distinct_rows_and_cols(v))
            return result("permutation_triple");
        return std::nullopt;
    }
    if (v.size() == 4) {
        for (int j = 0; j < 4; ++j) {
            std::vector<int> quad{rotate(4, j), rotate(1, j), rotate(2, j), rotate(3, j)};
            std::sort(quad.begin(), quad.end());
            if (v == quad) return result("quad_1234");
        }
        return std::nullopt;
    }
    if (v.size() == 6) {
        if (std::adjacent_find(v.begin(), v.end()) == v.end() && distinct_rows_and_cols(v))
            return result("permutation_sextet");
        return std::nullopt;
    }
    if (v.size() == 8) {
        if (v == std::vector<int>{1, 2, 3, 4, 6, 7, 8, 9}) return result("border_octet");
        return std::nullopt;
    }
    return std::nullopt;
}

namespace {

SequenceSum run_columns(const DigitSequence& a, const DigitSequence& b, int sign_b) {
    SequenceSum out;
    const auto& da = a.digits;
    const auto& db = b.digits;
    std::size_t width = std::max(da.size(), db.size());
    std::vector<std::uint8_t> rev;
    int carry = 0; // +1 pending carry, -1 pending borrow
    for (std::size_t i = 0; i < width; ++i) {
        int xa = i < da.size() ? da[da.size() - 1 - i] : 0;
        int xb = i < db.size() ? db[db.size() - 1 - i] : 0;
        GridNumber state{0, xa};
        std::string col = "10^" + std::to_string(i) + " column";
        // Every column leaves a step so the result can be read back off
        // the trace; untouched columns record a stay.
        auto [next, record] = step_add(state, SignedDigit{xb, sign_b});
        record.annotation = col + ": " + record.annotation;
        out.trace.append(to_trace_step(record, "column"));
        state = next;
        if (carry != 0) {
            auto [next2, record2] = step_add(state, SignedDigit{1, carry});
            record2.annotation = col + ": " + (carry > 0 ? "carried 1" : "borrowed 1");
            out.trace.append(to_trace_step(record2, "column"));
            state = next2;
        }
        rev.push_back(static_cast<std::uint8_t>(state.position));
        carry = static_cast<int>(state.family);
    }
    if (carry > 0) {
        auto [next, record] = step_add(GridNumber{0, 0}, SignedDigit{1, 1});
        record.annotation = "10^" + std::to_string(width) + " column: carried 1";
        out.trace.append(to_trace_step(record, "column"));
        rev.push_back(1);
    }
    if (carry < 0) throw std::invalid_argument("sub_sequences: minuend smaller than subtrahend");
    std::vector<std::uint8_t> digits(rev.rbegin(), rev.rend());
    out.result = DigitSequence::from_digits(std::move(digits)).canonical();
    return out;
}

} // namespace

SequenceSum add_sequences(const DigitSequence& a, const DigitSequence& b) {
    return run_columns(a, b, 1);
}

SequenceSum sub_sequences(const DigitSequence& a, const DigitSequence& b) {
    if (compare_magnitude(a, b) < 0)
        throw std::invalid_argument("sub_sequences: minuend smaller than subtrahend");
    return run_columns(a, b, -1);
}

} // namespace ninepalace
