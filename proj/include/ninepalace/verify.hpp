#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ninepalace/addition.hpp"

namespace ninepalace {

struct CaseFailure {
    std::string inputs;
    std::string expected;
    std::string actual;

    bool operator==(const CaseFailure&) const = default;
};

struct ConformanceReport {
    std::string claim_id;
    long long total_cases = 0;
    std::vector<CaseFailure> failures;

    bool ok() const { return failures.empty(); }
};

// Plain integer arithmetic used as ground truth everywhere.
namespace oracle {

long long eval_walk(long long start, std::span<const SignedDigit> deltas);
long long sum(std::span<const int> values);
long long mul(long long a, long long b);
long long div_quot(long long a, long long b); // b > 0
long long div_rem(long long a, long long b);

} // namespace oracle

inline constexpr std::uint64_t kDefaultSeed = 0x9A1ACE;
inline constexpr long long kDefaultSamples = 100000;

// Exhaustive theorem suites. Every claim enumerates its whole stated
// domain; zero failures expected.
std::vector<ConformanceReport> verify_rotation_invariance();
std::vector<ConformanceReport> verify_carry_theorem();
std::vector<ConformanceReport> verify_dot_matrix_lemmas();
std::vector<ConformanceReport> verify_luoshu_fixtures();

// Seeded randomized agreement of every engine operation with the integer
// oracle, plus the exhaustive small domains (all digit pairs, all
// dividends below 10^4 with every digit divisor).
std::vector<ConformanceReport> verify_engine_equivalence(std::uint64_t seed,
                                                         long long samples_per_op);

// Encode/decode and multiply-then-divide round trips.
std::vector<ConformanceReport> verify_round_trips(std::uint64_t seed);

std::vector<ConformanceReport> verify_all(std::uint64_t seed = kDefaultSeed,
                                          long long samples_per_op = kDefaultSamples);

// Runs the claims whose id starts with the given prefix ("" runs all).
std::vector<ConformanceReport> verify_claim(const std::string& prefix,
                                            std::uint64_t seed = kDefaultSeed,
                                            long long samples_per_op = kDefaultSamples);

std::string format_report(const ConformanceReport& r, std::size_t max_failures = 5);

} // namespace ninepalace
