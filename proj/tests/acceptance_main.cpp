// Acceptance suite: runs every criterion against the library and the real
// CLI binary (path given as argv[1]) and prints one pass/fail line each.

#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ninepalace/multiplication.hpp"
#include "ninepalace/verify.hpp"

namespace {

std::string g_cli;

struct RunResult {
    std::string out;
    int exit_code = -1;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string first_line(const std::string& s) {
    return s.substr(0, s.find('\n'));
}

struct Criterion {
    int number;
    std::string description;
    std::vector<std::string> problems;

    Criterion(int number, std::string description)
        : number(number), description(std::move(description)) {}

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }

    void expect_cli_line(const std::string& args, const std::string& want) {
        RunResult r = run_cli(args);
        if (r.exit_code != 0)
            problems.push_back("`" + args + "` exited " + std::to_string(r.exit_code));
        else if (first_line(r.out) != want)
            problems.push_back("`" + args + "` printed '" + first_line(r.out) + "', wanted '" +
                               want + "'");
    }

    bool report() const {
        std::cout << (problems.empty() ? "PASS" : "FAIL") << " criterion " << number << ": "
                  << description << "\n";
        for (const std::string& p : problems) std::cout << "    " << p << "\n";
        return problems.empty();
    }
};

bool reports_ok(const std::vector<ninepalace::ConformanceReport>& rs, Criterion& c) {
    bool ok = true;
    for (const auto& r : rs) {
        if (!r.ok()) {
            c.problems.push_back(r.claim_id + " has " + std::to_string(r.failures.size()) +
                                 " failures");
            ok = false;
        }
    }
    return ok;
}

long long cases_of(const std::vector<ninepalace::ConformanceReport>& rs, const std::string& id) {
    for (const auto& r : rs)
        if (r.claim_id == id) return r.total_cases;
    return -1;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: ninepalace_acceptance <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];
    using namespace ninepalace;
    int failed = 0;

    {
        Criterion c(0, "CLI contract: exit 0 on success, 1 on computation error, 2 on usage");
        c.expect(run_cli("mul 6 7").exit_code == 0, "success should exit 0");
        c.expect(run_cli("div 5 3 --method exact").exit_code == 1,
                 "inexact division should exit 1");
        c.expect(run_cli("eval '5+'").exit_code == 2, "malformed expression should exit 2");
        c.expect(run_cli("sum --method rotation 12").exit_code == 2,
                 "out-of-range digit should exit 2");
        c.expect(run_cli("frobnicate").exit_code == 2, "unknown subcommand should exit 2");
        if (!c.report()) ++failed;
    }
    {
        Criterion c(1, "golden worked examples reproduced bit-exactly via the CLI");
        c.expect_cli_line("eval \"1-2-9-8-7-6+8-3+5-6\"", "-27");
        RunResult rot = run_cli("sum --method rotation 5 3 9 4 8");
        c.expect(rot.exit_code == 0 && first_line(rot.out) == "29" &&
                     rot.out.find("carries: 2") != std::string::npos,
                 "rotation sum 5+3+9+4+8 should give 29 with 2 carries");
        c.expect_cli_line("sum --method symmetry 8 3 4 4 9 6 8 7 9 1", "59");
        c.expect_cli_line("sum --method barycenter 6 7", "13");
        c.expect_cli_line("sum --method barycenter 4 7 8 9", "28");
        c.expect_cli_line("sum --method barycenter 1 4 4 7 7 7 2 5 8 8", "53");
        c.expect_cli_line("eval '2×6+4×9+3×8+4×3+7×5'", "119");
        RunResult luoshu = run_cli("verify --claim luoshu/");
        c.expect(luoshu.exit_code == 0 &&
                     first_line(luoshu.out) == "PASS luoshu/fixtures: 10 cases, 0 failures",
                 "luoshu fixtures (determinant 360, eight lines of 15, the 21 trick)");
        c.expect_cli_line("mul 7 5", "35");
        c.expect_cli_line("mul 9 7", "63");
        c.expect_cli_line("mul 9 9", "81");
        c.expect_cli_line("mul 9 6", "54");
        c.expect_cli_line("mul 9 8", "72");
        c.expect(carry_of_multiple(7, 9) == 6 && carry_of_multiple(9, 9) == 8 &&
                     carry_of_multiple(6, 9) == 5 && carry_of_multiple(8, 9) == 7,
                 "carry digits of 9x{7,9,6,8} should be 6/8/5/7");
        c.expect_cli_line("mul 4789 3", "14367");
        c.expect_cli_line("mul 92867 8", "742936");
        c.expect_cli_line("div 14367 3 --method exact", "4789");
        c.expect_cli_line("div 14367 3 --method general", "4789");
        if (!c.report()) ++failed;
    }
    {
        Criterion c(2, "rotation invariance, 3 x 400 exhaustive cases");
        auto rs = verify_rotation_invariance();
        c.expect(rs.size() == 3, "three invariance domains");
        for (const auto& r : rs)
            c.expect(r.total_cases == 400, r.claim_id + " should enumerate 400 cases");
        reports_ok(rs, c);
        if (!c.report()) ++failed;
    }
    {
        Criterion c(3, "carry theorem, 81 equivalence cases plus 9 per-multiplier totals");
        auto rs = verify_carry_theorem();
        c.expect(cases_of(rs, "carry_points/equivalence") == 81, "81 (n,k) cases");
        c.expect(cases_of(rs, "carry_points/totals") == 9, "9 per-n totals");
        reports_ok(rs, c);
        if (!c.report()) ++failed;
    }
    {
        Criterion c(4, "dot-matrix lemmas, every enumerable instance, counts stable");
        auto rs = verify_dot_matrix_lemmas();
        auto again = verify_dot_matrix_lemmas();
        c.expect(rs.size() == again.size(), "stable claim list");
        long long total = 0, total_again = 0;
        for (const auto& r : rs) total += r.total_cases;
        for (const auto& r : again) total_again += r.total_cases;
        c.expect(total == total_again, "instance counts stable across runs");
        c.expect(cases_of(rs, "dot_matrix/opposite_pairs") == 5, "5 opposite pairs");
        c.expect(cases_of(rs, "dot_matrix/permutation_triples") == 6, "6 permutation triples");
        c.expect(cases_of(rs, "dot_matrix/permutation_sextets") == 6, "6 permutation sextets");
        c.expect(cases_of(rs, "dot_matrix/quad_1234") == 4, "4 quadruples");
        c.expect(cases_of(rs, "dot_matrix/border_octet") == 1, "1 border octet");
        reports_ok(rs, c);
        if (!c.report()) ++failed;
    }
    {
        Criterion c(5, "oracle equivalence, >=100000 seeded cases per engine operation");
        auto rs = verify_engine_equivalence(kDefaultSeed, 100000);
        for (const char* id :
             {"equivalence/walk_sums", "equivalence/rotation_sums",
              "equivalence/barycenter_sums", "equivalence/symmetrized_sums",
              "equivalence/mul_long_by_digit", "equivalence/div_general",
              "equivalence/div_exact"})
            c.expect(cases_of(rs, id) >= 100000, std::string(id) + " should run >=100000 cases");
        c.expect(cases_of(rs, "equivalence/digit_pairs") == 100, "all 100 digit pairs");
        c.expect(cases_of(rs, "equivalence/div_small_exhaustive") == 90000,
                 "all dividends below 10^4 with all digit divisors");
        reports_ok(rs, c);
        if (!c.report()) ++failed;
    }
    {
        Criterion c(6, "round trips: encode/decode and multiply-then-divide, 10^4 each");
        auto rs = verify_round_trips(kDefaultSeed);
        c.expect(cases_of(rs, "round_trip/encode_decode") == 10000, "10^4 encode/decode cases");
        c.expect(cases_of(rs, "round_trip/mul_div_exact") == 10000, "10^4 mul/div cases");
        reports_ok(rs, c);
        if (!c.report()) ++failed;
    }
    {
        Criterion c(7, "determinism: identical bytes for repeated runs with the same seed");
        std::string eval_cmd = "--trace eval \"1-2-9-8-7-6+8-3+5-6\"";
        RunResult a = run_cli(eval_cmd), b = run_cli(eval_cmd);
        c.expect(a.exit_code == 0 && a.out == b.out, "eval --trace is byte-stable");

        std::string verify_cmd = "--trace verify --claim equivalence/walk_sums --seed 99 "
                                 "--samples 2000";
        RunResult va = run_cli(verify_cmd), vb = run_cli(verify_cmd);
        c.expect(va.exit_code == 0 && va.out == vb.out, "verify --trace is byte-stable");

        auto tmp = std::filesystem::temp_directory_path() /
                   ("ninepalace_acceptance_" + std::to_string(getpid()) + ".json");
        RunResult saved =
            run_cli("--trace --out " + tmp.string() + " mul 92867 8");
        c.expect(saved.exit_code == 0, "write a trace file");
        std::string render_cmd = "render --in " + tmp.string() + " --format svg";
        RunResult ra = run_cli(render_cmd), rb = run_cli(render_cmd);
        c.expect(ra.exit_code == 0 && !ra.out.empty() && ra.out == rb.out,
                 "render output is byte-stable");
        std::filesystem::remove(tmp);
        if (!c.report()) ++failed;
    }

    std::cout << (failed == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << (8 - failed)
              << "/8 checks: the 7 criteria plus the CLI contract)\n";
    return failed == 0 ? 0 : 1;
}
