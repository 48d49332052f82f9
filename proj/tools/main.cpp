#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ninepalace/addition.hpp"
#include "ninepalace/barycenter.hpp"
#include "ninepalace/division.hpp"
#include "ninepalace/expr.hpp"
#include "ninepalace/grid.hpp"
#include "ninepalace/json_io.hpp"
#include "ninepalace/multiplication.hpp"
#include "ninepalace/render.hpp"
#include "ninepalace/verify.hpp"

namespace {

using namespace ninepalace;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string out_file;

    void write(const std::string& text) const {
        if (out_file.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(out_file, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + out_file);
        f << text;
    }
};

// Splits positional list arguments on commas and blanks so signed digits
// can be passed as one quoted string.
std::vector<std::string> split_list(const std::vector<std::string>& args) {
    std::vector<std::string> items;
    for (const std::string& a : args) {
        std::string cur;
        for (char c : a) {
            if (c == ',' || c == ' ' || c == '\t') {
                if (!cur.empty()) items.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) items.push_back(cur);
    }
    return items;
}

int parse_int(const std::string& s, int lo, int hi, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw CLI::ValidationError(what + ": '" + s + "' is not an integer");
    }
    if (used != s.size()) throw CLI::ValidationError(what + ": '" + s + "' is not an integer");
    if (v < lo || v > hi)
        throw CLI::ValidationError(what + ": " + s + " out of [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + "]");
    return v;
}

int run_eval(const std::string& expr, bool emit_trace, const Output& out) {
    EvalOutcome r = eval_expression(expr);
    if (emit_trace) {
        out.write(to_output_string(
            envelope("eval", json{{"expression", expr}}, r.value.str(), r.trace)));
        return kExitOk;
    }
    std::ostringstream os;
    os << r.value.str() << "\n";
    os << render(r.trace, RenderSpec{});
    out.write(os.str());
    return kExitOk;
}

int run_sum(const std::string& method, const std::vector<std::string>& raw, bool emit_trace,
            const Output& out) {
    std::vector<std::string> items = split_list(raw);
    if (items.empty()) throw CLI::ValidationError("sum: no values given");

    json inputs{{"method", method}, {"values", items}};
    std::ostringstream os;
    json result;
    StepTrace trace;

    if (method == "walk") {
        std::vector<SignedDigit> deltas;
        for (const std::string& s : items) {
            int v = parse_int(s, -9, 9, "sum walk value");
            deltas.push_back({v < 0 ? -v : v, v < 0 ? -1 : 1});
        }
        WalkResult w = eval_walk(0, deltas);
        trace = std::move(w.trace);
        os << w.end.value() << "\n";
        os << "end: (" << w.end.family << "," << w.end.position << ")\n";
        result = json{{"total", std::to_string(w.end.value())},
                      {"end", {w.end.family, w.end.position}}};
    } else {
        std::vector<int> values;
        for (const std::string& s : items)
            values.push_back(parse_int(s, 0, 9, "sum value"));
        if (method == "rotation") {
            RotationSum r = sum_by_rotation(values);
            trace = std::move(r.trace);
            os << r.total << "\n" << "carries: " << r.carries << "\n";
            result = json{{"total", std::to_string(r.total)}, {"carries", r.carries}};
        } else if (method == "barycenter") {
            WeightedDigits w = WeightedDigits::of(values);
            RefinedBarycenter c = barycenter(w);
            long long total = sum_by_barycenter(w);
            trace = barycenter_trace(w);
            os << total << "\n";
            os << "center of mass: " << c.mean_value().str() << " (" << c.count << " points)\n";
            result = json{{"total", std::to_string(total)},
                          {"mean", c.mean_value().str()},
                          {"count", c.count}};
        } else if (method == "symmetry") {
            SymmetrizedSum r = symmetrized_sum(values);
            trace = std::move(r.trace);
            long long corr = 0;
            for (const SignedDigit& d : r.corrections) corr += d.value();
            os << r.total << "\n";
            os << "center: " << Rational(r.center_x2, 2).str() << "\n";
            os << "corrections: " << corr << "\n";
            result = json{{"total", std::to_string(r.total)},
                          {"center_x2", r.center_x2},
                          {"corrections", corr}};
        } else if (method == "pattern") {
            for (int v : values)
                if (v == 0) throw CLI::ValidationError("sum pattern: digits must be 1..9");
            auto m = match_dot_pattern(values);
            if (!m) {
                os << "no pattern match\n";
                result = json{{"match", nullptr}};
            } else {
                os << 10 * m->carry + m->units << "\n";
                os << "pattern: " << m->pattern_name << "\n";
                result = json{{"total", std::to_string(10 * m->carry + m->units)},
                              {"pattern", m->pattern_name},
                              {"units", m->units},
                              {"carry", m->carry}};
            }
        } else {
            throw CLI::ValidationError("sum: unknown method " + method);
        }
    }

    if (emit_trace)
        out.write(to_output_string(envelope("sum", inputs, result, trace)));
    else
        out.write(os.str());
    return kExitOk;
}

int run_mul(const std::string& a, const std::string& b, bool emit_trace, const Output& out) {
    DigitSequence sa = DigitSequence::parse(a);
    DigitSequence sb = DigitSequence::parse(b);
    if (sa.sign < 0 || sb.sign < 0)
        throw CLI::ValidationError("mul: factors must be nonnegative");
    StepTrace trace;
    DigitSequence product;
    if (sb.size() == 1) {
        MulResult m = mul_long_by_digit(sa, sb.digit(0));
        product = m.product;
        trace = std::move(m.trace);
    } else if (sa.size() == 1) {
        MulResult m = mul_long_by_digit(sb, sa.digit(0));
        product = m.product;
        trace = std::move(m.trace);
    } else {
        product = mul_compose(sa, sb);
        TraceStep s = make_step("mark", {0, 5}, {0, 5});
        s.events.push_back({"annotation", "long-by-long composed from digit rows"});
        trace.append(std::move(s));
    }
    if (emit_trace) {
        out.write(to_output_string(
            envelope("mul", json{{"a", sa.str()}, {"b", sb.str()}}, product.str(), trace)));
    } else {
        out.write(product.str() + "\n");
    }
    return kExitOk;
}

int run_div(const std::string& a, const std::string& b, const std::string& method,
            bool emit_trace, const Output& out) {
    DigitSequence p = DigitSequence::parse(a);
    if (p.sign < 0) throw CLI::ValidationError("div: dividend must be nonnegative");
    int divisor = parse_int(b, 1, 9, "div divisor");

    json inputs{{"p", p.str()}, {"b", divisor}, {"method", method}};
    if (method == "exact") {
        ExactDivResult r = div_exact_low_to_high(p, divisor);
        if (emit_trace)
            out.write(to_output_string(envelope(
                "div", inputs, json{{"quotient", r.quotient.str()}, {"remainder", 0}}, r.trace)));
        else
            out.write(r.quotient.str() + "\n");
        return kExitOk;
    }
    if (method != "general") throw CLI::ValidationError("div: unknown method " + method);
    GeneralDivResult r = div_general(p, divisor);
    if (emit_trace) {
        out.write(to_output_string(envelope(
            "div", inputs, json{{"quotient", r.quotient.str()}, {"remainder", r.remainder}},
            r.trace)));
    } else {
        out.write(r.quotient.str() + "\nremainder: " + std::to_string(r.remainder) + "\n");
    }
    return kExitOk;
}

int run_encode(const std::string& value, bool emit_trace, const Output& out) {
    DigitSequence v = DigitSequence::parse(value);
    NumberPath path = encode_path(v.value());

    StepTrace trace;
    for (std::size_t i = 0; i + 1 < path.points.size(); ++i) {
        const PathPoint& a = path.points[i];
        const PathPoint& b = path.points[i + 1];
        trace.append(make_step("path", {a.family, a.position}, {b.family, b.position}));
    }
    if (path.points.size() == 1) {
        const PathPoint& a = path.points[0];
        trace.append(make_step("path", {a.family, a.position}, {a.family, a.position}));
    }

    json points = json::array();
    std::ostringstream os;
    os << "sign: " << (path.sign < 0 ? "-" : "+") << "\npoints:";
    for (const PathPoint& p : path.points) {
        points.push_back({p.family, p.position});
        os << " (" << p.family << "," << p.position << ")";
    }
    os << "\n";
    if (emit_trace)
        out.write(to_output_string(envelope("encode", json{{"value", v.str()}},
                                            json{{"sign", path.sign}, {"points", points}},
                                            trace)));
    else
        out.write(os.str());
    return kExitOk;
}

int run_verify(const std::string& claim, std::uint64_t seed, long long samples, bool emit_trace,
               const Output& out) {
    std::vector<ConformanceReport> reports = verify_claim(claim, seed, samples);
    if (reports.empty()) throw CLI::ValidationError("verify: no claim matches '" + claim + "'");
    bool all_ok = true;
    std::ostringstream os;
    for (const ConformanceReport& r : reports) {
        all_ok = all_ok && r.ok();
        os << format_report(r) << "\n";
    }
    std::size_t passed = 0;
    for (const ConformanceReport& r : reports) passed += r.ok() ? 1 : 0;
    os << "summary: " << reports.size() << " claims, " << passed << " passed, "
       << (reports.size() - passed) << " failed\n";
    if (emit_trace) {
        json inputs{{"claim", claim.empty() ? "all" : claim},
                    {"seed", seed},
                    {"samples", samples}};
        out.write(to_output_string(envelope("verify", inputs, all_ok ? "pass" : "fail",
                                            StepTrace{}, reports)));
    } else {
        out.write(os.str());
    }
    return all_ok ? kExitOk : kExitComputation;
}

int run_render(const std::string& in_file, const std::string& format, int refinement,
               bool hide_families, const Output& out) {
    std::ifstream f(in_file, std::ios::binary);
    if (!f) throw CLI::ValidationError("render: cannot open " + in_file);
    json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("render: invalid JSON in " + in_file + ": " + e.what());
    }
    StepTrace trace = trace_from_json(j.is_object() && j.contains("trace") ? j["trace"] : j);
    RenderSpec spec;
    spec.format = format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii;
    spec.refinement = refinement;
    spec.show_families = !hide_families;
    out.write(render(trace, spec));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nine-palace grid arithmetic: exact digit computation with verifiable traces"};
    app.require_subcommand(1);

    bool emit_trace = false;
    Output out;
    app.add_flag("--trace", emit_trace, "emit the structured JSON envelope instead of text");
    app.add_option("--out", out.out_file, "write output to a file instead of stdout");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an arithmetic expression");
    std::string expr;
    eval_cmd->add_option("expr", expr, "expression, e.g. \"1-2-9-8-7-6+8-3+5-6\"")->required();

    auto* sum_cmd = app.add_subcommand("sum", "sum a list of digits");
    std::string method = "rotation";
    std::vector<std::string> sum_values;
    sum_cmd->add_option("--method", method, "walk|rotation|barycenter|symmetry|pattern")
        ->default_val("rotation");
    sum_cmd->add_option("values", sum_values, "digits (comma or space separated)")->required();

    auto* mul_cmd = app.add_subcommand("mul", "multiply two nonnegative integers");
    std::string mul_a, mul_b;
    mul_cmd->add_option("a", mul_a, "multiplicand")->required();
    mul_cmd->add_option("b", mul_b, "multiplier")->required();

    auto* div_cmd = app.add_subcommand("div", "divide by a single digit");
    std::string div_a, div_b, div_method = "general";
    div_cmd->add_option("a", div_a, "dividend")->required();
    div_cmd->add_option("b", div_b, "divisor (1..9)")->required();
    div_cmd->add_option("--method", div_method, "exact|general")->default_val("general");

    auto* encode_cmd = app.add_subcommand("encode", "encode an integer as a grid path");
    std::string encode_value;
    encode_cmd->add_option("n", encode_value, "integer")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the conformance suites");
    bool verify_all_flag = false;
    std::string claim;
    std::uint64_t seed = kDefaultSeed;
    long long samples = kDefaultSamples;
    verify_cmd->add_flag("--all", verify_all_flag, "run every claim (default)");
    verify_cmd->add_option("--claim", claim, "claim id prefix, e.g. rotation_invariance/");
    verify_cmd->add_option("--seed", seed, "seed for the randomized suites");
    verify_cmd->add_option("--samples", samples, "random samples per engine operation");

    auto* render_cmd = app.add_subcommand("render", "render a stored trace");
    std::string in_file, format = "ascii";
    int refinement = 1;
    bool hide_families = false;
    render_cmd->add_option("--in", in_file, "trace file (JSON envelope or step array)")
        ->required();
    render_cmd->add_option("--format", format, "ascii|svg")->default_val("ascii");
    render_cmd->add_option("--refinement", refinement, "subdivision of each cell (n >= 1)");
    render_cmd->add_flag("--no-families", hide_families, "hide family marks");

    // Global flags may trail the subcommand (`mul 92867 8 --trace`).
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(eval_cmd)) return run_eval(expr, emit_trace, out);
        if (app.got_subcommand(sum_cmd)) return run_sum(method, sum_values, emit_trace, out);
        if (app.got_subcommand(mul_cmd)) return run_mul(mul_a, mul_b, emit_trace, out);
        if (app.got_subcommand(div_cmd))
            return run_div(div_a, div_b, div_method, emit_trace, out);
        if (app.got_subcommand(encode_cmd)) return run_encode(encode_value, emit_trace, out);
        if (app.got_subcommand(verify_cmd))
            return run_verify(verify_all_flag && claim.empty() ? "" : claim, seed, samples,
                              emit_trace, out);
        if (app.got_subcommand(render_cmd))
            return run_render(in_file, format, refinement, hide_families, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}
