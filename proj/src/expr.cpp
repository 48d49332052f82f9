#include "ninepalace/expr.hpp"

#include <cctype>
#include <memory>
#include <vector>

#include "ninepalace/addition.hpp"
#include "ninepalace/division.hpp"
#include "ninepalace/multiplication.hpp"

namespace ninepalace {

namespace {

struct Token {
    char kind; // 'n' number, '+', '-', '*', '/', 'e' end
    std::string text;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view expr) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < expr.size()) {
        unsigned char c = static_cast<unsigned char>(expr[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t start = i;
            while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) ++i;
            tokens.push_back({'n', std::string(expr.substr(start, i - start)), start});
            continue;
        }
        if (c == '+' || c == '-') {
            tokens.push_back({static_cast<char>(c), std::string(1, expr[i]), i});
            ++i;
            continue;
        }
        if (c == '*') {
            tokens.push_back({'*', "*", i});
            ++i;
            continue;
        }
        if (c == '/') {
            tokens.push_back({'/', "/", i});
            ++i;
            continue;
        }
        // UTF-8 multiplication and division signs.
        if (c == 0xC3 && i + 1 < expr.size()) {
            unsigned char d = static_cast<unsigned char>(expr[i + 1]);
            if (d == 0x97) {
                tokens.push_back({'*', "×", i});
                i += 2;
                continue;
            }
            if (d == 0xB7) {
                tokens.push_back({'/', "÷", i});
                i += 2;
                continue;
            }
        }
        throw ParseError("unexpected character '" + std::string(1, expr[i]) + "' at position " +
                             std::to_string(i),
                         i);
    }
    tokens.push_back({'e', "", expr.size()});
    return tokens;
}

struct Node {
    char op; // 'n' for a literal
    DigitSequence number;
    std::size_t pos = 0;
    std::unique_ptr<Node> lhs, rhs;
};

struct Parser {
    const std::vector<Token>& tokens;
    std::size_t at = 0;

    const Token& peek() const { return tokens[at]; }
    Token take() { return tokens[at++]; }

    std::unique_ptr<Node> parse_factor() {
        int sign = 1;
        std::size_t pos = peek().pos;
        while (peek().kind == '+' || peek().kind == '-') {
            if (take().kind == '-') sign = -sign;
        }
        if (peek().kind != 'n')
            throw ParseError("expected a number at position " + std::to_string(peek().pos),
                             peek().pos);
        Token t = take();
        auto node = std::make_unique<Node>();
        node->op = 'n';
        node->pos = pos;
        node->number = DigitSequence::parse(t.text);
        node->number.sign = node->number.is_zero() ? 1 : sign;
        return node;
    }

    std::unique_ptr<Node> parse_term() {
        auto lhs = parse_factor();
        while (peek().kind == '*' || peek().kind == '/') {
            Token op = take();
            auto node = std::make_unique<Node>();
            node->op = op.kind;
            node->pos = op.pos;
            node->lhs = std::move(lhs);
            node->rhs = parse_factor();
            lhs = std::move(node);
        }
        return lhs;
    }

    std::unique_ptr<Node> parse_expr() {
        auto lhs = parse_term();
        while (peek().kind == '+' || peek().kind == '-') {
            Token op = take();
            auto node = std::make_unique<Node>();
            node->op = op.kind;
            node->pos = op.pos;
            node->lhs = std::move(lhs);
            node->rhs = parse_term();
            lhs = std::move(node);
        }
        return lhs;
    }
};

DigitSequence magnitude(const DigitSequence& v) {
    DigitSequence m = v.canonical();
    m.sign = 1;
    return m;
}

DigitSequence add_signed(const DigitSequence& a, const DigitSequence& b, StepTrace& trace) {
    DigitSequence ma = magnitude(a), mb = magnitude(b);
    if (a.sign == b.sign) {
        SequenceSum s = add_sequences(ma, mb);
        trace.append(s.trace);
        DigitSequence out = s.result;
        out.sign = out.is_zero() ? 1 : a.sign;
        return out.canonical();
    }
    int cmp = compare_magnitude(ma, mb);
    if (cmp == 0) return DigitSequence::from_value(0);
    SequenceSum s = cmp > 0 ? sub_sequences(ma, mb) : sub_sequences(mb, ma);
    trace.append(s.trace);
    DigitSequence out = s.result;
    out.sign = out.is_zero() ? 1 : (cmp > 0 ? a.sign : b.sign);
    return out.canonical();
}

DigitSequence mul_signed(const DigitSequence& a, const DigitSequence& b, StepTrace& trace) {
    DigitSequence ma = magnitude(a), mb = magnitude(b);
    int sign = a.sign * b.sign;
    DigitSequence out;
    if (mb.size() == 1) {
        MulResult m = mul_long_by_digit(ma, mb.digit(0));
        trace.append(m.trace);
        out = m.product;
    } else if (ma.size() == 1) {
        MulResult m = mul_long_by_digit(mb, ma.digit(0));
        trace.append(m.trace);
        out = m.product;
    } else {
        out = mul_compose(ma, mb);
        TraceStep s = make_step("mark", {0, 5}, {0, 5});
        s.events.push_back({"annotation",
                            ma.str() + " x " + mb.str() + " composed from digit rows"});
        trace.append(std::move(s));
    }
    out.sign = out.is_zero() ? 1 : sign;
    return out.canonical();
}

DigitSequence div_signed(const DigitSequence& a, const DigitSequence& b, StepTrace& trace) {
    DigitSequence ma = magnitude(a), mb = magnitude(b);
    if (mb.size() != 1 || mb.digit(0) == 0)
        throw EvalError("divisor must be a nonzero single digit, got " + mb.str());
    GeneralDivResult d = div_general(ma, mb.digit(0));
    trace.append(d.trace);
    if (d.remainder != 0)
        throw EvalError("inexact division: " + ma.str() + " / " + mb.str() + " leaves remainder " +
                        std::to_string(d.remainder));
    DigitSequence out = d.quotient;
    out.sign = out.is_zero() ? 1 : a.sign * b.sign;
    return out.canonical();
}

DigitSequence eval_node(const Node& n, StepTrace& trace) {
    if (n.op == 'n') return n.number;
    DigitSequence lhs = eval_node(*n.lhs, trace);
    DigitSequence rhs = eval_node(*n.rhs, trace);
    switch (n.op) {
    case '+': return add_signed(lhs, rhs, trace);
    case '-': {
        DigitSequence neg = rhs;
        neg.sign = neg.is_zero() ? 1 : -neg.sign;
        return add_signed(lhs, neg, trace);
    }
    case '*': return mul_signed(lhs, rhs, trace);
    default: return div_signed(lhs, rhs, trace);
    }
}

// A pure chain of single-digit terms evaluates as one successive walk.
bool walk_chain_deltas(const std::vector<Token>& tokens, std::vector<SignedDigit>& deltas) {
    std::size_t i = 0;
    int lead = 1;
    if (tokens[i].kind == '+' || tokens[i].kind == '-') {
        if (tokens[i].kind == '-') lead = -1;
        ++i;
    }
    if (tokens[i].kind != 'n' || tokens[i].text.size() != 1) return false;
    deltas.push_back({tokens[i].text[0] - '0', lead});
    ++i;
    while (tokens[i].kind != 'e') {
        if (tokens[i].kind != '+' && tokens[i].kind != '-') return false;
        int sign = tokens[i].kind == '-' ? -1 : 1;
        ++i;
        if (tokens[i].kind != 'n' || tokens[i].text.size() != 1) return false;
        deltas.push_back({tokens[i].text[0] - '0', sign});
        ++i;
    }
    return true;
}

} // namespace

DigitSequence mul_compose(const DigitSequence& a, const DigitSequence& b) {
    DigitSequence acc = DigitSequence::from_value(0);
    for (auto digit : b.canonical().digits) {
        if (!acc.is_zero()) acc.digits.push_back(0); // shift one decimal place
        MulResult row = mul_long_by_digit(a.canonical(), digit);
        acc = add_sequences(acc, row.product).result;
    }
    return acc.canonical();
}

EvalOutcome eval_expression(std::string_view expr) {
    std::vector<Token> tokens = tokenize(expr);
    if (tokens.size() == 1) throw ParseError("empty expression", 0);

    EvalOutcome out;
    std::vector<SignedDigit> deltas;
    if (walk_chain_deltas(tokens, deltas)) {
        WalkResult w = eval_walk(0, deltas);
        out.value = DigitSequence::from_value(w.end.value());
        out.trace = std::move(w.trace);
        return out;
    }

    Parser parser{tokens};
    auto root = parser.parse_expr();
    if (parser.peek().kind != 'e')
        throw ParseError("unexpected token at position " + std::to_string(parser.peek().pos),
                         parser.peek().pos);
    out.value = eval_node(*root, out.trace);
    return out;
}

} // namespace ninepalace
