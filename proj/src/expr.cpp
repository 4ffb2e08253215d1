#include "halg/expr.hpp"

#include <cctype>

#include "halg/errors.hpp"

namespace halg {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    char take() {
        char c = peek();
        if (c) ++pos;
        return c;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("expression '" + text + "' at position " + std::to_string(pos) + ": " + what);
    }
};

struct Parser {
    Lexer lex;
    const ExprOptions& opts;

    Parser(const std::string& text, const ExprOptions& o) : lex(text), opts(o) {}

    FormalPoly parse() {
        FormalPoly p = expr();
        if (lex.peek() != '\0') lex.fail("unexpected trailing input");
        return p;
    }

    FormalPoly expr() {
        FormalPoly p = term();
        for (;;) {
            char c = lex.peek();
            if (c == '+') { lex.take(); p += term(); }
            else if (c == '-') { lex.take(); p -= term(); }
            else return p;
        }
    }

    FormalPoly term() {
        FormalPoly p = factor();
        for (;;) {
            char c = lex.peek();
            if (c == '*') {
                lex.take();
                p *= factor();
            } else if (c == '/') {
                lex.take();
                FormalPoly q = factor();
                if (!q.is_constant()) lex.fail("denominator contains a formal variable");
                Scalar d = q.constant_value();
                if (d.is_zero()) lex.fail("division by zero");
                p = p * (Scalar(1) / d);
            } else {
                return p;
            }
        }
    }

    FormalPoly factor() {
        bool neg = false;
        for (;;) {
            char c = lex.peek();
            if (c == '-') { lex.take(); neg = !neg; }
            else if (c == '+') { lex.take(); }
            else break;
        }
        FormalPoly p = primary();
        if (lex.peek() == '^') {
            lex.take();
            bool eneg = false;
            if (lex.peek() == '-') { lex.take(); eneg = true; }
            long e = integer_literal();
            if (eneg) {
                if (!p.is_constant()) lex.fail("negative power of a formal variable");
                p = FormalPoly(p.constant_value().pow(-static_cast<int>(e)));
            } else {
                p = p.pow(static_cast<unsigned>(e));
            }
        }
        return neg ? -p : p;
    }

    FormalPoly primary() {
        char c = lex.peek();
        if (c == '(') {
            lex.take();
            FormalPoly p = expr();
            if (lex.peek() != ')') lex.fail("expected ')'");
            lex.take();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return FormalPoly(Scalar(Rat(Int(digits()))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id = identifier();
            if (id == "D" || id == "Lm" || id == "Mu") {
                if (!opts.allow_formal)
                    lex.fail("formal variable " + id + " is not allowed here");
                if (id == "D") return FormalPoly::variable(FVar::D);
                if (id == "Lm") return FormalPoly::variable(FVar::Lm);
                return FormalPoly::variable(FVar::Mu);
            }
            if (opts.allowed_params && !opts.allowed_params->count(id))
                throw UnknownName("parameter '" + id + "' is not declared");
            return FormalPoly(Scalar::param(id));
        }
        lex.fail("expected a number, name or '('");
    }

    long integer_literal() {
        char c = lex.peek();
        if (!std::isdigit(static_cast<unsigned char>(c))) lex.fail("expected an integer");
        std::string ds = digits();
        if (ds.size() > 6) lex.fail("exponent too large");
        return std::stol(ds);
    }

    std::string digits() {
        lex.skip_ws();
        std::string out;
        while (lex.pos < lex.text.size() && std::isdigit(static_cast<unsigned char>(lex.text[lex.pos])))
            out += lex.text[lex.pos++];
        return out;
    }

    std::string identifier() {
        lex.skip_ws();
        std::string out;
        while (lex.pos < lex.text.size()) {
            char c = lex.text[lex.pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') { out += c; ++lex.pos; }
            else break;
        }
        return out;
    }
};

} // namespace

FormalPoly parse_formal(const std::string& text, const ExprOptions& opts) {
    Parser p(text, opts);
    return p.parse();
}

Scalar parse_scalar(const std::string& text, const ExprOptions& opts) {
    ExprOptions o = opts;
    o.allow_formal = false;
    Parser p(text, o);
    return p.parse().constant_value();
}

} // namespace halg
