#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "qident/arith.hpp"
#include "qident/errors.hpp"
#include "qident/rational.hpp"

namespace qident {

/* AST of an arithmetic expression in one variable n, used to define
 * sequences a_n from the command line. Exact rational arithmetic only:
 * integer literals, + - * / ^, unary minus, and mod(x, m). */
struct SeqExpr {
    enum class Kind { Literal, Var, Neg, Add, Sub, Mul, Div, Pow, Mod };

    Kind kind;
    Rational literal;  // Kind::Literal only
    std::unique_ptr<SeqExpr> lhs;
    std::unique_ptr<SeqExpr> rhs;
};

using SeqExprPtr = std::unique_ptr<SeqExpr>;

namespace detail {

inline SeqExprPtr make_node(SeqExpr::Kind kind, SeqExprPtr lhs = nullptr, SeqExprPtr rhs = nullptr) {
    auto e = std::make_unique<SeqExpr>();
    e->kind = kind;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
}

/* Recursive descent with precedence ^ > unary minus > * / > + -.
 * + - * / associate left, ^ associates right. Offsets in errors are 0-based
 * byte positions into the original text. */
class SeqExprParser {
public:
    explicit SeqExprParser(std::string_view text) : text_(text) {}

    SeqExprPtr parse() {
        auto e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    int peek() {
        skip_ws();
        return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(pos_, what);
    }

    SeqExprPtr parse_sum() {
        auto lhs = parse_product();
        for (;;) {
            if (eat('+'))
                lhs = make_node(SeqExpr::Kind::Add, std::move(lhs), parse_product());
            else if (eat('-'))
                lhs = make_node(SeqExpr::Kind::Sub, std::move(lhs), parse_product());
            else
                return lhs;
        }
    }

    SeqExprPtr parse_product() {
        auto lhs = parse_factor();
        for (;;) {
            if (eat('*'))
                lhs = make_node(SeqExpr::Kind::Mul, std::move(lhs), parse_factor());
            else if (eat('/'))
                lhs = make_node(SeqExpr::Kind::Div, std::move(lhs), parse_factor());
            else
                return lhs;
        }
    }

    SeqExprPtr parse_factor() {
        if (eat('-')) return make_node(SeqExpr::Kind::Neg, parse_factor());
        return parse_power();
    }

    SeqExprPtr parse_power() {
        auto base = parse_atom();
        if (!eat('^')) return base;
        SeqExprPtr exp;
        if (eat('-'))
            exp = make_node(SeqExpr::Kind::Neg, parse_power());
        else
            exp = parse_power();
        return make_node(SeqExpr::Kind::Pow, std::move(base), std::move(exp));
    }

    SeqExprPtr parse_atom() {
        const int c = peek();
        if (c >= '0' && c <= '9') return parse_integer();
        if (c == '(') {
            ++pos_;
            auto inner = parse_sum();
            expect(')', "expected ')'");
            return inner;
        }
        if (c > 0 && (std::isalpha(c) != 0 || c == '_')) return parse_identifier();
        throw ParseError(pos_, "expected a number, 'n', 'mod(...)', '(' or '-'");
    }

    SeqExprPtr parse_integer() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        auto e = make_node(SeqExpr::Kind::Literal);
        e->literal = Rational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10));
        return e;
    }

    SeqExprPtr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        if (name == "n") return make_node(SeqExpr::Kind::Var);
        if (name == "mod") {
            expect('(', "expected '(' after mod");
            auto x = parse_sum();
            expect(',', "expected ',' between mod arguments");
            auto m = parse_sum();
            expect(')', "expected ')'");
            return make_node(SeqExpr::Kind::Mod, std::move(x), std::move(m));
        }
        throw ParseError(start, "unknown identifier '" + name + "'");
    }
};

inline mpz_class integer_value(const Rational& v, long n, const char* where) {
    if (!v.is_integer())
        throw InvalidParameter(std::string(where) + " must be an integer, got " + v.to_string() +
                               " at n = " + std::to_string(n));
    return v.numerator();
}

}  // namespace detail

inline SeqExprPtr parse_sequence_expr(std::string_view text) {
    return detail::SeqExprParser(text).parse();
}

/* Exact evaluation at a concrete n. Division by zero and zero raised to a
 * negative power report the offending n. */
inline Rational eval_at(const SeqExpr& e, long n) {
    switch (e.kind) {
        case SeqExpr::Kind::Literal:
            return e.literal;
        case SeqExpr::Kind::Var:
            return Rational(n);
        case SeqExpr::Kind::Neg:
            return -eval_at(*e.lhs, n);
        case SeqExpr::Kind::Add:
            return eval_at(*e.lhs, n) + eval_at(*e.rhs, n);
        case SeqExpr::Kind::Sub:
            return eval_at(*e.lhs, n) - eval_at(*e.rhs, n);
        case SeqExpr::Kind::Mul:
            return eval_at(*e.lhs, n) * eval_at(*e.rhs, n);
        case SeqExpr::Kind::Div: {
            const Rational den = eval_at(*e.rhs, n);
            if (den.is_zero())
                throw DivisionByZero("division by zero at n = " + std::to_string(n));
            return eval_at(*e.lhs, n) / den;
        }
        case SeqExpr::Kind::Pow: {
            const Rational base = eval_at(*e.lhs, n);
            const mpz_class exp = detail::integer_value(eval_at(*e.rhs, n), n, "exponent");
            if (!exp.fits_slong_p())
                throw InvalidParameter("exponent " + exp.get_str() + " is out of range");
            const long ei = exp.get_si();
            if (ei < 0 && base.is_zero())
                throw DivisionByZero("zero raised to a negative power at n = " + std::to_string(n));
            return base.pow(ei);
        }
        case SeqExpr::Kind::Mod: {
            const mpz_class x = detail::integer_value(eval_at(*e.lhs, n), n, "mod argument");
            const mpz_class m = detail::integer_value(eval_at(*e.rhs, n), n, "mod modulus");
            if (m == 0) throw DivisionByZero("mod with zero modulus at n = " + std::to_string(n));
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
            return Rational(r);
        }
    }
    throw InvalidParameter("corrupt expression node");
}

/* a_n = eval(e, n) for n = 1..N. */
inline SeqValues materialize(const SeqExpr& e, int N) {
    if (N < 0) throw InvalidParameter("materialize: N must be >= 0");
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) values.push_back(eval_at(e, n));
    return SeqValues(std::move(values));
}

/* Fully parenthesized form; parsing it back yields a structurally equal AST. */
inline std::string pretty_print(const SeqExpr& e) {
    switch (e.kind) {
        case SeqExpr::Kind::Literal:
            return e.literal.to_string();
        case SeqExpr::Kind::Var:
            return "n";
        case SeqExpr::Kind::Neg:
            return "(-" + pretty_print(*e.lhs) + ")";
        case SeqExpr::Kind::Add:
            return "(" + pretty_print(*e.lhs) + " + " + pretty_print(*e.rhs) + ")";
        case SeqExpr::Kind::Sub:
            return "(" + pretty_print(*e.lhs) + " - " + pretty_print(*e.rhs) + ")";
        case SeqExpr::Kind::Mul:
            return "(" + pretty_print(*e.lhs) + " * " + pretty_print(*e.rhs) + ")";
        case SeqExpr::Kind::Div:
            return "(" + pretty_print(*e.lhs) + " / " + pretty_print(*e.rhs) + ")";
        case SeqExpr::Kind::Pow:
            return "(" + pretty_print(*e.lhs) + " ^ " + pretty_print(*e.rhs) + ")";
        case SeqExpr::Kind::Mod:
            return "mod(" + pretty_print(*e.lhs) + ", " + pretty_print(*e.rhs) + ")";
    }
    return "?";
}

inline bool structurally_equal(const SeqExpr& x, const SeqExpr& y) {
    if (x.kind != y.kind) return false;
    if (x.kind == SeqExpr::Kind::Literal) return x.literal == y.literal;
    if ((x.lhs == nullptr) != (y.lhs == nullptr)) return false;
    if ((x.rhs == nullptr) != (y.rhs == nullptr)) return false;
    if (x.lhs && !structurally_equal(*x.lhs, *y.lhs)) return false;
    if (x.rhs && !structurally_equal(*x.rhs, *y.rhs)) return false;
    return true;
}

}  // namespace qident
