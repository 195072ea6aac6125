#pragma once

#include <map>
#include <string>
#include <utility>

#include "qident/errors.hpp"
#include "qident/rational.hpp"

namespace qident {

/* Bivariate polynomial with exact rational coefficients: Laurent in t (the
 * t-exponent may be negative) and ordinary in u (u-exponent >= 0). Zero
 * coefficients are never stored, and the term map is kept in lexicographic
 * (e_t, e_u) order, so two values are equal iff their maps are identical. */
class PolyTU {
public:
    using Key = std::pair<int, int>;  // (e_t, e_u)
    using TermMap = std::map<Key, Rational>;

    PolyTU() = default;

    static PolyTU zero() { return PolyTU(); }
    static PolyTU one() { return constant(Rational::one()); }
    static PolyTU from_rational(const Rational& c) { return constant(c); }

    static PolyTU constant(const Rational& c) { return monomial(c, 0, 0); }

    static PolyTU monomial(const Rational& c, int e_t, int e_u) {
        if (e_u < 0) throw InvalidParameter("u-exponent must be >= 0");
        PolyTU p;
        if (!c.is_zero()) p.terms_[{e_t, e_u}] = c;
        return p;
    }

    static PolyTU var_t() { return monomial(Rational::one(), 1, 0); }
    static PolyTU var_u() { return monomial(Rational::one(), 0, 1); }

    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
               terms_.begin()->second.is_one();
    }

    /* The units are exactly the nonzero monomials c * t^a: u never divides 1
     * because its exponents cannot go negative. */
    bool is_unit() const {
        return terms_.size() == 1 && terms_.begin()->first.second == 0;
    }

    PolyTU inverse() const {
        if (!is_unit())
            throw NotAUnit("only nonzero monomials c*t^a are invertible, got " + to_string());
        const auto& [key, c] = *terms_.begin();
        return monomial(c.inverse(), -key.first, 0);
    }

    PolyTU operator-() const {
        PolyTU r;
        for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
        return r;
    }

    PolyTU operator+(const PolyTU& o) const {
        PolyTU r = *this;
        for (const auto& [key, c] : o.terms_) r.add_term(key, c);
        return r;
    }

    PolyTU operator-(const PolyTU& o) const {
        PolyTU r = *this;
        for (const auto& [key, c] : o.terms_) r.add_term(key, -c);
        return r;
    }

    PolyTU operator*(const PolyTU& o) const {
        PolyTU r;
        for (const auto& [ka, ca] : terms_)
            for (const auto& [kb, cb] : o.terms_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }

    PolyTU& operator+=(const PolyTU& o) {
        for (const auto& [key, c] : o.terms_) add_term(key, c);
        return *this;
    }

    PolyTU& operator*=(const PolyTU& o) { return *this = *this * o; }

    bool operator==(const PolyTU& o) const { return terms_ == o.terms_; }
    bool operator!=(const PolyTU& o) const { return terms_ != o.terms_; }

    /* Substitute exact rational values for t and u. x^0 = 1 even at x = 0. */
    Rational eval(const Rational& t_val, const Rational& u_val) const {
        if (t_val.is_zero())
            for (const auto& [key, c] : terms_)
                if (key.first < 0)
                    throw EvalAtZero("cannot evaluate a negative t-exponent at t = 0");
        Rational total;
        for (const auto& [key, c] : terms_)
            total += c * t_val.pow(key.first) * u_val.pow(key.second);
        return total;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [key, c] : terms_) {
            std::string term;
            std::string vars;
            if (key.first != 0) vars += key.first == 1 ? "t" : "t^" + std::to_string(key.first);
            if (key.second != 0) {
                if (!vars.empty()) vars += "*";
                vars += key.second == 1 ? "u" : "u^" + std::to_string(key.second);
            }
            if (vars.empty()) {
                term = c.to_string();
            } else if (c.is_one()) {
                term = vars;
            } else if ((-c).is_one()) {
                term = "-" + vars;
            } else {
                term = c.to_string() + "*" + vars;
            }
            if (out.empty()) {
                out = term;
            } else if (term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out;
    }

private:
    void add_term(const Key& key, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

}  // namespace qident
