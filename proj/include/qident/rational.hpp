#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "qident/errors.hpp"

namespace qident {

/* Exact rational number. Always stored reduced (gcd(|num|, den) = 1) with a
 * positive denominator, so equality is plain representation equality. */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // integers embed implicitly
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(mpz_class num, mpz_class den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(std::move(num), std::move(den));
        v_.canonicalize();
    }

    explicit Rational(const mpz_class& n) : v_(n) {}

    /* Accepts "p" or "p/q" with optional sign on either part; no decimals. */
    static Rational parse(const std::string& text) {
        auto is_int = [](const std::string& s) {
            std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (i == s.size()) return false;
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        const auto slash = text.find('/');
        const std::string num = text.substr(0, slash);
        const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
        if (!is_int(num) || !is_int(den))
            throw InvalidParameter("invalid rational literal '" + text + "' (want p or p/q)");
        return Rational(mpz_class(num, 10), mpz_class(den, 10));
    }

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& q) { return q; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /* Every nonzero rational is a unit. */
    bool is_unit() const { return !is_zero(); }

    Rational inverse() const {
        if (is_zero()) throw NotAUnit("zero has no inverse");
        return Rational(raw{}, 1 / v_);
    }

    Rational operator-() const { return Rational(raw{}, -v_); }
    Rational operator+(const Rational& o) const { return Rational(raw{}, v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(raw{}, v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(raw{}, v_ * o.v_); }

    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        return Rational(raw{}, v_ / o.v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    /* x^e; negative e inverts first and so requires x != 0. x^0 = 1 always. */
    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(raw{}, mpq_class(num) / mpq_class(den));
    }

    std::string to_string() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
        return s;
    }

private:
    struct raw {};  // operands already canonical; GMP keeps them canonical
    Rational(raw, mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

}  // namespace qident
