#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qident/errors.hpp"
#include "qident/ring.hpp"

namespace qident {

/* Formal power series in q over a coefficient ring, truncated at a fixed
 * order N: exactly the coefficients of q^0 .. q^N are stored and every
 * operation is exact mod q^(N+1). Binary operations insist on equal order on
 * both operands; nothing is promoted silently. */
template <CoeffRing R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) {
        if (order < 0) throw InvalidParameter("series order must be >= 0");
        coeffs_.assign(static_cast<std::size_t>(order) + 1, R::zero());
    }

    static TruncatedSeries constant(const R& c, int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    static TruncatedSeries one(int order) { return constant(R::one(), order); }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const R& operator[](int m) const { return coeffs_.at(static_cast<std::size_t>(m)); }

    void set(int m, R value) { coeffs_.at(static_cast<std::size_t>(m)) = std::move(value); }

    TruncatedSeries operator-() const {
        TruncatedSeries r(order());
        for (int m = 0; m <= order(); ++m) r.coeffs_[m] = -coeffs_[m];
        return r;
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        require_same_order(o, "+");
        TruncatedSeries r(order());
        for (int m = 0; m <= order(); ++m) r.coeffs_[m] = coeffs_[m] + o.coeffs_[m];
        return r;
    }

    TruncatedSeries operator-(const TruncatedSeries& o) const {
        require_same_order(o, "-");
        TruncatedSeries r(order());
        for (int m = 0; m <= order(); ++m) r.coeffs_[m] = coeffs_[m] - o.coeffs_[m];
        return r;
    }

    /* Cauchy product truncated at q^N. */
    TruncatedSeries operator*(const TruncatedSeries& o) const {
        require_same_order(o, "*");
        const int N = order();
        TruncatedSeries r(N);
        for (int i = 0; i <= N; ++i) {
            if (coeffs_[i].is_zero()) continue;
            for (int j = 0; i + j <= N; ++j) {
                if (o.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
            }
        }
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const TruncatedSeries& o) const { return coeffs_ != o.coeffs_; }

    std::string to_string() const {
        std::string out;
        bool any = false;
        for (int m = 0; m <= order(); ++m) {
            if (coeffs_[m].is_zero()) continue;
            if (any) out += " + ";
            out += "(" + coeffs_[m].to_string() + ")";
            if (m > 0) out += "*q^" + std::to_string(m);
            any = true;
        }
        return any ? out : "0";
    }

private:
    void require_same_order(const TruncatedSeries& o, const char* op) const {
        if (order() != o.order())
            throw OrderMismatch(std::string("series '") + op + "' on orders " +
                                std::to_string(order()) + " and " + std::to_string(o.order()));
    }

    std::vector<R> coeffs_;
};

/* Scalar multiple c * x. */
template <CoeffRing R>
TruncatedSeries<R> scale(const R& c, const TruncatedSeries<R>& x) {
    TruncatedSeries<R> r(x.order());
    if (c.is_zero()) return r;
    for (int m = 0; m <= x.order(); ++m)
        if (!x[m].is_zero()) r.set(m, c * x[m]);
    return r;
}

/* Multiplication by q^d: coefficients move up by d, the top d fall away. */
template <CoeffRing R>
TruncatedSeries<R> shift(const TruncatedSeries<R>& x, int d) {
    if (d < 0) throw InvalidParameter("shift distance must be >= 0");
    TruncatedSeries<R> r(x.order());
    for (int m = d; m <= x.order(); ++m) r.set(m, x[m - d]);
    return r;
}

/* Multiplicative inverse mod q^(N+1) via the convolution recurrence
 * y_0 = x_0^{-1}, y_m = -x_0^{-1} * sum_{i=1..m} x_i y_{m-i}. */
template <CoeffRing R>
TruncatedSeries<R> reciprocal(const TruncatedSeries<R>& x) {
    if (!x[0].is_unit())
        throw NotAUnit("series reciprocal needs a unit constant term, got " + x[0].to_string());
    const R inv0 = x[0].inverse();
    TruncatedSeries<R> y(x.order());
    y.set(0, inv0);
    for (int m = 1; m <= x.order(); ++m) {
        R acc = R::zero();
        for (int i = 1; i <= m; ++i) {
            if (x[i].is_zero() || y[m - i].is_zero()) continue;
            acc = acc + x[i] * y[m - i];
        }
        y.set(m, -(inv0 * acc));
    }
    return y;
}

/* Finite Pochhammer-style product prod_{i=0..count-1} (1 - c q^(start+i));
 * count = 0 gives 1. Factors whose exponent exceeds the order are 1 mod
 * q^(N+1) and are skipped. */
template <CoeffRing R>
TruncatedSeries<R> pochhammer(const R& c, int start, int count, int order) {
    if (start < 1) throw InvalidParameter("pochhammer exponent offset must be >= 1");
    if (count < 0) throw InvalidParameter("pochhammer factor count must be >= 0");
    auto prod = TruncatedSeries<R>::one(order);
    if (c.is_zero()) return prod;
    for (int i = 0; i < count; ++i) {
        const int e = start + i;
        if (e > order) break;
        /* In-place multiply by (1 - c q^e), descending so lower coefficients
         * are still the old ones when read. */
        for (int m = order; m >= e; --m) {
            if (prod[m - e].is_zero()) continue;
            prod.set(m, prod[m] - c * prod[m - e]);
        }
    }
    return prod;
}

/* Infinite product prod_{i>=0} (1 - c q^(start+i)) mod q^(N+1): only the
 * factors with exponent <= N differ from 1 there. */
template <CoeffRing R>
TruncatedSeries<R> pochhammer_inf(const R& c, int start, int order) {
    if (start < 1) throw InvalidParameter("pochhammer exponent offset must be >= 1");
    const int count = order - start + 1;
    return pochhammer(c, start, count > 0 ? count : 0, order);
}

}  // namespace qident
