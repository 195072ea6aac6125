#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qident/errors.hpp"
#include "qident/ring.hpp"

namespace qident {

/* A 1-based sequence a_1..a_N of exact rationals. Index 0 is never stored;
 * wherever a_0 is needed it reads as 0. */
class SeqValues {
public:
    SeqValues() = default;
    explicit SeqValues(std::vector<Rational> values) : v_(std::move(values)) {}

    int size() const { return static_cast<int>(v_.size()); }

    const Rational& at(int i) const {
        static const Rational implicit_zero{};
        if (i == 0) return implicit_zero;
        if (i < 1 || i > size())
            throw SequenceTooShort("sequence of length " + std::to_string(size()) +
                                   " has no term a_" + std::to_string(i));
        return v_[static_cast<std::size_t>(i - 1)];
    }

    void require(int n) const {
        if (size() < n)
            throw SequenceTooShort("sequence of length " + std::to_string(size()) +
                                   " is shorter than n = " + std::to_string(n));
    }

    void push_back(Rational value) { v_.push_back(std::move(value)); }

    const std::vector<Rational>& values() const { return v_; }

private:
    std::vector<Rational> v_;
};

/* All divisors of n, ascending. Trial division up to sqrt(n). */
inline std::vector<long> divisors(long n) {
    if (n < 1) throw InvalidParameter("divisors: n must be >= 1");
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        ds.push_back(d);
        if (d != n / d) ds.push_back(n / d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

/* sigma_k(n) = sum of k-th powers of the divisors of n. */
inline mpz_class sigma(int k, long n) {
    if (k < 0) throw InvalidParameter("sigma: k must be >= 0");
    mpz_class total = 0;
    for (long d : divisors(n)) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(k));
        total += p;
    }
    return total;
}

/* Number of odd divisors of n. */
inline long tau_odd(long n) {
    long count = 0;
    for (long d : divisors(n))
        if (d % 2 == 1) ++count;
    return count;
}

/* Moebius mu(n) by trial-division factorization: 0 on a squared prime
 * factor, otherwise (-1)^(number of prime factors). */
inline int mobius(long n) {
    if (n < 1) throw InvalidParameter("mobius: n must be >= 1");
    int primes = 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++primes;
    }
    if (n > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

/* b_n = sum_{d | n} a_d for n = 1..N. */
inline SeqValues divisor_transform(const SeqValues& a, int N) {
    a.require(N);
    std::vector<Rational> b(N);
    for (int d = 1; d <= N; ++d)
        for (int m = d; m <= N; m += d) b[m - 1] += a.at(d);
    return SeqValues(std::move(b));
}

/* a_n = sum_{d | n} mu(n/d) b_d, the inverse of divisor_transform. */
inline SeqValues mobius_inverse(const SeqValues& b, int N) {
    b.require(N);
    std::vector<Rational> a(N);
    for (int n = 1; n <= N; ++n) {
        Rational total;
        for (long d : divisors(n)) total += Rational(mobius(n / d)) * b.at(d);
        a[n - 1] = total;
    }
    return SeqValues(std::move(a));
}

namespace detail {

template <CoeffRing R>
void require_t_not_zero_or_one(const R& t) {
    if (t.is_zero() || t == R::one())
        throw InvalidParameter("parameter t must not be 0 or 1 for this identity");
}

}  // namespace detail

/* Divisor side of the thm4 identity:
 * sum_{d | n} t^d (a_1 t^-1 + a_2 t^-2 + ... + a_d t^-d). */
template <CoeffRing R>
R thm4_divisor_sum(int n, const SeqValues& a, const R& t) {
    detail::require_t_not_zero_or_one(t);
    if (n < 1) throw InvalidParameter("n must be >= 1");
    a.require(n);
    const R t_inv = t.inverse();
    /* inner[d] = sum_{i=1..d} a_i t^-i, built as a running prefix */
    std::vector<R> inner;
    inner.reserve(n + 1);
    inner.push_back(R::zero());
    R ipow = R::one();
    for (int i = 1; i <= n; ++i) {
        ipow = ipow * t_inv;
        inner.push_back(inner.back() + R::from_rational(a.at(i)) * ipow);
    }
    const auto tp = ring_powers(t, n);
    R total = R::zero();
    for (long d : divisors(n)) total = total + tp[d] * inner[d];
    return total;
}

/* Divisor side of the cor1 identity: sum_{d | n} t^d (a_1 + ... + a_d). */
template <CoeffRing R>
R cor1_divisor_sum(int n, const SeqValues& a, const R& t) {
    detail::require_t_not_zero_or_one(t);
    if (n < 1) throw InvalidParameter("n must be >= 1");
    a.require(n);
    std::vector<Rational> prefix(n + 1);
    for (int i = 1; i <= n; ++i) prefix[i] = prefix[i - 1] + a.at(i);
    const auto tp = ring_powers(t, n);
    R total = R::zero();
    for (long d : divisors(n)) total = total + tp[d] * R::from_rational(prefix[d]);
    return total;
}

/* Divisor side of the cor2 identity: plain sum_{d | n} a_d. */
inline Rational cor2_divisor_sum(int n, const SeqValues& a) {
    if (n < 1) throw InvalidParameter("n must be >= 1");
    a.require(n);
    Rational total;
    for (long d : divisors(n)) total += a.at(d);
    return total;
}

}  // namespace qident
