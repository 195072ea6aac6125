#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qident/arith.hpp"
#include "qident/errors.hpp"
#include "qident/partition.hpp"
#include "qident/series.hpp"

namespace qident {

/* The identities the verifier knows. thm1/2/3 compare a q-series expansion
 * against a weighted partition sum coefficient by coefficient; thm4/cor1/cor2
 * compare a weighted partition sum against a divisor sum; ex1/ex2/ex3 are the
 * fixed specializations with closed-form divisor sides. */
enum class IdentityTag { thm1, thm2, thm3, thm4, cor1, cor2, ex1, ex2, ex3 };

inline const char* to_string(IdentityTag tag) {
    switch (tag) {
        case IdentityTag::thm1: return "thm1";
        case IdentityTag::thm2: return "thm2";
        case IdentityTag::thm3: return "thm3";
        case IdentityTag::thm4: return "thm4";
        case IdentityTag::cor1: return "cor1";
        case IdentityTag::cor2: return "cor2";
        case IdentityTag::ex1: return "ex1";
        case IdentityTag::ex2: return "ex2";
        case IdentityTag::ex3: return "ex3";
    }
    return "?";
}

inline IdentityTag parse_identity_tag(const std::string& name) {
    for (IdentityTag tag : {IdentityTag::thm1, IdentityTag::thm2, IdentityTag::thm3,
                            IdentityTag::thm4, IdentityTag::cor1, IdentityTag::cor2,
                            IdentityTag::ex1, IdentityTag::ex2, IdentityTag::ex3})
        if (name == to_string(tag)) return tag;
    throw InvalidParameter("unknown identity '" + name +
                           "' (want thm1|thm2|thm3|thm4|cor1|cor2|ex1|ex2|ex3)");
}

template <CoeffRing R>
constexpr const char* ring_mode_name() {
    if constexpr (std::same_as<R, Rational>)
        return "evaluated";
    else
        return "symbolic";
}

/* sum_{n>=1} a_n t u q^n ((1-u)t q^(n+1); q)_inf / (t q^n; q)_inf truncated
 * at q^N. Outer terms with n > N vanish mod q^(N+1) and are skipped; the
 * Pochhammer factors are built at full order N. */
template <CoeffRing R>
TruncatedSeries<R> thm1_lhs_series(const SeqValues& a, const R& t, const R& u, int order) {
    a.require(order);
    const R w = (R::one() - u) * t;
    const R tu = t * u;
    TruncatedSeries<R> total(order);
    for (int n = 1; n <= order; ++n) {
        auto term = pochhammer_inf(w, n + 1, order) * reciprocal(pochhammer_inf(t, n, order));
        total += shift(scale(R::from_rational(a.at(n)) * tu, term), n);
    }
    return total;
}

/* sum_{n>=1} a_n t u q^n ((1-u)t q; q)_(n-1) / (t q; q)_n truncated at q^N. */
template <CoeffRing R>
TruncatedSeries<R> thm2_lhs_series(const SeqValues& a, const R& t, const R& u, int order) {
    a.require(order);
    const R w = (R::one() - u) * t;
    const R tu = t * u;
    TruncatedSeries<R> total(order);
    for (int n = 1; n <= order; ++n) {
        auto term = pochhammer(w, 1, n - 1, order) * reciprocal(pochhammer(t, 1, n, order));
        total += shift(scale(R::from_rational(a.at(n)) * tu, term), n);
    }
    return total;
}

/* Double sum over n >= 1, i >= 0 with n + i <= N of
 * a_n t u q^(n+i) ((1-u)t q^(i+1); q)_(n-1) / (t q^(i+1); q)_n; the q^(n+i)
 * prefactor kills every other (n, i) pair mod q^(N+1). */
template <CoeffRing R>
TruncatedSeries<R> thm3_lhs_series(const SeqValues& a, const R& t, const R& u, int order) {
    a.require(order);
    const R w = (R::one() - u) * t;
    const R tu = t * u;
    TruncatedSeries<R> total(order);
    for (int n = 1; n <= order; ++n) {
        const R an_tu = R::from_rational(a.at(n)) * tu;
        for (int i = 0; n + i <= order; ++i) {
            auto term =
                pochhammer(w, i + 1, n - 1, order) * reciprocal(pochhammer(t, i + 1, n, order));
            total += shift(scale(an_tu, term), n + i);
        }
    }
    return total;
}

/* Factor table for the generic product identity
 * prod_{j>=1} psi_j(q^j) = sum_n q^n sum_{partitions} prod_j C_j(k_j):
 * factors[j-1][k] = C_j(k) for the explicitly listed factors; every factor
 * beyond the table is the constant series 1 (C_j(0) = tail = 1, C_j(k) = 0). */
template <CoeffRing R>
struct FineSpec {
    std::vector<std::vector<R>> factors;
    R tail = R::one();

    void validate() const {
        if (!(tail == R::one()))
            throw FineSpecInvalid("factors beyond the table must equal 1, got tail = " +
                                  tail.to_string());
        for (std::size_t j = 0; j < factors.size(); ++j)
            if (factors[j].empty())
                throw FineSpecInvalid("factor j = " + std::to_string(j + 1) +
                                      " lists no coefficients");
    }
};

/* prod_{j=1..J} psi_j(q^j) mod q^(N+1) with psi_j(q) = sum_k C_j(k) q^k. */
template <CoeffRing R>
TruncatedSeries<R> fine_product(const FineSpec<R>& spec, int order) {
    spec.validate();
    auto prod = TruncatedSeries<R>::one(order);
    for (std::size_t j = 1; j <= spec.factors.size(); ++j) {
        const auto& C = spec.factors[j - 1];
        TruncatedSeries<R> psi(order);
        for (std::size_t k = 0; k < C.size(); ++k) {
            const long e = static_cast<long>(j) * static_cast<long>(k);
            if (e > order) break;
            psi.set(static_cast<int>(e), C[k]);
        }
        prod = prod * psi;
    }
    return prod;
}

/* sum over partitions of n of prod_j C_j(k_j), with C_j(k) = 0 for k beyond
 * a factor's list and the all-but-finitely-many tail factors equal to 1.
 * n = 0 is the empty partition: the product of the C_j(0). */
template <CoeffRing R>
R fine_partition_sum(const FineSpec<R>& spec, int n) {
    spec.validate();
    if (n < 0) throw InvalidParameter("fine_partition_sum: n must be >= 0");
    const int J = static_cast<int>(spec.factors.size());
    const auto factor_at = [&](int j, int kj) -> R {
        if (j > J) return kj == 0 ? R::one() : R::zero();
        const auto& C = spec.factors[j - 1];
        if (kj >= static_cast<int>(C.size())) return R::zero();
        return C[kj];
    };
    if (n == 0) {
        R prod = R::one();
        for (int j = 1; j <= J; ++j) prod = prod * factor_at(j, 0);
        return prod;
    }
    R acc = R::zero();
    enumerate_partitions(n, [&](const Partition& p) {
        R prod = R::one();
        const int top = std::max(J, static_cast<int>(p.mult.size()));
        for (int j = 1; j <= top && !prod.is_zero(); ++j)
            prod = prod * factor_at(j, p.multiplicity(j));
        acc = acc + prod;
    });
    return acc;
}

/* Per-n comparison record of the two sides of an identity. */
template <CoeffRing R>
struct IdentityReport {
    struct Row {
        int n;
        R lhs;
        R rhs;
        bool pass;
    };

    std::string identity;
    std::string mode;
    std::string t_text;
    std::string u_text;
    std::string seq_text;
    int n_max = 0;
    std::vector<Row> rows;
    bool overall = true;
    int first_failure = -1;  // -1: none

    void add_row(int n, R lhs, R rhs) {
        const bool pass = lhs == rhs;
        if (!pass && overall) {
            overall = false;
            first_failure = n;
        }
        rows.push_back(Row{n, std::move(lhs), std::move(rhs), pass});
    }

    /* Re-derive overall/first_failure after rows were edited in place. */
    void recompute() {
        overall = true;
        first_failure = -1;
        for (auto& row : rows) {
            row.pass = row.lhs == row.rhs;
            if (!row.pass && overall) {
                overall = false;
                first_failure = row.n;
            }
        }
    }
};

/* Compare the product expansion against the partition sums for n = 0..N. */
template <CoeffRing R>
IdentityReport<R> fine_report(const FineSpec<R>& spec, int order) {
    IdentityReport<R> rep;
    rep.identity = "fine";
    rep.mode = ring_mode_name<R>();
    rep.n_max = order;
    const auto prod = fine_product(spec, order);
    for (int n = 0; n <= order; ++n) rep.add_row(n, prod[n], fine_partition_sum(spec, n));
    return rep;
}

/* One parameter of the series transformation checker: coeff * q^exp. */
struct QMonomial {
    Rational coeff;
    int exp = 0;

    std::string to_string() const {
        return coeff.to_string() + "*q^" + std::to_string(exp);
    }
};

namespace detail {

/* (x; q)_count as a truncated series for a monomial x = c q^e. An e = 0
 * parameter contributes its constant factor (1 - c) once, then continues at
 * exponent 1. */
inline TruncatedSeries<Rational> poch_monomial(const QMonomial& x, long count, int order) {
    if (x.coeff.is_zero() || count == 0) return TruncatedSeries<Rational>::one(order);
    if (count > static_cast<long>(order) + 1) count = static_cast<long>(order) + 1;
    if (x.exp >= 1) return pochhammer(x.coeff, x.exp, static_cast<int>(count), order);
    return scale(Rational(1) - x.coeff, pochhammer(x.coeff, 1, static_cast<int>(count) - 1, order));
}

inline TruncatedSeries<Rational> poch_monomial_inf(const QMonomial& x, int order) {
    if (x.coeff.is_zero()) return TruncatedSeries<Rational>::one(order);
    if (x.exp >= 1) return pochhammer_inf(x.coeff, x.exp, order);
    return scale(Rational(1) - x.coeff, pochhammer_inf(x.coeff, 1, order));
}

}  // namespace detail

/* Checks the basic hypergeometric transformation
 *
 *   sum_{i>=0} (a)_i (b)_i / ((q)_i (c)_i) z^i
 *     = (c/b)_inf (bz)_inf / ((c)_inf (z)_inf)
 *       * sum_{j>=0} (abz/c)_j (b)_j (c/b)^j / ((q)_j (bz)_j)
 *
 * coefficientwise mod q^(N+1), for monomial parameters alpha q^e. The checks
 * below guarantee every reciprocal has a unit constant term and that both
 * sums gain q-valuation per term, so the truncated expansion is finite. */
inline IdentityReport<Rational> heine_check(const QMonomial& a, const QMonomial& b,
                                            const QMonomial& c, const QMonomial& z, int order) {
    for (const auto* m : {&a, &b, &c, &z})
        if (m->exp < 0) throw InvalidParameter("monomial parameters need q-exponent >= 0");
    if (b.coeff.is_zero()) throw InvalidParameter("parameter b must be nonzero");
    if (c.coeff.is_zero()) throw InvalidParameter("parameter c must be nonzero");
    if (!z.coeff.is_zero() && z.exp < 1)
        throw InvalidParameter("parameter z needs q-exponent >= 1 (or z = 0) so that the series "
                               "terminates and (z)_inf is invertible");
    const QMonomial cb{c.coeff / b.coeff, c.exp - b.exp};
    if (cb.exp < 1)
        throw InvalidParameter("c/b needs q-exponent >= 1 so that the transformed series "
                               "terminates and (c)_inf is invertible");
    const Rational abz_coeff = a.coeff * b.coeff * z.coeff;
    const QMonomial bz{b.coeff * z.coeff, z.coeff.is_zero() ? 0 : b.exp + z.exp};
    const QMonomial abzc{abz_coeff / c.coeff,
                         abz_coeff.is_zero() ? 0 : a.exp + b.exp + z.exp - c.exp};
    if (!abz_coeff.is_zero() && abzc.exp < 0)
        throw InvalidParameter("abz/c needs q-exponent >= 0 to be a formal series parameter");

    const QMonomial qmono{Rational(1), 1};
    const int N = order;

    TruncatedSeries<Rational> lhs(N);
    if (z.coeff.is_zero()) {
        lhs = TruncatedSeries<Rational>::one(N);
    } else {
        for (long i = 0; i * z.exp <= N; ++i) {
            auto num = detail::poch_monomial(a, i, N) * detail::poch_monomial(b, i, N);
            auto den = detail::poch_monomial(qmono, i, N) * detail::poch_monomial(c, i, N);
            lhs += shift(scale(z.coeff.pow(i), num * reciprocal(den)), static_cast<int>(i) * z.exp);
        }
    }

    auto prefactor = detail::poch_monomial_inf(cb, N) * detail::poch_monomial_inf(bz, N) *
                     reciprocal(detail::poch_monomial_inf(c, N)) *
                     reciprocal(detail::poch_monomial_inf(z, N));
    TruncatedSeries<Rational> transformed(N);
    for (long j = 0; j * cb.exp <= N; ++j) {
        auto num = detail::poch_monomial(abzc, j, N) * detail::poch_monomial(b, j, N);
        auto den = detail::poch_monomial(qmono, j, N) * detail::poch_monomial(bz, j, N);
        transformed +=
            shift(scale(cb.coeff.pow(j), num * reciprocal(den)), static_cast<int>(j) * cb.exp);
    }
    const auto rhs = prefactor * transformed;

    IdentityReport<Rational> rep;
    rep.identity = "heine";
    rep.mode = "evaluated";
    rep.seq_text = "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string() +
                   " z=" + z.to_string();
    rep.n_max = N;
    for (int m = 0; m <= N; ++m) rep.add_row(m, lhs[m], rhs[m]);
    return rep;
}

namespace detail {

inline SeqValues builtin_sequence(IdentityTag tag, int n_max) {
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(n_max));
    for (int i = 1; i <= n_max; ++i) {
        switch (tag) {
            case IdentityTag::ex1: v.emplace_back(i); break;
            case IdentityTag::ex2: v.emplace_back(static_cast<long>(i) * i); break;
            default: v.emplace_back(i % 2 == 1 ? 1 : 0); break;  // ex3 parity sequence
        }
    }
    return SeqValues(std::move(v));
}

}  // namespace detail

/* Runs both sides of an identity for n = 1..n_max and reports per-n equality.
 * thm1/2/3 use all of (a, t, u); thm4/cor1/cor2 use (a, t) and ignore u;
 * ex1/ex2/ex3 are fully fixed (a and t = -1 built in) with rational closed
 * forms on the divisor side, embedded into R. */
template <CoeffRing R>
IdentityReport<R> check_identity(IdentityTag which, const SeqValues& a, const R& t, const R& u,
                                 int n_max, const std::string& seq_desc = "") {
    if (n_max < 1) throw InvalidParameter("n_max must be >= 1");
    IdentityReport<R> rep;
    rep.identity = to_string(which);
    rep.mode = ring_mode_name<R>();
    rep.t_text = t.to_string();
    const bool uses_u = which == IdentityTag::thm1 || which == IdentityTag::thm2 ||
                        which == IdentityTag::thm3;
    rep.u_text = uses_u ? u.to_string() : "";
    rep.seq_text = seq_desc;
    rep.n_max = n_max;

    switch (which) {
        case IdentityTag::thm1: {
            a.require(n_max);
            const auto lhs = thm1_lhs_series(a, t, u, n_max);
            for (int n = 1; n <= n_max; ++n) rep.add_row(n, lhs[n], smallest_part_sum(n, a, t, u));
            break;
        }
        case IdentityTag::thm2: {
            a.require(n_max);
            const auto lhs = thm2_lhs_series(a, t, u, n_max);
            for (int n = 1; n <= n_max; ++n) rep.add_row(n, lhs[n], largest_part_sum(n, a, t, u));
            break;
        }
        case IdentityTag::thm3: {
            a.require(n_max);
            const auto lhs = thm3_lhs_series(a, t, u, n_max);
            for (int n = 1; n <= n_max; ++n) rep.add_row(n, lhs[n], window_sum(n, a, t, u));
            break;
        }
        case IdentityTag::thm4:
            a.require(n_max);
            for (int n = 1; n <= n_max; ++n)
                rep.add_row(n, thm4_partition_sum(n, a, t), thm4_divisor_sum(n, a, t));
            break;
        case IdentityTag::cor1:
            a.require(n_max);
            for (int n = 1; n <= n_max; ++n)
                rep.add_row(n, cor1_partition_sum(n, a, t), cor1_divisor_sum(n, a, t));
            break;
        case IdentityTag::cor2:
            a.require(n_max);
            for (int n = 1; n <= n_max; ++n)
                rep.add_row(n, cor2_partition_sum(n, a, t),
                            R::from_rational(cor2_divisor_sum(n, a)));
            break;
        case IdentityTag::ex1:
        case IdentityTag::ex2: {
            const SeqValues seq = detail::builtin_sequence(which, n_max);
            const R minus_one = R::from_rational(Rational(-1));
            rep.t_text = "-1";
            rep.seq_text = which == IdentityTag::ex1 ? "n" : "n^2";
            const bool linear = which == IdentityTag::ex1;
            for (int n = 1; n <= n_max; ++n) {
                const Rational closed = (Rational(sigma(linear ? 1 : 2, n)) +
                                         (linear ? Rational(tau_odd(n)) : Rational(sigma(1, n)))) /
                                        Rational(2);
                rep.add_row(n, thm4_partition_sum(n, seq, minus_one), R::from_rational(closed));
            }
            break;
        }
        case IdentityTag::ex3: {
            const SeqValues seq = detail::builtin_sequence(which, n_max);
            const R minus_one = R::from_rational(Rational(-1));
            rep.t_text = "-1";
            rep.seq_text = "(1-(-1)^n)/2";
            for (int n = 1; n <= n_max; ++n)
                rep.add_row(n, cor2_partition_sum(n, seq, minus_one),
                            R::from_rational(Rational(tau_odd(n))));
            break;
        }
    }
    return rep;
}

}  // namespace qident
