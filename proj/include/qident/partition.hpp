#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qident/arith.hpp"
#include "qident/errors.hpp"
#include "qident/ring.hpp"

namespace qident {

/* A partition of n as a multiplicity vector: mult[j-1] parts equal j, so
 * sum_j j*mult[j-1] = n. The vector may carry trailing zeros (the enumerator
 * hands out a full-length buffer); multiplicity() and stats() handle both. */
struct Partition {
    int n = 0;
    std::vector<int> mult;

    int multiplicity(int j) const {
        return j >= 1 && j <= static_cast<int>(mult.size()) ? mult[j - 1] : 0;
    }

    /* Parts descending, e.g. "3+1+1". */
    std::string to_string() const {
        std::string out;
        for (int j = static_cast<int>(mult.size()); j >= 1; --j)
            for (int c = 0; c < mult[j - 1]; ++c) {
                if (!out.empty()) out += "+";
                out += std::to_string(j);
            }
        return out;
    }
};

/* The four partition statistics: k = number of parts, Q = number of distinct
 * part values, s and l = smallest and largest part. */
struct PartitionStats {
    int k = 0;
    int Q = 0;
    int s = 0;
    int l = 0;
};

inline PartitionStats stats(const Partition& p) {
    PartitionStats st;
    for (int j = 1; j <= static_cast<int>(p.mult.size()); ++j) {
        const int kj = p.mult[j - 1];
        if (kj == 0) continue;
        st.k += kj;
        ++st.Q;
        if (st.s == 0) st.s = j;
        st.l = j;
    }
    return st;
}

namespace detail {

template <typename Visit>
void descend_partitions(int remaining, int max_part, Partition& p, Visit& visit) {
    if (remaining == 0) {
        visit(static_cast<const Partition&>(p));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        ++p.mult[part - 1];
        descend_partitions(remaining - part, part, p, visit);
        --p.mult[part - 1];
    }
}

}  // namespace detail

/* Streams every partition of n exactly once, in descending-lexicographic
 * order of the part lists: (n) first, (1,1,...,1) last. The Partition passed
 * to the visitor is a reused buffer; copy it if it must outlive the call. */
template <typename Visit>
void enumerate_partitions(int n, Visit&& visit) {
    if (n < 1) throw InvalidParameter("enumerate_partitions: n must be >= 1");
    Partition p;
    p.n = n;
    p.mult.assign(n, 0);
    detail::descend_partitions(n, n, p, visit);
}

inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    enumerate_partitions(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

inline long partition_count(int n) {
    long count = 0;
    enumerate_partitions(n, [&](const Partition&) { ++count; });
    return count;
}

/* sum over partitions of n of t^k u^Q a_s. */
template <CoeffRing R>
R smallest_part_sum(int n, const SeqValues& a, const R& t, const R& u) {
    if (n < 1) throw InvalidParameter("n must be >= 1");
    a.require(n);
    const auto tp = ring_powers(t, n);
    const auto up = ring_powers(u, n);
    R acc = R::zero();
    enumerate_partitions(n, [&](const Partition& p) {
        const auto st = stats(p);
        acc = acc + tp[st.k] * up[st.Q] * R::from_rational(a.at(st.s));
    });
    return acc;
}

/* sum over partitions of n of t^k u^Q a_l. */
template <CoeffRing R>
R largest_part_sum(int n, const SeqValues& a, const R& t, const R& u) {
    if (n < 1) throw InvalidParameter("n must be >= 1");
    a.require(n);
    const auto tp = ring_powers(t, n);
    const auto up = ring_powers(u, n);
    R acc = R::zero();
    enumerate_partitions(n, [&](const Partition& p) {
        const auto st = stats(p);
        acc = acc + tp[st.k] * up[st.Q] * R::from_rational(a.at(st.l));
    });
    return acc;
}

/* sum over partitions of n of t^k u^Q * (a_{l-s+1} + ... + a_l), the window
 * of s consecutive terms ending at the largest part. */
template <CoeffRing R>
R window_sum(int n, const SeqValues& a, const R& t, const R& u) {
    if (n < 1) throw InvalidParameter("n must be >= 1");
    a.require(n);
    const auto tp = ring_powers(t, n);
    const auto up = ring_powers(u, n);
    std::vector<Rational> prefix(n + 1);
    for (int i = 1; i <= n; ++i) prefix[i] = prefix[i - 1] + a.at(i);
    R acc = R::zero();
    enumerate_partitions(n, [&](const Partition& p) {
        const auto st = stats(p);
        acc = acc + tp[st.k] * up[st.Q] * R::from_rational(prefix[st.l] - prefix[st.l - st.s]);
    });
    return acc;
}

/* Partition side of the thm4 identity:
 * sum over partitions of t^(k-1) ((t-1)/t)^(Q-1) * (window sum of a).
 * The weight is Laurent in t, so t must be a unit distinct from 0 and 1. */
template <CoeffRing R>
R thm4_partition_sum(int n, const SeqValues& a, const R& t) {
    detail::require_t_not_zero_or_one(t);
    if (n < 1) throw InvalidParameter("n must be >= 1");
    a.require(n);
    const R w = (t - R::one()) * t.inverse();
    const auto tp = ring_powers(t, n - 1);
    const auto wp = ring_powers(w, n - 1);
    std::vector<Rational> prefix(n + 1);
    for (int i = 1; i <= n; ++i) prefix[i] = prefix[i - 1] + a.at(i);
    R acc = R::zero();
    enumerate_partitions(n, [&](const Partition& p) {
        const auto st = stats(p);
        acc = acc +
              tp[st.k - 1] * wp[st.Q - 1] * R::from_rational(prefix[st.l] - prefix[st.l - st.s]);
    });
    return acc;
}

/* Partition side of the cor1 identity: same weight as thm4 but every window
 * term a_i is multiplied by t^i. */
template <CoeffRing R>
R cor1_partition_sum(int n, const SeqValues& a, const R& t) {
    detail::require_t_not_zero_or_one(t);
    if (n < 1) throw InvalidParameter("n must be >= 1");
    a.require(n);
    const R w = (t - R::one()) * t.inverse();
    const auto tp = ring_powers(t, n);
    const auto wp = ring_powers(w, n - 1);
    /* prefix[i] = sum_{m=1..i} t^m a_m, a ring value */
    std::vector<R> prefix;
    prefix.reserve(n + 1);
    prefix.push_back(R::zero());
    for (int i = 1; i <= n; ++i)
        prefix.push_back(prefix.back() + tp[i] * R::from_rational(a.at(i)));
    R acc = R::zero();
    enumerate_partitions(n, [&](const Partition& p) {
        const auto st = stats(p);
        acc = acc + tp[st.k - 1] * wp[st.Q - 1] * (prefix[st.l] - prefix[st.l - st.s]);
    });
    return acc;
}

/* Partition side of the cor2 identity: window terms a_i - t a_{i-1} with the
 * a_0 = 0 convention. */
template <CoeffRing R>
R cor2_partition_sum(int n, const SeqValues& a, const R& t) {
    detail::require_t_not_zero_or_one(t);
    if (n < 1) throw InvalidParameter("n must be >= 1");
    a.require(n);
    const R w = (t - R::one()) * t.inverse();
    const auto tp = ring_powers(t, n - 1);
    const auto wp = ring_powers(w, n - 1);
    std::vector<Rational> prefix(n + 1);
    for (int i = 1; i <= n; ++i) prefix[i] = prefix[i - 1] + a.at(i);
    R acc = R::zero();
    enumerate_partitions(n, [&](const Partition& p) {
        const auto st = stats(p);
        /* sum_{j=1..s} a_{l-s+j} minus t times the same window shifted one
         * left; the shifted window may reach a_0 = 0 when s = l. */
        const Rational direct = prefix[st.l] - prefix[st.l - st.s];
        const Rational shifted = prefix[st.l - 1] - prefix[std::max(st.l - st.s - 1, 0)];
        acc = acc + tp[st.k - 1] * wp[st.Q - 1] *
                        (R::from_rational(direct) - t * R::from_rational(shifted));
    });
    return acc;
}

}  // namespace qident
