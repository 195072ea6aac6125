/* Acceptance suite: exhaustive exact verification of every identity at desk
 * scale. Each criterion prints one PASS/FAIL line; the process exits with the
 * number of failed criteria. Everything is exact rational or polynomial
 * equality -- there are no tolerances anywhere. */

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qident/qident.hpp"

using namespace qident;

namespace {

using Failure = std::optional<std::string>;

std::mt19937 acceptance_rng(987654321u);

Rational random_rational(int num_span = 9, int den_span = 9) {
    std::uniform_int_distribution<int> num(-num_span, num_span);
    std::uniform_int_distribution<int> den(1, den_span);
    return Rational(num(acceptance_rng), den(acceptance_rng));
}

SeqValues identity_seq(int n) {
    std::vector<Rational> v;
    for (int i = 1; i <= n; ++i) v.emplace_back(i);
    return SeqValues(std::move(v));
}

SeqValues square_seq(int n) {
    std::vector<Rational> v;
    for (long i = 1; i <= n; ++i) v.emplace_back(i * i);
    return SeqValues(std::move(v));
}

SeqValues ones_seq(int n) {
    return SeqValues(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

SeqValues random_seq(int n) {
    std::vector<Rational> v;
    for (int i = 0; i < n; ++i) v.push_back(random_rational());
    return SeqValues(std::move(v));
}

const std::vector<std::pair<Rational, Rational>>& evaluation_points() {
    static const std::vector<std::pair<Rational, Rational>> points = {
        {Rational(2), Rational(3)},
        {Rational(-1), Rational(2)},
        {Rational(1, 2), Rational(-1, 3)},
        {Rational(3), Rational(1)},
    };
    return points;
}

const std::vector<Rational>& t_sweep() {
    static const std::vector<Rational> ts = {Rational(2), Rational(-1), Rational(3, 2),
                                             Rational(-2, 3)};
    return ts;
}

/* Which series builder / partition sum pair a sweep exercises. */
enum class SeriesIdentity { smallest, largest, window };

template <CoeffRing R>
TruncatedSeries<R> build_series(SeriesIdentity which, const SeqValues& a, const R& t, const R& u,
                                int order) {
    switch (which) {
        case SeriesIdentity::smallest: return thm1_lhs_series(a, t, u, order);
        case SeriesIdentity::largest: return thm2_lhs_series(a, t, u, order);
        default: return thm3_lhs_series(a, t, u, order);
    }
}

template <CoeffRing R>
R build_sum(SeriesIdentity which, int n, const SeqValues& a, const R& t, const R& u) {
    switch (which) {
        case SeriesIdentity::smallest: return smallest_part_sum(n, a, t, u);
        case SeriesIdentity::largest: return largest_part_sum(n, a, t, u);
        default: return window_sum(n, a, t, u);
    }
}

/* Criteria 1-3: symbolic equality n <= 18, then four rational (t, u) points
 * n <= 30, series coefficient vs partition sum. */
Failure series_vs_partition(SeriesIdentity which) {
    const int symbolic_order = 18;
    const SeqValues a_sym = identity_seq(symbolic_order);
    const PolyTU t_sym = PolyTU::var_t();
    const PolyTU u_sym = PolyTU::var_u();
    const auto series_sym = build_series(which, a_sym, t_sym, u_sym, symbolic_order);
    for (int n = 1; n <= symbolic_order; ++n)
        if (series_sym[n] != build_sum(which, n, a_sym, t_sym, u_sym))
            return "symbolic mismatch at n = " + std::to_string(n);

    const int evaluated_order = 30;
    const SeqValues a_eval = identity_seq(evaluated_order);
    for (const auto& [t, u] : evaluation_points()) {
        const auto series = build_series(which, a_eval, t, u, evaluated_order);
        for (int n = 1; n <= evaluated_order; ++n)
            if (series[n] != build_sum(which, n, a_eval, t, u))
                return "mismatch at n = " + std::to_string(n) + ", t = " + t.to_string() +
                       ", u = " + u.to_string();
    }
    return std::nullopt;
}

Failure criterion_thm1() { return series_vs_partition(SeriesIdentity::smallest); }
Failure criterion_thm2() { return series_vs_partition(SeriesIdentity::largest); }
Failure criterion_thm3() { return series_vs_partition(SeriesIdentity::window); }

std::vector<std::pair<std::string, SeqValues>> sweep_sequences(int n) {
    std::vector<std::pair<std::string, SeqValues>> seqs;
    seqs.emplace_back("n", identity_seq(n));
    seqs.emplace_back("n^2", square_seq(n));
    seqs.emplace_back("1", ones_seq(n));
    seqs.emplace_back("random", random_seq(n));
    return seqs;
}

/* Criterion 4: partition side vs divisor side of the thm4 identity for
 * n <= 40 over four t values and four sequences, with the partition counts
 * cross-checked against the all-ones factor-table product. */
Failure criterion_thm4() {
    const int N = 40;
    FineSpec<Rational> all_ones;
    all_ones.factors.assign(static_cast<std::size_t>(N),
                            std::vector<Rational>(static_cast<std::size_t>(N) + 1, Rational(1)));
    const auto euler = fine_product(all_ones, N);
    for (int n = 1; n <= N; ++n)
        if (euler[n] != Rational(partition_count(n)))
            return "enumeration count disagrees with the generating function at n = " +
                   std::to_string(n);

    for (const auto& [name, a] : sweep_sequences(N))
        for (const Rational& t : t_sweep())
            for (int n = 1; n <= N; ++n)
                if (thm4_partition_sum(n, a, t) != thm4_divisor_sum(n, a, t))
                    return "mismatch at n = " + std::to_string(n) + ", t = " + t.to_string() +
                           ", seq = " + name;
    return std::nullopt;
}

/* Criterion 5: the two corollaries under the same sweep; cor2 additionally
 * must not depend on t and must equal the plain divisor sum. */
Failure criterion_corollaries() {
    const int N = 40;
    for (const auto& [name, a] : sweep_sequences(N)) {
        for (int n = 1; n <= N; ++n) {
            std::optional<Rational> cor2_reference;
            for (const Rational& t : t_sweep()) {
                if (cor1_partition_sum(n, a, t) != cor1_divisor_sum(n, a, t))
                    return "cor1 mismatch at n = " + std::to_string(n) +
                           ", t = " + t.to_string() + ", seq = " + name;
                const Rational cor2 = cor2_partition_sum(n, a, t);
                if (cor2_reference && cor2 != *cor2_reference)
                    return "cor2 depends on t at n = " + std::to_string(n) + ", seq = " + name;
                cor2_reference = cor2;
            }
            if (*cor2_reference != cor2_divisor_sum(n, a))
                return "cor2 differs from the divisor sum at n = " + std::to_string(n) +
                       ", seq = " + name;
        }
    }
    return std::nullopt;
}

/* Criteria 6-8: the three fixed specializations with closed-form divisor
 * sides, n <= 40. */
Failure closed_form_example(IdentityTag tag) {
    const auto rep = check_identity(tag, SeqValues{}, Rational(0), Rational(0), 40);
    if (!rep.overall)
        return "first failing n = " + std::to_string(rep.first_failure);
    return std::nullopt;
}

Failure criterion_ex1() { return closed_form_example(IdentityTag::ex1); }
Failure criterion_ex2() { return closed_form_example(IdentityTag::ex2); }
Failure criterion_ex3() { return closed_form_example(IdentityTag::ex3); }

/* Criterion 9: random factor tables (J <= 4, K <= 3, zero/one constants)
 * compared coefficient by coefficient for n <= 12, and the all-ones table
 * reproducing the partition numbers for n <= 25. */
Failure criterion_fine() {
    std::uniform_int_distribution<int> J_dist(1, 4);
    std::uniform_int_distribution<int> K_dist(1, 3);
    std::uniform_int_distribution<int> constant(0, 1);
    std::uniform_int_distribution<int> small(-2, 2);
    for (int trial = 0; trial < 25; ++trial) {
        FineSpec<Rational> spec;
        const int J = J_dist(acceptance_rng);
        for (int j = 0; j < J; ++j) {
            std::vector<Rational> C;
            C.emplace_back(constant(acceptance_rng));
            const int K = K_dist(acceptance_rng);
            for (int k = 1; k <= K; ++k) C.emplace_back(small(acceptance_rng));
            spec.factors.push_back(std::move(C));
        }
        const auto prod = fine_product(spec, 12);
        for (int n = 0; n <= 12; ++n)
            if (prod[n] != fine_partition_sum(spec, n))
                return "random spec " + std::to_string(trial) + " mismatch at n = " +
                       std::to_string(n);
    }

    const int N = 25;
    FineSpec<Rational> all_ones;
    all_ones.factors.assign(static_cast<std::size_t>(N),
                            std::vector<Rational>(static_cast<std::size_t>(N) + 1, Rational(1)));
    const auto euler = fine_product(all_ones, N);
    for (int n = 1; n <= N; ++n) {
        if (euler[n] != Rational(partition_count(n)))
            return "all-ones product differs from p(n) at n = " + std::to_string(n);
        if (fine_partition_sum(all_ones, n) != euler[n])
            return "all-ones partition sum differs at n = " + std::to_string(n);
    }
    return std::nullopt;
}

/* Criterion 10: the series transformation used to prove the divisor-side
 * identity, checked mod q^13 at the instantiation a = t q, b = q^n,
 * c = t q^(n+1), z = q, plus random monomial parameter sets. */
Failure criterion_heine() {
    const int order = 12;
    for (const Rational& t : {Rational(2), Rational(3), Rational(-2)}) {
        for (int n : {1, 2, 3}) {
            const auto rep =
                heine_check({t, 1}, {Rational(1), n}, {t, n + 1}, {Rational(1), 1}, order);
            if (!rep.overall)
                return "instantiation t = " + t.to_string() + ", n = " + std::to_string(n) +
                       " fails first at coefficient " + std::to_string(rep.first_failure);
        }
    }

    std::uniform_int_distribution<int> exp_small(0, 2);
    std::uniform_int_distribution<int> exp_pos(1, 2);
    for (int trial = 0; trial < 5; ++trial) {
        const int e_b = exp_small(acceptance_rng);
        const int e_c = e_b + exp_pos(acceptance_rng);
        const int e_z = exp_pos(acceptance_rng);
        const int e_a = std::max(exp_small(acceptance_rng), e_c - e_b - e_z);
        const QMonomial a{random_rational(4, 3), e_a};
        QMonomial b{random_rational(4, 3), e_b};
        QMonomial c{random_rational(4, 3), e_c};
        const QMonomial z{random_rational(4, 3), e_z};
        if (b.coeff.is_zero()) b.coeff = Rational(1, 2);
        if (c.coeff.is_zero()) c.coeff = Rational(2);
        const auto rep = heine_check(a, b, c, z, order);
        if (!rep.overall)
            return "random set " + std::to_string(trial) + " (a=" + a.to_string() +
                   " b=" + b.to_string() + " c=" + c.to_string() + " z=" + z.to_string() +
                   ") fails first at coefficient " + std::to_string(rep.first_failure);
    }
    return std::nullopt;
}

/* Criterion 11: the infrastructure property batteries. */
Failure criterion_infrastructure() {
    // ring axioms on 200 random triples in each coefficient ring
    std::uniform_int_distribution<int> et(-3, 3);
    std::uniform_int_distribution<int> eu(0, 3);
    std::uniform_int_distribution<int> term_count(0, 4);
    const auto random_poly = [&]() {
        PolyTU p;
        const int count = term_count(acceptance_rng);
        for (int i = 0; i < count; ++i)
            p += PolyTU::monomial(random_rational(5, 4), et(acceptance_rng), eu(acceptance_rng));
        return p;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const Rational x = random_rational(), y = random_rational(), z = random_rational();
        if ((x + y) + z != x + (y + z) || x * y != y * x || x * (y + z) != x * y + x * z ||
            x + (-x) != Rational::zero())
            return "rational ring axiom failed";
        const PolyTU p = random_poly(), q = random_poly(), r = random_poly();
        if ((p + q) + r != p + (q + r) || p * q != q * p || p * (q + r) != p * q + p * r ||
            p + (-p) != PolyTU::zero())
            return "polynomial ring axiom failed";
    }

    // series reciprocal round trip over both rings
    for (int trial = 0; trial < 50; ++trial) {
        TruncatedSeries<Rational> x(8);
        for (int m = 0; m <= 8; ++m) x.set(m, random_rational());
        Rational lead = random_rational();
        if (lead.is_zero()) lead = Rational(1, 3);
        x.set(0, lead);
        if (x * reciprocal(x) != TruncatedSeries<Rational>::one(8))
            return "rational series reciprocal failed";

        TruncatedSeries<PolyTU> y(6);
        for (int m = 1; m <= 6; ++m) y.set(m, random_poly());
        Rational c = random_rational();
        if (c.is_zero()) c = Rational(2);
        y.set(0, PolyTU::monomial(c, et(acceptance_rng), 0));
        if (y * reciprocal(y) != TruncatedSeries<PolyTU>::one(6))
            return "polynomial series reciprocal failed";
    }

    // divisor transform and its inverse cancel both ways
    for (int trial = 0; trial < 20; ++trial) {
        const SeqValues a = random_seq(40);
        const SeqValues round1 = mobius_inverse(divisor_transform(a, 40), 40);
        const SeqValues round2 = divisor_transform(mobius_inverse(a, 40), 40);
        for (int n = 1; n <= 40; ++n)
            if (round1.at(n) != a.at(n) || round2.at(n) != a.at(n))
                return "transform round trip failed at n = " + std::to_string(n);
    }

    // evaluation is a ring homomorphism, and the symbolic partition sums
    // evaluate to the evaluated-mode ones
    for (int point = 0; point < 5; ++point) {
        Rational t_val = random_rational();
        if (t_val.is_zero() || t_val.is_one()) t_val = Rational(2, 5);
        const Rational u_val = random_rational();
        for (int trial = 0; trial < 200; ++trial) {
            const PolyTU p = random_poly(), q = random_poly();
            if ((p * q).eval(t_val, u_val) != p.eval(t_val, u_val) * q.eval(t_val, u_val))
                return "evaluation does not respect products";
            if ((p + q).eval(t_val, u_val) != p.eval(t_val, u_val) + q.eval(t_val, u_val))
                return "evaluation does not respect sums";
        }
        const SeqValues a = random_seq(15);
        const PolyTU t_sym = PolyTU::var_t();
        const PolyTU u_sym = PolyTU::var_u();
        for (int n = 1; n <= 15; ++n) {
            if (smallest_part_sum(n, a, t_sym, u_sym).eval(t_val, u_val) !=
                smallest_part_sum(n, a, t_val, u_val))
                return "symbolic/evaluated smallest-part sums disagree";
            if (largest_part_sum(n, a, t_sym, u_sym).eval(t_val, u_val) !=
                largest_part_sum(n, a, t_val, u_val))
                return "symbolic/evaluated largest-part sums disagree";
            if (window_sum(n, a, t_sym, u_sym).eval(t_val, u_val) !=
                window_sum(n, a, t_val, u_val))
                return "symbolic/evaluated window sums disagree";
            if (thm4_partition_sum(n, a, t_sym).eval(t_val, Rational(0)) !=
                thm4_partition_sum(n, a, t_val))
                return "symbolic/evaluated thm4 sums disagree";
        }
    }
    return std::nullopt;
}

struct Criterion {
    int number;
    std::string label;
    std::function<Failure()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "thm1: series coefficients vs smallest-part sums (symbolic n<=18, 4 points n<=30)",
         criterion_thm1},
        {2, "thm2: series coefficients vs largest-part sums (same sweep)", criterion_thm2},
        {3, "thm3: double-sum series vs window sums (same sweep)", criterion_thm3},
        {4, "thm4: partition side vs divisor side (n<=40, 4 t values, 4 sequences)",
         criterion_thm4},
        {5, "cor1/cor2: same sweep, cor2 t-independent and equal to the divisor sum",
         criterion_corollaries},
        {6, "ex1: a_n = n, t = -1 equals (sigma_1 + tau_odd)/2 (n<=40)", criterion_ex1},
        {7, "ex2: a_n = n^2, t = -1 equals (sigma_2 + sigma_1)/2 (n<=40)", criterion_ex2},
        {8, "ex3: alternating 2^(Q-1) s sums equal tau_odd (n<=40)", criterion_ex3},
        {9, "fine: 25 random factor tables (n<=12), all-ones table gives p(n) (n<=25)",
         criterion_fine},
        {10, "heine: transformation mod q^13 at 9 instantiations + 5 random parameter sets",
         criterion_heine},
        {11, "infrastructure: ring axioms, reciprocals, transform round trips, homomorphisms",
         criterion_infrastructure},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Failure failure = criterion.body();
        const auto seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (failure ? "FAIL" : "PASS") << "  criterion " << std::setw(2) << criterion.number
             << "  " << criterion.label << "  (" << std::fixed << std::setprecision(2) << seconds
             << "s)";
        if (failure) line << "\n      " << *failure;
        std::cout << line.str() << std::endl;
        if (failure) ++failures;
    }
    std::cout << "acceptance: " << (criteria.size() - failures) << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failures;
}
