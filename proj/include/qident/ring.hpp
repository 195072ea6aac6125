#pragma once

#include <concepts>
#include <string>
#include <vector>

#include "qident/poly_tu.hpp"
#include "qident/rational.hpp"

namespace qident {

/* The coefficient-ring contract every series and partition sum is generic
 * over: a commutative ring with equality and a partial inverse defined on
 * units. Rational (evaluated mode) and PolyTU (symbolic mode) both model it. */
template <typename R>
concept CoeffRing = requires(const R& x, const R& y, const Rational& c) {
    { R::zero() } -> std::same_as<R>;
    { R::one() } -> std::same_as<R>;
    { R::from_rational(c) } -> std::same_as<R>;
    { x + y } -> std::same_as<R>;
    { x - y } -> std::same_as<R>;
    { x * y } -> std::same_as<R>;
    { -x } -> std::same_as<R>;
    { x == y } -> std::convertible_to<bool>;
    { x.is_zero() } -> std::convertible_to<bool>;
    { x.is_unit() } -> std::convertible_to<bool>;
    { x.inverse() } -> std::same_as<R>;
    { x.to_string() } -> std::convertible_to<std::string>;
};

static_assert(CoeffRing<Rational>);
static_assert(CoeffRing<PolyTU>);

template <CoeffRing R>
R ring_inverse(const R& x) {
    return x.inverse();
}

/* x^e by binary powering; a negative e inverts first, so x must be a unit. */
template <CoeffRing R>
R ring_pow(R x, long e) {
    if (e < 0) {
        x = x.inverse();
        e = -e;
    }
    R acc = R::one();
    while (e > 0) {
        if (e & 1) acc = acc * x;
        e >>= 1;
        if (e > 0) x = x * x;
    }
    return acc;
}

/* Table of x^0 .. x^max_exp by successive multiplication. */
template <CoeffRing R>
std::vector<R> ring_powers(const R& x, int max_exp) {
    std::vector<R> p;
    p.reserve(static_cast<std::size_t>(max_exp) + 1);
    p.push_back(R::one());
    for (int e = 1; e <= max_exp; ++e) p.push_back(p.back() * x);
    return p;
}

}  // namespace qident
