#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qident/arith.hpp"
#include "qident/identity.hpp"
#include "qident/partition.hpp"
#include "qident/poly_tu.hpp"
#include "qident/rational.hpp"
#include "qident/series.hpp"

namespace qident {

/* Numerator and denominator travel as strings so no integer-width limit
 * applies to the wire format. */
inline void to_json(nlohmann::json& j, const Rational& r) {
    j = nlohmann::json{{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

/* Term array in the canonical lexicographic (e_t, e_u) order. */
inline void to_json(nlohmann::json& j, const PolyTU& p) {
    j = nlohmann::json::array();
    for (const auto& [key, c] : p.terms())
        j.push_back(nlohmann::json{{"et", key.first},
                                   {"eu", key.second},
                                   {"num", c.numerator().get_str()},
                                   {"den", c.denominator().get_str()}});
}

template <CoeffRing R>
void to_json(nlohmann::json& j, const TruncatedSeries<R>& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int m = 0; m <= s.order(); ++m) coeffs.push_back(s[m]);
    j = nlohmann::json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

/* Multiplicity vector trimmed at the largest part: 1+2+3+2+1 of 9 is
 * {"n": 9, "mult": [2,2,1]}. */
inline void to_json(nlohmann::json& j, const Partition& p) {
    int largest = 0;
    for (int i = static_cast<int>(p.mult.size()); i >= 1; --i)
        if (p.mult[static_cast<std::size_t>(i - 1)] > 0) {
            largest = i;
            break;
        }
    j = nlohmann::json{
        {"n", p.n},
        {"mult", std::vector<int>(p.mult.begin(), p.mult.begin() + largest)}};
}

inline void to_json(nlohmann::json& j, const PartitionStats& st) {
    j = nlohmann::json{{"k", st.k}, {"Q", st.Q}, {"s", st.s}, {"l", st.l}};
}

inline void to_json(nlohmann::json& j, const SeqValues& a) {
    j = nlohmann::json{{"values", a.values()}};
}

template <CoeffRing R>
void to_json(nlohmann::json& j, const IdentityReport<R>& rep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rep.rows)
        rows.push_back(nlohmann::json{
            {"n", row.n}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"pass", row.pass}});
    j = nlohmann::json{{"identity", rep.identity},
                       {"mode", rep.mode},
                       {"params",
                        {{"t", rep.t_text},
                         {"u", rep.u_text},
                         {"seq", rep.seq_text},
                         {"n_max", rep.n_max}}},
                       {"rows", std::move(rows)},
                       {"overall", rep.overall}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_object()) {
        const auto read = [&](const char* key, const char* fallback) {
            if (!j.contains(key)) return std::string(fallback);
            const auto& v = j.at(key);
            return v.is_string() ? v.get<std::string>()
                                 : std::to_string(v.get<long long>());
        };
        return Rational(mpz_class(read("num", "0"), 10), mpz_class(read("den", "1"), 10));
    }
    throw InvalidParameter("cannot read a rational from " + j.dump());
}

/* Accepts a bare rational (number, "p/q" string, or {num, den}) as a constant,
 * or an array of {et, eu, num, den} terms. */
inline PolyTU poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) return PolyTU::constant(rational_from_json(j));
    PolyTU p;
    for (const auto& term : j) {
        const Rational c(mpz_class(term.at("num").get<std::string>(), 10),
                         mpz_class(term.at("den").get<std::string>(), 10));
        p += PolyTU::monomial(c, term.at("et").get<int>(), term.at("eu").get<int>());
    }
    return p;
}

/* File format: {"factors": [[C_j(0), C_j(1), ...], ...], "tail": 1}. The
 * optional tail is the constant coefficient of every factor beyond the table
 * and must be 1. */
inline FineSpec<PolyTU> fine_spec_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("factors") || !j.at("factors").is_array())
        throw FineSpecInvalid("spec file must be an object with a 'factors' array");
    FineSpec<PolyTU> spec;
    for (const auto& factor : j.at("factors")) {
        if (!factor.is_array()) throw FineSpecInvalid("each factor must be a coefficient array");
        std::vector<PolyTU> coeffs;
        for (const auto& c : factor) coeffs.push_back(poly_from_json(c));
        spec.factors.push_back(std::move(coeffs));
    }
    if (j.contains("tail")) spec.tail = poly_from_json(j.at("tail"));
    spec.validate();
    return spec;
}

}  // namespace qident
