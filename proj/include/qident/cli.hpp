#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qident/identity.hpp"
#include "qident/json_io.hpp"
#include "qident/seqexpr.hpp"

namespace qident::cli {

/* Exit codes: 0 all comparisons pass, 1 an identity comparison failed,
 * 2 usage or parameter errors. */

namespace detail {

struct Options {
    std::string identity;
    std::string side = "lhs";
    int n = 1;
    int n_max = 20;
    std::string t = "2";
    std::string u = "3";
    std::string seq = "n";
    std::string mode = "evaluated";
    std::string format = "table";
    std::string output;
    std::string spec_path;
    std::string a, b, c, z;
    bool with_stats = false;
    bool forward = false;
    bool inverse = false;
    int corrupt_row = 0;  // test hook: off-by-one the rhs of this row
};

inline void emit(const std::string& text, const Options& opt, std::ostream& out) {
    if (opt.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.output);
    if (!file) throw InvalidParameter("cannot open output file '" + opt.output + "'");
    file << text;
}

template <CoeffRing R>
std::string report_table(const IdentityReport<R>& rep) {
    std::ostringstream os;
    os << "identity: " << rep.identity << "   mode: " << rep.mode << "\n";
    os << "params: t=" << (rep.t_text.empty() ? "-" : rep.t_text)
       << " u=" << (rep.u_text.empty() ? "-" : rep.u_text)
       << " seq=" << (rep.seq_text.empty() ? "-" : rep.seq_text) << " n_max=" << rep.n_max
       << "\n";
    for (const auto& row : rep.rows)
        os << std::setw(5) << row.n << "  " << (row.pass ? "ok  " : "FAIL") << "  "
           << row.lhs.to_string() << "  ==  " << row.rhs.to_string() << "\n";
    os << "overall: " << (rep.overall ? "PASS" : "FAIL");
    if (!rep.overall) os << " (first failing n = " << rep.first_failure << ")";
    os << "\n";
    return os.str();
}

template <CoeffRing R>
int finish_report(IdentityReport<R> rep, const Options& opt, std::ostream& out,
                  std::ostream& err) {
    if (opt.corrupt_row > 0) {
        for (auto& row : rep.rows)
            if (row.n == opt.corrupt_row) row.rhs = row.rhs + R::one();
        rep.recompute();
    }
    if (opt.format == "json") {
        nlohmann::json j = rep;
        emit(j.dump(2) + "\n", opt, out);
    } else {
        emit(report_table(rep), opt, out);
    }
    if (!rep.overall)
        err << rep.identity << ": first failing n = " << rep.first_failure << "\n";
    return rep.overall ? 0 : 1;
}

inline int do_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    const IdentityTag tag = parse_identity_tag(opt.identity);
    const bool builtin =
        tag == IdentityTag::ex1 || tag == IdentityTag::ex2 || tag == IdentityTag::ex3;
    SeqValues a;
    if (!builtin) a = materialize(*parse_sequence_expr(opt.seq), opt.n_max);
    if (opt.mode == "symbolic") {
        auto rep = check_identity<PolyTU>(tag, a, PolyTU::var_t(), PolyTU::var_u(), opt.n_max,
                                          opt.seq);
        return finish_report(std::move(rep), opt, out, err);
    }
    auto rep = check_identity<Rational>(tag, a, Rational::parse(opt.t), Rational::parse(opt.u),
                                        opt.n_max, opt.seq);
    return finish_report(std::move(rep), opt, out, err);
}

template <CoeffRing R>
std::vector<R> expand_side(IdentityTag tag, const std::string& side, const SeqValues& a,
                           const R& t, const R& u, int n_max) {
    std::vector<R> values;
    values.reserve(static_cast<std::size_t>(n_max));
    if (side == "lhs") {
        TruncatedSeries<R> series = tag == IdentityTag::thm1   ? thm1_lhs_series(a, t, u, n_max)
                                    : tag == IdentityTag::thm2 ? thm2_lhs_series(a, t, u, n_max)
                                                               : thm3_lhs_series(a, t, u, n_max);
        for (int n = 1; n <= n_max; ++n) values.push_back(series[n]);
    } else {
        for (int n = 1; n <= n_max; ++n)
            values.push_back(tag == IdentityTag::thm1   ? smallest_part_sum(n, a, t, u)
                             : tag == IdentityTag::thm2 ? largest_part_sum(n, a, t, u)
                                                        : window_sum(n, a, t, u));
    }
    return values;
}

template <CoeffRing R>
int print_expansion(IdentityTag tag, const std::vector<R>& values, const Options& opt,
                    std::ostream& out) {
    if (opt.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < values.size(); ++i)
            rows.push_back(nlohmann::json{{"n", i + 1}, {"value", values[i]}});
        nlohmann::json j{{"identity", to_string(tag)},
                         {"side", opt.side},
                         {"mode", opt.mode},
                         {"params",
                          {{"t", opt.mode == "symbolic" ? "t" : opt.t},
                           {"u", opt.mode == "symbolic" ? "u" : opt.u},
                           {"seq", opt.seq},
                           {"n_max", opt.n_max}}},
                         {"rows", std::move(rows)}};
        emit(j.dump(2) + "\n", opt, out);
    } else {
        std::ostringstream os;
        os << to_string(tag) << " " << opt.side << " (" << opt.mode << ", seq=" << opt.seq
           << ")\n";
        for (std::size_t i = 0; i < values.size(); ++i)
            os << std::setw(5) << i + 1 << "  " << values[i].to_string() << "\n";
        emit(os.str(), opt, out);
    }
    return 0;
}

inline int do_expand(const Options& opt, std::ostream& out) {
    const IdentityTag tag = parse_identity_tag(opt.identity);
    if (tag != IdentityTag::thm1 && tag != IdentityTag::thm2 && tag != IdentityTag::thm3)
        throw InvalidParameter("expand supports thm1, thm2 and thm3 only");
    const SeqValues a = materialize(*parse_sequence_expr(opt.seq), opt.n_max);
    if (opt.mode == "symbolic") {
        const auto values =
            expand_side(tag, opt.side, a, PolyTU::var_t(), PolyTU::var_u(), opt.n_max);
        return print_expansion(tag, values, opt, out);
    }
    const auto values =
        expand_side(tag, opt.side, a, Rational::parse(opt.t), Rational::parse(opt.u), opt.n_max);
    return print_expansion(tag, values, opt, out);
}

inline int do_partitions(const Options& opt, std::ostream& out) {
    if (opt.format == "json") {
        nlohmann::json list = nlohmann::json::array();
        enumerate_partitions(opt.n, [&](const Partition& p) {
            nlohmann::json j = p;
            if (opt.with_stats) j["stats"] = stats(p);
            list.push_back(std::move(j));
        });
        emit(list.dump(2) + "\n", opt, out);
    } else {
        std::ostringstream os;
        enumerate_partitions(opt.n, [&](const Partition& p) {
            os << p.to_string();
            if (opt.with_stats) {
                const auto st = stats(p);
                os << "   k=" << st.k << " Q=" << st.Q << " s=" << st.s << " l=" << st.l;
            }
            os << "\n";
        });
        emit(os.str(), opt, out);
    }
    return 0;
}

inline int do_transform(const Options& opt, std::ostream& out) {
    if (opt.forward == opt.inverse)
        throw InvalidParameter("pass exactly one of --forward / --inverse");
    const SeqValues a = materialize(*parse_sequence_expr(opt.seq), opt.n_max);
    const SeqValues result =
        opt.forward ? divisor_transform(a, opt.n_max) : mobius_inverse(a, opt.n_max);
    if (opt.format == "json") {
        nlohmann::json j = result;
        emit(j.dump(2) + "\n", opt, out);
    } else {
        std::ostringstream os;
        for (int n = 1; n <= opt.n_max; ++n)
            os << std::setw(5) << n << "  " << result.at(n).to_string() << "\n";
        emit(os.str(), opt, out);
    }
    return 0;
}

inline int do_fine(const Options& opt, std::ostream& out, std::ostream& err) {
    std::ifstream file(opt.spec_path);
    if (!file) throw InvalidParameter("cannot open spec file '" + opt.spec_path + "'");
    const auto spec = fine_spec_from_json(nlohmann::json::parse(file));
    auto rep = fine_report(spec, opt.n_max);
    return finish_report(std::move(rep), opt, out, err);
}

inline QMonomial parse_monomial(const std::string& text, const char* name) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw InvalidParameter(std::string("parameter ") + name + " wants 'p/q,e', got '" +
                               text + "'");
    QMonomial m;
    m.coeff = Rational::parse(text.substr(0, comma));
    try {
        m.exp = std::stoi(text.substr(comma + 1));
    } catch (const std::exception&) {
        throw InvalidParameter(std::string("parameter ") + name + " has a bad exponent in '" +
                               text + "'");
    }
    return m;
}

inline int do_heine(const Options& opt, std::ostream& out, std::ostream& err) {
    auto rep = heine_check(parse_monomial(opt.a, "a"), parse_monomial(opt.b, "b"),
                           parse_monomial(opt.c, "c"), parse_monomial(opt.z, "z"), opt.n_max);
    return finish_report(std::move(rep), opt, out, err);
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    detail::Options opt;
    CLI::App app{"Exact verifier for weighted partition identities"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* cmd, bool with_params) {
        cmd->add_option("--n-max", opt.n_max, "check n = 1..N")->check(CLI::PositiveNumber);
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"table", "json"}));
        cmd->add_option("--output", opt.output, "write output to a file instead of stdout");
        if (with_params) {
            cmd->add_option("--t", opt.t, "rational value of t (evaluated mode), p/q or p");
            cmd->add_option("--u", opt.u, "rational value of u (evaluated mode), p/q or p");
            cmd->add_option("--seq", opt.seq, "sequence a_n as an expression in n");
            cmd->add_option("--mode", opt.mode, "coefficient ring")
                ->check(CLI::IsMember({"evaluated", "symbolic"}));
        }
    };

    auto* verify = app.add_subcommand("verify", "run both sides of an identity and compare");
    verify->add_option("identity", opt.identity, "thm1|thm2|thm3|thm4|cor1|cor2|ex1|ex2|ex3")
        ->required();
    add_common(verify, true);
    verify->add_option("--corrupt-row", opt.corrupt_row)->group("");

    auto* expand = app.add_subcommand("expand", "print one side of thm1/thm2/thm3 per n");
    expand->add_option("identity", opt.identity, "thm1|thm2|thm3")->required();
    expand->add_option("--side", opt.side, "lhs (series) or rhs (partition sum)")
        ->required()
        ->check(CLI::IsMember({"lhs", "rhs"}));
    add_common(expand, true);

    auto* partitions = app.add_subcommand("partitions", "enumerate the partitions of n");
    partitions->add_option("n", opt.n, "the number to partition")
        ->required()
        ->check(CLI::PositiveNumber);
    partitions->add_flag("--stats", opt.with_stats, "also print k, Q, s, l");
    add_common(partitions, false);

    auto* transform = app.add_subcommand("transform", "divisor-sum transform or its inverse");
    transform->add_flag("--forward", opt.forward, "b_n = sum over divisors d of n of a_d");
    transform->add_flag("--inverse", opt.inverse, "a_n = sum of mu(n/d) b_d");
    transform->add_option("--seq", opt.seq, "sequence as an expression in n")->required();
    add_common(transform, false);

    auto* fine = app.add_subcommand("fine", "compare a factor-table product with partition sums");
    fine->add_option("--spec", opt.spec_path, "JSON factor table file")->required();
    add_common(fine, false);

    auto* heine = app.add_subcommand("heine", "check the series transformation for monomials");
    heine->add_option("--a", opt.a, "p/q,e meaning (p/q)*q^e")->required();
    heine->add_option("--b", opt.b, "p/q,e")->required();
    heine->add_option("--c", opt.c, "p/q,e")->required();
    heine->add_option("--z", opt.z, "p/q,e")->required();
    add_common(heine, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return detail::do_verify(opt, out, err);
        if (expand->parsed()) return detail::do_expand(opt, out);
        if (partitions->parsed()) return detail::do_partitions(opt, out);
        if (transform->parsed()) return detail::do_transform(opt, out);
        if (fine->parsed()) return detail::do_fine(opt, out, err);
        if (heine->parsed()) return detail::do_heine(opt, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qident");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qident::cli
