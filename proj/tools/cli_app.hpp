#pragma once

// Command-line front end. Exit codes: 0 affirmative, 1 negative mathematical
// result, 2 usage or regime error, 3 internal error.

#include "gaussbin/gaussbin.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace gaussbin::cli {

enum class Format { Plain, Json, Csv };

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInternal = 3;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string format;
    std::string out_path;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

namespace detail {

inline Format parse_format(const std::string& s, bool tty) {
    if (s.empty()) return tty ? Format::Plain : Format::Json;
    if (s == "plain") return Format::Plain;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw UsageError("unknown format \"" + s + "\"");
}

inline std::string witness_text(const std::optional<long>& w) { return w ? std::to_string(*w) : std::string{}; }

inline void write_coeffs(std::ostream& os, const IntPolynomial& p, Format f) {
    switch (f) {
        case Format::Plain:
            for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p.coeffs()[i];
            if (p.is_zero()) os << 0;
            os << '\n';
            break;
        case Format::Json:
            os << "{\"coeffs\":[";
            for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ",\"" : "\"") << p.coeffs()[i] << '"';
            os << "]}\n";
            break;
        case Format::Csv:
            os << "degree,coefficient\n";
            for (std::size_t i = 0; i < p.size(); ++i) os << i << ',' << p.coeffs()[i] << '\n';
            break;
    }
}

inline void write_report(std::ostream& os, const StrictnessReport& r, Format f, bool header) {
    switch (f) {
        case Format::Plain:
            os << "(" << r.a << "," << r.b << ") " << (r.strict ? "strict" : "non-strict");
            if (r.witness) os << " witness " << *r.witness;
            os << '\n';
            break;
        case Format::Json: os << to_json(r).dump() << '\n'; break;
        case Format::Csv:
            if (header) os << "a,b,verdict,witness\n";
            os << r.a << ',' << r.b << ',' << (r.strict ? "strict" : "non-strict") << ',' << witness_text(r.witness)
               << '\n';
            break;
    }
}

inline void write_certificate_plain(std::ostream& os, const Certificate& c, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    os << pad << "(" << c.a << "," << c.b << ") ";
    if (c.is_direct()) {
        os << "direct check\n";
        return;
    }
    const auto& cover = std::get<InductiveCover>(c.root);
    const auto& base = cover.base;
    const auto& st = cover.step;
    os << family_name(st.family) << '\n';
    os << pad << "  base " << family_name(base.parity) << " " << base.term_partition.to_string() << ": ambient "
       << to_string(base.ambient) << ", term " << to_string(base.term) << ", combined " << to_string(base.combined)
       << '\n';
    os << pad << "  step " << st.term_partition.to_string() << ": shift " << st.shift << ", inner (" << st.child_a
       << "," << st.child_b << ")";
    if (st.linear_factor) os << ", staircase t=" << *st.linear_factor;
    os << ", claimed " << to_string(st.claimed) << '\n';
    for (const auto& s : st.side_conditions) os << pad << "    [" << (s.holds ? "ok" : "FAIL") << "] " << s.name << '\n';
    if (st.child) write_certificate_plain(os, *st.child, indent + 1);
}

inline void write_verification_plain(std::ostream& os, const VerificationResult& v) {
    os << (v.verified ? "verified" : "NOT verified") << '\n';
    for (const auto& f : v.failures) os << "  " << f.node_path << ": " << f.condition << '\n';
}

inline VerifyMode parse_mode(const std::string& s) {
    if (s == "symbolic") return VerifyMode::Symbolic;
    if (s == "numeric") return VerifyMode::Numeric;
    if (s == "both") return VerifyMode::Both;
    throw UsageError("unknown mode \"" + s + "\"");
}

inline void require_pair(long a, long b) {
    if (b < 2 || a < b)
        throw UnsupportedRegime("unsupported regime: need a >= b >= 2 (got a=" + std::to_string(a) +
                                ", b=" + std::to_string(b) + ")");
}

}  // namespace detail

/// Runs one invocation. `stdout_is_tty` picks the default format.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool stdout_is_tty) {
    CLI::App app{"Gaussian binomial coefficients: KOH decomposition and strict unimodality certificates", "gaussbin"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format: plain, json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--out", opt.out_path, "Write output to PATH instead of stdout");
    app.add_option("--jobs", opt.jobs, "Worker threads for scan")->check(CLI::PositiveNumber);

    long a = -1, b = -1;
    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("a", a, "Width parameter")->required();
        sub->add_option("b", b, "Height parameter")->required();
    };

    auto* compute = app.add_subcommand("compute", "Coefficients of [a+b choose b]_q");
    add_pair(compute);

    bool verify = false, list_terms = false;
    auto* koh = app.add_subcommand("koh", "KOH decomposition of [a+b choose b]_q");
    add_pair(koh);
    koh->add_flag("--verify", verify, "Check that the KOH terms sum to the q-binomial");
    koh->add_flag("--list-terms", list_terms, "Emit the term table");

    auto* strict = app.add_subcommand("strict", "Strict unimodality verdict");
    add_pair(strict);

    long max_a = 0, max_b = 0;
    auto* scan = app.add_subcommand("scan", "Classify every 2 <= b <= a in a range");
    scan->add_option("--max-a", max_a, "Largest a")->required();
    scan->add_option("--max-b", max_b, "Largest b")->required();

    std::string mode = "both", input;
    auto* cert = app.add_subcommand("certify", "Generate and verify a strict unimodality certificate");
    cert->add_option("a", a, "Width parameter");
    cert->add_option("b", b, "Height parameter");
    cert->add_option("--mode", mode, "Verification mode: symbolic, numeric or both")
        ->check(CLI::IsMember({"symbolic", "numeric", "both"}));
    cert->add_option("--input", input, "Verify a stored certificate JSON instead of generating one");

    long d = 0;
    std::optional<long> growth_a;
    auto* growth = app.add_subcommand("growth", "Check the coefficient-gap growth bound");
    growth->add_option("--d", d, "Target gap")->required();
    growth->add_option("--a", growth_a, "Parameter a (default a0)");

    auto* diff = app.add_subcommand("diff", "Consecutive coefficient differences up to the middle");
    add_pair(diff);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    std::unique_ptr<std::ofstream> file;
    std::ostream* os = &out;
    bool tty = stdout_is_tty;
    if (!opt.out_path.empty()) {
        file = std::make_unique<std::ofstream>(opt.out_path);
        if (!*file) {
            err << "error: cannot open " << opt.out_path << " for writing\n";
            return kUsage;
        }
        os = file.get();
        tty = false;
    }

    try {
        const Format fmt = detail::parse_format(opt.format, tty);

        if (*compute) {
            if (a < 0 || b < 0) throw UsageError("compute: a and b must be nonnegative");
            detail::write_coeffs(*os, qbinom(a, b), fmt);
            return kOk;
        }

        if (*koh) {
            detail::require_pair(a, b);
            if (!list_terms) verify = true;
            bool ok = true;
            if (verify) ok = koh_sum(a, b) == qbinom(a, b);
            if (fmt == Format::Json) {
                Json j = list_terms ? koh_terms_json(a, b) : Json{{"a", a}, {"b", b}};
                if (verify) j["identity"] = ok ? "OK" : "MISMATCH";
                *os << j.dump() << '\n';
            } else if (fmt == Format::Csv) {
                if (list_terms) {
                    *os << "lambda,shift,factors\n";
                    for (const auto& lambda : partitions_of(static_cast<int>(b))) {
                        const auto t = koh_term(a, lambda);
                        *os << '"' << lambda.to_string() << "\"," << t.shift << ",\"";
                        for (std::size_t i = 0; i < t.factors.size(); ++i)
                            *os << (i ? " " : "") << '[' << t.factors[i].top << ' ' << t.factors[i].bottom << ']';
                        *os << "\"\n";
                    }
                }
                if (verify) *os << "a,b,identity\n" << a << ',' << b << ',' << (ok ? "OK" : "MISMATCH") << '\n';
            } else {
                if (list_terms) {
                    for (const auto& lambda : partitions_of(static_cast<int>(b))) {
                        const auto t = koh_term(a, lambda);
                        *os << lambda.to_string() << " shift " << t.shift << " factors";
                        for (const auto& f : t.factors) *os << " [" << f.top << " choose " << f.bottom << "]";
                        *os << '\n';
                    }
                }
                if (verify) *os << (ok ? "OK" : "MISMATCH") << '\n';
            }
            return ok ? kOk : kNegative;
        }

        if (*strict) {
            if (a < 1 || b < 1) throw UsageError("strict: a and b must be positive");
            const auto r = is_strictly_unimodal_qbinom(a, b);
            detail::write_report(*os, r, fmt, true);
            return r.strict ? kOk : kNegative;
        }

        if (*scan) {
            if (max_b < 2 || max_a < max_b) throw UsageError("scan: need --max-a >= --max-b >= 2");
            const auto records = scan_exceptions(max_a, max_b, opt.jobs);
            if (fmt == Format::Json) {
                Json arr = Json::array();
                for (const auto& r : records) arr.push_back(to_json(r));
                *os << arr.dump() << '\n';
            } else {
                bool first = true;
                for (const auto& r : records) {
                    detail::write_report(*os, r, fmt, first);
                    first = false;
                }
            }
            return kOk;
        }

        if (*cert) {
            if (fmt == Format::Csv) throw UsageError("certify: csv output is not supported");
            const VerifyMode vm = detail::parse_mode(mode);
            Certificate c;
            if (!input.empty()) {
                std::ifstream in(input);
                if (!in) throw UsageError("cannot read " + input);
                Json j;
                try {
                    j = Json::parse(in);
                    c = certificate_from_json(j.contains("certificate") ? j.at("certificate") : j);
                } catch (const Json::exception& e) {
                    throw UsageError(std::string("malformed certificate: ") + e.what());
                }
            } else {
                if (cert->count("a") == 0 || cert->count("b") == 0)
                    throw UsageError("certify: give a and b, or --input FILE");
                detail::require_pair(a, b);
                auto outcome = certify(a, b);
                if (auto* fail = std::get_if<CertifyFailure>(&outcome)) {
                    if (fmt == Format::Json) {
                        *os << to_json(*fail).dump() << '\n';
                    } else {
                        *os << "(" << fail->a << "," << fail->b << ") not certified at " << fail->node_path << ": "
                            << fail->reason;
                        if (fail->witness) *os << " (witness degree " << *fail->witness << ")";
                        *os << '\n';
                    }
                    return kNegative;
                }
                c = std::get<Certificate>(std::move(outcome));
            }
            const auto v = verify_certificate(c, vm);
            if (fmt == Format::Json) {
                *os << Json{{"certificate", to_json(c)}, {"verification", to_json(v)}}.dump() << '\n';
            } else {
                detail::write_certificate_plain(*os, c, 0);
                detail::write_verification_plain(*os, v);
            }
            return v.verified ? kOk : kNegative;
        }

        if (*growth) {
            if (fmt == Format::Csv) throw UsageError("growth: csv output is not supported");
            if (d < 2) throw UsageError("growth: need --d >= 2");
            const auto params = growth_parameters(d);
            const auto g = verify_growth(d, growth_a.value_or(params.a0));
            if (fmt == Format::Json) {
                *os << to_json(g).dump() << '\n';
            } else {
                *os << "d=" << g.d << " b=" << g.b << " a0=" << g.a0 << " L=" << g.L << " a=" << g.a << ": "
                    << (g.verified ? "verified" : "FAILED") << '\n';
                if (!g.failures.empty()) {
                    *os << "failing degrees:";
                    for (long i : g.failures) *os << ' ' << i;
                    *os << '\n';
                }
                for (const auto& f : g.families)
                    *os << "  k=" << f.k << " inner (" << f.obligation.c << "," << f.obligation.d << ") t="
                        << f.obligation.t << " lemma2 " << (f.lemma2 ? "yes" : "no") << ", inner strict "
                        << (f.inner_strict ? "yes" : "no") << '\n';
            }
            return g.verified ? kOk : kNegative;
        }

        if (*diff) {
            if (a < 0 || b < 0) throw UsageError("diff: a and b must be nonnegative");
            const auto prof = difference_profile(qbinom(a, b));
            switch (fmt) {
                case Format::Plain:
                    for (std::size_t i = 0; i < prof.diffs.size(); ++i) *os << i + 1 << ' ' << prof.diffs[i] << '\n';
                    break;
                case Format::Csv:
                    *os << "degree,diff\n";
                    for (std::size_t i = 0; i < prof.diffs.size(); ++i) *os << i + 1 << ',' << prof.diffs[i] << '\n';
                    break;
                case Format::Json: {
                    Json arr = Json::array();
                    for (const auto& x : prof.diffs) arr.push_back(x.get_str());
                    *os << Json{{"a", a}, {"b", b}, {"diffs", std::move(arr)}}.dump() << '\n';
                    break;
                }
            }
            return kOk;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}

}  // namespace gaussbin::cli
