#pragma once

/**
 * @file certify.hpp
 * @brief Certificates of strict unimodality for [a+b choose b]_q built from
 * KOH terms, the exception scan, and the coefficient-gap growth check.
 *
 * Every KOH term is symmetric and unimodal about ab/2, so none of them ever
 * decreases below the middle degree. The whole sum is therefore strict at a
 * degree as soon as one term is. A certificate names, for every degree in
 * [2, floor(ab/2)], a term that is strict there:
 *
 *  - BaseCoverage: the low degrees. Coefficients below b are partition
 *    numbers, and a staircase-product term (even or odd base family) takes
 *    over from degree shift+1.
 *  - InductiveStep: a term q^s [a'+b' choose b']_q (times a staircase
 *    1+...+q^t for the mod-3-one/two families) whose inner q-binomial has its
 *    own certificate, covering [s+2, floor(ab/2)] (or [s+1, ...] when the
 *    staircase factor makes the product strict from degree 0).
 *  - DirectCheck: the full coefficient sequence is computed and scanned.
 *
 * Intervals are degree ranges [lo, hi] of strict increase; a degree i is
 * covered when c_{i-1} < c_i is certified.
 *
 * The generator derives everything from generic KOH term descriptors. The
 * verifier re-derives every endpoint from the closed forms and shares no
 * interval code with the generator.
 */

#include "gaussbin/koh.hpp"
#include "gaussbin/partitions.hpp"
#include "gaussbin/polyring.hpp"
#include "gaussbin/qbinomial.hpp"
#include "gaussbin/unimodality.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

namespace gaussbin {

struct Interval {
    long lo = 1;
    long hi = 0;

    bool empty() const noexcept { return lo > hi; }
    bool contains(long i) const noexcept { return lo <= i && i <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

inline std::string to_string(const Interval& iv) {
    return "[" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) + "]";
}

struct SideCondition {
    std::string name;
    bool holds = false;
    friend bool operator==(const SideCondition&, const SideCondition&) = default;
};

struct Lemma2Obligation {
    long c = 0;
    long d = 0;
    long t = 0;
    friend bool operator==(const Lemma2Obligation&, const Lemma2Obligation&) = default;
};

struct Certificate;

struct DirectCheck {};

struct BaseCoverage {
    Family parity = Family::EvenBase;  // EvenBase or OddBase
    Interval ambient;                  // degrees where c_n = p(n) is strict
    Partition term_partition;
    Interval term;
    Interval combined;
};

struct InductiveStep {
    Family family = Family::SingleRow;
    Partition term_partition;
    long shift = 0;
    long child_a = 0;  // inner q-binomial is [child_a + child_b choose child_b]
    long child_b = 0;
    std::optional<long> linear_factor;  // t in 1 + q + ... + q^t
    std::optional<Lemma2Obligation> lemma2;
    Interval claimed;
    std::vector<SideCondition> side_conditions;
    std::shared_ptr<const Certificate> child;
};

struct InductiveCover {
    BaseCoverage base;
    InductiveStep step;
};

struct Certificate {
    long a = 0;
    long b = 0;
    std::variant<DirectCheck, InductiveCover> root;

    bool is_direct() const noexcept { return std::holds_alternative<DirectCheck>(root); }
};

struct CertifyFailure {
    long a = 0;
    long b = 0;
    std::string node_path;
    std::string reason;
    std::optional<long> witness;
};

using CertifyOutcome = std::variant<Certificate, CertifyFailure>;

/// Pairs with b >= 5 whose q-binomial is not strictly unimodal.
inline constexpr std::array<std::pair<long, long>, 9> kExceptions{
    {{6, 5}, {10, 5}, {14, 5}, {6, 6}, {7, 6}, {9, 6}, {11, 6}, {13, 6}, {10, 7}}};

/// Strict unimodality as classified by the theorem, for a >= b >= 2.
inline bool theorem_predicts_strict(long a, long b) {
    if (a == 2 && b == 2) return true;
    if (b < 5) return false;
    return std::find(kExceptions.begin(), kExceptions.end(), std::pair{a, b}) == kExceptions.end();
}

/// Strict range of q^shift (1+...+q^{s1})(1+...+q^{s2}): degrees shift+1 .. shift+min(s1, s2).
inline Interval staircase_strict_interval(long shift, long s1, long s2) {
    if (s1 < 0 || s2 < 0) throw std::invalid_argument("staircase_strict_interval: negative length");
    return {shift + 1, shift + std::min(s1, s2)};
}

// ---------------------------------------------------------------------------
// Generator
// ---------------------------------------------------------------------------

namespace detail {

struct GenContext {
    long depth_cap = 0;
};

inline CertifyOutcome certify_at(long a, long b, const std::string& path, long depth, GenContext& ctx);

inline std::vector<KohFactor> nontrivial_factors(const KohTerm& t) {
    std::vector<KohFactor> out;
    for (const auto& f : t.factors)
        if (!f.trivial()) out.push_back(f);
    return out;
}

inline std::optional<BaseCoverage> make_base(long a, long b) {
    const Family parity = b % 2 == 0 ? Family::EvenBase : Family::OddBase;
    const KohTerm term = koh_term_for_family(a, b, parity);
    auto fs = nontrivial_factors(term);
    if (fs.size() != 2 || fs[0].bottom != 1 || fs[1].bottom != 1) return std::nullopt;
    BaseCoverage base;
    base.parity = parity;
    base.term_partition = term.lambda;
    base.term = staircase_strict_interval(term.shift, fs[0].top - 1, fs[1].top - 1);
    base.ambient = {2, term.shift};
    base.combined = {2, base.term.hi};
    return base;
}

inline std::optional<Family> step_family(long a, long b) {
    if (b % 3 == 0 && b >= 15) return Family::Mod3Zero;
    if (b % 3 == 1 && b >= 19) return Family::Mod3One;
    if (b % 3 == 2 && b >= 20) return Family::Mod3Two;
    if (b >= 5 && b <= 17 && b != 15 && a >= 2 * b + 13) return Family::SingleRow;
    return std::nullopt;
}

inline std::optional<InductiveStep> make_step(long a, long b, Family family, const BaseCoverage& base) {
    const KohTerm term = koh_term_for_family(a, b, family);
    auto fs = nontrivial_factors(term);
    InductiveStep st;
    st.family = family;
    st.term_partition = term.lambda;
    st.shift = term.shift;
    if (fs.empty() || fs.size() > 2) return std::nullopt;
    st.child_a = fs[0].top - fs[0].bottom;
    st.child_b = fs[0].bottom;
    if (fs.size() == 2) {
        if (fs[1].bottom != 1) return std::nullopt;
        st.linear_factor = fs[1].top - 1;
        st.lemma2 = Lemma2Obligation{st.child_a, st.child_b, *st.linear_factor};
    }
    st.claimed = {st.shift + (st.linear_factor ? 1 : 2), a * b / 2};

    auto& sc = st.side_conditions;
    sc.push_back({"shift < ab/2 - a", 2 * st.shift < a * b - 2 * a});
    sc.push_back({"claimed interval meets base coverage", st.claimed.lo <= base.combined.hi + 1});
    switch (family) {
        case Family::Mod3Zero:
            sc.push_back({"b >= 15", b >= 15});
            sc.push_back({"3a - 2b + 6 >= 15", 3 * a - 2 * b + 6 >= 15});
            break;
        case Family::Mod3One:
            sc.push_back({"b >= 19", b >= 19});
            sc.push_back({"3a - 2b + 8 >= 15", 3 * a - 2 * b + 8 >= 15});
            sc.push_back({"(3a-2b+8)(b-4)/3 >= (4a-2b+8) + 3", (3 * a - 2 * b + 8) * ((b - 4) / 3) >= (4 * a - 2 * b + 8) + 3});
            break;
        case Family::Mod3Two:
            sc.push_back({"b >= 20", b >= 20});
            sc.push_back({"3a - 2b + 10 >= 15", 3 * a - 2 * b + 10 >= 15});
            break;
        case Family::SingleRow:
            sc.push_back({"5 <= b <= 17, b != 15", b >= 5 && b <= 17 && b != 15});
            sc.push_back({"a >= 2b + 13", a >= 2 * b + 13});
            break;
        default: return std::nullopt;
    }
    if (st.lemma2) sc.push_back({"lemma 2 applies", lemma2_applies(st.lemma2->c, st.lemma2->d, st.lemma2->t)});
    return st;
}

inline CertifyOutcome direct(long a, long b, const std::string& path) {
    StrictnessReport r = is_strictly_unimodal_qbinom(a, b);
    if (r.strict) return Certificate{a, b, DirectCheck{}};
    return CertifyFailure{a, b, path, "direct check: coefficients not strictly increasing", r.witness};
}

inline CertifyOutcome certify_at(long a, long b, const std::string& path, long depth, GenContext& ctx) {
    if (depth > ctx.depth_cap) throw std::runtime_error("certify: recursion depth cap exceeded at " + path);
    auto family = step_family(a, b);
    if (!family) return direct(a, b, path);
    auto base = make_base(a, b);
    if (!base) return direct(a, b, path);
    auto step = make_step(a, b, *family, *base);
    if (!step) return direct(a, b, path);
    for (const auto& c : step->side_conditions)
        if (!c.holds) return direct(a, b, path);

    const long ca = std::max(step->child_a, step->child_b);
    const long cb = std::min(step->child_a, step->child_b);
    if (cb < 2) return direct(a, b, path);
    auto child = certify_at(ca, cb, path + "/child", depth + 1, ctx);
    if (auto* fail = std::get_if<CertifyFailure>(&child)) return *fail;
    step->child = std::make_shared<const Certificate>(std::get<Certificate>(std::move(child)));
    return Certificate{a, b, InductiveCover{std::move(*base), std::move(*step)}};
}

}  // namespace detail

/**
 * Build a certificate for a >= b >= 2 following the inductive argument;
 * falls back to a direct check where no family applies or a threshold fails.
 * Non-strict pairs come back as a failure naming the witness degree.
 */
inline CertifyOutcome certify(long a, long b) {
    if (b < 2 || a < b) throw UnsupportedRegime("certify: need a >= b >= 2");
    detail::GenContext ctx{10 * (a + b)};
    return detail::certify_at(a, b, "root", 0, ctx);
}

// ---------------------------------------------------------------------------
// Verifier
// ---------------------------------------------------------------------------

enum class VerifyMode { Symbolic, Numeric, Both };

struct VerificationFailure {
    std::string node_path;
    std::string condition;
};

struct VerificationResult {
    bool verified = true;
    std::vector<VerificationFailure> failures;

    void fail(std::string path, std::string condition) {
        verified = false;
        failures.push_back({std::move(path), std::move(condition)});
    }
};

namespace detail {

/// The cited partitions, rebuilt from their definitions.
inline std::vector<int> expected_parts(long b, Family f) {
    const int B = static_cast<int>(b);
    std::vector<int> p;
    switch (f) {
        case Family::EvenBase:
            for (int i = 0; i < B / 2 - 1; ++i) p.push_back(2);
            p.push_back(1);
            p.push_back(1);
            break;
        case Family::OddBase:
            for (int i = 0; i < B / 2; ++i) p.push_back(2);
            p.push_back(1);
            break;
        case Family::Mod3Zero: p = {B / 3, B / 3, B / 3}; break;
        case Family::Mod3One: p = {(B - 1) / 3, (B - 1) / 3, (B - 1) / 3, 1}; break;
        case Family::Mod3Two: p = {(B - 2) / 3, (B - 2) / 3, (B - 2) / 3, 1, 1}; break;
        case Family::SingleRow: p = {B}; break;
        case Family::Growth: break;
    }
    return p;
}

/// Compare the closed form against the generic descriptor list without expanding anything.
inline bool closed_form_matches_term(const FamilyClosedForm& cf, const KohTerm& t) {
    if (cf.shift != t.shift) return false;
    std::vector<KohFactor> want;
    if (cf.inner && cf.inner->bottom != 0) want.push_back(*cf.inner);
    for (long top : cf.linear_tops) want.push_back({top, 1});
    std::vector<KohFactor> got;
    for (const auto& f : t.factors)
        if (!f.trivial()) got.push_back(f);
    auto key = [](const KohFactor& x, const KohFactor& y) {
        return std::pair{x.bottom, x.top} < std::pair{y.bottom, y.top};
    };
    std::sort(want.begin(), want.end(), key);
    std::sort(got.begin(), got.end(), key);
    return want == got;
}

class Verifier {
public:
    explicit Verifier(VerifyMode mode) : mode_(mode) {}

    VerificationResult run(const Certificate& cert) {
        visit(cert, "root");
        return std::move(result_);
    }

private:
    bool symbolic() const { return mode_ != VerifyMode::Numeric; }
    bool numeric() const { return mode_ != VerifyMode::Symbolic; }

    void check(bool ok, const std::string& path, const std::string& what) {
        if (!ok) result_.fail(path, what);
    }

    void visit(const Certificate& cert, const std::string& path) {
        const long a = cert.a, b = cert.b;
        if (b < 2 || a < b) {
            result_.fail(path, "parameters outside a >= b >= 2");
            return;
        }
        const long mid = a * b / 2;

        if (cert.is_direct()) {
            // A direct leaf is its own computation in every mode.
            auto r = is_strictly_unimodal_qbinom(a, b);
            check(r.strict, path, "direct check: not strictly unimodal (witness " +
                                      std::to_string(r.witness.value_or(-1)) + ")");
            return;
        }

        const auto& cover = std::get<InductiveCover>(cert.root);
        const auto& base = cover.base;
        const auto& step = cover.step;

        // Coverage of [2, mid] by the three intervals, in every mode.
        check(base.ambient.lo <= 2, path + "/base", "ambient interval must start at degree 2");
        check(base.term.lo <= base.ambient.hi + 1, path + "/base", "gap between ambient and term intervals");
        check(base.combined.lo == base.ambient.lo && base.combined.hi == std::max(base.ambient.hi, base.term.hi),
              path + "/base", "combined interval is not the union of ambient and term intervals");
        check(step.claimed.lo <= base.combined.hi + 1, path + "/step", "gap between base coverage and claimed interval");
        check(step.claimed.hi >= mid, path + "/step", "claimed interval stops before floor(ab/2)");

        if (symbolic()) symbolic_node(cert, path);
        if (numeric()) numeric_node(cert, path);

        if (!step.child) {
            result_.fail(path + "/step", "missing child certificate");
            return;
        }
        const long ca = std::max(step.child_a, step.child_b), cb = std::min(step.child_a, step.child_b);
        check(step.child->a == ca && step.child->b == cb, path + "/step",
              "child certificate parameters do not match the inner q-binomial");
        visit(*step.child, path + "/child");
    }

    void symbolic_node(const Certificate& cert, const std::string& path) {
        const long a = cert.a, b = cert.b;
        const auto& base = std::get<InductiveCover>(cert.root).base;
        const auto& step = std::get<InductiveCover>(cert.root).step;
        const std::string bp = path + "/base", sp = path + "/step";
        const long mid = a * b / 2;

        // Base coverage.
        const Family parity = b % 2 == 0 ? Family::EvenBase : Family::OddBase;
        check(base.parity == parity, bp, "parity tag does not match b");
        check(base.term_partition.parts() == expected_parts(b, parity), bp, "term partition is not the base family");
        // c_n = p(n) for n <= b, and p is strict from n = 2 on.
        check(base.ambient.hi <= b, bp, "ambient interval exceeds b, where c_n = p(n) no longer applies");
        Interval want_term = parity == Family::EvenBase ? Interval{b - 1, a * b / 2 - a}
                                                        : Interval{b, a * (b - 1) / 2};
        check(base.term == want_term, bp, "term interval " + to_string(base.term) + " differs from " +
                                              to_string(want_term));
        auto base_cf = family_closed_form(a, b, parity);
        check(closed_form_matches_term(base_cf, koh_term(a, base.term_partition)), bp,
              "cited KOH term is not the staircase product");

        // Inductive step.
        bool applicable = false;
        switch (step.family) {
            case Family::Mod3Zero: applicable = b % 3 == 0; break;
            case Family::Mod3One: applicable = b % 3 == 1; break;
            case Family::Mod3Two: applicable = b % 3 == 2; break;
            case Family::SingleRow: applicable = true; break;
            default: break;
        }
        if (!applicable) {
            result_.fail(sp, "family " + std::string(family_name(step.family)) + " not applicable");
            return;
        }
        check(step.term_partition.parts() == expected_parts(b, step.family), sp, "term partition is not the family's");

        long shift = 0, ca = 0, cb = 0;
        std::optional<long> t;
        std::vector<SideCondition> conds;
        conds.push_back({"shift < ab/2 - a", 0});
        switch (step.family) {
            case Family::Mod3Zero:
                shift = b * (b - 3) / 3;
                ca = 3 * a - 2 * b + 6;
                cb = b / 3;
                conds.push_back({"b >= 15", b >= 15});
                conds.push_back({"3a - 2b + 6 >= 15", ca >= 15});
                break;
            case Family::Mod3One:
                shift = (b - 1) * (b - 4) / 3;
                ca = 3 * a - 2 * b + 8;
                cb = (b - 4) / 3;
                t = 4 * a - 2 * b + 8;
                conds.push_back({"b >= 19", b >= 19});
                conds.push_back({"3a - 2b + 8 >= 15", ca >= 15});
                conds.push_back({"(3a-2b+8)(b-4)/3 >= (4a-2b+8) + 3", ca * cb >= *t + 3});
                break;
            case Family::Mod3Two:
                shift = (b - 2) * (b - 5) / 3;
                ca = 3 * a - 2 * b + 10;
                cb = (b - 5) / 3;
                t = 5 * a - 2 * b + 10;
                conds.push_back({"b >= 20", b >= 20});
                conds.push_back({"3a - 2b + 10 >= 15", ca >= 15});
                break;
            case Family::SingleRow:
                shift = b * (b - 1);
                ca = a - 2 * b + 2;
                cb = b;
                conds.push_back({"5 <= b <= 17, b != 15", b >= 5 && b <= 17 && b != 15});
                conds.push_back({"a >= 2b + 13", a >= 2 * b + 13});
                break;
            default: break;
        }
        conds[0].holds = 2 * shift < a * b - 2 * a;
        if (t) conds.push_back({"lemma 2 applies", lemma2_applies(ca, cb, *t)});

        check(step.shift == shift, sp, "shift " + std::to_string(step.shift) + " != " + std::to_string(shift));
        check(step.child_a == ca && step.child_b == cb, sp, "child parameters differ from the family formula");
        check(step.linear_factor == t, sp, "linear factor differs from the family formula");
        check(!t || (step.lemma2 && *step.lemma2 == Lemma2Obligation{ca, cb, *t}), sp,
              "lemma 2 obligation differs from the family formula");
        check(2 * shift + ca * cb + t.value_or(0) == a * b, sp, "term is not centred at ab/2");
        check(ca >= 1 && cb >= 1, sp, "inner q-binomial is degenerate");

        Interval want_claimed{shift + (t ? 1 : 2), mid};
        check(step.claimed == want_claimed, sp, "claimed interval " + to_string(step.claimed) + " differs from " +
                                                    to_string(want_claimed));
        for (const auto& c : conds) {
            check(c.holds, sp, "side condition fails: " + c.name);
            auto it = std::find_if(step.side_conditions.begin(), step.side_conditions.end(),
                                   [&](const SideCondition& s) { return s.name == c.name; });
            check(it != step.side_conditions.end() && it->holds == c.holds, sp,
                  "recorded side condition missing or mis-evaluated: " + c.name);
        }
        auto step_cf = family_closed_form(a, b, step.family);
        check(closed_form_matches_term(step_cf, koh_term(a, step.term_partition)), sp,
              "cited KOH term does not have the family's closed form");
    }

    void numeric_node(const Certificate& cert, const std::string& path) {
        const long a = cert.a, b = cert.b;
        const auto& cover = std::get<InductiveCover>(cert.root);
        const std::size_t mid = static_cast<std::size_t>(a * b / 2);

        const IntPolynomial ambient = qbinom(a, b);
        auto r = strictness_of(a, b, ambient);
        check(r.strict, path, "ambient q-binomial is not strictly unimodal");
        check_strict(ambient, cover.base.ambient, path + "/base", "ambient");

        auto check_term = [&](const Partition& lambda, const Interval& iv, const std::string& where) {
            if (lambda.weight() != b) {
                result_.fail(where, "cited partition does not have weight b");
                return;
            }
            const IntPolynomial term = expand(koh_term(a, lambda));
            if (term.is_zero()) {
                result_.fail(where, "cited KOH term vanishes");
                return;
            }
            check_strict(term, iv, where, "KOH term");
            if (auto dip = first_decrease(term, 1, mid))
                result_.fail(where, "KOH term decreases at degree " + std::to_string(*dip) + " below the middle");
        };
        check_term(cover.base.term_partition, cover.base.term, path + "/base");
        check_term(cover.step.term_partition, cover.step.claimed, path + "/step");
    }

    void check_strict(const IntPolynomial& p, const Interval& iv, const std::string& where, const char* what) {
        if (iv.empty()) return;
        if (iv.lo < 1) {
            result_.fail(where, std::string(what) + " interval starts below degree 1");
            return;
        }
        if (auto w = first_non_strict(p, static_cast<std::size_t>(iv.lo), static_cast<std::size_t>(iv.hi)))
            result_.fail(where, std::string(what) + " not strictly increasing at degree " + std::to_string(*w) +
                                    " inside " + to_string(iv));
    }

    VerifyMode mode_;
    VerificationResult result_;
};

}  // namespace detail

inline VerificationResult verify_certificate(const Certificate& cert, VerifyMode mode) {
    return detail::Verifier(mode).run(cert);
}

// ---------------------------------------------------------------------------
// Exception scan
// ---------------------------------------------------------------------------

/// One record per 2 <= b <= b_max, b <= a <= a_max, ordered by b then a.
inline std::vector<StrictnessReport> scan_exceptions(long a_max, long b_max, unsigned jobs = 1) {
    if (b_max < 2 || a_max < b_max) throw std::invalid_argument("scan_exceptions: need a_max >= b_max >= 2");
    std::vector<std::pair<long, long>> pairs;
    for (long b = 2; b <= b_max; ++b)
        for (long a = b; a <= a_max; ++a) pairs.emplace_back(a, b);
    std::vector<StrictnessReport> out(pairs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < pairs.size();)
            out[i] = is_strictly_unimodal_qbinom(pairs[i].first, pairs[i].second);
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gap growth
// ---------------------------------------------------------------------------

struct GrowthDiagnostic {
    long k = 0;
    Lemma2Obligation obligation;
    bool lemma2 = false;
    bool inner_strict = false;  // as classified by the theorem
};

struct GrowthReport {
    long d = 0;
    long b = 0;
    long a0 = 0;
    long L = 0;
    long a = 0;
    bool verified = false;
    std::vector<long> failures;
    std::vector<GrowthDiagnostic> families;
};

/// Degrees i in [lo, hi] with c_i - c_{i-1} < gap.
inline std::vector<long> gap_failures(const IntPolynomial& p, long gap, long lo, long hi) {
    std::vector<long> out;
    const BigInt g = gap;
    for (long i = std::max(lo, 1L); i <= hi; ++i) {
        const auto u = static_cast<std::size_t>(i);
        if (p[u] - p[u - 1] < g) out.push_back(i);
    }
    return out;
}

struct GrowthParameters {
    long b, a0, L;
};

inline GrowthParameters growth_parameters(long d) {
    return {2 * d + 4, (d + 2) * (d + 3) + 6, 4 * d * d + 10 * d + 7};
}

/**
 * Checks c_i - c_{i-1} >= d for L <= i <= floor(ab/2) with b = 2d + 4, by
 * computing the q-binomial outright. The lambda^[k] terms for k = 1..d are
 * reported as diagnostics and do not affect the verdict.
 */
inline GrowthReport verify_growth(long d, long a) {
    if (d < 2) throw std::invalid_argument("verify_growth: need d >= 2");
    const auto [b, a0, L] = growth_parameters(d);
    if (a < a0)
        throw std::invalid_argument("verify_growth: precondition a >= a0 = " + std::to_string(a0) + " violated");
    GrowthReport rep{d, b, a0, L, a, false, {}, {}};

    rep.failures = gap_failures(qbinom(a, b), d, L, a * b / 2);
    rep.verified = rep.failures.empty();

    for (long k = 1; k <= d; ++k) {
        auto cf = family_closed_form(a, b, Family::Growth, k);
        GrowthDiagnostic g;
        g.k = k;
        g.obligation = {cf.inner->top - cf.inner->bottom, cf.inner->bottom, cf.linear_tops.front() - 1};
        g.lemma2 = lemma2_applies(g.obligation.c, g.obligation.d, g.obligation.t);
        const long hi = std::max(g.obligation.c, g.obligation.d), lo = std::min(g.obligation.c, g.obligation.d);
        g.inner_strict = lo >= 2 && theorem_predicts_strict(hi, lo);
        rep.families.push_back(g);
    }
    return rep;
}

}  // namespace gaussbin
