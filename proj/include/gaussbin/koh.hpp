#pragma once

/**
 * @file koh.hpp
 * @brief KOH decomposition of [a+b choose b]_q into terms F_lambda(q), one
 * per partition lambda of b:
 *
 *   F_lambda(q) = q^{2 sum_i C(lambda_i, 2)}
 *                 * prod_{j>=1} [ j(a+2) - Y_{j-1} - Y_{j+1} choose lambda_j - lambda_{j+1} ]_q
 *
 * Factors past the length of lambda have bottom 0 and are omitted; factors
 * with bottom 0 inside the length are kept as explicit constant factors so
 * the j index stays aligned with the formula.
 */

#include "gaussbin/partitions.hpp"
#include "gaussbin/polyring.hpp"
#include "gaussbin/qbinomial.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gaussbin {

struct UnsupportedRegime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FamilyNotApplicable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// (top, bottom) of a factor [top choose bottom]_q.
struct KohFactor {
    long top = 0;
    long bottom = 0;

    bool trivial() const noexcept { return bottom == 0; }
    bool vanishes() const noexcept { return bottom > top; }
    friend bool operator==(const KohFactor&, const KohFactor&) = default;
};

struct KohTerm {
    long a = 0;
    Partition lambda;
    long shift = 0;
    std::vector<KohFactor> factors;  // factors[j-1] belongs to index j

    bool vanishes() const {
        for (const auto& f : factors)
            if (f.vanishes()) return true;
        return false;
    }
};

inline KohTerm koh_term(long a, const Partition& lambda) {
    const long b = lambda.weight();
    if (b < 2 || a < b)
        throw UnsupportedRegime("unsupported regime: KOH terms need a >= b >= 2 (a=" + std::to_string(a) +
                                ", b=" + std::to_string(b) + ")");
    KohTerm t{a, lambda, 0, {}};
    for (int part : lambda.parts()) t.shift += static_cast<long>(part) * (part - 1);
    t.factors.reserve(lambda.length());
    for (std::size_t j = 1; j <= lambda.length(); ++j) {
        const long top = static_cast<long>(j) * (a + 2) - lambda.prefix_at(j - 1) - lambda.prefix_at(j + 1);
        const long bottom = lambda.part_at(j) - lambda.part_at(j + 1);
        // top >= a + 2 - b >= 2 for j = 1 and >= 2(a+2) - 2b > 0 beyond.
        if (top < 0)
            throw std::logic_error("KOH factor with negative top " + std::to_string(top) + " for lambda " +
                                   lambda.to_string() + ", a=" + std::to_string(a));
        t.factors.push_back({top, bottom});
    }
    return t;
}

namespace detail {

class FactorCache {
public:
    const IntPolynomial& get(const KohFactor& f) {
        auto key = std::make_pair(f.top, f.bottom);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, qbinom_top(f.top, f.bottom)).first;
        return it->second;
    }

private:
    std::map<std::pair<long, long>, IntPolynomial> cache_;
};

inline IntPolynomial expand_with(const KohTerm& term, FactorCache* cache) {
    if (term.vanishes()) return {};
    IntPolynomial prod = IntPolynomial::constant(1);
    for (const auto& f : term.factors) {
        if (f.trivial()) continue;
        prod = cache ? multiply(prod, cache->get(f)) : multiply(prod, qbinom_top(f.top, f.bottom));
    }
    return shift(prod, static_cast<std::size_t>(term.shift));
}

}  // namespace detail

inline IntPolynomial expand(const KohTerm& term) { return detail::expand_with(term, nullptr); }

/// Sum of all KOH terms for the pair; equals qbinom(a, b).
inline IntPolynomial koh_sum(long a, long b) {
    if (b < 2 || a < b) throw UnsupportedRegime("unsupported regime: koh_sum needs a >= b >= 2");
    detail::FactorCache cache;
    std::vector<BigInt> acc;
    for (const auto& lambda : partitions_of(static_cast<int>(b))) {
        add_into(acc, detail::expand_with(koh_term(a, lambda), &cache));
    }
    return IntPolynomial(std::move(acc));
}

/// The KOH terms used by the strict-unimodality argument and the gap-growth argument.
enum class Family { EvenBase, OddBase, Mod3Zero, Mod3One, Mod3Two, SingleRow, Growth };

inline constexpr Family kAllFamilies[] = {Family::EvenBase, Family::OddBase,   Family::Mod3Zero, Family::Mod3One,
                                          Family::Mod3Two,  Family::SingleRow, Family::Growth};

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::EvenBase: return "even-base";
        case Family::OddBase: return "odd-base";
        case Family::Mod3Zero: return "mod-3-zero";
        case Family::Mod3One: return "mod-3-one";
        case Family::Mod3Two: return "mod-3-two";
        case Family::SingleRow: return "single-row";
        case Family::Growth: return "growth";
    }
    return "?";
}

inline Family family_from_name(std::string_view s) {
    for (Family f : kAllFamilies)
        if (family_name(f) == s) return f;
    throw std::invalid_argument("unknown family \"" + std::string(s) + "\"");
}

/**
 * The partition each family cites, for weight b. Growth uses
 * lambda^[k] = (b-k, 1^k) and needs 1 <= k < b.
 */
inline Partition family_partition(long b, Family family, long k = 0) {
    auto fail = [&] {
        return FamilyNotApplicable("family not applicable: " + std::string(family_name(family)) +
                                   " with b=" + std::to_string(b) +
                                   (family == Family::Growth ? ", k=" + std::to_string(k) : std::string{}));
    };
    std::vector<int> parts;
    const int B = static_cast<int>(b);
    switch (family) {
        case Family::EvenBase:
            if (B < 2 || B % 2 != 0) throw fail();
            parts.assign(static_cast<std::size_t>(B / 2 - 1), 2);
            parts.insert(parts.end(), {1, 1});
            break;
        case Family::OddBase:
            if (B < 3 || B % 2 != 1) throw fail();
            parts.assign(static_cast<std::size_t>(B / 2), 2);
            parts.push_back(1);
            break;
        case Family::Mod3Zero:
            if (B < 3 || B % 3 != 0) throw fail();
            parts.assign(3, B / 3);
            break;
        case Family::Mod3One:
            if (B < 4 || B % 3 != 1) throw fail();
            parts.assign(3, (B - 1) / 3);
            parts.push_back(1);
            break;
        case Family::Mod3Two:
            if (B < 5 || B % 3 != 2) throw fail();
            parts.assign(3, (B - 2) / 3);
            parts.insert(parts.end(), {1, 1});
            break;
        case Family::SingleRow:
            if (B < 1) throw fail();
            parts.push_back(B);
            break;
        case Family::Growth:
            if (k < 1 || k >= b) throw fail();
            parts.push_back(B - static_cast<int>(k));
            parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
            break;
    }
    return Partition(std::move(parts));
}

inline KohTerm koh_term_for_family(long a, long b, Family family, long k = 0) {
    return koh_term(a, family_partition(b, family, k));
}

/**
 * Closed forms of the family terms, written directly in terms of a and b:
 * q^shift * [inner_top choose inner_bottom]_q * [linear_top choose 1]_q.
 * Missing factors are the constant 1. Kept apart from koh_term so the two
 * can be compared.
 */
struct FamilyClosedForm {
    long shift = 0;
    std::optional<KohFactor> inner;
    std::vector<long> linear_tops;

    IntPolynomial expand() const {
        IntPolynomial p = IntPolynomial::constant(1);
        if (inner) p = multiply(p, qbinom_top(inner->top, inner->bottom));
        for (long t : linear_tops) p = multiply(p, qbinom_top(t, 1));
        return gaussbin::shift(p, static_cast<std::size_t>(shift));
    }
};

inline FamilyClosedForm family_closed_form(long a, long b, Family family, long k = 0) {
    family_partition(b, family, k);  // applicability
    FamilyClosedForm cf;
    switch (family) {
        case Family::EvenBase:
            cf.shift = b - 2;
            cf.linear_tops = {a * b / 2 - a - b + 3, a * b / 2 + a - b + 3};
            break;
        case Family::OddBase:
            cf.shift = b - 1;
            cf.linear_tops = {a * (b - 1) / 2 - b + 2, a * (b - 1) / 2 + a - b + 2};
            break;
        case Family::Mod3Zero:
            cf.shift = b * (b - 3) / 3;
            cf.inner = KohFactor{(3 * a - 2 * b + 6) + b / 3, b / 3};
            break;
        case Family::Mod3One:
            cf.shift = (b - 1) * (b - 4) / 3;
            cf.inner = KohFactor{3 * a - 2 * b + 8 + (b - 4) / 3, (b - 4) / 3};
            cf.linear_tops = {4 * a - 2 * b + 9};
            break;
        case Family::Mod3Two:
            cf.shift = (b - 2) * (b - 5) / 3;
            cf.inner = KohFactor{3 * a - 2 * b + 10 + (b - 5) / 3, (b - 5) / 3};
            cf.linear_tops = {5 * a - 2 * b + 11};
            break;
        case Family::SingleRow:
            cf.shift = b * (b - 1);
            cf.inner = KohFactor{a + 2 - b, b};
            break;
        case Family::Growth:
            cf.shift = (b - k) * (b - k - 1);
            cf.inner = KohFactor{a - 2 * b + 2 * k + 2 + (b - k - 1), b - k - 1};
            cf.linear_tops = {(k + 1) * (a + 2) - 2 * b + 1};
            break;
    }
    return cf;
}

}  // namespace gaussbin
