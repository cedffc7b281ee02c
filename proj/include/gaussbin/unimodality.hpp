#pragma once

/**
 * @file unimodality.hpp
 * @brief Symmetry, unimodality and the two strictness notions.
 *
 * "Strict at degree i" always means c_{i-1} < c_i. A q-binomial of degree D is
 * strictly unimodal when it is strict at every degree in [2, floor(D/2)]
 * (c_0 = c_1 = 1 always, so degree 1 is exempt). A symmetric polynomial is
 * strict in all nonnegative degrees when it is strict on [1, floor(D/2)].
 */

#include "gaussbin/polyring.hpp"
#include "gaussbin/qbinomial.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace gaussbin {

namespace detail {

inline std::size_t degree_of_nonzero(const IntPolynomial& p, const char* who) {
    auto d = p.degree();
    if (!d) throw std::invalid_argument(std::string(who) + ": zero polynomial");
    return *d;
}

}  // namespace detail

inline bool is_symmetric(const IntPolynomial& p) {
    const std::size_t d = detail::degree_of_nonzero(p, "is_symmetric");
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < d - i; ++i)
        if (c[i] != c[d - i]) return false;
    return true;
}

inline bool is_unimodal(const IntPolynomial& p) {
    const std::size_t d = detail::degree_of_nonzero(p, "is_unimodal");
    const auto& c = p.coeffs();
    bool decreased = false;
    for (std::size_t i = 1; i <= d; ++i) {
        int cmp = ::cmp(c[i], c[i - 1]);
        if (cmp < 0) decreased = true;
        else if (cmp > 0 && decreased) return false;
    }
    return true;
}

/// First degree i in [lo, hi] with c_{i-1} >= c_i, if any.
inline std::optional<std::size_t> first_non_strict(const IntPolynomial& p, std::size_t lo, std::size_t hi) {
    const auto& c = p.coeffs();
    for (std::size_t i = std::max<std::size_t>(lo, 1); i <= hi; ++i) {
        const BigInt& prev = i - 1 < c.size() ? c[i - 1] : BigInt(0);
        const BigInt& cur = i < c.size() ? c[i] : BigInt(0);
        if (prev >= cur) return i;
    }
    return std::nullopt;
}

/// First degree i in [lo, hi] with c_{i-1} > c_i, if any.
inline std::optional<std::size_t> first_decrease(const IntPolynomial& p, std::size_t lo, std::size_t hi) {
    for (std::size_t i = std::max<std::size_t>(lo, 1); i <= hi; ++i)
        if (p[i - 1] > p[i]) return i;
    return std::nullopt;
}

struct StrictnessReport {
    long a = 0;
    long b = 0;
    long degree = 0;
    bool strict = false;
    std::optional<long> witness;
};

/// Classify an already computed qbinom(a, b).
inline StrictnessReport strictness_of(long a, long b, const IntPolynomial& p) {
    StrictnessReport r{a, b, a * b, true, std::nullopt};
    if (r.degree / 2 >= 2) {
        if (auto w = first_non_strict(p, 2, static_cast<std::size_t>(r.degree / 2))) {
            r.strict = false;
            r.witness = static_cast<long>(*w);
        }
    }
    return r;
}

inline StrictnessReport is_strictly_unimodal_qbinom(long a, long b) {
    if (a < 1 || b < 1) throw std::invalid_argument("is_strictly_unimodal_qbinom: need a, b >= 1");
    return strictness_of(a, b, qbinom(a, b));
}

inline bool is_strict_all_degrees(const IntPolynomial& p) {
    if (!is_symmetric(p)) throw std::invalid_argument("is_strict_all_degrees: polynomial is not symmetric");
    const std::size_t d = *p.degree();
    return !first_non_strict(p, 1, d / 2).has_value();
}

/// Side condition under which [c+d choose d]_q * (1 + q + ... + q^t) is strict in all degrees.
inline bool lemma2_applies(long c, long d, long t) {
    if (c < 1 || d < 1) return false;
    return t >= 1 && t <= c * d && t != c * d - 2;
}

struct DifferenceProfile {
    std::vector<BigInt> diffs;  // diffs[i-1] = c_i - c_{i-1}, i = 1..floor(D/2)
};

inline DifferenceProfile difference_profile(const IntPolynomial& p) {
    const std::size_t d = detail::degree_of_nonzero(p, "difference_profile");
    DifferenceProfile out;
    out.diffs.reserve(d / 2);
    for (std::size_t i = 1; i <= d / 2; ++i) out.diffs.push_back(p.coeffs()[i] - p.coeffs()[i - 1]);
    return out;
}

}  // namespace gaussbin
