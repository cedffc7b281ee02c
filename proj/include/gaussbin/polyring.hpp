#pragma once

/**
 * @file polyring.hpp
 * @brief Dense univariate polynomials with arbitrary-precision nonnegative
 * integer coefficients.
 *
 * coeffs()[i] is the coefficient of q^i. The stored sequence never has a
 * trailing zero; the zero polynomial stores nothing. Every public value has
 * nonnegative coefficients. Signed values only live inside the division
 * routines' working buffers.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gaussbin {

using BigInt = mpz_class;

class IntPolynomial {
public:
    IntPolynomial() = default;

    IntPolynomial(std::initializer_list<long> cs) {
        coeffs_.reserve(cs.size());
        for (long c : cs) coeffs_.emplace_back(c);
        canonicalize();
    }

    explicit IntPolynomial(std::vector<BigInt> cs) : coeffs_(std::move(cs)) { canonicalize(); }

    static IntPolynomial constant(long c) { return IntPolynomial{c}; }

    static IntPolynomial monomial(std::size_t k, BigInt c = 1) {
        std::vector<BigInt> cs(k + 1);
        cs[k] = std::move(c);
        return IntPolynomial(std::move(cs));
    }

    /// 1 + q + ... + q^t
    static IntPolynomial staircase(std::size_t t) {
        return IntPolynomial(std::vector<BigInt>(t + 1, BigInt(1)));
    }

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// Coefficient of q^i; zero beyond the degree.
    BigInt operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

    /// Reference access without the copy; only valid for i <= degree.
    const BigInt& at(std::size_t i) const { return coeffs_.at(i); }

    std::size_t size() const noexcept { return coeffs_.size(); }

    friend bool operator==(const IntPolynomial& p, const IntPolynomial& q) {
        return p.coeffs_ == q.coeffs_;
    }

private:
    void canonicalize() {
        for (const auto& c : coeffs_) {
            if (sgn(c) < 0) throw std::domain_error("negative coefficient in IntPolynomial");
        }
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

inline IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) {
    const auto& big = p.size() >= q.size() ? p.coeffs() : q.coeffs();
    const auto& small = p.size() >= q.size() ? q.coeffs() : p.coeffs();
    std::vector<BigInt> out(big);
    for (std::size_t i = 0; i < small.size(); ++i) out[i] += small[i];
    return IntPolynomial(std::move(out));
}

/// In-place accumulation; used by sums over many terms.
inline void add_into(std::vector<BigInt>& acc, const IntPolynomial& p) {
    if (acc.size() < p.size()) acc.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) acc[i] += p.coeffs()[i];
}

/// Schoolbook convolution.
inline IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const auto& x = p.coeffs();
    const auto& y = q.coeffs();
    std::vector<BigInt> out(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        mpz_srcptr xi = x[i].get_mpz_t();
        for (std::size_t j = 0; j < y.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), xi, y[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(out));
}

inline IntPolynomial shift(const IntPolynomial& p, std::size_t k) {
    if (p.is_zero() || k == 0) return p;
    std::vector<BigInt> out(k + p.size());
    std::copy(p.coeffs().begin(), p.coeffs().end(), out.begin() + static_cast<std::ptrdiff_t>(k));
    return IntPolynomial(std::move(out));
}

inline BigInt eval_at_one(const IntPolynomial& p) {
    BigInt s = 0;
    for (const auto& c : p.coeffs()) s += c;
    return s;
}

namespace detail {

inline void trim(std::vector<BigInt>& v) {
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

inline IntPolynomial to_nonnegative(std::vector<BigInt> v) {
    trim(v);
    for (const auto& c : v) {
        if (sgn(c) < 0) throw std::domain_error("exact_divide: negative coefficient in quotient");
    }
    return IntPolynomial(std::move(v));
}

}  // namespace detail

/**
 * Multiply the signed buffer by (1 - q^k) in place. The buffer grows by k.
 */
inline void mul_one_minus_q_power(std::vector<BigInt>& buf, std::size_t k) {
    if (k == 0) {
        buf.clear();
        return;
    }
    const std::size_t n = buf.size();
    buf.resize(n + k);
    for (std::size_t i = n + k; i-- > k;) buf[i] -= buf[i - k];
}

/**
 * Synthetic division of the signed buffer by (1 - q^k), in place.
 * Throws if the division leaves a remainder.
 */
inline void div_one_minus_q_power(std::vector<BigInt>& buf, std::size_t k) {
    if (k == 0) throw std::domain_error("exact_divide: division by zero polynomial");
    detail::trim(buf);
    if (buf.empty()) return;
    if (buf.size() <= k) throw std::domain_error("exact_divide: not divisible");
    for (std::size_t i = k; i < buf.size(); ++i) buf[i] += buf[i - k];
    // The quotient has degree deg - k; the top k slots must have cancelled.
    for (std::size_t i = buf.size() - k; i < buf.size(); ++i) {
        if (sgn(buf[i]) != 0) throw std::domain_error("exact_divide: not divisible");
    }
    buf.resize(buf.size() - k);
}

/**
 * Exact long division over the integers on signed coefficient sequences.
 * The quotient must have integer, nonnegative coefficients and the remainder
 * must vanish.
 */
inline IntPolynomial exact_divide_signed(std::span<const BigInt> numerator,
                                         std::span<const BigInt> divisor) {
    std::vector<BigInt> rem(numerator.begin(), numerator.end());
    std::vector<BigInt> d(divisor.begin(), divisor.end());
    detail::trim(rem);
    detail::trim(d);
    if (d.empty()) throw std::domain_error("exact_divide: division by zero polynomial");
    if (rem.empty()) return {};
    if (rem.size() < d.size()) throw std::domain_error("exact_divide: not divisible");

    const std::size_t dd = d.size() - 1;
    const BigInt& lead = d.back();
    std::vector<BigInt> quot(rem.size() - dd);
    BigInt t;
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt& top = rem[k + dd];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("exact_divide: not divisible");
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t j = 0; j <= dd; ++j) mpz_submul(rem[k + j].get_mpz_t(), t.get_mpz_t(), d[j].get_mpz_t());
        quot[k] = t;
    }
    for (const auto& r : rem) {
        if (sgn(r) != 0) throw std::domain_error("exact_divide: not divisible");
    }
    return detail::to_nonnegative(std::move(quot));
}

inline IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& d) {
    return exact_divide_signed(p.coeffs(), d.coeffs());
}

/// Coefficient list as decimal strings, index = degree.
inline std::vector<std::string> to_decimal(const IntPolynomial& p) {
    std::vector<std::string> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

/// Inverse of to_decimal. Rejects trailing zeros, signs and malformed digits.
inline IntPolynomial from_decimal(const std::vector<std::string>& digits) {
    std::vector<BigInt> cs;
    cs.reserve(digits.size());
    for (const auto& s : digits) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw std::invalid_argument("malformed coefficient \"" + s + "\"");
        if (s.size() > 1 && s.front() == '0')
            throw std::invalid_argument("non-canonical coefficient \"" + s + "\"");
        cs.emplace_back(s, 10);
    }
    if (!cs.empty() && sgn(cs.back()) == 0) throw std::invalid_argument("trailing zero coefficient");
    return IntPolynomial(std::move(cs));
}

}  // namespace gaussbin
