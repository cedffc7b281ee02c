#pragma once

/**
 * @file qbinomial.hpp
 * @brief Gaussian binomial coefficients [a+b choose b]_q.
 *
 * Two independent constructions: the product formula
 * prod_{i=1..b} (1 - q^{a+i}) / (1 - q^i), and a counting DP over partitions
 * that fit in an a-by-b box. The second never divides and serves as an oracle.
 */

#include "gaussbin/polyring.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace gaussbin {

/**
 * Product formula with interleaved exact division. After step i the buffer
 * holds [a+i choose i]_q, so it never grows past the final degree a*b + a + b.
 */
inline IntPolynomial qbinom(long a, long b) {
    if (a < 0 || b < 0) throw std::invalid_argument("qbinom: parameters must be nonnegative");
    // [a+b choose b] = [a+b choose a]; iterate over the smaller one.
    const auto steps = static_cast<std::size_t>(std::min(a, b));
    const auto width = static_cast<std::size_t>(std::max(a, b));
    std::vector<BigInt> buf{BigInt(1)};
    buf.reserve(width * steps + width + steps + 1);
    for (std::size_t i = 1; i <= steps; ++i) {
        mul_one_minus_q_power(buf, width + i);
        div_one_minus_q_power(buf, i);
    }
    return detail::to_nonnegative(std::move(buf));
}

/// [n choose k]_q with the out-of-range convention: 0 unless 0 <= k <= n.
inline IntPolynomial qbinom_top(long n, long k) {
    if (n < 0 || k < 0 || k > n) return {};
    if (k == 0) return IntPolynomial::constant(1);
    return qbinom(n - k, k);
}

/**
 * Coefficient n counts partitions of n with at most b parts, each at most a.
 * counts[j][n] = partitions of n into exactly j parts using the part sizes
 * seen so far; each size is an unbounded knapsack item.
 */
inline IntPolynomial qbinom_oracle(long a, long b) {
    if (a < 0 || b < 0) throw std::invalid_argument("qbinom_oracle: parameters must be nonnegative");
    const auto A = static_cast<std::size_t>(a);
    const auto B = static_cast<std::size_t>(b);
    const std::size_t top = A * B;
    std::vector<std::vector<BigInt>> counts(B + 1, std::vector<BigInt>(top + 1));
    counts[0][0] = 1;
    for (std::size_t size = 1; size <= A; ++size) {
        for (std::size_t j = 1; j <= B; ++j) {
            for (std::size_t n = size; n <= top; ++n) {
                if (sgn(counts[j - 1][n - size]) != 0) counts[j][n] += counts[j - 1][n - size];
            }
        }
    }
    std::vector<BigInt> out(top + 1);
    for (std::size_t j = 0; j <= B; ++j)
        for (std::size_t n = 0; n <= top; ++n) out[n] += counts[j][n];
    return IntPolynomial(std::move(out));
}

/// Ordinary binomial C(a+b, b) by the multiplicative formula.
inline BigInt qbinom_q1(long a, long b) {
    if (a < 0 || b < 0) throw std::invalid_argument("qbinom_q1: parameters must be nonnegative");
    BigInt r = 1;
    for (long i = 1; i <= b; ++i) {
        r *= a + i;
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return r;
}

}  // namespace gaussbin
