#include "gaussbin/certify.hpp"

#include <gtest/gtest.h>

#include <set>

namespace gaussbin {
namespace {

Certificate expect_certificate(CertifyOutcome o) {
    if (auto* f = std::get_if<CertifyFailure>(&o)) {
        ADD_FAILURE() << "certify failed at " << f->node_path << ": " << f->reason;
    }
    return std::get<Certificate>(std::move(o));
}

InductiveCover& cover_of(Certificate& c) { return std::get<InductiveCover>(c.root); }

bool has_failure_mentioning(const VerificationResult& v, const std::string& needle) {
    for (const auto& f : v.failures)
        if (f.condition.find(needle) != std::string::npos) return true;
    return false;
}

TEST(Certify, TwoTwoIsDirect) {
    const auto c = expect_certificate(certify(2, 2));
    EXPECT_TRUE(c.is_direct());
    EXPECT_TRUE(verify_certificate(c, VerifyMode::Both).verified);
}

TEST(Certify, ExceptionYieldsWitness) {
    auto o = certify(6, 5);
    ASSERT_TRUE(std::holds_alternative<CertifyFailure>(o));
    const auto& f = std::get<CertifyFailure>(o);
    ASSERT_TRUE(f.witness);
    EXPECT_GE(*f.witness, 2);
    EXPECT_LE(*f.witness, 15);
    const auto p = qbinom(6, 5);
    EXPECT_GE(p[static_cast<std::size_t>(*f.witness) - 1], p[static_cast<std::size_t>(*f.witness)]);
    EXPECT_EQ(f.node_path, "root");
}

TEST(Certify, FortyFifteenStructure) {
    const auto c = expect_certificate(certify(40, 15));
    ASSERT_FALSE(c.is_direct());
    const auto& cov = std::get<InductiveCover>(c.root);
    EXPECT_EQ(cov.base.parity, Family::OddBase);
    EXPECT_EQ(cov.step.family, Family::Mod3Zero);
    EXPECT_EQ(cov.step.child_a, 96);
    EXPECT_EQ(cov.step.child_b, 5);
    EXPECT_EQ(cov.step.shift, 60);

    // (96,5) -> (88,5) -> ... by single-row steps, ending in a direct leaf.
    std::vector<long> widths;
    const Certificate* node = cov.step.child.get();
    while (node && !node->is_direct()) {
        widths.push_back(node->a);
        const auto& s = std::get<InductiveCover>(node->root).step;
        EXPECT_EQ(s.family, Family::SingleRow);
        EXPECT_EQ(node->b, 5);
        node = s.child.get();
    }
    ASSERT_NE(node, nullptr);
    EXPECT_EQ(widths, (std::vector<long>{96, 88, 80, 72, 64, 56, 48, 40, 32, 24}));
    EXPECT_EQ(node->a, 16);
    EXPECT_EQ(node->b, 5);
    EXPECT_TRUE(verify_certificate(c, VerifyMode::Both).verified);
}

TEST(Certify, FallbackToDirectIsAccepted) {
    const auto c = expect_certificate(certify(23, 9));
    EXPECT_TRUE(c.is_direct());  // 23 < 2*9 + 13
    EXPECT_TRUE(verify_certificate(c, VerifyMode::Both).verified);
}

TEST(Certify, NarrowSingleRowChildIsNormalised) {
    // b = 16, a = 45: single-row child is (15, 16), certified as (16, 15).
    const auto c = expect_certificate(certify(45, 16));
    const auto& s = std::get<InductiveCover>(c.root).step;
    EXPECT_EQ(s.family, Family::SingleRow);
    EXPECT_EQ(s.child_a, 15);
    EXPECT_EQ(s.child_b, 16);
    EXPECT_EQ(s.child->a, 16);
    EXPECT_EQ(s.child->b, 15);
    EXPECT_TRUE(verify_certificate(c, VerifyMode::Both).verified);
}

TEST(Certify, LemmaTwoFamilies) {
    for (auto [a, b, fam] : {std::tuple{19L, 19L, Family::Mod3One}, std::tuple{25L, 22L, Family::Mod3One},
                             std::tuple{20L, 20L, Family::Mod3Two}, std::tuple{24L, 23L, Family::Mod3Two}}) {
        const auto c = expect_certificate(certify(a, b));
        const auto& s = std::get<InductiveCover>(c.root).step;
        EXPECT_EQ(s.family, fam);
        ASSERT_TRUE(s.linear_factor);
        ASSERT_TRUE(s.lemma2);
        EXPECT_EQ(s.claimed.lo, s.shift + 1);
        const long t = fam == Family::Mod3One ? 4 * a - 2 * b + 8 : 5 * a - 2 * b + 10;
        EXPECT_EQ(*s.linear_factor, t);
        EXPECT_TRUE(verify_certificate(c, VerifyMode::Both).verified) << a << "," << b;
    }
}

TEST(Certify, DeepCertificateVerifiesSymbolically) {
    const auto c = expect_certificate(certify(100, 100));
    const auto& s = std::get<InductiveCover>(c.root).step;
    EXPECT_EQ(s.family, Family::Mod3One);
    EXPECT_EQ(s.child_a, 108);
    EXPECT_EQ(s.child_b, 32);
    EXPECT_TRUE(verify_certificate(c, VerifyMode::Symbolic).verified);
}

TEST(Certify, PreconditionViolation) {
    EXPECT_THROW(certify(3, 5), UnsupportedRegime);
    EXPECT_THROW(certify(5, 1), UnsupportedRegime);
}

TEST(Certify, TamperedCertificatesAreRejected) {
    const auto original = expect_certificate(certify(40, 15));

    {   // Claimed interval pulled one degree lower: the bare inner q-binomial is flat there.
        Certificate c = original;
        cover_of(c).step.claimed.lo -= 1;
        for (auto mode : {VerifyMode::Symbolic, VerifyMode::Numeric}) {
            auto v = verify_certificate(c, mode);
            EXPECT_FALSE(v.verified);
            EXPECT_EQ(v.failures.front().node_path, "root/step");
        }
    }
    {   // Base term interval widened past the staircase's strict range.
        Certificate c = original;
        cover_of(c).base.term.hi += 1;
        cover_of(c).base.combined.hi += 1;
        EXPECT_FALSE(verify_certificate(c, VerifyMode::Symbolic).verified);
        EXPECT_FALSE(verify_certificate(c, VerifyMode::Numeric).verified);
    }
    {   // Wrong shift.
        Certificate c = original;
        cover_of(c).step.shift += 1;
        auto v = verify_certificate(c, VerifyMode::Symbolic);
        EXPECT_FALSE(v.verified);
        EXPECT_TRUE(has_failure_mentioning(v, "shift"));
    }
    {   // Mis-recorded side condition.
        Certificate c = original;
        cover_of(c).step.side_conditions.back().holds = false;
        EXPECT_FALSE(verify_certificate(c, VerifyMode::Symbolic).verified);
    }
    {   // Missing child.
        Certificate c = original;
        cover_of(c).step.child.reset();
        auto v = verify_certificate(c, VerifyMode::Both);
        EXPECT_FALSE(v.verified);
        EXPECT_TRUE(has_failure_mentioning(v, "missing child"));
    }
    {   // Gap between base coverage and inductive step.
        Certificate c = original;
        cover_of(c).base.term.hi = 40;
        cover_of(c).base.combined.hi = 40;
        auto v = verify_certificate(c, VerifyMode::Numeric);
        EXPECT_FALSE(v.verified);
        EXPECT_TRUE(has_failure_mentioning(v, "gap"));
    }
    {   // A non-strict pair disguised as a direct leaf.
        Certificate c{6, 5, DirectCheck{}};
        EXPECT_FALSE(verify_certificate(c, VerifyMode::Symbolic).verified);
    }
    {   // Cited term swapped for another partition of b.
        Certificate c = original;
        cover_of(c).step.term_partition = Partition({7, 4, 4});
        EXPECT_FALSE(verify_certificate(c, VerifyMode::Symbolic).verified);
        EXPECT_FALSE(verify_certificate(c, VerifyMode::Numeric).verified);
    }
}

TEST(Certify, StaircaseStrictInterval) {
    EXPECT_EQ(staircase_strict_interval(0, 2, 4), (Interval{1, 2}));
    EXPECT_EQ(multiply(IntPolynomial::staircase(2), IntPolynomial::staircase(4)),
              (IntPolynomial{1, 2, 3, 3, 3, 2, 1}));
    EXPECT_TRUE(staircase_strict_interval(3, 0, 5).empty());
    // b = 10, a = 20, even base: shift b-2, lengths ab/2-a-b+2 and ab/2+a-b+2.
    EXPECT_EQ(staircase_strict_interval(8, 72, 112), (Interval{9, 80}));
    EXPECT_THROW(staircase_strict_interval(0, -1, 2), std::invalid_argument);
}

TEST(Certify, StaircaseIntervalIsExact) {
    for (long s1 = 0; s1 <= 8; ++s1)
        for (long s2 = 0; s2 <= 8; ++s2)
            for (long sh = 0; sh <= 3; ++sh) {
                auto p = shift(multiply(IntPolynomial::staircase(static_cast<std::size_t>(s1)),
                                        IntPolynomial::staircase(static_cast<std::size_t>(s2))),
                               static_cast<std::size_t>(sh));
                auto iv = staircase_strict_interval(sh, s1, s2);
                // Degrees above the shift; below it the polynomial is zero.
                for (long i = sh + 1; i <= sh + s1 + s2; ++i) {
                    const bool strict = p[static_cast<std::size_t>(i - 1)] < p[static_cast<std::size_t>(i)];
                    EXPECT_EQ(strict, iv.contains(i)) << sh << " " << s1 << " " << s2 << " @" << i;
                }
            }
}

TEST(Certify, ScanOrderAndSmallCases) {
    auto rows = scan_exceptions(20, 7);
    ASSERT_FALSE(rows.empty());
    for (std::size_t i = 1; i < rows.size(); ++i)
        EXPECT_LT(std::pair(rows[i - 1].b, rows[i - 1].a), std::pair(rows[i].b, rows[i].a));
    std::set<std::pair<long, long>> bad;
    for (const auto& r : rows) {
        if (r.b == 2) {
            EXPECT_EQ(r.strict, r.a == 2);
        }
        if (r.b == 3 || r.b == 4) {
            EXPECT_FALSE(r.strict);
        }
        if (r.b >= 5 && !r.strict) bad.insert({r.a, r.b});
    }
    std::set<std::pair<long, long>> want{{6, 5}, {10, 5}, {14, 5}, {6, 6}, {7, 6}, {9, 6}, {11, 6}, {13, 6}, {10, 7}};
    EXPECT_EQ(bad, want);
    EXPECT_THROW(scan_exceptions(5, 7), std::invalid_argument);
}

TEST(Certify, ScanIsDeterministicUnderParallelism) {
    auto serial = scan_exceptions(24, 9, 1);
    auto parallel = scan_exceptions(24, 9, 4);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].a, parallel[i].a);
        EXPECT_EQ(serial[i].b, parallel[i].b);
        EXPECT_EQ(serial[i].strict, parallel[i].strict);
        EXPECT_EQ(serial[i].witness, parallel[i].witness);
    }
}

TEST(Certify, TheoremReproduction) {
    for (long a = 2; a <= 40; ++a)
        for (long b = 2; b <= a; ++b)
            ASSERT_EQ(is_strictly_unimodal_qbinom(a, b).strict, theorem_predicts_strict(a, b)) << a << "," << b;
}

TEST(Certify, CoverageAndKeyGlue) {
    for (long a = 2; a <= 40; ++a)
        for (long b = 2; b <= a; ++b) {
            auto o = certify(a, b);
            if (!std::holds_alternative<Certificate>(o)) continue;
            for (const Certificate* c = &std::get<Certificate>(o); c && !c->is_direct();
                 c = std::get<InductiveCover>(c->root).step.child.get()) {
                const auto& cov = std::get<InductiveCover>(c->root);
                std::vector<bool> covered(static_cast<std::size_t>(c->a * c->b / 2) + 1, false);
                for (const auto& iv : {cov.base.combined, cov.step.claimed})
                    for (long i = std::max(iv.lo, 0L); i <= std::min<long>(iv.hi, static_cast<long>(covered.size()) - 1); ++i)
                        covered[static_cast<std::size_t>(i)] = true;
                for (std::size_t i = 2; i < covered.size(); ++i) ASSERT_TRUE(covered[i]) << c->a << "," << c->b << " @" << i;

                // Cited terms never decrease below the middle.
                const std::size_t mid = static_cast<std::size_t>(c->a * c->b / 2);
                for (const auto* lambda : {&cov.base.term_partition, &cov.step.term_partition})
                    EXPECT_FALSE(first_decrease(expand(koh_term(c->a, *lambda)), 1, mid).has_value());
            }
        }
}

TEST(Certify, SymbolicAndNumericAgree) {
    for (long a = 2; a <= 45; ++a)
        for (long b = 2; b <= a; ++b) {
            auto o = certify(a, b);
            ASSERT_EQ(std::holds_alternative<Certificate>(o), theorem_predicts_strict(a, b)) << a << "," << b;
            if (auto* c = std::get_if<Certificate>(&o)) {
                auto sym = verify_certificate(*c, VerifyMode::Symbolic);
                auto num = verify_certificate(*c, VerifyMode::Numeric);
                ASSERT_TRUE(sym.verified) << a << "," << b << " " << sym.failures.front().condition;
                ASSERT_TRUE(num.verified) << a << "," << b << " " << num.failures.front().condition;
            }
        }
}

TEST(Certify, GrowthParameters) {
    auto g2 = growth_parameters(2);
    EXPECT_EQ(g2.b, 8);
    EXPECT_EQ(g2.a0, 26);
    EXPECT_EQ(g2.L, 43);
    auto g3 = growth_parameters(3);
    EXPECT_EQ(g3.b, 10);
    EXPECT_EQ(g3.a0, 36);
    EXPECT_EQ(g3.L, 73);
    for (long d = 2; d <= 10; ++d) EXPECT_EQ(growth_parameters(d).L, (2 * d + 3) * (2 * d + 2) + 1);
}

TEST(Certify, GrowthVerifies) {
    auto r = verify_growth(2, 26);
    EXPECT_TRUE(r.verified);
    EXPECT_TRUE(r.failures.empty());
    ASSERT_EQ(r.families.size(), 2u);
    for (const auto& f : r.families) {
        EXPECT_TRUE(f.lemma2);
        EXPECT_TRUE(f.inner_strict);
    }
    EXPECT_TRUE(verify_growth(3, 36).verified);
    EXPECT_THROW(verify_growth(2, 25), std::invalid_argument);
    EXPECT_THROW(verify_growth(1, 100), std::invalid_argument);
}

TEST(Certify, GapFailures) {
    // Gaps 1, 1, 3, 0, -1 at degrees 1..5.
    IntPolynomial p{1, 2, 3, 6, 6, 5};
    EXPECT_EQ(gap_failures(p, 2, 1, 5), (std::vector<long>{1, 2, 4, 5}));
    EXPECT_EQ(gap_failures(p, 1, 3, 4), (std::vector<long>{4}));
    EXPECT_TRUE(gap_failures(p, 1, 1, 3).empty());

    // Below L the bound genuinely fails, so L is not vacuous.
    const auto q = qbinom(26, 8);
    EXPECT_FALSE(gap_failures(q, 2, 1, 42).empty());
    EXPECT_TRUE(gap_failures(q, 2, 43, 104).empty());
}

}  // namespace
}  // namespace gaussbin
