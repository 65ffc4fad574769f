#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "iwasawa/ellcurve.hpp"

using namespace iwasawa;

namespace {

// t_n by stepping the recurrence in exact 128-bit integers, then reducing.
i64 trace_power_direct(i64 a, u64 p, u64 n, u64 modulus) {
    i128 t0 = 2, t1 = a;
    if (n == 0) return 2 % static_cast<i64>(modulus);
    for (u64 k = 1; k < n; ++k) {
        i128 t2 = a * t1 - static_cast<i128>(p) * t0;
        t0 = t1 % static_cast<i128>(modulus);
        t1 = t2 % static_cast<i128>(modulus);
    }
    return static_cast<i64>(reduce(t1, modulus));
}

u64 first_nonsquare(u64 p) {
    for (u64 c = 2;; ++c) {
        if (kronecker(static_cast<i64>(c), p) == -1) return c;
    }
}

std::vector<CurveFp> all_curves(u64 p) {
    std::vector<CurveFp> out;
    for (u64 A = 0; A < p; ++A) {
        for (u64 B = 0; B < p; ++B) {
            try {
                out.emplace_back(p, A, B);
            } catch (const MathError&) {
            }
        }
    }
    return out;
}

}  // namespace

TEST(CurveFp, RejectsSingularAndSmallPrimes) {
    EXPECT_THROW(CurveFp(7, 0, 0), MathError);
    EXPECT_THROW(CurveFp(3, 1, 1), MathError);
    EXPECT_THROW(CurveFp(9, 1, 1), MathError);
    try {
        CurveFp(7, -3, 2);  // 4(-27) + 27*4 = 0
        FAIL();
    } catch (const MathError& e) {
        EXPECT_EQ(e.code(), Errc::BadReduction);
    }
}

TEST(CountPoints, Examples) {
    EXPECT_EQ(count_points_fp(CurveFp(5, 1, 0)), 4);
    EXPECT_EQ(count_points_fp_naive(CurveFp(5, 1, 0)), 4);
    EXPECT_EQ(count_points_fp(CurveFp(5, 0, 1)), 6);
    EXPECT_EQ(count_points_fp_naive(CurveFp(5, 0, 1)), 6);
    i64 n = count_points_fp(CurveFp(7, 0, -1));
    EXPECT_LE(std::abs(7 + 1 - n), 5);
}

TEST(CountPoints, AgreesWithPairEnumeration) {
    for (u64 p : {5u, 7u, 11u, 13u, 17u, 23u, 31u, 47u}) {
        for (const auto& c : all_curves(p)) {
            ASSERT_EQ(count_points_fp(c), count_points_fp_naive(c)) << p << " " << c.A() << " " << c.B();
        }
    }
    EXPECT_THROW(count_points_fp_naive(CurveFp(53, 1, 1)), MathError);
}

TEST(TraceAp, ExamplesAndHasse) {
    EXPECT_EQ(trace_ap(CurveFp(5, 1, 0)).a_p, 2);
    EXPECT_EQ(trace_ap(CurveFp(5, 0, 1)).a_p, 0);
    auto t13 = trace_ap(CurveFp(13, 0, -1));
    EXPECT_LE(std::abs(t13.a_p), 7);
    i64 r = 4 * 13 - t13.a_p * t13.a_p;
    EXPECT_EQ(r % 3, 0);
    u64 b;
    EXPECT_TRUE(is_perfect_square(static_cast<u64>(r / 3), &b));

    for (u64 p : {5u, 7u, 11u, 13u, 29u, 31u}) {
        for (const auto& c : all_curves(p)) {
            auto t = trace_ap(c);
            EXPECT_LE(static_cast<double>(t.a_p * t.a_p), 4.0 * p);
        }
    }
}

TEST(IsOrdinary, Basic) {
    CurveFp c(5, 1, 0);
    EXPECT_TRUE(is_ordinary({c, 4, 2}));
    EXPECT_FALSE(is_ordinary({c, 6, 0}));
    for (u64 p : primes_up_to(200)) {
        if (p > 3 && p % 3 == 1) EXPECT_TRUE(is_ordinary(trace_ap(CurveFp(p, 0, -1)))) << p;
    }
}

TEST(TracePowerMod, InitialTerms) {
    for (i64 a : {-7, -1, 0, 3, 10}) {
        const u64 p = 13, m = 169;
        EXPECT_EQ(trace_power_mod(a, p, 0).value(), 2u);
        EXPECT_EQ(trace_power_mod(a, p, 1).value(), reduce(a, m));
        EXPECT_EQ(trace_power_mod(a, p, 2).value(), reduce(static_cast<i128>(a) * a - 2 * 13, m));
    }
}

TEST(TracePowerMod, MatchesStepwiseRecurrence) {
    std::mt19937_64 rng(11);
    for (u64 p : primes_up_to(400)) {
        if (p < 5) continue;
        const u64 m = p * p;
        const i64 bound = static_cast<i64>(2 * std::sqrt(static_cast<double>(p)));
        for (int trial = 0; trial < 5; ++trial) {
            i64 a = static_cast<i64>(rng() % (2 * bound + 1)) - bound;
            for (u64 n : {u64{3}, u64{7}, p - 1, p, 2 * p + 5}) {
                EXPECT_EQ(static_cast<i64>(trace_power_mod(a, p, n).value()), trace_power_direct(a, p, n, m))
                    << "a=" << a << " p=" << p << " n=" << n;
            }
        }
    }
}

TEST(CountModP2, TableExamples) {
    EXPECT_EQ(count_mod_p2(CurveFp(7, 0, -1), 6).value(), 42u);
    EXPECT_EQ(count_mod_p2(CurveFp(53, -264, -1694), 52).value(), 1007u);
    EXPECT_EQ(count_mod_p2(CurveFp(61, -608, -5776), 60).value(), 3355u);
    EXPECT_THROW(count_mod_p2(CurveFp(7, 0, -1), 0), MathError);
}

TEST(CountModP2, DegreeOneIsTheExactCount) {
    for (const auto& c : all_curves(11)) {
        EXPECT_EQ(static_cast<i64>(count_mod_p2(c, 1).value()), count_points_fp(c) % 121);
    }
}

TEST(BruteForceFp2, Examples) {
    EXPECT_EQ(count_points_fp2_bruteforce(CurveFp(5, 1, 0)), 32);
    // t_2 = a^2 - 2p = -6, and 25 + 1 - (-6) = 32.
    EXPECT_EQ(trace_power_mod(2, 5, 2).value(), reduce(-6, 25));
    EXPECT_EQ(count_points_fp2_bruteforce(CurveFp(5, 0, 1)), 36);                   // (p + 1)^2
    EXPECT_THROW(count_points_fp2_bruteforce(CurveFp(211, 1, 1)), MathError);
}

TEST(BruteForceFp2, SupersingularCountsArePPlusOneSquared) {
    for (u64 p : {5u, 11u, 17u, 23u, 29u}) {  // p = 2 (mod 3): y^2 = x^3 + B supersingular
        CurveFp c(p, 0, 3);
        ASSERT_EQ(trace_ap(c).a_p, 0);
        EXPECT_EQ(count_points_fp2_bruteforce(c), static_cast<i64>((p + 1) * (p + 1)));
    }
}

TEST(BruteForceFp2, RecurrenceMatchesEnumerationForAllSmallCurves) {
    for (u64 p : {5u, 7u, 11u, 13u}) {
        for (const auto& c : all_curves(p)) {
            i64 a = trace_ap(c).a_p;
            i64 t2 = a * a - 2 * static_cast<i64>(p);
            EXPECT_EQ(count_points_fp2_bruteforce(c), static_cast<i64>(p * p) + 1 - t2)
                << p << " " << c.A() << " " << c.B();
        }
    }
}

TEST(BruteForceFp2, RecurrenceMatchesEnumerationOnSamples) {
    std::mt19937_64 rng(5);
    for (u64 p : primes_up_to(31)) {
        if (p < 5) continue;
        for (int i = 0; i < 12; ++i) {
            u64 A = rng() % p, B = rng() % p;
            try {
                CurveFp c(p, A, B);
                i64 exact = count_points_fp2_bruteforce(c);
                EXPECT_EQ(exact % static_cast<i64>(p * p), static_cast<i64>(count_mod_p2(c, 2).value()));
            } catch (const MathError&) {
            }
        }
    }
}

TEST(CharSum, Identities) {
    EXPECT_EQ(char_sum(CurveFp(5, 1, 0), 1), -2);
    for (u64 p : {5u, 7u, 13u, 19u}) {
        for (const auto& c : all_curves(p)) {
            EXPECT_EQ(char_sum(c, 1), count_points_fp(c) - 1 - static_cast<i64>(p));
            EXPECT_EQ(char_sum(c, 2), count_points_fp2_bruteforce(c) - 1 - static_cast<i64>(p * p));
        }
    }
    EXPECT_THROW(char_sum(CurveFp(5, 1, 0), 3), MathError);
}

TEST(CurveFromJ, SpecialAndGenericCases) {
    EXPECT_EQ(curve_from_j(0, 47), CurveFp(47, 0, 1));
    EXPECT_EQ(curve_from_j(1728, 47), CurveFp(47, 1, 0));
    EXPECT_EQ(curve_from_j(1, 47).j_invariant().value(), 1u);
    for (u64 p : {5u, 7u, 13u, 47u, 97u}) {
        for (u64 j = 0; j < p; ++j) EXPECT_EQ(curve_from_j(j, p).j_invariant().value(), j) << j << " " << p;
    }
}

TEST(TwistInvariance, EvenDegreeCountsAgree) {
    for (u64 p : primes_up_to(50)) {
        if (p < 5) continue;
        const u64 c = first_nonsquare(p);
        for (const auto& e : all_curves(p)) {
            CurveFp tw = e.twist(c);
            auto te = trace_ap(e), tt = trace_ap(tw);
            ASSERT_EQ(tt.a_p, -te.a_p) << p;
            for (u64 n : {u64{2}, u64{4}, p - 1}) {
                EXPECT_EQ(count_mod_p2(te, n), count_mod_p2(tt, n)) << p << " n=" << n;
            }
        }
    }
}

TEST(TwistInvariance, QuarticAndSexticTwistsAtDegreePMinusOne) {
    // Every j = 0 model y^2 = x^3 + B and j = 1728 model y^2 = x^3 + Ax gives
    // the same residue as the representative curve_from_j picks.
    for (u64 p : primes_up_to(100)) {
        if (p < 5) continue;
        if (p % 3 == 1) {
            Residue ref = count_mod_p2(curve_from_j(0, p), p - 1);
            for (u64 B = 1; B < p; ++B) EXPECT_EQ(count_mod_p2(CurveFp(p, 0, B), p - 1), ref) << p;
        }
        if (p % 4 == 1) {
            Residue ref = count_mod_p2(curve_from_j(1728, p), p - 1);
            for (u64 A = 1; A < p; ++A) EXPECT_EQ(count_mod_p2(CurveFp(p, A, 0), p - 1), ref) << p;
        }
    }
}

TEST(Catalog, BuiltinMatchesShippedFile) {
    const auto& cat = Catalog::builtin();
    ASSERT_EQ(cat.entries().size(), 9u);
    for (u64 d : {1u, 2u, 3u, 7u, 11u, 19u, 43u, 67u, 163u}) {
        auto e = cat.find(d);
        ASSERT_TRUE(e.has_value()) << d;
        EXPECT_EQ(e->D, fundamental_discriminant(d));
    }
    EXPECT_EQ(cat.find(3)->source, CatalogSource::Paper);
    EXPECT_EQ((CMCatalogEntry{11, -11, -264, -1694, CatalogSource::Paper}), *cat.find(11));
    EXPECT_EQ((CMCatalogEntry{19, -19, -608, -5776, CatalogSource::Paper}), *cat.find(19));
    EXPECT_EQ((CMCatalogEntry{3, -3, 0, -1, CatalogSource::Paper}), *cat.find(3));
    EXPECT_EQ(cat.find(163)->source, CatalogSource::Derived);
}

TEST(Catalog, ParseErrors) {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return Catalog::parse(in);
    };
    EXPECT_NO_THROW(parse("# comment only\n\n3, -3, 0, -1, paper  # trailing\n"));
    EXPECT_THROW(parse("3, -3, 0, -1\n"), MathError);
    EXPECT_THROW(parse("3, -4, 0, -1, paper\n"), MathError);
    EXPECT_THROW(parse("3, -3, 0, x, paper\n"), MathError);
    EXPECT_THROW(parse("3, -3, 0, -1, guessed\n"), MathError);
    EXPECT_THROW(parse("3, -3, 0, -1, paper\n3, -3, 0, 1, derived\n"), MathError);
    EXPECT_THROW(Catalog::load("/nonexistent/catalog.txt"), MathError);
}

TEST(CatalogInvariants, HasseAndCMNormForm) {
    int checked = 0;
    for (const auto& e : Catalog::builtin().entries()) {
        auto field = make_field(e.d);
        const i64 absD = -e.D;
        for (u64 p : primes_up_to(200)) {
            if (p <= 3 || !has_good_reduction(e, p) || !splits(field, p)) continue;
            auto t = trace_ap(reduce_entry(e, p));
            EXPECT_LE(static_cast<double>(t.a_p * t.a_p), 4.0 * p);
            i64 rest = 4 * static_cast<i64>(p) - t.a_p * t.a_p;
            ASSERT_EQ(rest % absD, 0) << "d=" << e.d << " p=" << p;
            u64 b;
            EXPECT_TRUE(is_perfect_square(static_cast<u64>(rest / absD), &b)) << "d=" << e.d << " p=" << p;
            ++checked;
        }
    }
    EXPECT_GT(checked, 150);
}

TEST(CatalogInvariants, DeuringOrdinaryExactlyAtSplitPrimes) {
    for (const auto& e : Catalog::builtin().entries()) {
        auto field = make_field(e.d);
        for (u64 p : primes_up_to(100)) {
            if (p <= 3 || !has_good_reduction(e, p)) continue;
            auto t = trace_ap(reduce_entry(e, p));
            int k = kronecker(e.D, p);
            if (k == 1) EXPECT_TRUE(is_ordinary(t)) << "d=" << e.d << " p=" << p;
            if (k == -1) EXPECT_EQ(t.a_p, 0) << "d=" << e.d << " p=" << p;
            EXPECT_EQ(splits(field, p), k == 1);
        }
    }
}

TEST(Theorem1, Examples) {
    const auto& cat = Catalog::builtin();
    auto v13 = theorem1_check(make_field(3), *cat.find(3), 13);
    EXPECT_TRUE(v13.gold);
    EXPECT_EQ(v13.count_residue.value(), 0u);
    EXPECT_TRUE(v13.agree);

    auto v19 = theorem1_check(make_field(3), *cat.find(3), 19);
    EXPECT_FALSE(v19.gold);
    EXPECT_EQ(v19.count_residue.value(), 342u);
    EXPECT_TRUE(v19.agree);

    auto v59 = theorem1_check(make_field(11), *cat.find(11), 59);
    EXPECT_FALSE(v59.gold);
    EXPECT_EQ(v59.count_residue.value(), 59u);
    EXPECT_TRUE(v59.agree);
}

TEST(Theorem1, AgreesAcrossTheWholeCatalog) {
    int checked = 0;
    for (const auto& e : Catalog::builtin().entries()) {
        auto field = make_field(e.d);
        for (const auto& row : theorem1_scan(field, e, 400)) {
            ASSERT_TRUE(row.verdict.has_value());
            EXPECT_TRUE(row.verdict->agree) << "d=" << e.d << " p=" << row.p;
            ++checked;
        }
    }
    EXPECT_GT(checked, 300);
}

TEST(Theorem1, Errors) {
    CMCatalogEntry bad{3, -3, 0, 7, CatalogSource::Derived};  // y^2 = x^3 + 7, bad at 7
    auto f3 = make_field(3);
    try {
        theorem1_check(f3, bad, 7);
        FAIL();
    } catch (const MathError& e) {
        EXPECT_EQ(e.code(), Errc::BadReduction);
    }
    EXPECT_TRUE(theorem1_check(f3, bad, 13).agree);

    CMCatalogEntry h2{5, -20, 1, 1, CatalogSource::Derived};
    try {
        theorem1_check(make_field(5), h2, 7);
        FAIL();
    } catch (const MathError& e) {
        EXPECT_EQ(e.code(), Errc::ClassNumberUnsupported);
    }
    EXPECT_THROW(theorem1_check(f3, *Catalog::builtin().find(3), 5), MathError);  // inert
    EXPECT_THROW(theorem1_check(f3, *Catalog::builtin().find(11), 7), MathError);  // wrong field
}

TEST(CatalogTable, SkipsBadReductionExplicitly) {
    CMCatalogEntry bad{3, -3, 0, 7, CatalogSource::Derived};
    auto rows = catalog_table(make_field(3), bad, 40);
    std::vector<u64> ps;
    for (const auto& r : rows) {
        ps.push_back(r.p);
        EXPECT_EQ(r.count.has_value(), r.p != 7);
    }
    EXPECT_EQ(ps, (std::vector<u64>{7, 13, 19, 31, 37}));

    auto t1 = theorem1_scan(make_field(3), bad, 40);
    ASSERT_EQ(t1.size(), 5u);
    EXPECT_FALSE(t1[0].verdict.has_value());
}

TEST(ScanOrdinary, Examples) {
    EXPECT_TRUE(scan_ordinary_prime(7).witnesses.empty());
    EXPECT_TRUE(scan_ordinary_prime(47).witnesses.empty());
    auto s13 = scan_ordinary_prime(13);
    ASSERT_FALSE(s13.witnesses.empty());
    u64 j = CurveFp(13, 0, -1).j_invariant().value();
    bool found = false;
    for (const auto& w : s13.witnesses) found = found || w.j == j;
    EXPECT_TRUE(found);
}

TEST(ScanOrdinary, EveryOrdinaryCurveIsCoveredByItsJRepresentative) {
    // Exhaustive over all (A, B) at small p: a curve is a witness iff its
    // j-invariant's representative is.
    for (u64 p : {5u, 7u, 11u, 13u, 17u, 23u}) {
        auto scan = scan_ordinary_prime(p);
        std::vector<bool> witness_j(p, false);
        for (const auto& w : scan.witnesses) witness_j[w.j] = true;
        for (const auto& c : all_curves(p)) {
            auto t = trace_ap(c);
            if (!is_ordinary(t)) continue;
            bool hit = count_mod_p2(t, p - 1).is_zero();
            EXPECT_EQ(hit, witness_j[c.j_invariant().value()]) << p << " " << c.A() << " " << c.B();
        }
    }
}

TEST(ScanOrdinary, Errors) {
    EXPECT_THROW(scan_ordinary_prime(3), MathError);
    EXPECT_THROW(scan_ordinary_prime(49), MathError);
    try {
        scan_ordinary_prime(101);
        FAIL();
    } catch (const MathError& e) {
        EXPECT_EQ(e.code(), Errc::TooLarge);
    }
}
