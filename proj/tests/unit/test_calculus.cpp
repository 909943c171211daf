#include <gtest/gtest.h>

#include <random>

#include "degbound/appendix_calculus.hpp"
#include "oracles.hpp"

using namespace degbound;

TEST(SpherePolynomial, MatchesIntegerValues) {
    for (std::int64_t t = 0; t <= 8; t++) {
        RationalPolynomial f = sphere_polynomial(t);
        EXPECT_EQ(f.degree(), static_cast<std::size_t>(t));
        for (std::int64_t n = 0; n <= 60; n++) {
            ASSERT_EQ(f(BigRational(n)), BigRational(oracle::sphere(n, t))) << t << " " << n;
        }
    }
}

TEST(DerivativeTriple, Examples) {
    auto a = derivative_triple(1, 0);
    EXPECT_EQ(a.f, 1);
    EXPECT_EQ(a.f1, 3);
    EXPECT_EQ(a.f2, 0);
    auto b = derivative_triple(2, 2);
    EXPECT_EQ(b.f, 16);
    EXPECT_EQ(b.f1, BigRational(33, 2));
    EXPECT_EQ(b.f2, 9);
    auto c = derivative_triple(0, BigRational(7, 3));
    EXPECT_EQ(c.f, 1);
    EXPECT_EQ(c.f1, 0);
    EXPECT_EQ(c.f2, 0);
}

TEST(DerivativeTriple, AgreesWithProductSumForm) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; i++) {
        std::int64_t t = 1 + static_cast<std::int64_t>(rng() % 6);
        BigRational x(static_cast<long long>(t * 1000 + rng() % 50000), 1000 + static_cast<long long>(rng() % 7));
        if (x <= t) {
            x += t;
        }
        EXPECT_EQ(derivative_triple(t, x).f1, oracle::sphere_derivative_product_form(t, x)) << t << " " << x;
        EXPECT_EQ(derivative_triple(t, x).f, oracle::sphere_at(t, x));
    }
}

TEST(DerivativeTriple, CentralDifferencesConvergeQuadratically) {
    std::int64_t t = 3;
    BigRational x(37, 4);
    BigRational exact = derivative_triple(t, x).f1;
    BigRational prev_err = -1;
    for (int decade = 1; decade <= 3; decade++) {
        BigRational h(1, static_cast<long long>(std::pow(10, decade)));
        BigRational approx = (oracle::sphere_at(t, x + h) - oracle::sphere_at(t, x - h)) / (2 * h);
        BigRational err = abs(approx - exact);
        EXPECT_GT(err, 0);
        if (prev_err > 0) {
            // Error of a cubic's central difference is exactly f'''h^2/6.
            EXPECT_EQ(prev_err / err, 100);
        }
        prev_err = err;
    }
}

TEST(HValue, Examples) {
    EXPECT_EQ(h_value_floor(1, 1).floor(), -1);
    EXPECT_EQ(h_value_floor(1, 1).kind, HValue::Kind::Integer);
    EXPECT_EQ(h_value_floor(3, 2).floor(), -2);
    EXPECT_EQ(h_value_floor(1, -4).floor(), -4);
    HValue v = h_value_floor(1, 5);
    EXPECT_EQ(v.kind, HValue::Kind::Logarithmic);
    EXPECT_EQ(v.f, 16);
    EXPECT_EQ(v.floor(), 1);
    EXPECT_EQ(h_value_floor(1, 6).floor(), 1);  // 6 - log2 19
}

TEST(HPrime, SpotValues) {
    auto a = hprime_sign(1, 0);
    EXPECT_EQ(a.sign, Sign::Negative);
    EXPECT_EQ(hprime_approx(1, 0), "-3.328");
    auto b = hprime_sign(2, 2);
    EXPECT_EQ(b.sign, Sign::Negative);
    EXPECT_EQ(hprime_approx(2, 2), "-0.488");
    EXPECT_LE(b.precision_bits, 128);
}

TEST(HPrime, SignsAroundMinimum) {
    for (std::int64_t t = 1; t <= 50; t++) {
        EXPECT_EQ(hprime_sign(t, 2 * t - 2).sign, Sign::Negative) << t;
        EXPECT_EQ(hprime_sign(t, 2 * t).sign, Sign::Positive) << t;
    }
}

TEST(HPrime, SignMatchesDirectRatio) {
    // sign(ln2 f - f') computed as sign(f/f' - 1/ln2) must agree for f' > 0.
    for (std::int64_t t = 1; t <= 6; t++) {
        for (std::int64_t x = t; x <= 4 * t + 4; x++) {
            auto d = derivative_triple(t, x);
            auto direct = hprime_sign(t, x).sign;
            auto swapped = sign_of_q_minus_r_ln2(-d.f1 / d.f, -1).sign;
            EXPECT_EQ(direct, swapped) << t << " " << x;
        }
    }
}

TEST(HSecond, Examples) {
    EXPECT_EQ(hsecond_sign(1, 1), Sign::Positive);
    EXPECT_EQ(hsecond_sign(2, 2), Sign::Positive);
    for (std::int64_t t = 1; t <= 20; t++) {
        EXPECT_EQ(hsecond_sign(t, t), Sign::Positive) << t;
    }
}

TEST(HSecond, IntegerIncrementsNondecreasing) {
    // h(n+1) - h(n) = 1 - log2(f(n+1)/f(n)) is nondecreasing iff f(n+1)^2 >= f(n) f(n+2).
    for (std::int64_t t = 1; t <= 6; t++) {
        for (std::int64_t n = t; n <= 300; n++) {
            oracle::Int a = oracle::sphere(n, t), b = oracle::sphere(n + 1, t), c = oracle::sphere(n + 2, t);
            ASSERT_GE(b * b, a * c) << t << " " << n;
        }
    }
}

TEST(Checks, IndividualChecksPass) {
    for (std::int64_t t = 1; t <= 5; t++) {
        EXPECT_TRUE(check_binomial_identity(t).passed);
        EXPECT_TRUE(check_positivity(t, 200).passed);
        EXPECT_TRUE(check_unit_shift(t, 200).passed);
        EXPECT_TRUE(check_derivative_signs(t).passed);
        EXPECT_TRUE(check_convexity(t, t, t + 200).passed);
        EXPECT_TRUE(check_slope_below_one(t, 200).passed);
        EXPECT_TRUE(check_local_minimum(t, 200).passed);
        EXPECT_TRUE(check_shift_dominance(t).passed);
    }
}

TEST(Checks, MinimumLocation) {
    EXPECT_GE(hamming_sequence_minimum(1), 0);
    EXPECT_LE(hamming_sequence_minimum(1), 2);
    for (std::int64_t t = 1; t <= 10; t++) {
        std::int64_t m = hamming_sequence_minimum(t);
        EXPECT_GE(m, 2 * t - 2);
        EXPECT_LE(m, 2 * t);
    }
}

TEST(VerifyAppendix, Report) {
    AppendixReport r = verify_appendix(1, 7, 200);
    EXPECT_TRUE(r.all_passed());
    EXPECT_EQ(r.failures(), 0);
    EXPECT_EQ(r.outcomes.size(), 7u * 8u);
    EXPECT_EQ(r.outcomes.front().t, 1);
    EXPECT_EQ(r.outcomes.back().t, 7);
    EXPECT_TRUE(verify_appendix(3, 2, 100).outcomes.empty());
    EXPECT_THROW(verify_appendix(0, 2, 100), std::invalid_argument);
}
