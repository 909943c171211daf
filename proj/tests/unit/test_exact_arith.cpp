#include <gtest/gtest.h>

#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "degbound/exact_arith.hpp"
#include "oracles.hpp"

using namespace degbound;

TEST(Binom, SmallValues) {
    EXPECT_EQ(binom(0, 0), 1);
    EXPECT_EQ(binom(4, 2), 6);
    EXPECT_EQ(binom(3, 5), 0);
    EXPECT_EQ(binom(60, 30), oracle::binom(60, 30));
}

TEST(Binom, MatchesFactorialFormula) {
    for (std::int64_t n = 0; n <= 80; n++) {
        for (std::int64_t i = 0; i <= n + 2; i++) {
            ASSERT_EQ(binom(n, i), oracle::binom(n, i)) << n << " " << i;
        }
    }
}

TEST(SphereSum, Examples) {
    EXPECT_EQ(sphere_sum(5, 1), 16);
    EXPECT_EQ(sphere_sum(10, 2), 436);
    EXPECT_EQ(sphere_sum(56, 2), 14029);
    for (std::int64_t n = 0; n < 30; n++) {
        EXPECT_EQ(sphere_sum(n, 0), 1);
    }
    EXPECT_THROW(sphere_sum(-1, 1), std::domain_error);
    EXPECT_THROW(sphere_sum(3, -1), std::domain_error);
}

TEST(SphereSum, RandomAgainstTermwiseSum) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> n_dist(0, 200), t_dist(0, 8);
    for (int i = 0; i < 500; i++) {
        std::int64_t n = n_dist(rng), t = t_dist(rng);
        ASSERT_EQ(sphere_sum(n, t), oracle::sphere(n, t)) << n << " " << t;
    }
}

TEST(CmpPow2, Examples) {
    EXPECT_EQ(cmp_pow2(31, 5), std::strong_ordering::less);
    EXPECT_EQ(cmp_pow2(32, 5), std::strong_ordering::equal);
    EXPECT_EQ(cmp_pow2(33, 5), std::strong_ordering::greater);
    EXPECT_EQ(cmp_pow2(14029, 14), std::strong_ordering::less);
    EXPECT_EQ(cmp_pow2(1, 0), std::strong_ordering::equal);
    EXPECT_EQ(cmp_pow2(0, 0), std::strong_ordering::less);
    EXPECT_EQ(cmp_pow2(1, -1), std::strong_ordering::greater);
}

TEST(CmpPow2, RandomAgainstMaterializedPower) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> bits_dist(0, 300), e_dist(0, 302);
    for (int i = 0; i < 10000; i++) {
        int bits = bits_dist(rng);
        oracle::Int x = 0;
        for (int b = 0; b < bits; b += 60) {
            x = (x << 60) | oracle::Int(rng() >> 4);
        }
        if (i % 3 == 0) {
            x = oracle::power(2, bits) - (i % 2);
        }
        std::int64_t e = e_dist(rng);
        oracle::Int p = oracle::power(2, e);
        auto expected = x < p ? std::strong_ordering::less : (x == p ? std::strong_ordering::equal : std::strong_ordering::greater);
        ASSERT_EQ(cmp_pow2(x, e), expected) << x << " vs 2^" << e;
    }
}

TEST(CeilLog2, Values) {
    EXPECT_EQ(ceil_log2(1), 0);
    EXPECT_EQ(ceil_log2(2), 1);
    EXPECT_EQ(ceil_log2(3), 2);
    EXPECT_EQ(ceil_log2(16), 4);
    EXPECT_EQ(ceil_log2(17), 5);
    EXPECT_TRUE(is_pow2(64));
    EXPECT_FALSE(is_pow2(65));
    EXPECT_FALSE(is_pow2(0));
    EXPECT_EQ(pow2(70), oracle::power(2, 70));
}

TEST(Ln2, EnclosureContainsHighPrecisionValue) {
    using Float = boost::multiprecision::cpp_bin_float_100;
    Float ln2 = boost::multiprecision::log(Float(2));
    for (int bits : {64, 128, 256}) {
        Ln2Enclosure e = ln2_enclosure(bits);
        EXPECT_LE(Float(e.lower), ln2);
        EXPECT_GE(Float(e.upper), ln2);
        EXPECT_LT(e.lower, e.upper);
        EXPECT_EQ(e.precision_bits, bits);
    }
    Ln2Enclosure wide = ln2_enclosure(64), narrow = ln2_enclosure(256);
    EXPECT_LT(narrow.upper - narrow.lower, wide.upper - wide.lower);
}

TEST(SignLn2, Examples) {
    EXPECT_EQ(sign_of_q_minus_r_ln2(3, 1).sign, Sign::Positive);
    EXPECT_EQ(sign_of_q_minus_r_ln2(0, 0).sign, Sign::Zero);
    EXPECT_EQ(sign_of_q_minus_r_ln2(0, 0).precision_bits, 0);
    EXPECT_EQ(sign_of_q_minus_r_ln2(BigRational(33, 2), 16).sign, Sign::Positive);
    EXPECT_EQ(sign_of_q_minus_r_ln2(-5, 0).sign, Sign::Negative);
    EXPECT_EQ(sign_of_q_minus_r_ln2(BigRational(69, 100), 1).sign, Sign::Negative);
    EXPECT_EQ(sign_of_q_minus_r_ln2(BigRational(7, 10), 1).sign, Sign::Positive);
}

TEST(SignLn2, CloseConvergentNeedsMorePrecision) {
    // 1143/1649 agrees with ln 2 to six digits.
    auto s = sign_of_q_minus_r_ln2(BigRational(1143), BigRational(1649));
    EXPECT_NE(s.sign, Sign::Zero);
    EXPECT_GE(s.precision_bits, 64);
}

TEST(SignLn2, NeverZeroAndStableUnderCeiling) {
    using Float = boost::multiprecision::cpp_bin_float_100;
    Float ln2 = boost::multiprecision::log(Float(2));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> num(-2000, 2000), den(1, 2000);
    for (int i = 0; i < 2000; i++) {
        BigRational q(num(rng), den(rng));
        BigRational r(num(rng), den(rng));
        if (r == 0) {
            continue;
        }
        auto s = sign_of_q_minus_r_ln2(q, r);
        ASSERT_NE(s.sign, Sign::Zero);
        Float v = Float(q) - Float(r) * ln2;
        ASSERT_EQ(s.sign, v > 0 ? Sign::Positive : Sign::Negative);
        ASSERT_EQ(sign_of_q_minus_r_ln2(q, r, 8192).sign, s.sign);
    }
}

TEST(SignLn2, CeilingAborts) {
    // A very tight rational approximation cannot be separated with 64 bits.
    BigRational close(ln2_enclosure(512).lower);
    EXPECT_THROW(sign_of_q_minus_r_ln2(close, 1, 64), UnresolvedSign);
    EXPECT_EQ(sign_of_q_minus_r_ln2(close, 1).sign, Sign::Negative);
}

TEST(Decimal, HalfEven) {
    EXPECT_EQ(to_decimal_half_even(BigRational(-3328, 1000), 3), "-3.328");
    EXPECT_EQ(to_decimal_half_even(BigRational(1, 8), 2), "0.12");
    EXPECT_EQ(to_decimal_half_even(BigRational(3, 8), 2), "0.38");
    EXPECT_EQ(to_decimal_half_even(BigRational(-1, 3), 3), "-0.333");
    EXPECT_EQ(to_decimal_half_even(BigRational(5), 0), "5");
    EXPECT_EQ(to_decimal_half_even(BigRational(-1, 10000), 3), "0.000");
}
