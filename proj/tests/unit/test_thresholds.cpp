#include <gtest/gtest.h>

#include "degbound/thresholds.hpp"
#include "oracles.hpp"

using namespace degbound;

TEST(LocalMax, Examples) {
    EXPECT_TRUE(local_max_condition(5, 1));
    EXPECT_FALSE(local_max_condition(4, 1));
    EXPECT_TRUE(local_max_condition(14, 2));
    EXPECT_FALSE(local_max_condition(13, 2));
}

TEST(Dominance, Examples) {
    EXPECT_TRUE(dominance(1, 1, 4));
    EXPECT_FALSE(dominance(1, 1, 3));
    EXPECT_FALSE(dominance(1, 1, 2));
}

TEST(Dominance, MatchesRationalOracle) {
    for (std::int64_t t = 1; t <= 3; t++) {
        for (std::int64_t a = 1; a <= 12; a++) {
            for (std::int64_t n = 1; n <= 150; n++) {
                ASSERT_EQ(dominance(a, t, n), oracle::dominance(a, t, n)) << a << " " << t << " " << n;
            }
        }
    }
}

TEST(FindA0, Examples) {
    EXPECT_EQ(find_a0(1).a0, 5);
    EXPECT_EQ(find_a0(2).a0, 14);
    EXPECT_EQ(find_a0(3).a0, 24);
    EXPECT_THROW(find_a0(0), std::invalid_argument);
}

TEST(FindA0, TailCertificateIsConsistent) {
    for (std::int64_t t = 1; t <= 7; t++) {
        A0Result r = find_a0(t);
        const TailCertificate &c = r.tail;
        EXPECT_EQ(c.window_start, r.a0);
        EXPECT_GE(c.window_end, c.envelope_start);
        EXPECT_GE(c.window_end, r.a0 + 32);
        EXPECT_LT(c.envelope_lhs, c.envelope_rhs);
        EXPECT_EQ(c.slope_sign, Sign::Positive);
        EXPECT_FALSE(local_max_condition(r.a0 - 1, t));
        for (std::int64_t a = r.a0; a <= c.window_end; a++) {
            ASSERT_TRUE(local_max_condition(a, t)) << t << " " << a;
        }
        // The envelope is an upper bound for f_t(2ta) once terms increase.
        for (std::int64_t a = c.envelope_start; a < c.envelope_start + 5; a++) {
            oracle::Int env = oracle::Int(t + 1) * oracle::power(6 * t * a, t);
            ASSERT_LE(oracle::sphere(2 * t * a, t) * oracle::factorial(t), env);
        }
    }
}

TEST(FindNa, MatchesBruteForceScan) {
    std::vector<std::int64_t> expected{4, 5, 7, 9};
    for (std::int64_t a = 1; a <= 4; a++) {
        CrossingPoint p = find_n_a(a, 1, 500);
        EXPECT_EQ(p.n_a, expected[a - 1]);
        EXPECT_EQ(p.n_a, oracle::crossing(a, 1, 500));
    }
    for (std::int64_t a = 1; a < 14; a++) {
        EXPECT_EQ(find_n_a(a, 2, 600).n_a, oracle::crossing(a, 2, 600)) << a;
    }
    EXPECT_THROW(find_n_a(1, 0, 100), std::invalid_argument);
}

TEST(FindNa, EarlyDominanceIsRecorded) {
    CrossingPoint p = find_n_a(2, 1, 500);
    for (std::int64_t n : p.early_dominance) {
        EXPECT_LT(n, p.n_a);
        EXPECT_TRUE(oracle::dominance(2, 1, n));
    }
    for (std::int64_t n = 1; n < p.n_a; n++) {
        bool listed = std::find(p.early_dominance.begin(), p.early_dominance.end(), n) != p.early_dominance.end();
        EXPECT_EQ(listed, oracle::dominance(2, 1, n)) << n;
    }
}

TEST(FindNa, HorizonTooSmall) {
    EXPECT_THROW(find_n_a(4, 1, 8), HorizonTooSmall);
    EXPECT_THROW(threshold_report(1, 5), HorizonTooSmall);
}

TEST(ThresholdReport, DistanceThree) {
    ThresholdReport r = threshold_report(1);
    EXPECT_EQ(r.a0, 5);
    EXPECT_EQ(r.N0, 10);
    EXPECT_EQ(r.N(1), 12);
    EXPECT_TRUE(r.conjecture_holds);
    EXPECT_EQ(r.scan_horizon, 500);
    ASSERT_EQ(r.crossing_points.size(), 4u);
    for (const auto &c : r.crossing_points) {
        EXPECT_LT(c.n_a, 10);
        EXPECT_LE(c.n_a, r.scan_horizon);
    }
}

TEST(ComputeN, Examples) {
    EXPECT_EQ(compute_N(1, 0), 10);
    EXPECT_EQ(compute_N(1, 1), 12);
    EXPECT_EQ(compute_N(1, 3), 16);
    EXPECT_EQ(compute_N(2, 1), 60);
    EXPECT_EQ(compute_N(3, 1), 150);
}

TEST(ComputeN, ConjectureHoldsForSmallT) {
    for (std::int64_t t = 1; t <= 7; t++) {
        ThresholdReport r = threshold_report(t);
        EXPECT_TRUE(r.conjecture_holds) << t;
        EXPECT_EQ(r.N(1), reference_row(t).N) << t;
    }
}

TEST(ComputeN, LocalMaxImpliesDominance) {
    for (std::int64_t t = 1; t <= 2; t++) {
        std::int64_t a0 = find_a0(t).a0;
        for (std::int64_t a = a0; a < a0 + 4; a++) {
            for (std::int64_t n = 1; n <= 500; n++) {
                ASSERT_TRUE(dominance(a, t, n)) << a << " " << t << " " << n;
            }
        }
    }
}

TEST(ReferenceTable, Rows) {
    ASSERT_EQ(reference_table().size(), 7u);
    EXPECT_EQ(reference_row(1).linear, 5);
    EXPECT_EQ(reference_row(1).M, 5);
    EXPECT_EQ(reference_row(1).N, 12);
    EXPECT_EQ(reference_row(4).linear, 23);
    EXPECT_EQ(reference_row(4).M, 20);
    EXPECT_EQ(reference_row(4).N, 288);
    EXPECT_EQ(reference_row(7).linear, 41);
    EXPECT_EQ(reference_row(7).M, 35);
    EXPECT_EQ(reference_row(7).N, 980);
    EXPECT_THROW(reference_row(8), std::out_of_range);
}

TEST(DefaultHorizon, Formula) {
    EXPECT_EQ(default_horizon(1, 5), 500);
    EXPECT_EQ(default_horizon(7, 69), 8 * 7 * 69);
}
