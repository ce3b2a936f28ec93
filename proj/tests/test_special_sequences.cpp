#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pqpoly/combinatorics.hpp"
#include "pqpoly/special_sequences.hpp"

using namespace pqpoly;

namespace {

const PQParams kHalfThird{Rational(1, 2), Rational(1, 3)};
const PQParams kClassical{Rational(1), Rational(1)};

}  // namespace

TEST(Stirling, Examples) {
    EXPECT_EQ(stirling2(0, 0), Rational(1));
    EXPECT_EQ(stirling2(4, 2), Rational(7));
    EXPECT_EQ(stirling2(5, 7), Rational(0));
    EXPECT_EQ(stirling1_unsigned(6, 6), Rational(1));
    EXPECT_EQ(stirling1_unsigned(3, 1), Rational(2));
    EXPECT_EQ(stirling1_unsigned(4, 2), Rational(11));
}

TEST(Stirling, MatchesRecurrenceOracles) {
    const auto s2 = oracle::stirling2_triangle(15);
    const auto s1 = oracle::stirling1_triangle(15);
    for (long n = 0; n <= 15; ++n)
        for (long m = 0; m <= 15; ++m) {
            EXPECT_EQ(stirling2(n, m), s2[n][m]) << n << "," << m;
            EXPECT_EQ(stirling1_unsigned(n, m), s1[n][m]) << n << "," << m;
        }
}

TEST(Stirling, SecondKindCountsSetPartitions) {
    for (int n = 0; n <= 8; ++n)
        for (int m = 0; m <= n; ++m) EXPECT_EQ(stirling2(n, m), Rational(oracle::count_set_partitions(n, m)));
}

TEST(WeightedStirling, Examples) {
    EXPECT_EQ(weighted_stirling2(2, 0), XPoly::monomial(2, 1));
    EXPECT_EQ(weighted_stirling2(1, 1), XPoly(1));
    EXPECT_EQ(weighted_stirling2(2, 1), (XPoly{1, 2}));
    EXPECT_EQ(weighted_stirling1(1, 0), XPoly::x());
    EXPECT_EQ(weighted_stirling1(2, 1), (XPoly{1, 2}));
    EXPECT_EQ(weighted_stirling1(4, 2)(Rational(0)), Rational(11));
}

TEST(WeightedStirling, ReduceAtZero) {
    for (long n = 0; n <= 12; ++n)
        for (long m = 0; m <= n + 1; ++m) {
            EXPECT_EQ(weighted_stirling2(n, m)(Rational(0)), stirling2(n, m));
            EXPECT_EQ(weighted_stirling1(n, m)(Rational(0)), stirling1_unsigned(n, m));
        }
}

TEST(WeightedStirling, BinomialShiftExpansion) {
    const auto s2 = oracle::stirling2_triangle(12);
    for (long n = 0; n <= 12; ++n)
        for (long m = 0; m <= n; ++m) {
            XPoly expected;
            for (long k = m; k <= n; ++k) expected += binomial(n, k) * s2[k][m] * XPoly::monomial(n - k, 1);
            EXPECT_EQ(weighted_stirling2(n, m), expected) << n << "," << m;
        }
}

TEST(WeightedStirling, CarlitzExpansion) {
    for (long n = 0; n <= 12; ++n)
        for (long m = 0; m <= n; ++m) {
            XPoly expected;
            for (long i = 0; m + i <= n; ++i)
                expected += binomial(m + i, i) * stirling1_unsigned(n, m + i) * XPoly::monomial(i, 1);
            EXPECT_EQ(weighted_stirling1(n, m), expected) << n << "," << m;
        }
}

TEST(WeightedStirling, Orthogonality) {
    for (long n = 0; n <= 12; ++n)
        for (long m = 0; m <= n; ++m) {
            XPoly forward, backward;
            for (long l = m; l <= n; ++l) {
                forward += sign_power(n - l) * (weighted_stirling2(n, l) * weighted_stirling1(l, m));
                backward += sign_power(n - l) * (weighted_stirling1(n, l) * weighted_stirling2(l, m));
            }
            const XPoly delta(Rational(n == m ? 1 : 0));
            EXPECT_EQ(forward, delta) << n << "," << m;
            EXPECT_EQ(backward, delta) << n << "," << m;
        }
}

TEST(EulerPoly, Examples) {
    EXPECT_EQ(euler_poly(0), XPoly(1));
    EXPECT_EQ(euler_poly(1), (XPoly{Rational(-1, 2), 1}));
    EXPECT_EQ(euler_poly(2), (XPoly{0, -1, 1}));
}

TEST(EulerPoly, MatchesRecurrenceOracle) {
    const auto e = oracle::euler_polynomials(12);
    for (long n = 0; n <= 12; ++n) EXPECT_EQ(euler_poly(n), e[n]);
}

TEST(EulerPoly, EulerNumbersAtOneHalf) {
    const auto numbers = oracle::euler_numbers(12);
    for (long n = 0; n <= 12; ++n) EXPECT_EQ(Rational(2).pow(n) * euler_poly(n)(Rational(1, 2)), numbers[n]) << n;
}

TEST(EulerPoly, CountsUpDownPermutations) {
    for (long m = 0; 2 * m <= 8; ++m) {
        Rational v = Rational(2).pow(2 * m) * euler_poly(2 * m)(Rational(1, 2));
        if (v.sign() < 0) v = -v;
        EXPECT_EQ(v, Rational(oracle::count_up_down_permutations(static_cast<int>(2 * m)))) << 2 * m;
    }
}

TEST(BernoulliOrder, Examples) {
    for (long s = 1; s <= 3; ++s) EXPECT_EQ(bernoulli_order(0, s), XPoly(1));
    EXPECT_EQ(bernoulli_order(1, 1), (XPoly{Rational(-1, 2), 1}));
    EXPECT_EQ(bernoulli_order(2, 1)(Rational(0)), Rational(1, 6));
}

TEST(BernoulliOrder, OrderOneMatchesBernoulliNumbers) {
    const auto b = oracle::bernoulli_numbers(12);
    for (long n = 0; n <= 12; ++n) EXPECT_EQ(bernoulli_order(n, 1)(Rational(0)), b[n]);
}

TEST(BernoulliOrder, DifferenceLowersOrder) {
    // B^{(s)}_n(x+1) - B^{(s)}_n(x) = n B^{(s-1)}_{n-1}(x), with B^{(0)}_n = x^n.
    for (long s = 1; s <= 3; ++s)
        for (long n = 1; n <= 10; ++n) {
            const XPoly lower = s == 1 ? XPoly::monomial(n - 1, 1) : bernoulli_order(n - 1, s - 1);
            const XPoly b = bernoulli_order(n, s);
            EXPECT_EQ(b.substitute_affine(1, 1) - b, Rational(n) * lower);
        }
}

TEST(FrobeniusEuler, Examples) {
    const Rational u(2);
    EXPECT_EQ(frobenius_euler(0, 1, u), XPoly(1));
    EXPECT_EQ(frobenius_euler(1, 1, u), (XPoly{Rational(1) / (u - Rational(1)), 1}));
    EXPECT_EQ(frobenius_euler(1, 1, Rational(1, 2)), (XPoly{-2, 1}));
    EXPECT_THROW(frobenius_euler(2, 1, Rational(1)), std::invalid_argument);
}

TEST(FrobeniusEuler, MinusOneIsEuler) {
    for (long n = 0; n <= 12; ++n) EXPECT_EQ(frobenius_euler(n, 1, Rational(-1)), euler_poly(n));
}

TEST(Polylog, OrdinaryCoefficientExamples) {
    EXPECT_EQ(li_pq_ordinary_coeffs(1, kHalfThird, 3)[1], Rational(1));
    EXPECT_EQ(li_pq_ordinary_coeffs(1, kHalfThird, 3)[0], Rational(0));
    EXPECT_EQ(li_pq_ordinary_coeffs(2, kHalfThird, 3)[2], Rational(36, 25));
    for (long k = -2; k <= 3; ++k) {
        const auto c = li_pq_ordinary_coeffs(k, kClassical, 8);
        ASSERT_EQ(c.size(), 9u);
        for (long m = 1; m <= 8; ++m) EXPECT_EQ(c[m], Rational(m).pow(-k));
    }
}

TEST(Polylog, FactorialCoefficientExamples) {
    EXPECT_EQ(lif_pq_ordinary_coeffs(3, kHalfThird, 2)[0], Rational(1));
    EXPECT_EQ(lif_pq_ordinary_coeffs(1, kHalfThird, 2)[1], Rational(6, 5));
    const auto c = lif_pq_ordinary_coeffs(1, kClassical, 8);
    for (long m = 0; m <= 8; ++m) EXPECT_EQ(c[m], Rational(1) / (factorial(m) * Rational(m + 1)));
}

TEST(Polylog, ClosedFormExamples) {
    const Rational p = kHalfThird.p(), q = kHalfThird.q();
    const XPoly z = XPoly::x();
    EXPECT_EQ(li_pq_closed_form(0, kHalfThird), RationalFunction(z, XPoly{1, -1}));
    EXPECT_EQ(li_pq_closed_form(-1, kHalfThird), RationalFunction(z, XPoly{1, -p} * XPoly{1, -q}));
    EXPECT_EQ(li_pq_closed_form(-2, kHalfThird),
              RationalFunction(z * XPoly{1, p * q}, XPoly{1, -p * p} * XPoly{1, -q * q} * XPoly{1, -p * q}));
    EXPECT_THROW(li_pq_closed_form(1, kHalfThird), std::invalid_argument);
    EXPECT_THROW(li_pq_closed_form(-1, kClassical), std::invalid_argument);
}

TEST(Polylog, ClosedFormSeriesMatchesCoefficients) {
    std::mt19937 rng(61);
    std::uniform_int_distribution<long> num(1, 29);
    int done = 0;
    while (done < 3) {
        long a = num(rng), b = num(rng);
        if (a == b) continue;
        if (a < b) std::swap(a, b);
        const PQParams params(Rational(a, 30), Rational(b, 30));
        for (long k = 0; k >= -3; --k) EXPECT_EQ(li_pq_closed_form(k, params).series(20), li_pq_ordinary_coeffs(k, params, 20));
        ++done;
    }
}

TEST(RationalFunction, RejectsSingularDenominator) {
    EXPECT_THROW(RationalFunction(XPoly(1), XPoly::x()), std::invalid_argument);
    EXPECT_EQ(RationalFunction(XPoly{0, 2}, XPoly{2, -2}), RationalFunction(XPoly::x(), XPoly{1, -1}));
}
