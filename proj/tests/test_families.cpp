#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pqpoly/combinatorics.hpp"
#include "pqpoly/families.hpp"
#include "pqpoly/special_sequences.hpp"

using namespace pqpoly;

namespace {

const PQParams kHalfThird{Rational(1, 2), Rational(1, 3)};
const PQParams kClassical{Rational(1), Rational(1)};

std::vector<PQParams> route_points() {
    return {kHalfThird, PQParams(Rational(3, 4), Rational(1, 5)), PQParams(Rational(1), Rational(2, 7)), kClassical,
            PQParams(Rational(2, 3), Rational(2, 3))};
}

Rational inv_pow(const Rational& v, long k) { return v.pow(-k); }

}  // namespace

TEST(PolyEuler, SmallValues) {
    for (const auto& pt : route_points())
        for (long k = -2; k <= 3; ++k) {
            EXPECT_EQ(poly_euler(0, k, pt), XPoly());
            EXPECT_EQ(poly_euler(1, k, pt), XPoly(1));
            EXPECT_EQ(poly_euler_number(0, k, pt), Rational(0));
            EXPECT_EQ(poly_euler_number(1, k, pt), Rational(1));
        }
    EXPECT_EQ(poly_euler_number(2, 1, kClassical), Rational(-1));
}

TEST(PolyEuler, OrderOneIsScaledShiftedEuler) {
    const auto e = oracle::euler_polynomials(10);
    for (long n = 1; n <= 10; ++n) EXPECT_EQ(poly_euler(n, 1, kClassical), Rational(n) * e[n - 1]) << n;
}

TEST(PolyEuler, AppellDerivative) {
    for (const auto& pt : route_points())
        for (long k = -2; k <= 3; ++k)
            for (long n = 1; n <= 10; ++n)
                EXPECT_EQ(poly_euler(n, k, pt).derivative(), Rational(n) * poly_euler(n - 1, k, pt));
}

TEST(PolyEuler, TableMatchesSingleValues) {
    for (long k : {-1L, 2L}) {
        const auto table = family_table(Family::poly_euler, 7, k, kHalfThird);
        ASSERT_EQ(table.size(), 8u);
        for (long n = 0; n <= 7; ++n) EXPECT_EQ(table[n], poly_euler(n, k, kHalfThird));
    }
}

TEST(PolyBernoulli, SmallValues) {
    for (const auto& pt : route_points())
        for (long k = -2; k <= 3; ++k) {
            const Rational w = inv_pow(pq_integer(2, pt), k);
            EXPECT_EQ(poly_bernoulli(0, k, pt), XPoly(1));
            EXPECT_EQ(poly_bernoulli(1, k, pt), (XPoly{w, -1}));
            EXPECT_EQ(poly_bernoulli(1, k, pt)(Rational(0)), w);
        }
}

TEST(PolyBernoulli, ClassicalAnchor) {
    const auto b = oracle::bernoulli_numbers(10);
    for (long n = 0; n <= 10; ++n) EXPECT_EQ(poly_bernoulli(n, 1, kClassical)(Rational(0)), sign_power(n) * b[n]) << n;
}

TEST(PolyBernoulli, PEqualsOneMatchesDirectQVersion) {
    const Rational q(2, 7);
    const PQParams params(Rational(1), q);
    const auto s2 = oracle::stirling2_triangle(8);
    for (long k = -2; k <= 3; ++k)
        for (long n = 0; n <= 8; ++n) {
            XPoly expected;
            for (long m = 0; m <= n; ++m) {
                XPoly weighted;
                for (long j = m; j <= n; ++j) weighted += binomial(n, j) * s2[j][m] * XPoly::monomial(n - j, 1);
                expected += sign_power(m + n) * factorial(m) * inv_pow(oracle::q_integer(m + 1, q), k) * weighted;
            }
            EXPECT_EQ(poly_bernoulli(n, k, params), expected) << n << "," << k;
        }
}

TEST(PolyCauchy, SmallValues) {
    for (const auto& pt : route_points())
        for (long k = -2; k <= 3; ++k) {
            const Rational w = inv_pow(pq_integer(2, pt), k);
            EXPECT_EQ(poly_cauchy_1(0, k, pt), XPoly(1));
            EXPECT_EQ(poly_cauchy_2(0, k, pt), XPoly(1));
            EXPECT_EQ(poly_cauchy_1(1, k, pt), (XPoly{w, -1}));
            EXPECT_EQ(poly_cauchy_2(1, k, pt), (XPoly{-w, 1}));
        }
    const XPoly c = poly_cauchy_1(1, 2, kHalfThird);
    EXPECT_EQ(c.coeff(0), Rational(36, 25));
    EXPECT_EQ(c.coeff(1), Rational(-1));
}

TEST(PolyCauchy, ThreeRoutesAtOnePoint) {
    for (auto f : {&poly_cauchy_1, &poly_cauchy_2}) {
        const XPoly gf = f(3, 2, kHalfThird, Route::gf);
        EXPECT_EQ(f(3, 2, kHalfThird, Route::stirling_closed_form), gf);
        EXPECT_EQ(f(3, 2, kHalfThird, Route::integral_expansion), gf);
    }
}

TEST(PolyCauchy, ClassicalCauchyNumbers) {
    const auto c = oracle::cauchy_numbers(10);
    for (long n = 0; n <= 10; ++n) EXPECT_EQ(poly_cauchy_1(n, 1, kClassical)(Rational(0)), c[n]) << n;
}

TEST(PolyCauchy, ValuesAtZeroFromStirlingSums) {
    const auto s1 = oracle::stirling1_triangle(8);
    for (const auto& pt : route_points())
        for (long k = -2; k <= 3; ++k)
            for (long n = 0; n <= 8; ++n) {
                Rational first(0), second(0);
                for (long m = 0; m <= n; ++m) {
                    const Rational term = s1[n][m] * inv_pow(pq_integer(m + 1, pt), k);
                    first += sign_power(n - m) * term;
                    second += term;
                }
                EXPECT_EQ(poly_cauchy_1(n, k, pt)(Rational(0)), first);
                EXPECT_EQ(poly_cauchy_2(n, k, pt)(Rational(0)), sign_power(n) * second);
            }
}

TEST(PolyCauchy, PEqualsOneMatchesDirectQVersion) {
    // Expand (T - x)_n = sum_m s(n,m) (T - x)^m and integrate T^l to 1/[l+1]_q^k.
    const Rational q(2, 7);
    const PQParams params(Rational(1), q);
    const auto s1 = oracle::stirling1_triangle(8);
    for (long k = 1; k <= 3; ++k)
        for (long n = 0; n <= 8; ++n) {
            XPoly expected;
            for (long m = 0; m <= n; ++m)
                for (long l = 0; l <= m; ++l)
                    expected += sign_power(n - m) * s1[n][m] * binomial(m, l) * inv_pow(oracle::q_integer(l + 1, q), k) *
                                XPoly::monomial(m - l, sign_power(m - l));
            EXPECT_EQ(poly_cauchy_1(n, k, params), expected) << n << "," << k;
        }
}

TEST(Families, DegreeAndLeadingCoefficients) {
    for (const auto& pt : route_points())
        for (long k = -2; k <= 3; ++k)
            for (long n = 0; n <= 10; ++n) {
                EXPECT_LE(poly_euler(n, k, pt).degree(), n);
                const XPoly b = poly_bernoulli(n, k, pt);
                const XPoly c = poly_cauchy_1(n, k, pt);
                const XPoly ch = poly_cauchy_2(n, k, pt);
                EXPECT_EQ(b.degree(), n);
                EXPECT_EQ(c.degree(), n);
                EXPECT_EQ(ch.degree(), n);
                EXPECT_EQ(c.coeff(n), sign_power(n));
                EXPECT_EQ(ch.coeff(n), Rational(1));
            }
}

TEST(Families, RoutesAgree) {
    for (const auto& pt : route_points())
        for (long k = -2; k <= 3; ++k)
            for (long n = 0; n <= 10; ++n) {
                EXPECT_EQ(poly_bernoulli(n, k, pt, Route::stirling_closed_form), poly_bernoulli(n, k, pt, Route::gf));
                for (auto f : {&poly_cauchy_1, &poly_cauchy_2}) {
                    const XPoly gf = f(n, k, pt, Route::gf);
                    EXPECT_EQ(f(n, k, pt, Route::stirling_closed_form), gf);
                    if (k >= 1) EXPECT_EQ(f(n, k, pt, Route::integral_expansion), gf);
                }
            }
}

TEST(Families, RequestValidation) {
    EXPECT_THROW((FamilyRequest{Family::poly_cauchy_1, 2, 0, kHalfThird, Route::integral_expansion}.validate()),
                 std::invalid_argument);
    EXPECT_THROW((FamilyRequest{Family::poly_euler, 2, 1, kHalfThird, Route::stirling_closed_form}.validate()),
                 std::invalid_argument);
    EXPECT_THROW((FamilyRequest{Family::poly_bernoulli, 2, 1, kHalfThird, Route::integral_expansion}.validate()),
                 std::invalid_argument);
    EXPECT_THROW((FamilyRequest{Family::poly_bernoulli, -1, 1, kHalfThird}.validate()), std::invalid_argument);
    EXPECT_THROW(poly_cauchy_2(3, -1, kHalfThird, Route::integral_expansion), std::invalid_argument);
    EXPECT_EQ(evaluate(FamilyRequest{Family::poly_cauchy_2, 1, 2, kHalfThird, Route::integral_expansion}),
              (XPoly{Rational(-36, 25), 1}));
}

TEST(Families, NamesRoundTrip) {
    for (auto f : {Family::poly_euler, Family::poly_bernoulli, Family::poly_cauchy_1, Family::poly_cauchy_2}) {
        EXPECT_EQ(parse_family(to_string(f)), f);
        for (auto r : allowed_routes(f)) EXPECT_EQ(parse_route(to_string(r)), r);
    }
    EXPECT_EQ(allowed_routes(Family::poly_euler).size(), 1u);
    EXPECT_EQ(allowed_routes(Family::poly_bernoulli).size(), 2u);
    EXPECT_EQ(allowed_routes(Family::poly_cauchy_2).size(), 3u);
    EXPECT_THROW(parse_family("poly-gamma"), std::invalid_argument);
    EXPECT_THROW(parse_route("magic"), std::invalid_argument);
}
