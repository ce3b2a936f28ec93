#include "pqpoly/families.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "pqpoly/combinatorics.hpp"
#include "pqpoly/special_sequences.hpp"

namespace pqpoly {

namespace {

constexpr std::array kEulerRoutes{Route::gf};
constexpr std::array kBernoulliRoutes{Route::gf, Route::stirling_closed_form};
constexpr std::array kCauchyRoutes{Route::gf, Route::stirling_closed_form, Route::integral_expansion};

std::size_t order_of(long n) { return static_cast<std::size_t>(n); }

/// 1 - e^{-t}
EgfSeries<Rational> one_minus_exp_neg(std::size_t order) {
    return Rational(-1) * egf::exp_minus_one(Rational(-1), order);
}

/// sum_i C(n,i) a_i (c x)^{n-i}: the Appell expansion of a base series
/// multiplied by e^{c x t}.
XPoly appell_expand(const EgfSeries<Rational>& base, long n, const Rational& c) {
    XPoly acc;
    for (long i = 0; i <= n; ++i)
        acc += XPoly::monomial(static_cast<std::size_t>(n - i),
                               binomial(n, i) * base.coeff(order_of(i)) * c.pow(n - i));
    return acc;
}

/// Lif_{k,p,q}(c ln(1+t)) over Rational.
EgfSeries<Rational> lif_of_log(long k, const PQParams& params, const Rational& c, std::size_t order) {
    const auto lif = lif_pq_ordinary_coeffs(k, params, order);
    return compose<Rational>(lif, c * egf::log1p(Rational(1), order));
}

EgfSeries<XPoly> cauchy_gf_series(Family f, long k, const PQParams& params, std::size_t order) {
    std::vector<XPoly> x_part;
    for (std::size_t n = 0; n <= order; ++n) {
        const long nn = static_cast<long>(n);
        // (1+t)^{-x} has a_n = (-x)_n = (-1)^n (x)^(n); (1+t)^x has a_n = (x)_n.
        x_part.push_back(f == Family::poly_cauchy_1 ? sign_power(nn) * rising_factorial(nn)
                                                    : falling_factorial(nn));
    }
    const Rational c = f == Family::poly_cauchy_1 ? Rational(1) : Rational(-1);
    return mul(lift(lif_of_log(k, params, c, order)), EgfSeries<XPoly>(std::move(x_part)));
}

/// sum_m S1(n,m) sum_l C(m,l) (-x)^l * I(m-l), with I(j) the k-fold
/// integral of (t_1...t_k)^j; `alternate` applies (-1)^{n-m} inside.
XPoly cauchy_integral_sum(long n, long k, const PQParams& params, bool alternate) {
    XPoly acc;
    for (long m = 0; m <= n; ++m) {
        const Rational s1 = stirling1_unsigned(n, m);
        if (s1.is_zero()) continue;
        XPoly inner;
        for (long l = 0; l <= m; ++l)
            inner += XPoly::monomial(static_cast<std::size_t>(l),
                                     binomial(m, l) * sign_power(l) *
                                         pq_integral_01_product_power(m - l, k, params));
        acc += (alternate ? sign_power(n - m) : Rational(1)) * s1 * inner;
    }
    return acc;
}

XPoly cauchy_1_closed_form(long n, long k, const PQParams& params) {
    XPoly acc;
    for (long m = 0; m <= n; ++m) {
#if defined(PQPOLY_MUTANT_CAUCHY_SIGN)
        const Rational sign = sign_power(n - m + 1);
#else
        const Rational sign = sign_power(n - m);
#endif
        acc += sign * pq_weight(m + 1, k, params) * weighted_stirling1(n, m);
    }
    return acc;
}

XPoly cauchy_2_closed_form(long n, long k, const PQParams& params) {
    XPoly acc;
    for (long m = 0; m <= n; ++m)
        acc += pq_weight(m + 1, k, params) *
               weighted_stirling1(n, m).substitute_affine(Rational(-1), Rational(0));
    return sign_power(n) * acc;
}

void require_nonnegative(long n) {
    if (n < 0) throw std::invalid_argument("family index n must be nonnegative");
}

}  // namespace

std::string_view to_string(Family f) {
    switch (f) {
        case Family::poly_euler: return "poly-euler";
        case Family::poly_bernoulli: return "poly-bernoulli";
        case Family::poly_cauchy_1: return "poly-cauchy-1";
        case Family::poly_cauchy_2: return "poly-cauchy-2";
    }
    return "?";
}

std::string_view to_string(Route r) {
    switch (r) {
        case Route::gf: return "gf";
        case Route::stirling_closed_form: return "stirling";
        case Route::integral_expansion: return "integral";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::poly_euler, Family::poly_bernoulli, Family::poly_cauchy_1, Family::poly_cauchy_2})
        if (to_string(f) == name) return f;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

Route parse_route(std::string_view name) {
    for (Route r : {Route::gf, Route::stirling_closed_form, Route::integral_expansion})
        if (to_string(r) == name) return r;
    throw std::invalid_argument("unknown route '" + std::string(name) + "'");
}

std::span<const Route> allowed_routes(Family f) {
    switch (f) {
        case Family::poly_euler: return kEulerRoutes;
        case Family::poly_bernoulli: return kBernoulliRoutes;
        case Family::poly_cauchy_1:
        case Family::poly_cauchy_2: return kCauchyRoutes;
    }
    return {};
}

void FamilyRequest::validate() const {
    require_nonnegative(n);
    const auto routes = allowed_routes(family);
    if (std::find(routes.begin(), routes.end(), route) == routes.end())
        throw std::invalid_argument("route '" + std::string(to_string(route)) + "' is not available for " +
                                    std::string(to_string(family)));
    if (route == Route::integral_expansion && k < 1)
        throw std::invalid_argument("the integral route needs k >= 1 (k-fold integral), got k = " +
                                    std::to_string(k));
}

XPoly evaluate(const FamilyRequest& r) {
    r.validate();
    switch (r.family) {
        case Family::poly_euler: return poly_euler(r.n, r.k, r.params);
        case Family::poly_bernoulli: return poly_bernoulli(r.n, r.k, r.params, r.route);
        case Family::poly_cauchy_1: return poly_cauchy_1(r.n, r.k, r.params, r.route);
        case Family::poly_cauchy_2: return poly_cauchy_2(r.n, r.k, r.params, r.route);
    }
    throw std::logic_error("unreachable family");
}

EgfSeries<Rational> poly_euler_base_series(long k, const PQParams& params, std::size_t order) {
    const auto li = li_pq_ordinary_coeffs(k, params, order);
    const auto li_of = compose<Rational>(li, one_minus_exp_neg(order));
    // (1 + e^t)/2, inverted, gives 2/(1 + e^t).
    const auto half = Rational(1, 2) * (EgfSeries<Rational>::one(order) + EgfSeries<Rational>::exp_of(1, order));
    return mul(li_of, reciprocal(half));
}

EgfSeries<Rational> poly_bernoulli_base_series(long k, const PQParams& params, std::size_t order) {
    // Li(s)/s = sum_m c_{m+1} s^m: shift instead of dividing by a series
    // with zero constant term.
    auto li = li_pq_ordinary_coeffs(k, params, order + 1);
    std::vector<Rational> shifted(li.begin() + 1, li.end());
    return compose<Rational>(shifted, one_minus_exp_neg(order));
}

XPoly poly_euler(long n, long k, const PQParams& params) {
    require_nonnegative(n);
    return appell_expand(poly_euler_base_series(k, params, order_of(n)), n, Rational(1));
}

Rational poly_euler_number(long n, long k, const PQParams& params) {
    return poly_euler(n, k, params)(Rational(0));
}

XPoly poly_bernoulli(long n, long k, const PQParams& params, Route route) {
    FamilyRequest{Family::poly_bernoulli, n, k, params, route}.validate();
    if (route == Route::gf)
        return appell_expand(poly_bernoulli_base_series(k, params, order_of(n)), n, Rational(-1));
    XPoly acc;
    for (long m = 0; m <= n; ++m)
        acc += sign_power(m + n) * factorial(m) * pq_weight(m + 1, k, params) * weighted_stirling2(n, m);
    return acc;
}

XPoly poly_cauchy_1(long n, long k, const PQParams& params, Route route) {
    FamilyRequest{Family::poly_cauchy_1, n, k, params, route}.validate();
    switch (route) {
        case Route::gf: return cauchy_gf_series(Family::poly_cauchy_1, k, params, order_of(n)).coeff(order_of(n));
        case Route::stirling_closed_form: return cauchy_1_closed_form(n, k, params);
        case Route::integral_expansion: return cauchy_integral_sum(n, k, params, true);
    }
    throw std::logic_error("unreachable route");
}

XPoly poly_cauchy_2(long n, long k, const PQParams& params, Route route) {
    FamilyRequest{Family::poly_cauchy_2, n, k, params, route}.validate();
    switch (route) {
        case Route::gf: return cauchy_gf_series(Family::poly_cauchy_2, k, params, order_of(n)).coeff(order_of(n));
        case Route::stirling_closed_form: return cauchy_2_closed_form(n, k, params);
        case Route::integral_expansion: return sign_power(n) * cauchy_integral_sum(n, k, params, false);
    }
    throw std::logic_error("unreachable route");
}

std::vector<XPoly> family_table(Family f, long n_max, long k, const PQParams& params) {
    require_nonnegative(n_max);
    const auto order = order_of(n_max);
    std::vector<XPoly> out;
    out.reserve(order + 1);
    switch (f) {
        case Family::poly_euler: {
            const auto base = poly_euler_base_series(k, params, order);
            for (long n = 0; n <= n_max; ++n) out.push_back(appell_expand(base, n, Rational(1)));
            break;
        }
        case Family::poly_bernoulli: {
            const auto base = poly_bernoulli_base_series(k, params, order);
            for (long n = 0; n <= n_max; ++n) out.push_back(appell_expand(base, n, Rational(-1)));
            break;
        }
        case Family::poly_cauchy_1:
        case Family::poly_cauchy_2: {
            const auto series = cauchy_gf_series(f, k, params, order);
            for (const auto& c : series.coeffs()) out.push_back(c);
            break;
        }
    }
    return out;
}

}  // namespace pqpoly
