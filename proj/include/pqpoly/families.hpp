#ifndef PQPOLY_FAMILIES_HPP
#define PQPOLY_FAMILIES_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pqpoly/egf_series.hpp"
#include "pqpoly/pq_calculus.hpp"
#include "pqpoly/xpoly.hpp"

namespace pqpoly {

enum class Family { poly_euler, poly_bernoulli, poly_cauchy_1, poly_cauchy_2 };

/// How a family value is computed. Not every family offers every route.
enum class Route { gf, stirling_closed_form, integral_expansion };

std::string_view to_string(Family f);
std::string_view to_string(Route r);
/// Accepts "poly-euler", "poly-bernoulli", "poly-cauchy-1", "poly-cauchy-2".
Family parse_family(std::string_view name);
/// Accepts "gf", "stirling", "integral".
Route parse_route(std::string_view name);

std::span<const Route> allowed_routes(Family f);

struct FamilyRequest {
    Family family;
    long n;
    long k;
    PQParams params;
    Route route = Route::gf;

    /// Throws std::invalid_argument when the route is not offered for the
    /// family, n < 0, or the integral route is asked for with k < 1.
    void validate() const;
};

XPoly evaluate(const FamilyRequest& request);

/// 2 Li_{k,p,q}(1 - e^{-t}) / (1 + e^t) through t^order; its EGF
/// coefficients are the (p,q)-poly-Euler numbers.
EgfSeries<Rational> poly_euler_base_series(long k, const PQParams& params, std::size_t order);
/// Li_{k,p,q}(1 - e^{-t}) / (1 - e^{-t}) through t^order.
EgfSeries<Rational> poly_bernoulli_base_series(long k, const PQParams& params, std::size_t order);

/// E_{n,p,q}^{(k)}(x).
XPoly poly_euler(long n, long k, const PQParams& params);
/// E_{n,p,q}^{(k)}(0).
Rational poly_euler_number(long n, long k, const PQParams& params);
/// B_{n,p,q}^{(k)}(x).
XPoly poly_bernoulli(long n, long k, const PQParams& params, Route route = Route::gf);
/// C_{n,p,q}^{(k)}(x), the first kind.
XPoly poly_cauchy_1(long n, long k, const PQParams& params, Route route = Route::gf);
/// The second kind, written with a hat in the literature.
XPoly poly_cauchy_2(long n, long k, const PQParams& params, Route route = Route::gf);

/// Values for n = 0..n_max through the gf route, sharing one series.
std::vector<XPoly> family_table(Family f, long n_max, long k, const PQParams& params);

}  // namespace pqpoly

#endif  // PQPOLY_FAMILIES_HPP
