#include "pqpoly/pq_calculus.hpp"

#include <stdexcept>
#include <vector>

namespace pqpoly {

PQParams::PQParams(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {
    if (q_.sign() <= 0) throw std::invalid_argument("PQParams: q must be positive, got " + q_.to_string());
    if (q_ > p_) throw std::invalid_argument("PQParams: q must not exceed p, got p=" + p_.to_string() +
                                             " q=" + q_.to_string());
    if (p_ > Rational(1)) throw std::invalid_argument("PQParams: p must be at most 1, got " + p_.to_string());
    mode_ = (p_ == q_) ? Mode::equal_limit : Mode::generic;
}

Rational pq_integer(long n, const PQParams& params) {
    if (n < 0) throw std::invalid_argument("pq_integer: negative index");
    if (n == 0) return Rational(0);
    if (params.is_equal_limit()) return Rational(n) * params.p().pow(n - 1);
    return (params.p().pow(n) - params.q().pow(n)) / (params.p() - params.q());
}

Rational pq_weight(long n, long k, const PQParams& params) {
    return pq_integer(n, params).pow(-k);
}

XPoly pq_derivative(const XPoly& f, const PQParams& params) {
    const auto c = f.coeffs();
    if (c.size() <= 1) return {};
    std::vector<Rational> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        out[i - 1] = pq_integer(static_cast<long>(i), params) * c[i];
    return XPoly(std::move(out));
}

Rational pq_integral_01_monomial(long l, const PQParams& params) {
    if (l < 0) throw std::invalid_argument("pq_integral_01_monomial: negative power");
    return pq_integer(l + 1, params).inverse();
}

Rational pq_integral_01_poly(const XPoly& f, const PQParams& params) {
    Rational acc(0);
    const auto c = f.coeffs();
    for (std::size_t l = 0; l < c.size(); ++l)
        acc += c[l] * pq_integral_01_monomial(static_cast<long>(l), params);
    return acc;
}

Rational pq_integral_01_product_power(long l, long k, const PQParams& params) {
    if (k < 1) throw std::invalid_argument("pq_integral_01_product_power: needs k >= 1 integrals");
    // The integrand factors as t_1^l ... t_k^l.
    return pq_integral_01_monomial(l, params).pow(k);
}

}  // namespace pqpoly
