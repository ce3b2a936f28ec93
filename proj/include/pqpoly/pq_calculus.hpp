#ifndef PQPOLY_PQ_CALCULUS_HPP
#define PQPOLY_PQ_CALCULUS_HPP

#include <string>

#include "pqpoly/rational.hpp"
#include "pqpoly/xpoly.hpp"

namespace pqpoly {

/// A validated parameter pair with 0 < q <= p <= 1.
///
/// p == q selects the equal-limit mode, where [n] is read as its limit
/// n p^{n-1}. p == 1 is the q-analogue and p == q == 1 is classical.
class PQParams {
public:
    enum class Mode { generic, equal_limit };

    /// Throws std::invalid_argument when the range is violated.
    PQParams(Rational p, Rational q);

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }
    Mode mode() const { return mode_; }
    bool is_equal_limit() const { return mode_ == Mode::equal_limit; }

    std::string to_string() const { return "(" + p_.to_string() + ", " + q_.to_string() + ")"; }

    friend bool operator==(const PQParams&, const PQParams&) = default;

private:
    Rational p_;
    Rational q_;
    Mode mode_;
};

/// [n]_{p,q} = (p^n - q^n)/(p - q); n p^{n-1} in equal-limit mode.
Rational pq_integer(long n, const PQParams& params);

/// 1/[n]^k for any integer k (k < 0 multiplies by [n]^{|k|}).
Rational pq_weight(long n, long k, const PQParams& params);

/// Termwise x^n -> [n] x^{n-1}.
XPoly pq_derivative(const XPoly& f, const PQParams& params);

/// The (p,q)-integral of t^l over [0,1]: 1/[l+1].
Rational pq_integral_01_monomial(long l, const PQParams& params);

/// Linear extension of the monomial rule to a polynomial integrand.
Rational pq_integral_01_poly(const XPoly& f, const PQParams& params);

/// k-fold integral of (t_1...t_k)^l over the unit cube: (1/[l+1])^k, k >= 1.
Rational pq_integral_01_product_power(long l, long k, const PQParams& params);

}  // namespace pqpoly

#endif  // PQPOLY_PQ_CALCULUS_HPP
