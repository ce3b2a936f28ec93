#ifndef PQPOLY_SPECIAL_SEQUENCES_HPP
#define PQPOLY_SPECIAL_SEQUENCES_HPP

#include <cstddef>
#include <vector>

#include "pqpoly/pq_calculus.hpp"
#include "pqpoly/rational.hpp"
#include "pqpoly/xpoly.hpp"

namespace pqpoly {

/// numerator(z)/denominator(z) with denominator(0) != 0, so the function
/// has a power-series expansion at z = 0. Equality is cross-multiplied.
class RationalFunction {
public:
    RationalFunction(XPoly numerator, XPoly denominator);

    const XPoly& numerator() const { return numerator_; }
    const XPoly& denominator() const { return denominator_; }

    /// Ordinary Taylor coefficients at z = 0 through z^order.
    std::vector<Rational> series(std::size_t order) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.numerator_ * b.denominator_ == b.numerator_ * a.denominator_;
    }

private:
    XPoly numerator_;
    XPoly denominator_;
};

// Every value below is produced by generating-function coefficient
// extraction. Triangles are memoized behind a lock.

/// Second kind: n! [t^n] (e^t - 1)^m / m!.
Rational stirling2(long n, long m);
/// Unsigned first kind: (-1)^{n-m} n! [t^n] ln(1+t)^m / m!.
Rational stirling1_unsigned(long n, long m);
/// Weighted second kind S_2(n,m,x): n! [t^n] e^{xt} (e^t - 1)^m / m!.
XPoly weighted_stirling2(long n, long m);
/// Weighted first kind S_1(n,m,x): n! [t^n] (1-t)^{-x} (-ln(1-t))^m / m!.
XPoly weighted_stirling1(long n, long m);

/// Classical Euler polynomial from 2 e^{xt} / (e^t + 1).
XPoly euler_poly(long n);
/// Bernoulli polynomial of order s from (t/(e^t - 1))^s e^{xt}; s >= 1.
XPoly bernoulli_order(long n, long s);
/// Frobenius-Euler function from ((1-u)/(e^t - u))^s e^{xt}; u != 1.
XPoly frobenius_euler(long n, long s, const Rational& u);

/// Ordinary coefficients of Li_{k,p,q}: c_0 = 0, c_m = 1/[m]^k, m <= order.
std::vector<Rational> li_pq_ordinary_coeffs(long k, const PQParams& params, std::size_t order);
/// Ordinary coefficients of Lif_{k,p,q}: c_m = 1/(m! [m+1]^k), m <= order.
std::vector<Rational> lif_pq_ordinary_coeffs(long k, const PQParams& params, std::size_t order);

/// Li_{k,p,q}(z) for k <= 0 as a rational function of z, assembled from the
/// partial-fraction sum over l of (-1)^{|k|-l} C(|k|,l) r_l z/(1 - r_l z),
/// r_l = p^l q^{|k|-l}, scaled by (p-q)^{-|k|}. Generic mode only.
RationalFunction li_pq_closed_form(long k, const PQParams& params);

}  // namespace pqpoly

#endif  // PQPOLY_SPECIAL_SEQUENCES_HPP
