#ifndef PQPOLY_COMBINATORICS_HPP
#define PQPOLY_COMBINATORICS_HPP

#include "pqpoly/rational.hpp"
#include "pqpoly/xpoly.hpp"

namespace pqpoly {

Rational factorial(long n);

/// n(n-1)...(n-k+1)/k! for any rational upper argument; k must be >= 0.
Rational binomial(const Rational& n, long k);
/// Integer binomial; zero when k < 0 or k > n >= 0.
Rational binomial(long n, long k);

/// (-1)^e as a Rational.
inline Rational sign_power(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

/// (x)_n = x(x-1)...(x-n+1), with (x)_0 = 1.
XPoly falling_factorial(long n);
/// (x)^(n) = x(x+1)...(x+n-1), with (x)^(0) = 1.
XPoly rising_factorial(long n);

}  // namespace pqpoly

#endif  // PQPOLY_COMBINATORICS_HPP
